"""Per-index enclosures of the nonzero normalized Laplacian eigenvalues.

The nonzero eigenvalues ``rho_1 >= ... >= rho_{n-1}`` are the zeros of a
degree ``n-1`` polynomial whose first two power sums are ``n`` and
``n + 2 R_{-1}``, so the general zero-localization intervals apply with
mean ``n/(n-1)`` and spread ``2(n-1) R_{-1} - n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .rootbounds import MomentSummary, lupas_interval

DELTA_TOL = 1e-9
METHODS = ("classical", "theorem", "corollary_degree")


@dataclass(frozen=True)
class BoundInterval:
    index: int
    lower: float
    upper: float
    method: str

    def contains(self, x: float, tol: float) -> bool:
        return self.lower - tol <= x <= self.upper + tol

    @property
    def width(self) -> float:
        return self.upper - self.lower


def delta_from_randic(n: int, r) -> float:
    """Spread ``2(n-1) r - n`` of the nonzero spectrum; tiny negatives clamp to 0.

    ``r`` may be a ``Fraction``; the subtraction is then exact, which matters
    near complete graphs where the spread vanishes and its square root would
    otherwise amplify a rounding error of ~1e-16 to ~1e-8.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not r > 0:
        raise ValueError(f"R_{{-1}} must be positive, got {r!r}")
    d = float(2 * (n - 1) * r - n)
    if d < 0:
        if d < -DELTA_TOL:
            raise ValueError(f"R_{{-1}}={r!r} is below n/(2(n-1)) for n={n}: spread {d!r}")
        d = 0.0
    return d


def _nonzero_summary(n: int, spread: float) -> MomentSummary:
    # s2 is recorded for completeness only; lupas_interval reads mean and spread
    return MomentSummary(n - 1, float(n), (spread + n * n) / (n - 1), n / (n - 1), spread)


def _check_index(n: int, i: int):
    if not 1 <= i <= n - 1:
        raise IndexError(f"eigenvalue index {i} outside 1..{n - 1}")


def theorem_bounds(n: int, r, i: int) -> BoundInterval:
    """Enclosure of ``rho_i`` from ``n`` and ``R_{-1}`` alone (``r`` float or ``Fraction``)."""
    _check_index(n, i)
    lo, hi = lupas_interval(_nonzero_summary(n, delta_from_randic(n, r)), i)
    return BoundInterval(i, lo, hi, "theorem")


def degree_spreads(n: int, d_max: int, d_min: int) -> tuple[float, float]:
    """Smallest and largest spread compatible with ``n/(2 d_max) <= R_{-1} <= n/(2 d_min)``."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not n - 1 >= d_max >= d_min >= 1:
        raise ValueError(f"need n-1 >= d_max >= d_min >= 1; got n={n}, d_max={d_max}, d_min={d_min}")
    return n * (n - 1 - d_max) / d_max, n * (n - 1 - d_min) / d_min


def corollary_degree_bounds(n: int, d_max: int, d_min: int, i: int) -> BoundInterval:
    """Enclosure of ``rho_i`` from ``n`` and the extreme degrees.

    Each endpoint takes whichever spread pushes it outward: the lower end of
    ``rho_1`` and the upper end of ``rho_{n-1}`` move inward as the spread
    grows, so they use the smallest spread; every other endpoint uses the
    largest.
    """
    _check_index(n, i)
    d_lo, d_hi = degree_spreads(n, d_max, d_min)
    lower = lupas_interval(_nonzero_summary(n, d_lo if i == 1 else d_hi), i)[0]
    upper = lupas_interval(_nonzero_summary(n, d_lo if i == n - 1 else d_hi), i)[1]
    return BoundInterval(i, lower, upper, "corollary_degree")


def classical_bounds(n: int) -> tuple[float, float]:
    """``(rho_1 lower bound, rho_{n-1} upper bound)``, both ``n/(n-1)``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return n / (n - 1), n / (n - 1)


def classical_intervals(n: int) -> list[BoundInterval]:
    """One-sided classical bounds as intervals; ``rho_1`` has no finite upper end."""
    lo1, hi_last = classical_bounds(n)
    return [
        BoundInterval(1, lo1, math.inf, "classical"),
        BoundInterval(n - 1, 0.0, hi_last, "classical"),
    ]


def dominance_check(n: int, r: float) -> tuple[float, float]:
    """How far the theorem improves on the classical bounds at both ends (both >= 0)."""
    mean = n / (n - 1)
    return theorem_bounds(n, r, 1).lower - mean, mean - theorem_bounds(n, r, n - 1).upper
