"""Zero localization for real-rooted polynomials with fixed leading coefficients.

For a monic polynomial ``x^n + a1 x^{n-1} + a2 x^{n-2} + ...`` with real zeros
``x_1 >= ... >= x_n``, only the first two power sums are pinned down by
``a1`` and ``a2``.  ``lupas_interval`` turns that pair into an enclosure for
each ordered zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

SPREAD_TOL = 1e-12


class InfeasibleMoments(ValueError):
    """No real multiset of zeros has the requested power sums."""


@dataclass(frozen=True)
class MomentSummary:
    count: int
    s1: float
    s2: float
    mean: float
    spread: float

    @classmethod
    def from_sums(cls, count: int, s1: float, s2: float) -> "MomentSummary":
        if count < 2:
            raise ValueError(f"need at least 2 values, got {count}")
        spread = count * s2 - s1 * s1
        if spread < 0:
            if spread < -SPREAD_TOL * max(1.0, s1 * s1):
                raise InfeasibleMoments(
                    f"spread {spread!r} < 0: sums s1={s1!r}, s2={s2!r} admit no real zeros"
                )
            spread = 0.0
        return cls(count, s1, s2, s1 / count, spread)

    @property
    def a1(self) -> float:
        return -self.s1

    @property
    def a2(self) -> float:
        return (self.s1 * self.s1 - self.s2) / 2


def moments_from_values(xs) -> MomentSummary:
    xs = [float(x) for x in xs]
    return MomentSummary.from_sums(len(xs), math.fsum(xs), math.fsum(x * x for x in xs))


def moments_from_coefficients(n: int, a1: float, a2: float) -> MomentSummary:
    """Invert Newton's identities: ``s1 = -a1``, ``s2 = a1^2 - 2 a2``."""
    return MomentSummary.from_sums(n, -a1, a1 * a1 - 2 * a2)


def lupas_interval(m: MomentSummary, i: int) -> tuple[float, float]:
    """Closed enclosure ``(lo, hi)`` of the ``i``-th largest zero, ``1 <= i <= count``."""
    n = m.count
    if not 1 <= i <= n:
        raise IndexError(f"zero index {i} outside 1..{n}")
    xbar, d = m.mean, m.spread
    if i == 1:
        return xbar + math.sqrt(d / (n - 1)) / n, xbar + math.sqrt((n - 1) * d) / n
    if i == n:
        return xbar - math.sqrt((n - 1) * d) / n, xbar - math.sqrt(d / (n - 1)) / n
    return (
        xbar - math.sqrt(d * (i - 1) / (n - i + 1)) / n,
        xbar + math.sqrt(d * (n - i) / i) / n,
    )
