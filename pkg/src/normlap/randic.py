"""General Randic index R_{-1} and the bounds on it in terms of degrees and extreme eigenvalues."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph

EIG_SLACK = 1e-9


def randic_minus_one_exact(g: Graph) -> Fraction:
    """Sum over edges of ``1 / (d_u d_v)`` as an exact rational."""
    if g.m < 1:
        raise ValueError("R_{-1} needs at least one edge")
    deg = g.degrees
    products = Counter(deg[u] * deg[v] for u, v in g.edges)
    return sum((Fraction(k, p) for p, k in products.items()), Fraction(0))


def randic_minus_one(g: Graph) -> float:
    """Sum over edges of ``1 / (d_u d_v)``, correctly rounded."""
    return float(randic_minus_one_exact(g))


def randic_bounds_degrees(g: Graph) -> tuple[float, float]:
    """``(n / (2 d_max), n / (2 d_min))``; tight exactly for regular graphs."""
    return g.n / (2 * max(g.degrees)), g.n / (2 * min(g.degrees))


def randic_lower_global(n: int) -> float:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return n / (2 * (n - 1))


@dataclass(frozen=True)
class ExtremeEigBounds:
    """R_{-1} bounds from rho_1 and rho_{n-1}.

    ``lower_rho1``/``lower_rho_last`` are the two lower bounds and
    ``upper_rho1``/``upper_rho_last`` the two upper bounds; ``lo``/``hi``
    combine them.
    """

    lower_rho1: float
    lower_rho_last: float
    upper_rho1: float
    upper_rho_last: float

    @property
    def lo(self) -> float:
        return max(self.lower_rho1, self.lower_rho_last)

    @property
    def hi(self) -> float:
        return min(self.upper_rho1, self.upper_rho_last)


def extreme_eig_bounds(n: int, rho1: float, rho_last: float) -> ExtremeEigBounds:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    mean = n / (n - 1)
    if not (rho1 >= mean - EIG_SLACK and mean + EIG_SLACK >= rho_last >= -EIG_SLACK):
        raise ValueError(
            f"need rho1 >= n/(n-1) >= rho_last >= 0; got rho1={rho1!r}, rho_last={rho_last!r}"
        )
    g1 = (rho1 - mean) ** 2
    g2 = (mean - rho_last) ** 2
    base = n / (2 * (n - 1))
    weak = (n - 1) / (2 * (n - 2))
    strong = (n - 1) * (n - 2) / 2
    return ExtremeEigBounds(weak * g1 + base, weak * g2 + base, strong * g1 + base, strong * g2 + base)


def randic_bounds_from_extreme_eigs(n: int, rho1: float, rho_last: float) -> tuple[float, float]:
    b = extreme_eig_bounds(n, rho1, rho_last)
    return b.lo, b.hi
