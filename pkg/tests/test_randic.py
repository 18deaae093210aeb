from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import randic_by_trace
from normlap.graph import Graph, enumerate_connected, from_edge_list, gen_family, gen_random_connected
from normlap.randic import (
    extreme_eig_bounds,
    randic_bounds_degrees,
    randic_bounds_from_extreme_eigs,
    randic_lower_global,
    randic_minus_one,
    randic_minus_one_exact,
)
from normlap.spectral import graph_spectrum, moment_check

P3 = from_edge_list("0 1\n1 2")


@pytest.mark.parametrize("n", range(2, 12))
def test_complete_and_star(n):
    assert randic_minus_one(gen_family("complete", n)) == pytest.approx(n / (2 * (n - 1)), abs=1e-12)
    assert randic_minus_one(gen_family("star", n)) == pytest.approx(1.0, abs=1e-12)


def test_exact_value():
    assert randic_minus_one_exact(gen_family("path", 4)) == Fraction(1, 2) + Fraction(1, 4) + Fraction(1, 2)
    assert randic_minus_one_exact(gen_family("complete", 7)) == Fraction(7, 12)


def test_examples():
    assert randic_minus_one(gen_family("complete", 4)) == pytest.approx(2 / 3, abs=1e-15)
    assert randic_minus_one(P3) == 1.0
    with pytest.raises(ValueError):
        randic_minus_one(Graph(1, ()))


def test_degree_bounds_examples():
    c4 = gen_family("cycle", 4)
    assert randic_bounds_degrees(c4) == (1.0, 1.0) and randic_minus_one(c4) == 1.0
    assert randic_bounds_degrees(gen_family("star", 4)) == pytest.approx((2 / 3, 2.0))
    assert randic_bounds_degrees(P3) == pytest.approx((0.75, 1.5))


def test_global_lower():
    assert randic_lower_global(4) == pytest.approx(2 / 3)
    assert randic_lower_global(3) == 0.75
    assert randic_lower_global(2) == 1.0
    assert randic_minus_one(gen_family("complete", 2)) == 1.0


def test_extreme_eig_examples():
    assert randic_bounds_from_extreme_eigs(3, 2.0, 1.0) == pytest.approx((1.0, 1.0), abs=1e-15)
    # C4 spectrum (2, 1, 1, 0): squared gaps are both (2/3)^2
    b = extreme_eig_bounds(4, 2.0, 1.0)
    assert b.lower_rho1 == pytest.approx(3 / 4 * 4 / 9 + 2 / 3)
    assert b.upper_rho1 == pytest.approx(3 * 4 / 9 + 2 / 3)
    assert b.lower_rho_last == pytest.approx(3 / 4 * 1 / 9 + 2 / 3)
    assert b.upper_rho_last == pytest.approx(3 * 1 / 9 + 2 / 3)
    assert b.lo == pytest.approx(1.0) and b.hi == pytest.approx(1.0)
    lo, hi = randic_bounds_from_extreme_eigs(4, 4 / 3, 4 / 3)
    assert lo == pytest.approx(2 / 3) and hi == pytest.approx(2 / 3)


@pytest.mark.parametrize("args", [(2, 2.0, 0.0), (4, 1.0, 1.0), (4, 2.0, 1.5), (4, 2.0, -0.1)])
def test_extreme_eig_preconditions(args):
    with pytest.raises(ValueError):
        randic_bounds_from_extreme_eigs(*args)


def _check_all(g):
    n = g.n
    r = randic_minus_one(g)
    assert r == pytest.approx(randic_by_trace(g), rel=1e-12)
    lo, hi = randic_bounds_degrees(g)
    assert lo * (1 - 1e-12) <= r <= hi * (1 + 1e-12)
    if len(set(g.degrees)) == 1:
        assert r == pytest.approx(n / (2 * g.degrees[0]), abs=1e-12)
    assert r >= randic_lower_global(n) - 1e-12
    s = graph_spectrum(g)
    assert moment_check(s, r)[1] <= 1e-8
    elo, ehi = randic_bounds_from_extreme_eigs(n, s.values[0], s.values[n - 2])
    assert elo - 1e-9 <= r <= ehi + 1e-9
    assert elo >= randic_lower_global(n) - 1e-12


@pytest.mark.parametrize("n", [3, 4, 5])
def test_exhaustive_randic_properties(n):
    for g in enumerate_connected(n):
        _check_all(g)


@given(st.integers(3, 30), st.floats(0.05, 1.0), st.integers(0, 2**32))
@settings(max_examples=100, deadline=None)
def test_random_randic_properties(n, p, seed):
    _check_all(gen_random_connected(n, p, seed))


@pytest.mark.parametrize("family, n", [("cycle", 7), ("complete", 6), ("complete_bipartite", 3)])
def test_regular_equality(family, n):
    g = gen_family(family, n, n) if family == "complete_bipartite" else gen_family(family, n)
    lo, hi = randic_bounds_degrees(g)
    assert lo == hi == pytest.approx(randic_minus_one(g), abs=1e-12)
