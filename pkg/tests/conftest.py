"""Independent oracles shared by the test modules.

None of these call into the code under test beyond building a ``Graph``.
"""
import math
from itertools import combinations

import networkx as nx
import numpy as np
import pytest


def brute_force_connected_count(n):
    """Count labeled connected graphs by testing every edge subset with networkx."""
    pairs = list(combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        h = nx.empty_graph(n)
        h.add_edges_from(p for k, p in enumerate(pairs) if mask >> k & 1)
        if nx.is_connected(h):
            count += 1
    return count


def connected_count_recurrence(n):
    c = [0, 1]
    for k in range(2, n + 1):
        total = 2 ** math.comb(k, 2)
        total -= sum(math.comb(k - 1, j - 1) * c[j] * 2 ** math.comb(k - j, 2) for j in range(1, k))
        c.append(total)
    return c[n]


def closed_form_spectrum(family, *params):
    """Known normalized Laplacian spectra, descending."""
    if family == "complete":
        (n,) = params
        vals = [n / (n - 1)] * (n - 1) + [0.0]
    elif family == "cycle":
        (n,) = params
        vals = [1 - math.cos(2 * math.pi * k / n) for k in range(n)]
    elif family == "path":
        (n,) = params
        vals = [1 - math.cos(math.pi * k / (n - 1)) for k in range(n)]
    elif family in ("star", "complete_bipartite"):
        n = params[0] if family == "star" else params[0] + params[1]
        vals = [2.0] + [1.0] * (n - 2) + [0.0]
    else:
        raise KeyError(family)
    return sorted(vals, reverse=True)


def randic_by_trace(g):
    """R_{-1} = tr((D^{-1} A)^2) / 2, an edge-free route to the same sum."""
    a = g.adjacency()
    p = a / a.sum(axis=1, keepdims=True)
    return float(np.trace(p @ p)) / 2


def nx_normalized_spectrum(g):
    h = nx.empty_graph(g.n)
    h.add_edges_from(g.edges)
    lap = nx.normalized_laplacian_matrix(h, nodelist=range(g.n)).toarray()
    return sorted(np.linalg.eigvalsh(lap), reverse=True)


def printed_theorem_bounds(n, r, i):
    """Eigenvalue enclosures typed straight from the closed-form statement."""
    q = max(2 * (n - 1) * r - n, 0.0)
    mean = n / (n - 1)
    if i == 1:
        return (mean + math.sqrt(q / (n - 2)) / (n - 1),
                mean + math.sqrt((n - 2) * q) / (n - 1))
    if i == n - 1:
        return (mean - math.sqrt((n - 2) * q) / (n - 1),
                mean - math.sqrt(q / (n - 2)) / (n - 1))
    return (mean - math.sqrt((i - 1) / (n - i) * q) / (n - 1),
            mean + math.sqrt((n - i - 1) / i * q) / (n - 1))


def printed_corollary_bounds(n, d1, dn, i):
    mean = n / (n - 1)
    if i == 1:
        return (mean + math.sqrt(n * (n - 1 - d1) / ((n - 2) * d1)) / (n - 1),
                mean + math.sqrt(n * (n - 2) * (n - 1 - dn) / dn) / (n - 1))
    if i == n - 1:
        return (mean - math.sqrt(n * (n - 2) * (n - 1 - dn) / dn) / (n - 1),
                mean - math.sqrt(n * (n - 1 - d1) / ((n - 2) * d1)) / (n - 1))
    return (mean - math.sqrt(n * (i - 1) * (n - 1 - dn) / ((n - i) * dn)) / (n - 1),
            mean + math.sqrt(n * (n - i - 1) * (n - 1 - dn) / (i * dn)) / (n - 1))


@pytest.fixture
def edge_file(tmp_path):
    def write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write
