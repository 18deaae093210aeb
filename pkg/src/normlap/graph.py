"""Simple undirected graphs: parsing, generators and labeled enumeration.

Vertices are 0-indexed.  A ``Graph`` is immutable once built; the
``connected`` flag is computed by traversal at construction time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

import numpy as np

FAMILIES = ("complete", "path", "cycle", "star", "complete_bipartite")
MAX_ENUM_N = 7


class GraphError(ValueError):
    """Malformed graph input or invalid generator parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...] = field(init=False)
    connected: bool = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        canon = []
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        deg = [0] * self.n
        for u, v in canon:
            deg[u] += 1
            deg[v] += 1
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "degrees", tuple(deg))
        object.__setattr__(self, "connected", _traverse(self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)


def _traverse(n: int, edges) -> bool:
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def is_connected(g: Graph) -> bool:
    return _traverse(g.n, g.edges)


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees, reverse=True)


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    One edge per line as two non-negative integers; ``#`` comments and blank
    lines are skipped.  ``n`` is one more than the largest vertex id.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2 or not all(t.isascii() and t.isdigit() for t in toks):
            raise GraphError(f"line {lineno}: expected two non-negative integers, got {raw!r}")
        edges.append((int(toks[0]), int(toks[1])))
    if not edges:
        raise GraphError("empty edge list")
    n = 1 + max(max(e) for e in edges)
    return Graph(n, tuple(edges))


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8", newline="") as fh:
        return from_edge_list(fh.read())


def gen_family(family: str, *params: int) -> Graph:
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    want = 2 if family == "complete_bipartite" else 1
    if len(params) != want:
        raise GraphError(f"{family} takes {want} integer parameter(s), got {len(params)}")
    if family == "complete_bipartite":
        a, b = params
        if a < 1 or b < 1:
            raise GraphError("complete_bipartite needs both parts of size >= 1")
        return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))
    (n,) = params
    if family == "complete":
        if n < 1:
            raise GraphError("complete needs n >= 1")
        return Graph(n, tuple(combinations(range(n), 2)))
    if family == "path":
        if n < 1:
            raise GraphError("path needs n >= 1")
        return Graph(n, tuple((i, i + 1) for i in range(n - 1)))
    if family == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
    # star(n): one hub joined to n-1 leaves, i.e. K_{1,n-1}
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def gen_random_connected(n: int, edge_prob: float, seed: int) -> Graph:
    """Sample G(n, p) until connected; deterministic in ``(n, edge_prob, seed)``."""
    if n < 2:
        raise GraphError("random graphs need n >= 2")
    if not 0.0 < edge_prob <= 1.0:
        raise GraphError(f"edge_prob must lie in (0, 1], got {edge_prob}")
    pairs = list(combinations(range(n), 2))
    seed = int(seed) & 0xFFFFFFFFFFFFFFFF
    attempt = 0
    while True:
        rng = np.random.default_rng([seed, attempt])
        keep = rng.random(len(pairs)) < edge_prob
        g = Graph(n, tuple(p for p, k in zip(pairs, keep) if k))
        if g.connected:
            return g
        attempt += 1


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Pair order used for enumeration bitmasks: bit k <-> edge_pairs(n)[k]."""
    return list(combinations(range(n), 2))


def from_mask(n: int, mask: int) -> Graph:
    return Graph(n, tuple(p for k, p in enumerate(edge_pairs(n)) if mask >> k & 1))


def _mask_connected(n: int, pair_bits: list[tuple[int, int, int]], mask: int) -> bool:
    adj = [0] * n
    for bit, u, v in pair_bits:
        if mask & bit:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    full = (1 << n) - 1
    reach = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~reach
        reach |= nxt
    return reach == full


def connected_masks(n: int, start: int = 0, stop: int | None = None) -> Iterator[int]:
    """Edge-subset bitmasks in ``[start, stop)`` whose graph is connected."""
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    pair_bits = [(1 << k, u, v) for k, (u, v) in enumerate(edge_pairs(n))]
    return (mask for mask in range(start, stop) if _mask_connected(n, pair_bits, mask))


def enumerate_connected(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Every labeled connected graph on ``n`` vertices, by ascending edge bitmask."""
    masks = connected_masks(n, start, stop)
    pairs = edge_pairs(n)
    return (Graph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1)) for mask in masks)
