"""Deterministic builders for the named obstruction/witness graphs and
parametric families for testing and benchmarking."""

from __future__ import annotations

import random
from fractions import Fraction

from .graph import Graph

__all__ = [
    "FIXTURES",
    "fixture",
    "nested_family",
    "pt_from_weights",
    "random_threshold",
    "random_unit_interval",
    "benchmark_instance",
]


def _universal_plus(edges):
    # vertex 0 universal over vertices 1..6
    return [(0, i) for i in range(1, 7)] + edges


_FIXTURE_EDGES = {
    # forbidden subgraphs for threshold graphs
    "two_k2": (4, [(0, 1), (2, 3)]),
    "p4": (4, [(0, 1), (1, 2), (2, 3)]),
    "c4": (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    # minimal non-paired-threshold graphs: triangle {3,4,5} with pendants,
    # and the 3-sun with degree-2 vertices 0~{3,4}, 1~{4,5}, 2~{3,5}
    "net": (6, [(3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
    "tent": (6, [(3, 4), (4, 5), (3, 5), (0, 3), (0, 4), (1, 4), (1, 5), (2, 3), (2, 5)]),
    # minimal non-paired-threshold graphs with a universal vertex 0
    "u3k2": (7, _universal_plus([(1, 2), (3, 4), (5, 6)])),
    "u2p3": (7, _universal_plus([(1, 2), (2, 3), (4, 5), (5, 6)])),
    "up2p4": (7, _universal_plus([(1, 2), (2, 3), (3, 4), (5, 6)])),
}

# the eight-vertex example with x1,x2,x3 = 0,1,2 and y1..y5 = 3..7, built
# from its five maximal cliques
_FIG3_CLIQUES = ((1, 4, 5), (2, 3, 4, 5), (4, 5, 6), (5, 6, 7), (0, 5))

FIXTURES = tuple(sorted(_FIXTURE_EDGES)) + ("fig3",)


def fixture(name):
    """One of the named graphs, with its frozen labeling."""
    if name == "fig3":
        edges = set()
        for clique in _FIG3_CLIQUES:
            for i, u in enumerate(clique):
                for v in clique[i + 1:]:
                    edges.add((u, v))
        return Graph(8, sorted(edges))
    try:
        n, edges = _FIXTURE_EDGES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
    return Graph(n, edges)


def fig3_clique_path():
    """The five maximal cliques of the fig3 fixture, in path order."""
    return _FIG3_CLIQUES


def nested_family(k):
    """The 5k-vertex witness family whose interval models need k nested
    intervals: vertices v_1..v_k (ids 0..k-1) and u_1..u_4k (ids k..5k-1),
    with u_i u_j for |j-i| <= 2k and v_i u_j for i <= j <= k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    edges = []
    for i in range(1, 4 * k + 1):
        for j in range(i + 1, min(i + 2 * k, 4 * k) + 1):
            edges.append((k + i - 1, k + j - 1))
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            edges.append((i - 1, k + j - 1))
    return Graph(5 * k, edges)


def pt_from_weights(weights, t_pm):
    """The paired threshold graph realized by the given weights."""
    w = [Fraction(x) for x in weights]
    t = Fraction(t_pm)
    if t <= 0 or any(x <= 0 for x in w):
        raise ValueError("weights and threshold must be positive")
    n = len(w)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if w[u] + w[v] >= t and abs(w[u] - w[v]) <= t:
                edges.append((u, v))
    return Graph(n, edges)


def random_threshold(creation_sequence):
    """Threshold graph from a creation sequence over {'i', 'u'}: each step
    adds an isolated or a universal vertex."""
    seq = list(creation_sequence)
    if any(c not in ("i", "u") for c in seq):
        raise ValueError("creation sequence must consist of 'i' and 'u'")
    edges = []
    for j, c in enumerate(seq):
        if c == "u":
            edges.extend((i, j) for i in range(j))
    return Graph(len(seq), edges)


def random_unit_interval(n, seed):
    """Intersection graph of n random unit intervals (seeded)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = random.Random(seed)
    span = max(1.0, n / 5.0)
    centers = [rng.uniform(0.0, span) for _ in range(n)]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if abs(centers[u] - centers[v]) <= 1.0
    ]
    return Graph(n, edges)


def benchmark_instance(n):
    """A connected paired threshold graph on n vertices, YES by construction.

    A long caterpillar of overlapping cliques (u_a ~ u_b iff |a-b| <= width)
    carries an independent set attached to nested prefixes of the left end's
    closed neighborhood, so the partition conditions hold by construction.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 6:
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    width = 4
    isize = n // 6
    usize = n - isize
    edges = []
    for a in range(usize):
        for b in range(a + 1, min(a + width, usize - 1) + 1):
            edges.append((a, b))
    for j in range(isize):
        reach = (j % width) + 1
        for b in range(reach + 1):
            edges.append((usize + j, b))
    return Graph(n, edges)
