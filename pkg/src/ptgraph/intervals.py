"""Interval and unit interval recognition: clique paths, umbrella orderings,
interval models, and the nesting-depth statistic."""

from __future__ import annotations

import heapq
from bisect import bisect_left
from collections import defaultdict
from dataclasses import dataclass

from ._pqtree import PQTree
from .graph import Graph, VertexOrdering, check_umbrella_ordering, connected_components

__all__ = [
    "CliquePath",
    "IntervalModel",
    "recognize_interval",
    "validate_clique_path",
    "interval_model_from_clique_path",
    "max_nesting_depth",
    "umbrella_ordering",
]


@dataclass(frozen=True)
class CliquePath:
    """Maximal cliques arranged so every vertex's cliques are consecutive."""

    cliques: tuple

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def __getitem__(self, i):
        return self.cliques[i]


@dataclass(frozen=True)
class IntervalModel:
    """Closed interval [lo[v], hi[v]] per vertex; intersection graph model."""

    lo: tuple
    hi: tuple

    def __len__(self):
        return len(self.lo)


def _mcs_order(g):
    """Maximum cardinality search; returns the visit order (a list).

    The reversal of the visit order is a perfect elimination ordering iff the
    graph is chordal.  Ties are broken by ascending vertex id.
    """
    n = g.n
    count = [0] * n
    visited = [False] * n
    heaps = defaultdict(list)
    heaps[0] = list(range(n))
    maxc = 0
    order = []
    adj = g.adj
    for _ in range(n):
        while True:
            h = heaps.get(maxc)
            if not h:
                maxc -= 1
                continue
            v = heapq.heappop(h)
            if not visited[v] and count[v] == maxc:
                break
        visited[v] = True
        order.append(v)
        for u in adj[v]:
            if not visited[u]:
                cu = count[u] + 1
                count[u] = cu
                heapq.heappush(heaps[cu], u)
        maxc += 1
    return order


def _peo_cliques(g, order):
    """Maximal cliques of a chordal graph from an MCS visit order.

    Returns (cliques, cliques_of) where cliques are sorted vertex lists in a
    deterministic order and cliques_of[v] lists the clique indices containing
    v.  Returns None if the graph is not chordal.
    """
    n = g.n
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    earlier = [None] * n
    ustar = [-1] * n
    for v in range(n):
        pv = pos[v]
        ev = []
        best = -1
        bu = -1
        for u in g.adj[v]:
            pu = pos[u]
            if pu < pv:
                ev.append(u)
                if pu > best:
                    best = pu
                    bu = u
        earlier[v] = ev
        ustar[v] = bu
    followers = defaultdict(list)
    for v in range(n):
        if ustar[v] >= 0:
            followers[ustar[v]].append(v)
    mark = bytearray(n)
    for u, vs in followers.items():
        mark[u] = 1
        for w in g.adj[u]:
            mark[w] = 1
        ok = all(mark[w] for v in vs for w in earlier[v])
        mark[u] = 0
        for w in g.adj[u]:
            mark[w] = 0
        if not ok:
            return None
    rep = [True] * n
    for v in range(n):
        u = ustar[v]
        if u >= 0 and len(earlier[v]) == len(earlier[u]) + 1:
            rep[u] = False
    cliques = []
    for v in order:
        if rep[v]:
            cliques.append(sorted(earlier[v] + [v]))
    cliques_of = [[] for _ in range(n)]
    for i, clique in enumerate(cliques):
        for w in clique:
            cliques_of[w].append(i)
    return cliques, cliques_of


def _clique_path_connected(g):
    """Clique path of a connected graph as a list of sorted vertex lists,
    or None if g is not an interval graph."""
    if g.n == 0:
        return []
    order = _mcs_order(g)
    pc = _peo_cliques(g, order)
    if pc is None:
        return None
    cliques, cliques_of = pc
    tree = PQTree(len(cliques))
    for v in range(g.n):
        row = cliques_of[v]
        if len(row) > 1 and not tree.reduce(row):
            return None
    perm = tree.frontier()
    posc = [0] * len(cliques)
    for idx, i in enumerate(perm):
        posc[i] = idx
    for v in range(g.n):
        ps = [posc[i] for i in cliques_of[v]]
        if max(ps) - min(ps) + 1 != len(ps):
            raise AssertionError("PQ reduction accepted a non-consecutive arrangement")
    seq = [cliques[i] for i in perm]
    if len(seq) > 1 and seq[-1] < seq[0]:
        seq.reverse()
    return seq


def recognize_interval(g):
    """Clique path of g, or None if g is not an interval graph.

    Disconnected inputs are allowed; component clique paths are concatenated
    in order of smallest component member.  Each component's path direction is
    canonicalized so its first clique is lexicographically smallest.
    """
    comps = connected_components(g)
    out = []
    for comp in comps:
        if len(comp) == g.n:
            sub, ids = g, None
        else:
            sub, ids = g.induced(comp)
        seq = _clique_path_connected(sub)
        if seq is None:
            return None
        if ids is None:
            out.extend(tuple(c) for c in seq)
        else:
            out.extend(tuple(ids[x] for x in c) for c in seq)
    return CliquePath(tuple(out))


def validate_clique_path(g, cp):
    """Check the CliquePath type invariants against g (used by tests).

    Verifies that every listed set is a clique, that the listed sets are
    exactly the maximal cliques of g each appearing once, and that every
    vertex's cliques are consecutive.
    """
    seen = set()
    covered = [False] * g.n
    for clique in cp:
        key = frozenset(clique)
        if key in seen:
            return False
        seen.add(key)
        for i, u in enumerate(clique):
            covered[u] = True
            for v in clique[i + 1:]:
                if not g.has_edge(u, v):
                    return False
    if g.n and not all(covered):
        return False
    # maximality and completeness: compare against a fresh enumeration
    comps = connected_components(g)
    expected = set()
    for comp in comps:
        sub, ids = g.induced(comp)
        order = _mcs_order(sub)
        pc = _peo_cliques(sub, order)
        if pc is None:
            return False
        for clique in pc[0]:
            expected.add(frozenset(ids[x] for x in clique))
    if seen != expected:
        return False
    # consecutiveness
    first = {}
    last = {}
    for i, clique in enumerate(cp):
        for v in clique:
            first.setdefault(v, i)
            last[v] = i
    count = defaultdict(int)
    for clique in cp:
        for v in clique:
            count[v] += 1
    return all(last[v] - first[v] + 1 == count[v] for v in first)


def interval_model_from_clique_path(g, cp):
    """Standard model: v spans [first, last] 1-based clique indices."""
    lo = [0] * g.n
    hi = [0] * g.n
    for i, clique in enumerate(cp, start=1):
        for v in clique:
            if lo[v] == 0:
                lo[v] = i
            hi[v] = i
    return IntervalModel(tuple(lo), tuple(hi))


def max_nesting_depth(model):
    """Largest k such that k intervals form a strictly nested chain
    (left endpoints strictly decreasing, right endpoints strictly increasing).

    Sort by left endpoint descending (ties: right descending); the answer is
    the longest strictly increasing subsequence of right endpoints.
    """
    items = sorted(zip(model.lo, model.hi), key=lambda t: (-t[0], -t[1]))
    tails = []
    for _, r in items:
        i = bisect_left(tails, r)
        if i == len(tails):
            tails.append(r)
        else:
            tails[i] = r
    return len(tails)


def umbrella_ordering(g):
    """An umbrella ordering of g, or None if g is not a unit interval graph.

    Vertices are sorted by (first clique, last clique, id) of the clique-path
    model; for unit interval graphs this left-endpoint order is an umbrella
    ordering, and the final check rejects everything else.  Components end up
    consecutive since their cliques are.
    """
    cp = recognize_interval(g)
    if cp is None:
        return None
    if g.n == 0:
        return VertexOrdering(())
    model = interval_model_from_clique_path(g, cp)
    order = VertexOrdering(
        sorted(range(g.n), key=lambda v: (model.lo[v], model.hi[v], v))
    )
    if check_umbrella_ordering(g, order):
        return order
    return None
