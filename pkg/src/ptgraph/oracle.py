"""Exponential-time ground-truth deciders, used only by tests.

Membership in the paired threshold class is decided definitionally: a graph
is paired threshold iff some vertex ordering together with a split index is a
broom ordering.  The searches enumerate orderings in lexicographic order and
abandon a prefix as soon as the incremental condition is violated, which
keeps small instances fast in practice.
"""

from __future__ import annotations

import itertools

from .graph import Graph

__all__ = [
    "brute_force_is_paired_threshold",
    "brute_force_is_interval",
    "brute_force_is_unit_interval",
    "brute_force_is_threshold",
    "enumerate_labeled_graphs",
    "naive_check_interval_ordering",
    "naive_check_umbrella_ordering",
]

_MAX_PERMUTATION_N = 9


def _guard(g, limit=_MAX_PERMUTATION_N):
    if g.n > limit:
        raise ValueError(f"brute force guarded to n <= {limit}, got n = {g.n}")


def naive_check_interval_ordering(g, order):
    """Triple-loop transcription of the interval ordering condition."""
    n = g.n
    seq = order.seq
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if g.has_edge(seq[i], seq[k]) and not g.has_edge(seq[i], seq[j]):
                    return False
    return True


def naive_check_umbrella_ordering(g, order):
    """Triple-loop transcription of the umbrella ordering condition."""
    n = g.n
    seq = order.seq
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if g.has_edge(seq[i], seq[k]) and not (
                    g.has_edge(seq[i], seq[j]) and g.has_edge(seq[j], seq[k])
                ):
                    return False
    return True


def _search_orderings(g, constraint):
    """Depth-first search over vertex orderings with incremental pruning.

    `constraint(u, k, pos, placed, run_top)` decides whether u may go at
    position k; run_top[x] tracks the position of x's last placed neighbor.
    Yields completed position arrays.
    """
    n = g.n
    pos = [-1] * n
    placed = []
    run_top = [0] * n

    def rec(k):
        if k == n:
            yield pos
            return
        for u in range(n):
            if pos[u] >= 0:
                continue
            if not constraint(u, k, pos, run_top):
                continue
            saved = [(x, run_top[x]) for x in g.adj[u] if pos[x] >= 0]
            pos[u] = k
            run_top[u] = k
            for x, _ in saved:
                run_top[x] = k
            yield from rec(k + 1)
            pos[u] = -1
            for x, old in saved:
                run_top[x] = old
        return

    yield from rec(0)


def _interval_constraint(g):
    # later neighbors of every vertex must be consecutive starting right
    # after it: each time x gains a later neighbor it must extend x's run
    def ok(u, k, pos, run_top):
        for x in g.adj[u]:
            if pos[x] >= 0 and run_top[x] != k - 1:
                return False
        return True

    return ok


def _reverse_interval_constraint(g):
    # earlier neighbors of u must occupy the prefix suffix k-e..k-1
    def ok(u, k, pos, run_top):
        e = 0
        lo = k
        for x in g.adj[u]:
            px = pos[x]
            if px >= 0:
                e += 1
                if px < lo:
                    lo = px
        return e == 0 or lo == k - e

    return ok


def _umbrella_constraint(g):
    riv = _reverse_interval_constraint(g)
    iv = _interval_constraint(g)

    def ok(u, k, pos, run_top):
        return riv(u, k, pos, run_top) and iv(u, k, pos, run_top)

    return ok


def brute_force_is_interval(g):
    """True iff some ordering of g is an interval ordering."""
    _guard(g)
    for _ in _search_orderings(g, _interval_constraint(g)):
        return True
    return False


def brute_force_is_unit_interval(g):
    """True iff some ordering of g is an umbrella ordering."""
    _guard(g)
    for _ in _search_orderings(g, _umbrella_constraint(g)):
        return True
    return False


def brute_force_is_paired_threshold(g):
    """True iff some (ordering, split index) pair is a broom ordering."""
    _guard(g)
    n = g.n
    if n == 0:
        return True
    for pos in _search_orderings(g, _reverse_interval_constraint(g)):
        # pos: reversal is an interval ordering; look for a valid split p
        seq = [0] * n
        for v in range(n):
            seq[pos[v]] = v
        # L(v): later neighbors consecutive starting right after v; any
        # violator must end up inside the independent prefix, which is
        # impossible, so p must at least cover every violator's position.
        p_min = 0
        contig = [True] * n
        min_nb = [n + 1] * n
        for v in range(n):
            later = [pos[x] for x in g.adj[v] if pos[x] > pos[v]]
            if later and max(later) != pos[v] + len(later):
                if pos[v] + 1 > p_min:
                    p_min = pos[v] + 1
            nbp = [pos[x] for x in g.adj[v]]
            if nbp:
                min_nb[v] = min(nbp)
                contig[v] = max(nbp) - min_nb[v] + 1 == len(nbp)
        # scan p upward; the prefix needs every vertex's neighborhood
        # contiguous and entirely at positions >= p
        run_min = n + 1
        for p in range(0, n + 1):
            if p > 0:
                v = seq[p - 1]
                if not contig[v]:
                    break
                if min_nb[v] < run_min:
                    run_min = min_nb[v]
            if run_min < p:
                break
            if p >= p_min:
                return True
    return False


def brute_force_is_threshold(g):
    """True iff g has no induced 2K2, P4, or C4."""
    forbidden = {(2, (1, 1, 1, 1)), (3, (1, 1, 2, 2)), (4, (2, 2, 2, 2))}
    for quad in itertools.combinations(range(g.n), 4):
        deg = [0, 0, 0, 0]
        edges = 0
        for i in range(4):
            for j in range(i + 1, 4):
                if g.has_edge(quad[i], quad[j]):
                    edges += 1
                    deg[i] += 1
                    deg[j] += 1
        if (edges, tuple(sorted(deg))) in forbidden:
            return False
    return True


def enumerate_labeled_graphs(n):
    """All 2^(n(n-1)/2) labeled graphs on n vertices, as a stream."""
    if n > 6:
        raise ValueError("exhaustive enumeration guarded to n <= 6")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        yield Graph(n, edges)
