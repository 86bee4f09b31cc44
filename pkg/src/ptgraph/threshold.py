"""Threshold graph recognition with weight certificates, plus the
neighborhood-containment utilities the greedy partition construction needs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph

__all__ = [
    "ThresholdCertificate",
    "recognize_threshold",
    "check_threshold_certificate",
    "neighborhood_containment_order",
    "induces_threshold",
]


@dataclass(frozen=True)
class ThresholdCertificate:
    """Positive weights and threshold with uv in E iff w(u)+w(v) >= T."""

    weights: tuple
    threshold: Fraction


def _peel_sequence(g):
    """(core, removals) where removals is the interleaved peel log of
    (vertex, kind) pairs, kind in {"isolated", "universal"}."""
    n = g.n
    deg = [len(g.adj[v]) for v in range(n)]
    alive = [True] * n
    from collections import defaultdict

    bucket = defaultdict(set)
    for v in range(n):
        bucket[deg[v]].add(v)
    r = n
    removals = []
    while r > 0:
        if bucket[0]:
            batch = sorted(bucket[0])
            bucket[0].clear()
            for v in batch:
                alive[v] = False
                removals.append((v, "isolated"))
                r -= 1
            continue
        if r >= 2 and bucket[r - 1]:
            batch = sorted(bucket[r - 1])
            for v in batch:
                if not alive[v] or deg[v] != r - 1:
                    continue
                bucket[deg[v]].discard(v)
                alive[v] = False
                removals.append((v, "universal"))
                r -= 1
                for u in g.adj[v]:
                    if alive[u]:
                        bucket[deg[u]].discard(u)
                        deg[u] -= 1
                        bucket[deg[u]].add(u)
            continue
        break
    core = [v for v in range(n) if alive[v]]
    return core, removals


def recognize_threshold(g):
    """A ThresholdCertificate for g, or None if g is not a threshold graph.

    The peel of isolated/universal vertices empties exactly the threshold
    graphs; replaying it in reverse assigns small integer weights with
    threshold T = 2n+1: vertices created isolated take a strictly decreasing
    chain n, n-1, ... below T/2, and a vertex created universal takes
    T - (minimum weight present), which reaches T with everything present
    and leaves later isolated vertices room below.
    """
    core, removals = _peel_sequence(g)
    if core:
        return None
    n = g.n
    T = 2 * n + 1
    w = [None] * n
    cur_min = cur_max = None
    iso_next = n
    for v, kind in reversed(removals):
        if kind == "isolated":
            # stay out of reach of everything present, including universals
            wv = iso_next if cur_max is None else min(iso_next, T - cur_max - 1)
            iso_next = wv - 1
        elif cur_min is None:
            wv = n + 1
        else:
            wv = T - cur_min
        w[v] = wv
        if cur_min is None or wv < cur_min:
            cur_min = wv
        if cur_max is None or wv > cur_max:
            cur_max = wv
    return ThresholdCertificate(tuple(Fraction(x) for x in w), Fraction(T))


def check_threshold_certificate(g, cert):
    """All-pairs check of the threshold certificate invariant."""
    w = cert.weights
    T = cert.threshold
    if len(w) != g.n or T <= 0 or any(x <= 0 for x in w):
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (w[u] + w[v] >= T) != g.has_edge(u, v):
                return False
    return True


def neighborhood_containment_order(g, independent_set):
    """Order the independent set so neighborhoods increase under containment.

    Returns the ordered vertex list, or None if the neighborhoods do not form
    a chain.  Sorting by degree and checking adjacent pairs suffices for
    chains; ties break by vertex id.  A non-independent input is a contract
    violation.
    """
    vs = sorted(set(independent_set))
    members = set(vs)
    for v in vs:
        if any(u in members for u in g.adj[v]):
            raise ValueError("input set is not independent")
    vs.sort(key=lambda v: (len(g.adj[v]), v))
    for a, b in zip(vs, vs[1:]):
        nb = set(g.adj[b])
        if not all(u in nb for u in g.adj[a]):
            return None
    return vs


def induces_threshold(g, vertices):
    """True iff the subgraph induced by `vertices` is a threshold graph."""
    sub, _ = g.induced(vertices)
    core, _ = _peel_sequence(sub)
    return not core
