"""Core graph type, vertex orderings, twin classes, and ordering predicates."""

from __future__ import annotations

from bisect import bisect_left
from collections import defaultdict

__all__ = [
    "Graph",
    "VertexOrdering",
    "neighbors_closed",
    "is_simplicial",
    "connected_components",
    "true_twin_classes",
    "peel_universal_isolated",
    "check_interval_ordering",
    "check_umbrella_ordering",
]


class Graph:
    """Undirected simple graph on dense vertex ids 0..n-1.

    Adjacency is stored as sorted neighbor lists, so membership tests are
    O(log deg) and neighborhood merges are linear.  Instances are treated as
    immutable after construction; every algorithm in this package only reads
    them, so sharing across threads is safe.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self.n = n
        self.adj = adj
        self.m = len(seen)

    @classmethod
    def _raw(cls, n, adj, m):
        """Wrap an already-validated adjacency structure (internal fast path)."""
        g = cls.__new__(cls)
        g.n = n
        g.adj = adj
        g.m = m
        return g

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def induced(self, vertices):
        """Subgraph on `vertices`; returns (subgraph, ids) with ids[new] = old."""
        ids = sorted(vertices)
        new_of = {old: i for i, old in enumerate(ids)}
        adj = []
        m2 = 0
        for old in ids:
            row = [new_of[w] for w in self.adj[old] if w in new_of]
            m2 += len(row)
            adj.append(row)  # already sorted: ids ascending preserves order
        return Graph._raw(len(ids), adj, m2 // 2), ids

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.n == other.n and self.adj == other.adj
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class VertexOrdering:
    """A bijection between vertices 0..n-1 and positions 0..n-1.

    `seq[i]` is the vertex at position i and `pos[v]` its inverse, so rank
    lookups are O(1).
    """

    __slots__ = ("seq", "pos")

    def __init__(self, seq):
        seq = tuple(seq)
        n = len(seq)
        pos = [-1] * n
        for i, v in enumerate(seq):
            if not (0 <= v < n) or pos[v] != -1:
                raise ValueError("sequence is not a permutation of 0..n-1")
            pos[v] = i
        self.seq = seq
        self.pos = pos

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    def reversed(self):
        return VertexOrdering(self.seq[::-1])

    def __len__(self):
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def __getitem__(self, i):
        return self.seq[i]

    def __eq__(self, other):
        if isinstance(other, VertexOrdering):
            return self.seq == other.seq
        return NotImplemented

    def __repr__(self):
        return f"VertexOrdering({list(self.seq)})"


def neighbors_closed(g, v):
    """N[v] as a sorted list."""
    row = g.adj[v]
    i = bisect_left(row, v)
    return row[:i] + [v] + row[i:]


def is_simplicial(g, v):
    """True iff N[v] induces a complete subgraph."""
    nb = g.adj[v]
    if len(nb) <= 1:
        return True
    mark = set(nb)
    for u in nb:
        hits = sum(1 for w in g.adj[u] if w in mark)
        if hits < len(nb) - 1:
            return False
    return True


def connected_components(g):
    """Partition of V(G) into maximal connected sets.

    Each component is listed in ascending vertex order; components are ordered
    by smallest member.
    """
    n = g.n
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def true_twin_classes(g, order):
    """True-twin classes of g, grouped along `order`.

    The caller guarantees that `order` is an umbrella ordering, so each class
    occupies a contiguous block of it; consecutive comparison of closed
    neighborhoods therefore recovers the classes in first-occurrence order.
    Note true twins are adjacent, so their closed neighborhoods are literally
    equal as sets.
    """
    classes = []
    current = []
    current_nb = None
    for v in order:
        nb = set(neighbors_closed(g, v))
        if current and nb == current_nb:
            current.append(v)
        else:
            if current:
                classes.append(tuple(current))
            current = [v]
            current_nb = nb
    if current:
        classes.append(tuple(current))
    return classes


def peel_universal_isolated(g):
    """Exhaustively remove vertices that are universal or isolated in the
    current remaining subgraph.

    Returns (core, removed_universal, removed_isolated): the surviving vertex
    set (ascending) and the removed vertices of each kind in removal order.
    The core is unique; the removal log is made reproducible by draining
    candidates in ascending id order.
    """
    n = g.n
    deg = [len(g.adj[v]) for v in range(n)]
    alive = [True] * n
    bucket = defaultdict(set)
    for v in range(n):
        bucket[deg[v]].add(v)
    r = n
    removed_u = []
    removed_i = []
    while r > 0:
        if bucket[0]:
            batch = sorted(bucket[0])
            bucket[0].clear()
            for v in batch:
                alive[v] = False
                removed_i.append(v)
                r -= 1
            continue
        if r >= 2 and bucket[r - 1]:
            batch = sorted(bucket[r - 1])
            for v in batch:
                # stale entries are skipped; genuine universals stay universal
                if not alive[v] or deg[v] != r - 1:
                    continue
                bucket[deg[v]].discard(v)
                alive[v] = False
                removed_u.append(v)
                r -= 1
                for u in g.adj[v]:
                    if alive[u]:
                        bucket[deg[u]].discard(u)
                        deg[u] -= 1
                        bucket[deg[u]].add(u)
            continue
        break
    core = [v for v in range(n) if alive[v]]
    return core, removed_u, removed_i


def check_interval_ordering(g, order):
    """True iff x <_o y <_o z and xz in E imply xy in E.

    Equivalently: every vertex's later neighbors occupy consecutive positions
    starting immediately after it, which is what a left-endpoint order of an
    interval model looks like.  O(n+m).
    """
    pos = order.pos
    for x in range(g.n):
        px = pos[x]
        cnt = 0
        top = px
        for u in g.adj[x]:
            pu = pos[u]
            if pu > px:
                cnt += 1
                if pu > top:
                    top = pu
        if cnt and top != px + cnt:
            return False
    return True


def check_umbrella_ordering(g, order):
    """True iff x <_o y <_o z and xz in E imply xy, yz in E.

    Equivalently: every closed neighborhood occupies consecutive positions.
    O(n+m).
    """
    pos = order.pos
    for v in range(g.n):
        row = g.adj[v]
        if not row:
            continue
        lo = hi = pos[v]
        for u in row:
            pu = pos[u]
            if pu < lo:
                lo = pu
            elif pu > hi:
                hi = pu
        if hi - lo != len(row):
            return False
    return True
