"""Paired threshold recognition: broom and weight certificates, partition
verification, weight synthesis, and the full linear-time pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import (
    Graph,
    VertexOrdering,
    check_interval_ordering,
    connected_components,
    neighbors_closed,
    peel_universal_isolated,
    true_twin_classes,
)
from .intervals import (
    interval_model_from_clique_path,
    recognize_interval,
    umbrella_ordering,
)
from .graph import check_umbrella_ordering
from .threshold import (
    neighborhood_containment_order,
    recognize_threshold,
    induces_threshold,
)

__all__ = [
    "WeightCertificate",
    "BroomCertificate",
    "PTPartition",
    "RecognitionResult",
    "check_weight_certificate",
    "weight_violation",
    "check_broom",
    "broom_from_weights",
    "normalize_thresholds",
    "verify_partition",
    "synthesize_weights",
    "synthesize_weights_general",
    "greedy_candidate_sets",
    "recognize",
]

NO_REASONS = (
    "NotInterval",
    "TwoNonUIGComponents",
    "TooManyCoreComponents",
    "TwoComponentShapeFail",
    "NoValidPartition",
)


@dataclass(frozen=True)
class WeightCertificate:
    """Positive weights and an equalized threshold: uv is an edge iff
    w(u)+w(v) >= t_pm and |w(u)-w(v)| <= t_pm."""

    weights: tuple
    t_pm: Fraction
    p: int | None = None
    q: int | None = None
    t: int | None = None


@dataclass(frozen=True)
class BroomCertificate:
    """Ordering whose reversal is an interval ordering, with a split index p:
    the first p vertices have their whole neighborhoods after position p in
    consecutive runs, and the suffix is an umbrella ordering."""

    order: VertexOrdering
    p: int


@dataclass(frozen=True)
class PTPartition:
    """Independent set (in neighborhood-containment order) plus an umbrella
    ordering of the rest in which every independent vertex's neighborhood is
    consecutive and contained in the closed neighborhood of the first vertex."""

    independent: tuple
    umbrella: tuple


@dataclass(frozen=True)
class RecognitionResult:
    is_ptg: bool
    weight_cert: WeightCertificate | None
    broom_cert: BroomCertificate | None
    reason: str | None
    details: dict = field(default_factory=dict)


# -- certificate checks ----------------------------------------------------


def weight_violation(g, cert):
    """First pair violating the certificate biconditional, or None.

    Nonpositive weights or thresholds are reported as pair (-1, -1).
    """
    w = cert.weights
    t = cert.t_pm
    if len(w) != g.n or t <= 0 or any(x <= 0 for x in w):
        return (-1, -1)
    for u in range(g.n):
        wu = w[u]
        for v in range(u + 1, g.n):
            wv = w[v]
            implied = wu + wv >= t and abs(wu - wv) <= t
            if implied != g.has_edge(u, v):
                return (u, v)
    return None


def check_weight_certificate(g, cert):
    """All-pairs check of the paired threshold certificate invariant."""
    return weight_violation(g, cert) is None


def check_broom(g, cert):
    """O(n+m) check of the three broom-ordering conditions."""
    order = cert.order
    p = cert.p
    n = g.n
    if len(order) != n or not (0 <= p <= n):
        return False
    if not check_interval_ordering(g, order.reversed()):
        return False
    pos = order.pos
    for i in range(p):
        v = order[i]
        lo = hi = -1
        for u in g.adj[v]:
            pu = pos[u]
            if pu < p:
                return False
            if lo == -1 or pu < lo:
                lo = pu
            if pu > hi:
                hi = pu
        if g.adj[v] and hi - lo + 1 != len(g.adj[v]):
            return False
    for i in range(p, n):
        v = order[i]
        lo = hi = i
        cnt = 0
        for u in g.adj[v]:
            pu = pos[u]
            if pu >= p:
                cnt += 1
                if pu < lo:
                    lo = pu
                elif pu > hi:
                    hi = pu
        if cnt and hi - lo != cnt:
            return False
    return True


def _scaled_numerators(values):
    """(integer keys ordered like the given rationals, common denominator),
    or (None, None) if the common denominator is too large to be worth it."""
    import math

    lcm = 1
    for x in values:
        lcm = math.lcm(lcm, x.denominator)
        if lcm.bit_length() > 128:
            return None, None
    return [x.numerator * (lcm // x.denominator) for x in values], lcm


def broom_from_weights(g, cert, validate=True):
    """Broom certificate from a valid weight certificate: sort by weight
    (ties by id); p counts weights below half the threshold."""
    if validate:
        bad = weight_violation(g, cert)
        if bad is not None:
            raise ValueError(f"weight certificate does not realize the graph: {bad}")
    keys, _ = _scaled_numerators(list(cert.weights) + [cert.t_pm])
    if keys is None:
        order = VertexOrdering(sorted(range(g.n), key=lambda v: (cert.weights[v], v)))
        half = cert.t_pm / 2
        p = sum(1 for w in cert.weights if w < half)
    else:
        order = VertexOrdering(sorted(range(g.n), key=lambda v: (keys[v], v)))
        tk = keys[-1]
        p = sum(1 for k in keys[:-1] if 2 * k < tk)
    return BroomCertificate(order, p)


# -- threshold equalization ------------------------------------------------


def normalize_thresholds(g, weights, t_plus, t_minus, _selfcheck=True):
    """Turn a two-threshold realization into a single-threshold certificate.

    Boundary vertices get bumped by a quarter of the smallest positive gap
    (half would let a pair of bumped vertices drift across a threshold),
    vertices below the boundary are necessarily isolated and get weights
    separated from everything by more than the difference threshold, and the
    final uniform shift equalizes the two thresholds.
    """
    w = [Fraction(x) for x in weights]
    tp = Fraction(t_plus)
    tm = Fraction(t_minus)
    n = g.n
    if len(w) != n:
        raise ValueError("weight count does not match the graph")
    if tp <= 0 or tm <= 0 or any(x <= 0 for x in w):
        raise ValueError("weights and thresholds must be positive")
    for u in range(n):
        for v in range(u + 1, n):
            implied = w[u] + w[v] >= tp and abs(w[u] - w[v]) <= tm
            if implied != g.has_edge(u, v):
                raise ValueError(f"input does not realize the graph at pair ({u},{v})")
    boundary = (tp - tm) / 2
    gaps = []
    for u in range(n):
        for v in range(u + 1, n):
            for gap in (abs(w[u] + w[v] - tp), abs(abs(w[u] - w[v]) - tm)):
                if gap > 0:
                    gaps.append(gap)
    eps = min(gaps) / 4 if gaps else Fraction(1, 2)
    for v in range(n):
        if w[v] == boundary:
            w[v] += eps
    nxt = max(w) + tm + 1 if w else tm + 1
    for v in range(n):
        if w[v] < boundary:
            w[v] = nxt
            nxt += tm + 1
    shift = tm / 2 - tp / 2
    cert = WeightCertificate(tuple(x + shift for x in w), tm)
    if _selfcheck:
        bad = weight_violation(g, cert)
        if bad is not None:
            raise AssertionError(f"normalization failed to preserve the graph at {bad}")
    return cert


# -- unit interval weight construction (weights >= threshold) ---------------


def _unit_positions(g, order):
    """Points x with adjacency iff |x(u)-x(v)| <= 1, from an umbrella ordering.

    Solves the difference constraints (strictly increasing along the order,
    gap above 1 to the nearest earlier non-neighbor, gap at most 1 to the
    earliest earlier neighbor) by fixpoint iteration over two-level numbers:
    an integer part plus a count of formal infinitesimals.  Any umbrella
    ordering admits a solution; a non-umbrella input is a contract violation.
    """
    n = g.n
    seq = order.seq if isinstance(order, VertexOrdering) else tuple(order)
    pos = {v: i for i, v in enumerate(seq)}
    lo = [None] * n
    for i, v in enumerate(seq):
        earlier = [pos[u] for u in g.adj[v] if pos[u] < i]
        lo[i] = min(earlier) if earlier else None
    x = [(0, 0)] * n  # (integer part, infinitesimal count), compared lexically
    for _ in range(n + 2):
        changed = False
        for i in range(1, n):
            li = lo[i]
            lower = (x[i - 1][0], x[i - 1][1] + 1)
            if li is None:
                cand = (x[i - 1][0] + 2, x[i - 1][1] + 1)
                if cand > lower:
                    lower = cand
            elif li > 0:
                cand = (x[li - 1][0] + 1, x[li - 1][1] + 1)
                if cand > lower:
                    lower = cand
            if lower > x[i]:
                x[i] = lower
                changed = True
            if li is not None:
                need = (x[i][0] - 1, x[i][1])
                if need > x[li]:
                    x[li] = need
                    changed = True
        if not changed:
            break
    else:
        raise AssertionError("ordering is not an umbrella ordering")
    for i in range(1, n):
        li = lo[i]
        if x[i] <= x[i - 1]:
            raise AssertionError("position assignment is not increasing")
        if li is not None and x[i] > (x[li][0] + 1, x[li][1]):
            raise AssertionError("ordering is not an umbrella ordering")
        if li is not None and li > 0 and x[i] <= (x[li - 1][0] + 1, x[li - 1][1]):
            raise AssertionError("ordering is not an umbrella ordering")
    span = max(abs(bi) for _, bi in x) if n else 0
    gamma = Fraction(1, 2 * (span + 1))
    xs = [Fraction(0)] * n
    for i, v in enumerate(seq):
        xs[v] = x[i][0] + x[i][1] * gamma
    return xs


def _uig_weights(g, order, t_pm):
    """Weights for a unit interval graph with every weight >= t_pm."""
    if g.n == 0:
        return []
    xs = _unit_positions(g, order)
    mn = min(xs)
    return [t_pm * (x - mn) + t_pm for x in xs]


# -- partition verification (the linear-time procedure) ----------------------


class _Block:
    __slots__ = ("members", "ni", "prev", "next")

    def __init__(self, members, ni):
        self.members = members
        self.ni = ni  # how many members are neighbors of the independent set
        self.prev = None
        self.next = None


def _umbrella_from_clique_path(g, cp):
    """Left-endpoint order of the clique-path model, or None if it is not an
    umbrella ordering (i.e. g is not a unit interval graph)."""
    if g.n == 0:
        return VertexOrdering(())
    model = interval_model_from_clique_path(g, cp)
    lo, hi = model.lo, model.hi
    order = VertexOrdering(sorted(range(g.n), key=lambda v: (lo[v], hi[v], v)))
    if check_umbrella_ordering(g, order):
        return order
    return None


def verify_partition(g, independent_set):
    """Check whether the independent set extends to a paired threshold
    partition; return it, or None if no umbrella ordering works.

    The preconditions (g connected; the set independent; g minus the set a
    unit interval graph; the set's closed neighborhood inducing a threshold
    graph) are contract requirements and raise ValueError when violated.
    """
    n = g.n
    iset = set(independent_set)
    for v in iset:
        if any(u in iset for u in g.adj[v]):
            raise ValueError("the given set is not independent")
    if n > 0 and len(connected_components(g)) != 1:
        raise ValueError("graph must be connected")
    u_orig = [v for v in range(n) if v not in iset]
    sub, ids = g.induced(u_orig)
    sigma = umbrella_ordering(sub)
    if sigma is None:
        raise ValueError("graph minus the set is not a unit interval graph")
    closed = set(iset)
    for v in iset:
        closed.update(g.adj[v])
    if not induces_threshold(g, sorted(closed)):
        raise ValueError("closed neighborhood of the set is not a threshold graph")
    order_i = neighborhood_containment_order(g, sorted(iset))
    if order_i is None:
        raise AssertionError("threshold neighborhood must give a containment chain")
    return _partition_core(g, order_i, sub, ids, sigma)


def _partition_core(g, order_i, sub, ids, sigma):
    """The verification procedure proper, on precomputed pieces.

    Twin classes of the remainder are kept as a doubly linked list of blocks;
    each independent vertex, in containment order, locates its first and last
    intersecting blocks, rejects if a strictly intermediate block is not fully
    covered, and splits the boundary blocks so its neighborhood becomes a
    contiguous run.
    """
    local = {old: i for i, old in enumerate(ids)}
    if not order_i:
        return PTPartition((), tuple(ids[x] for x in sigma))
    if sub.n == 0:
        # empty umbrella side: conditions on it are vacuous
        return PTPartition(tuple(order_i), ())

    classes = list(true_twin_classes(sub, sigma))
    ni = set()
    for v in order_i:
        ni.update(local[u] for u in g.adj[v])
    nb_first = set(neighbors_closed(sub, classes[0][0]))
    nb_last = set(neighbors_closed(sub, classes[-1][0]))
    fits_first = ni <= nb_first
    fits_last = ni <= nb_last
    if not fits_first and not fits_last:
        return None
    if not fits_first:
        classes.reverse()

    head = None
    tail = None
    block_of = {}
    for cls in classes:
        blk = _Block(set(cls), sum(1 for x in cls if x in ni))
        for x in cls:
            block_of[x] = blk
        if head is None:
            head = tail = blk
        else:
            tail.next = blk
            blk.prev = tail
            tail = blk
    total_ni = len(ni)

    prev_l = prev_r = None
    for uvert in order_i:
        nbrs = [local[u] for u in g.adj[uvert]]
        counter = {}
        for x in nbrs:
            blk = block_of[x]
            counter[id(blk)] = counter.get(id(blk), 0) + 1
        if prev_l is None:
            cur = head
            t_l = t_r = None
            while cur is not None:
                if counter.get(id(cur), 0):
                    if t_l is None:
                        t_l = cur
                    t_r = cur
                cur = cur.next
        else:
            t_l = prev_l
            while t_l.prev is not None and counter.get(id(t_l.prev), 0):
                t_l = t_l.prev
            t_r = prev_r
            while t_r.next is not None and counter.get(id(t_r.next), 0):
                t_r = t_r.next
        if t_l is None:
            return None
        total = 0
        cur = t_l
        while True:
            c = counter.get(id(cur), 0)
            total += c
            if cur is not t_l and cur is not t_r and c != len(cur.members):
                return None
            if cur is t_r:
                break
            cur = cur.next
            if cur is None:
                return None
        if total != len(nbrs):
            return None
        marked = set(nbrs)

        def split(blk, inside_goes):
            inside = blk.members & marked
            if not inside or len(inside) == len(blk.members):
                return blk
            blk.members -= inside
            inside_ni = sum(1 for x in inside if x in ni)
            blk.ni -= inside_ni
            nb = _Block(inside, inside_ni)
            for x in inside:
                block_of[x] = nb
            nonlocal head, tail
            if inside_goes == "right":
                nb.next = blk.next
                nb.prev = blk
                if blk.next is not None:
                    blk.next.prev = nb
                else:
                    tail = nb
                blk.next = nb
            else:
                nb.prev = blk.prev
                nb.next = blk
                if blk.prev is not None:
                    blk.prev.next = nb
                else:
                    head = nb
                blk.prev = nb
            return nb

        if t_l is t_r:
            # a single boundary block: orient its inside part toward the rest
            # of N(I), which is where the later, larger neighborhoods extend
            goes = "right"
            if t_l.ni < total_ni:
                left, right = t_l.prev, t_l.next
                while left is not None or right is not None:
                    if left is not None:
                        if left.ni:
                            goes = "left"
                            break
                        left = left.prev
                    if right is not None:
                        if right.ni:
                            break
                        right = right.next
            prev_l = prev_r = split(t_l, goes)
        else:
            prev_l = split(t_l, "right")
            prev_r = split(t_r, "left")

    flat = []
    cur = head
    while cur is not None:
        flat.extend(sorted(cur.members))
        cur = cur.next
    # the block surgery only reorders twins, so this stays an umbrella
    # ordering; re-derive and verify the two partition conditions
    posu = {x: i for i, x in enumerate(flat)}
    for uvert in order_i:
        ps = sorted(posu[local[u]] for u in g.adj[uvert])
        if ps and ps[-1] - ps[0] + 1 != len(ps):
            raise AssertionError("partition procedure produced a non-consecutive run")
    first_nb = set(neighbors_closed(sub, flat[0]))
    if not ni <= first_nb:
        raise AssertionError("partition procedure broke the first-vertex condition")
    return PTPartition(tuple(order_i), tuple(ids[x] for x in flat))


# -- weight synthesis --------------------------------------------------------


def synthesize_weights(g, part):
    """Exact weights for a connected graph with a nontrivial partition.

    Numbers the independent set by containment followed by the umbrella
    ordering, then assigns integer weights in four bands depending on whether
    a vertex is seen by the independent set and sits before or after the
    first vertex's neighborhood; vertices beyond the first closed
    neighborhood interpolate between their earliest neighbor's band edges.
    The result satisfies the strict weight chain with pivots n^2 and 3n^2 and
    threshold 2n^2.
    """
    n = g.n
    order_i = neighborhood_containment_order(g, sorted(part.independent))
    if order_i is None:
        raise ValueError("independent side has no containment order")
    sigma = list(part.umbrella)
    p = len(order_i)
    if p == 0 or not sigma:
        raise ValueError("general construction needs both sides nonempty")
    if p + len(sigma) != n:
        raise ValueError("partition does not cover the graph")
    if len(connected_components(g)) != 1:
        raise ValueError("graph must be connected")
    num = {}
    vert = [None] * (n + 1)
    for i, v in enumerate(order_i, start=1):
        num[v] = i
        vert[i] = v
    for j, v in enumerate(sigma, start=p + 1):
        num[v] = j
        vert[j] = v
    v1 = vert[1]
    if not g.adj[v1]:
        raise ValueError("graph must be connected")
    q = min(num[w] for w in g.adj[v1])
    u0 = vert[p + 1]
    t = max((num[w] for w in g.adj[u0] if num[w] > p), default=p + 1)
    t = max(t, p + 1)
    if t == n:
        raise ValueError("umbrella side is a clique; use the threshold route")
    s = [0] * (n + 1)
    for i in range(p + 1, n + 1):
        s[i] = min(num[w] for w in g.adj[vert[i]])
    try:
        w, keys, frac = _band_weights(n, p, q, t, s, exact=False), None, False
    except _ExactNeeded:
        w, frac = _band_weights(n, p, q, t, s, exact=True), True
    nsq = Fraction(n) * n
    if frac:
        keys, scale = _scaled_numerators(w[1:])
        if keys is None:
            keys = w[1:]
            nsq_key, nsq3_key = nsq, 3 * nsq
        else:
            nsq_key, nsq3_key = int(nsq * scale), int(3 * nsq * scale)
    else:
        # weights are integers scaled by 2n^2
        keys = w[1:]
        scale = 2 * n * n
        nsq_key, nsq3_key = int(nsq * scale), int(3 * nsq * scale)
    for i in range(len(keys) - 1):
        if not keys[i] < keys[i + 1]:
            raise AssertionError("weight chain is not strictly increasing")
    if not (keys[p - 1] < nsq_key < keys[p] and keys[t - 1] < nsq3_key):
        raise AssertionError("weight chain pivots violated")
    if t < n and not nsq3_key < keys[t]:
        raise AssertionError("weight chain pivots violated")
    weights = [Fraction(0)] * n
    if frac:
        for i in range(1, n + 1):
            weights[vert[i]] = w[i]
    else:
        denom = 2 * n * n
        for i in range(1, n + 1):
            weights[vert[i]] = Fraction(w[i], denom)
    return WeightCertificate(tuple(weights), 2 * nsq, p=p, q=q, t=t)


class _ExactNeeded(Exception):
    """Signals that the scaled-integer fast path cannot represent a window
    subdivision and the exact-rational path must be used instead."""


def _band_weights(n, p, q, t, s, exact):
    """The weight assignment by position number.

    Positions 1..p get i*n; positions p+1..t get the four-band values driven
    by their earliest neighbor; positions beyond t land strictly inside the
    window (2n^2 + w[s(i)-1], 2n^2 + w[s(i)]].  Window anchors still in the
    integer bands use the classical interpolation by position/n; deeper
    anchors get a direct subdivision of the window among its occupants, which
    keeps the values shallow on long single-occupant chains.

    With exact=False all arithmetic is integer, scaled by 2n^2, and
    _ExactNeeded is raised when a window is too narrow for that grid.
    """
    if exact:
        one = Fraction(1)
        unit_spacing = Fraction(1, 2 * n)
    else:
        one = 2 * n * n
        unit_spacing = n  # 1/(2n) scaled by 2n^2
    w = [0] * (n + 1)
    for i in range(1, p + 1):
        w[i] = i * n * one
    for i in range(p + 1, t + 1):
        seen = s[i] <= p
        if i < q and not seen:
            w[i] = ((2 * n - p) * n - (n - i)) * one
        elif i < q and seen:
            w[i] = ((2 * n - s[i]) * n + i) * one
        elif seen:
            w[i] = ((2 * n + s[i]) * n - (n - i)) * one
        elif i > q:
            w[i] = ((2 * n + p) * n + i) * one
        else:
            raise AssertionError("position q must be adjacent to the first vertex")
    shift = 2 * n * n * one
    i = t + 1
    prev_si = 0
    while i <= n:
        si = s[i]
        if not (p + 1 < si < i):
            raise AssertionError("earliest neighbor out of range beyond the first clique")
        if si < prev_si:
            raise AssertionError("earliest neighbors must be nondecreasing beyond t")
        prev_si = si
        j = i
        while j + 1 <= n and s[j + 1] == si:
            j += 1
        gap = w[si] - w[si - 1]
        if si <= t:
            # gap is a multiple of one, so r/n * gap stays on the grid
            base = shift + w[si - 1]
            for r in range(i, j + 1):
                if exact:
                    w[r] = base + Fraction(r, n) * gap
                else:
                    w[r] = base + r * (gap // n)
        else:
            count = j - i + 1
            if exact:
                spacing = min(gap / (count + 1), unit_spacing)
            else:
                spacing = min((gap - 1) // (count + 1), unit_spacing)
                if spacing < 1:
                    raise _ExactNeeded
            base = shift + w[si]
            for r in range(i, j + 1):
                w[r] = base - (j + 1 - r) * spacing
        i = j + 1
    return w


def _threshold_certificate(g):
    """Equalized certificate for a threshold graph via the threshold route."""
    tc = recognize_threshold(g)
    if tc is None:
        raise ValueError("graph is not a threshold graph")
    if g.n <= 1:
        return WeightCertificate(tuple(tc.weights), tc.threshold)
    spread = max(tc.weights) - min(tc.weights) + 1
    return normalize_thresholds(g, tc.weights, tc.threshold, spread, _selfcheck=False)


def synthesize_weights_general(g, part, selfcheck=True):
    """Weight certificate for any graph with a valid partition.

    Dispatches: empty umbrella side (edgeless graph), empty independent side
    (pure unit interval), umbrella side a clique (threshold graph),
    disconnected input (synthesize on the one non-unit-interval component and
    lift the rest), and otherwise the general connected construction.
    """
    n = g.n
    if n == 0:
        return WeightCertificate((), Fraction(1))
    comps = connected_components(g)
    if len(comps) > 1:
        infos = []
        for comp in comps:
            sub, ids = g.induced(comp)
            sig = umbrella_ordering(sub)
            infos.append((comp, sub, ids, sig))
        non_uig = [x for x in infos if x[3] is None]
        if len(non_uig) > 1:
            raise ValueError("more than one component is not a unit interval graph")
        weights = [None] * n
        if non_uig:
            comp, sub, ids, _ = non_uig[0]
            cset = set(comp)
            inv = {old: i for i, old in enumerate(ids)}
            sub_part = PTPartition(
                tuple(inv[v] for v in part.independent if v in cset),
                tuple(inv[v] for v in part.umbrella if v in cset),
            )
            cert = synthesize_weights_general(sub, sub_part, selfcheck=False)
            tpm = cert.t_pm
            for i, old in enumerate(ids):
                weights[old] = cert.weights[i]
            curmax = max(cert.weights)
        else:
            tpm = 2 * Fraction(n) ** 2
            curmax = Fraction(0)
        for comp, sub, ids, sig in infos:
            if sig is None:
                continue
            base = _uig_weights(sub, sig, tpm)
            shift = curmax + 1
            vals = [x + shift for x in base]
            for i, old in enumerate(ids):
                weights[old] = vals[i]
            curmax = max(vals)
        out = WeightCertificate(tuple(weights), tpm)
    elif not part.umbrella:
        if g.m != 0:
            raise ValueError("empty umbrella side requires an edgeless graph")
        out = WeightCertificate((Fraction(1),) * n, Fraction(4))
    elif not part.independent:
        order = VertexOrdering(part.umbrella)
        tpm = 2 * Fraction(n) ** 2
        out = WeightCertificate(tuple(_uig_weights(g, order, tpm)), tpm)
    else:
        u0 = part.umbrella[0]
        last = part.umbrella[-1]
        if len(part.umbrella) == 1 or g.has_edge(u0, last):
            out = _threshold_certificate(g)
        else:
            out = synthesize_weights(g, part)
    if selfcheck:
        bad = weight_violation(g, out)
        if bad is not None:
            raise AssertionError(f"synthesized certificate is invalid at pair {bad}")
    return out


# -- greedy candidate construction -------------------------------------------


def greedy_candidate_sets(g, cp):
    """Candidate independent sets grown from both ends of a clique path.

    At each clique the smallest-id vertex lying in no other maximal clique is
    picked (such vertices are exactly the clique's exclusive simplicial
    vertices, and any of them yields the same closed neighborhood, namely the
    clique itself); picking stops at the first clique without one.  The
    threshold constraint is prefix-monotone because induced subgraphs of
    threshold graphs are threshold, so the cut point is found by binary
    search over stateless checks.
    """
    count = [0] * g.n
    for clique in cp:
        for v in clique:
            count[v] += 1

    def one_side(cliques):
        picks = []
        for clique in cliques:
            cands = [v for v in clique if count[v] == 1]
            if not cands:
                break
            picks.append((min(cands), clique))
        if not picks:
            return ()

        def ok(k):
            union = set()
            for _, clique in picks[:k]:
                union.update(clique)
            return induces_threshold(g, sorted(union))

        lo, hi = 0, len(picks)
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if ok(mid):
                lo = mid
            else:
                hi = mid - 1
        return tuple(v for v, _ in picks[:lo])

    cliques = list(cp)
    return one_side(cliques), one_side(list(reversed(cliques)))


# -- the recognition pipeline -------------------------------------------------


def _add_universal(g):
    """Copy of g with one extra vertex adjacent to everything."""
    n = g.n
    adj = [list(row) + [n] for row in g.adj]
    adj.append(list(range(n)))
    return Graph._raw(n + 1, adj, g.m + n)


def _greedy_mis_threshold(g, cert):
    """Maximum independent set of a threshold graph: greedy by ascending
    weight, which fills the small-weight side and at most one clique vertex."""
    order = sorted(range(g.n), key=lambda v: (cert.weights[v], v))
    chosen = set()
    for v in order:
        if not any(u in chosen for u in g.adj[v]):
            chosen.add(v)
    return sorted(chosen)


def _finish_yes(g, weights, t_pm, selfcheck, details):
    cert = WeightCertificate(tuple(weights), t_pm)
    if selfcheck:
        bad = weight_violation(g, cert)
        if bad is not None:
            raise AssertionError(f"composed certificate is invalid at pair {bad}")
    broom = broom_from_weights(g, cert, validate=False)
    if not check_broom(g, broom):
        raise AssertionError("composed broom certificate is invalid")
    return RecognitionResult(True, cert, broom, None, details)


def recognize(g, selfcheck=True):
    """Decide paired threshold membership and return certificates.

    YES results carry a weight certificate and a broom certificate validating
    against the original input; NO results carry the deepest reason reached
    plus the candidate sets that were tried.  `selfcheck` controls the
    quadratic all-pairs validation of the weight certificate (the linear
    broom check always runs).
    """
    n = g.n
    details = {}
    comps = connected_components(g)
    kept = []
    dropped = []
    for comp in comps:
        if len(comp) == n:
            sub, ids = g, list(range(n))
        else:
            sub, ids = g.induced(comp)
        cp_sub = recognize_interval(sub)
        sig = None if cp_sub is None else _umbrella_from_clique_path(sub, cp_sub)
        if sig is None:
            kept.append((comp, sub, ids, cp_sub))
        else:
            dropped.append((comp, sub, ids, sig))
    if len(kept) > 1:
        details["components"] = [kept[0][0], kept[1][0]]
        return RecognitionResult(False, None, None, "TwoNonUIGComponents", details)
    if not kept:
        tpm = 2 * Fraction(max(n, 1)) ** 2
        weights = [None] * n
        curmax = Fraction(0)
        for comp, sub, ids, sig in dropped:
            base = _uig_weights(sub, sig, tpm)
            shift = curmax + 1
            vals = [x + shift for x in base]
            for i, old in enumerate(ids):
                weights[old] = vals[i]
            curmax = max(vals) if vals else curmax
        if n == 0:
            return RecognitionResult(True, WeightCertificate((), Fraction(1)),
                                     BroomCertificate(VertexOrdering(()), 0), None, details)
        return _finish_yes(g, weights, tpm, selfcheck, details)

    comp, h, hids, cp_h = kept[0]
    core, removed_u, removed_d = peel_universal_isolated(h)
    part_h = None
    if not core:
        cert_h = _threshold_certificate(h)
    else:
        coreg, core_ids = h.induced(core)
        core_comps = connected_components(coreg)
        if len(core_comps) > 2:
            details["core_components"] = [
                sorted(hids[core_ids[x]] for x in cc) for cc in core_comps
            ]
            return RecognitionResult(False, None, None, "TooManyCoreComponents", details)
        if len(core_comps) == 2:
            assign = None
            for a, b in ((0, 1), (1, 0)):
                sub_a, _ = coreg.induced(core_comps[a])
                sub_b, _ = coreg.induced(core_comps[b])
                if sub_a.m == sub_a.n * (sub_a.n - 1) // 2 and recognize_threshold(sub_b):
                    assign = (core_comps[a], core_comps[b])
                    break
            if assign is None:
                details["core_components"] = [
                    sorted(hids[core_ids[x]] for x in cc) for cc in core_comps
                ]
                return RecognitionResult(False, None, None, "TwoComponentShapeFail", details)
            clique_side = {core_ids[x] for x in assign[0]}
            rest = [v for v in range(h.n) if v not in clique_side]
            sub_r, ids_r = h.induced(rest)
            tc = recognize_threshold(sub_r)
            if tc is None:
                raise AssertionError("peel remainder must be a threshold graph")
            i_h = sorted(ids_r[x] for x in _greedy_mis_threshold(sub_r, tc))
            part_h = verify_partition(h, i_h)
            if part_h is None:
                raise AssertionError("two-component construction must verify")
            cert_h = synthesize_weights_general(h, part_h, selfcheck)
        else:
            if removed_u or removed_d:
                gstar = _add_universal(coreg)
                star_ids = core_ids + [None]
                cp = recognize_interval(gstar)
            else:
                gstar = h
                star_ids = list(range(h.n))
                cp = cp_h
            if cp is None:
                return RecognitionResult(False, None, None, "NotInterval", details)
            i_l, i_r = greedy_candidate_sets(gstar, cp)
            details["i_l"] = [hids[star_ids[x]] for x in i_l]
            details["i_r"] = [hids[star_ids[x]] for x in i_r]
            found = None
            for cand, side in ((i_l, "left"), (i_r, "right")):
                cset = set(cand)
                others = [v for v in range(gstar.n) if v not in cset]
                sub_u, ids_u = gstar.induced(others)
                cp_u = recognize_interval(sub_u)
                sigma_u = None if cp_u is None else _umbrella_from_clique_path(sub_u, cp_u)
                if sigma_u is None:
                    continue
                order_i = neighborhood_containment_order(gstar, sorted(cand))
                if order_i is None:
                    continue
                part = _partition_core(gstar, order_i, sub_u, ids_u, sigma_u)
                if part is not None:
                    found = (part, side, cand)
                    break
            if found is None:
                return RecognitionResult(False, None, None, "NoValidPartition", details)
            part_star, side, cand = found
            details["side"] = side
            if gstar is h:
                part_h = part_star
            else:
                i_h = sorted({core_ids[x] for x in cand} | set(removed_d))
                part_h = verify_partition(h, i_h)
                if part_h is None:
                    raise AssertionError("lifted partition must verify")
            cert_h = synthesize_weights_general(h, part_h, selfcheck)

    weights = [None] * n
    for i, old in enumerate(hids):
        weights[old] = cert_h.weights[i]
    tpm = cert_h.t_pm
    curmax = max(cert_h.weights)
    for comp2, sub, ids, sig in dropped:
        base = _uig_weights(sub, sig, tpm)
        shift = curmax + 1
        vals = [x + shift for x in base]
        for i, old in enumerate(ids):
            weights[old] = vals[i]
        curmax = max(vals)
    if part_h is not None:
        details["partition"] = PTPartition(
            tuple(hids[v] for v in part_h.independent),
            tuple(hids[v] for v in part_h.umbrella),
        )
    return _finish_yes(g, weights, tpm, selfcheck, details)
