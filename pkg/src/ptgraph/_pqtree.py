"""PQ-tree reduction for consecutive-ones orderings.

Used by interval recognition to arrange maximal cliques so that every
vertex's cliques are consecutive.  Children are kept in doubly linked lists
so that reductions touch only the pertinent part of the tree plus the nodes
they dissolve; on clique paths of long unit-interval-like graphs this keeps
the whole reduction near linear.  Worst-case inputs can still pay more than
that per row, which is acceptable here: correctness is what the callers'
validators check, and the hot paths stay cheap.
"""

from __future__ import annotations

__all__ = ["PQTree"]

_P, _Q, _LEAF = "P", "Q", "L"


class _Node:
    __slots__ = ("kind", "parent", "size", "leaf", "first", "last", "prev", "next")

    def __init__(self, kind, leaf=-1):
        self.kind = kind
        self.parent = None
        self.size = 1 if kind == _LEAF else 0
        self.leaf = leaf
        self.first = None
        self.last = None
        self.prev = None
        self.next = None

    def __repr__(self):  # debugging aid only
        if self.kind == _LEAF:
            return f"L{self.leaf}"
        kids = []
        c = self.first
        while c is not None:
            kids.append(repr(c))
            c = c.next
        return f"{self.kind}[{', '.join(kids)}]"


def _bump_sizes(node, delta):
    while node is not None:
        node.size += delta
        node = node.parent


def _attach(p, c, end):
    """Attach detached node c as a child of p at the given end."""
    c.parent = p
    if end == "last":
        c.prev = p.last
        c.next = None
        if p.last is not None:
            p.last.next = c
        p.last = c
        if p.first is None:
            p.first = c
    else:
        c.next = p.first
        c.prev = None
        if p.first is not None:
            p.first.prev = c
        p.first = c
        if p.last is None:
            p.last = c
    _bump_sizes(p, c.size)


def _detach(p, c):
    """Remove child c from p's child list."""
    if p.first is c:
        p.first = c.next
    if p.last is c:
        p.last = c.prev
    if c.prev is not None:
        c.prev.next = c.next
    if c.next is not None:
        c.next.prev = c.prev
    c.prev = c.next = None
    c.parent = None
    _bump_sizes(p, -c.size)


def _replace(p, old, new):
    """Put detached node `new` in `old`'s slot among p's children."""
    new.parent = p
    new.prev = old.prev
    new.next = old.next
    if old.prev is not None:
        old.prev.next = new
    else:
        p.first = new
    if old.next is not None:
        old.next.prev = new
    else:
        p.last = new
    old.prev = old.next = old.parent = None
    _bump_sizes(p, new.size - old.size)


def _child_list(x):
    out = []
    c = x.first
    while c is not None:
        out.append(c)
        c = c.next
    return out


def _splice_children(p, q, reverse):
    """Replace child q of p by q's own children, in order or reversed."""
    kids = _child_list(q)
    if reverse:
        kids.reverse()
    for c in kids:
        c.parent = p
    for a, b in zip(kids, kids[1:]):
        a.next = b
        b.prev = a
    head, tail = kids[0], kids[-1]
    head.prev = q.prev
    tail.next = q.next
    if q.prev is not None:
        q.prev.next = head
    else:
        p.first = head
    if q.next is not None:
        q.next.prev = tail
    else:
        p.last = tail
    q.first = q.last = q.prev = q.next = q.parent = None


def _opposite(end):
    return "first" if end == "last" else "last"


class PQTree:
    """PQ-tree over k leaves (initially one P node with leaves 0..k-1)."""

    def __init__(self, k):
        self.k = k
        self.leaves = [_Node(_LEAF, i) for i in range(k)]
        if k == 1:
            self.root = self.leaves[0]
        else:
            root = _Node(_P)
            for leaf in self.leaves:
                _attach(root, leaf, "last")
            self.root = root

    # -- queries ---------------------------------------------------------

    def frontier(self):
        """Leaf ids left to right; always one of the represented orders."""
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.kind == _LEAF:
                out.append(node.leaf)
                continue
            kids = _child_list(node)
            stack.extend(reversed(kids))
        return out

    # -- reduction -------------------------------------------------------

    def reduce(self, row):
        """Constrain the leaves in `row` to be consecutive; False if impossible."""
        s = len(row)
        if s <= 1 or s == self.k:
            return True
        cnt = {}
        leaves = self.leaves
        for cid in row:
            node = leaves[cid]
            while node is not None:
                cnt[node] = cnt.get(node, 0) + 1
                node = node.parent
        # pertinent root: deepest node covering the whole row
        R = leaves[row[0]]
        while cnt[R] != s:
            R = R.parent
        return self._restructure_root(R, cnt)

    def _restructure_root(self, R, cnt):
        if cnt[R] == R.size:
            # row occupies R's entire frontier segment: already consecutive
            return True
        if R.kind == _LEAF:
            return True
        kids = [c for c in cnt if c.parent is R]
        fulls = [c for c in kids if cnt[c] == c.size]
        partials = [c for c in kids if cnt[c] < c.size]
        if R.kind == _P:
            if len(partials) > 2:
                return False
            if not partials:
                if len(fulls) >= 2:
                    fp = _Node(_P)
                    for c in fulls:
                        _detach(R, c)
                        _attach(fp, c, "last")
                    _attach(R, fp, "last")
                self._collapse_single(R)
                return True
            made = []
            for pc in partials:
                res = self._make_partial(pc, cnt)
                if res is None:
                    return False
                made.append(res)
            q1, fe1 = made[0]
            if fulls:
                fg = self._group(R, fulls)
                _attach(q1, fg, fe1)
            if len(made) == 2:
                q2, fe2 = made[1]
                _detach(R, q2)
                kids2 = _child_list(q2)
                if fe2 == "last":
                    kids2.reverse()  # full end first, so fulls meet fulls
                for c in kids2:
                    c.prev = c.next = c.parent = None
                    _attach(q1, c, fe1)
            self._collapse_single(R)
            return True
        # R is a Q node: pertinent children must form one contiguous run with
        # partial children only at its ends and full children in between.
        run = self._sibling_run(kids)
        if run is None:
            return False
        for c in run[1:-1]:
            if cnt[c] != c.size:
                return False
        if len(run) == 1:
            # a lone partial child would have been the pertinent root itself
            return cnt[run[0]] == run[0].size
        head, tail = run[0], run[-1]
        if cnt[head] < head.size:
            if not self._dissolve_into(R, head, cnt, face="right"):
                return False
        if cnt[tail] < tail.size:
            if not self._dissolve_into(R, tail, cnt, face="left"):
                return False
        return True

    def _make_partial(self, x, cnt):
        """Rearrange partial non-root node x so the row's leaves sit at one
        end of its frontier.  Returns (qnode, full_end) with qnode occupying
        x's old slot, or None if impossible."""
        if x.kind == _LEAF:
            return None
        kids = [c for c in cnt if c.parent is x]
        fulls = [c for c in kids if cnt[c] == c.size]
        partials = [c for c in kids if cnt[c] < c.size]
        if x.kind == _P:
            if len(partials) > 1:
                return None
            if partials:
                res = self._make_partial(partials[0], cnt)
                if res is None:
                    return None
                q, fe = res
                if fulls:
                    fg = self._group(x, fulls)
                    _attach(q, fg, fe)
                parent = x.parent
                _detach(x, q)
                _replace(parent, x, q)
                if x.first is not None:
                    # the empty children stay grouped under x
                    if x.first is x.last:
                        e = x.first
                        _detach(x, e)
                        _attach(q, e, _opposite(fe))
                    else:
                        _attach(q, x, _opposite(fe))
                return (q, fe)
            # no partial child: fulls and empties both nonempty
            q = _Node(_Q)
            fg = self._group(x, fulls)
            parent = x.parent
            if x.first is x.last:
                e = x.first
                _detach(x, e)
                _replace(parent, x, q)
                _attach(q, e, "first")
            else:
                _replace(parent, x, q)
                _attach(q, x, "first")
            _attach(q, fg, "last")
            return (q, "last")
        # x is a Q node
        run = self._sibling_run(kids)
        if run is None:
            return None
        if len(partials) > 1:
            return None
        touches_first = run[0] is x.first
        touches_last = run[-1] is x.last
        if touches_first and touches_last:
            # all children marked; the single partial decides the orientation
            if not partials:
                return None  # would make x full, not partial
            if partials[0] is run[0]:
                full_end, inner = "last", run[0]
            elif partials[0] is run[-1]:
                full_end, inner = "first", run[-1]
            else:
                return None
        elif touches_last:
            full_end, inner = "last", run[0]
        elif touches_first:
            full_end, inner = "first", run[-1]
        else:
            return None
        for c in run:
            if cnt[c] != c.size and c is not inner:
                return None
        if partials and partials[0] is not inner:
            return None
        if partials:
            face = "right" if full_end == "last" else "left"
            if not self._dissolve_into(x, inner, cnt, face):
                return None
        return (x, full_end)

    def _dissolve_into(self, parent, pc, cnt, face):
        """Replace partial child pc of a Q parent by its own children, with
        pc's full side facing `face` ('left' or 'right')."""
        res = self._make_partial(pc, cnt)
        if res is None:
            return False
        q, fe = res
        natural = (face == "right" and fe == "last") or (face == "left" and fe == "first")
        _splice_children(parent, q, reverse=not natural)
        return True

    def _group(self, owner, nodes):
        """Detach `nodes` from owner; return them as one node (P-grouped if several)."""
        if len(nodes) == 1:
            c = nodes[0]
            _detach(owner, c)
            return c
        fp = _Node(_P)
        for c in nodes:
            _detach(owner, c)
            _attach(fp, c, "last")
        return fp

    def _sibling_run(self, kids):
        """Order marked children along the sibling chain; None if they are
        not consecutive siblings."""
        marked = set(id(c) for c in kids)
        start = kids[0]
        while start.prev is not None and id(start.prev) in marked:
            start = start.prev
        run = []
        c = start
        while c is not None and id(c) in marked:
            run.append(c)
            c = c.next
        if len(run) != len(kids):
            return None
        return run

    def _collapse_single(self, node):
        """Replace a one-child internal node by its child."""
        if node.kind == _LEAF or node.first is None or node.first is not node.last:
            return
        child = node.first
        _detach(node, child)
        if node.parent is None:
            child.parent = None
            self.root = child
        else:
            _replace(node.parent, node, child)
