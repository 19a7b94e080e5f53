# -*- coding: utf-8 -*-

"""
dhmv.directed
~~~~~~~~~~~~~

Orientation of the canonical decomposition.  Every marked edge whose
end is the centre of a star bag points away from that centre, unless
the other end is a star leaf; two centres facing each other give two
opposite arrows.

"""

import logging

from dhmv.datatypes import (
    CLIQUE, STAR, END_SP, END_SC, HEAD, SIDE_NAME,
    NO_T_ARROW, SINGLE_OR_TAIL, HEAD_CONNECTED, OPPOSITE_PAIR,
    VertexSet, Arrow, SideView, TArrowReport, SpecialCheck,
)
from dhmv.decomposition import recompose
from dhmv.error import ConsistencyError, Error
from dhmv.graph import cut_vertices


logger = logging.getLogger(__file__)


class DirectedDecomposition(object):

    def __init__(self, base, arrows, plain_marked_edges, sigma):
        self.base = base
        self.arrows = tuple(arrows)
        self.plain_marked_edges = tuple(plain_marked_edges)
        self.sigma = VertexSet(sigma)
        self._from = dict((a.tail, a) for a in self.arrows)
        self._heads = {}

    def arrows_from(self, x):
        a = self._from.get(x)
        return (a,) if a is not None else ()

    def opposite(self, a):
        if a.opposite is None:
            return None
        return self.arrows[a.opposite]

    def head_bag(self, a):
        return self.base.bag_of[a.head]

    def tail_bag(self, a):
        return self.base.bag_of[a.tail]

    def head_vertices(self, a):
        """Unmarked vertices alternately reachable from the head, cached."""
        if a.index not in self._heads:
            self._heads[a.index] = frozenset(_alternating_reach(self.base, a.head))
        return self._heads[a.index]

    def __repr__(self):
        return 'DirectedDecomposition(arrows=%d, sigma=%s)' % (len(self.arrows), list(self.sigma))


def orient(d):
    arrows = []
    plain = []
    for e, (p, q) in enumerate(d.marked_edges):
        rp, rq = d.role[p], d.role[q]
        if END_SP in (rp, rq) and END_SC in (rp, rq):
            raise Error('marked edge (%d, %d) joins a star leaf to a star centre' % (p, q))
        if rp == END_SC and rq == END_SC:
            i = len(arrows)
            arrows.append(Arrow(i, p, q, e, i + 1))
            arrows.append(Arrow(i + 1, q, p, e, i))
        elif rp == END_SC:
            arrows.append(Arrow(len(arrows), p, q, e, None))
        elif rq == END_SC:
            arrows.append(Arrow(len(arrows), q, p, e, None))
        else:
            plain.append(e)
    sigma = [bag.center for bag in d.bags
             if bag.type == STAR and bag.center is not None and bag.center < d.n]
    dd = DirectedDecomposition(d, arrows, plain, sigma)
    logger.debug('oriented: %d arrows, %d plain edges, sigma=%s', len(arrows), len(plain), list(dd.sigma))
    return dd


def _alternating_reach(d, start):
    """Unmarked vertices reached from marked ``start`` by alternating paths."""
    found = []
    stack = [start]
    while stack:
        z = stack.pop()
        for w in d.bag_neighbors(z):
            if d.is_marked(w):
                stack.append(d.partner(w))
            else:
                found.append(w)
    return found


def _side_bags(d, a, side):
    tree = d.tree
    e = a.edge
    p, q = d.marked_edges[e]
    bp, bq = d.bag_of[p], d.bag_of[q]
    child = bp if tree.parent_edge[bp] == e else bq
    endpoint = a.head if side == HEAD else a.tail
    inside = tree.subtree(child)
    if d.bag_of[endpoint] == child:
        return inside
    excluded = set(inside)
    return [b for b in tree.nodes if b not in excluded]


def side_view(dd, a, side):
    d = dd.base
    bags = _side_bags(d, a, side)
    component = VertexSet(x for b in bags for x in d.bags[b].members)
    endpoint = a.head if side == HEAD else a.tail
    logger.debug('%s side of arrow %d: %d vertices', SIDE_NAME[side], a.index, len(component))
    return SideView(a, side, component, VertexSet(_alternating_reach(d, endpoint)))


def t_arrows(dd):
    """Find the t-arrows and classify how they sit relative to each other.

    Rooted at bag 0, a side entered through a marked edge is clean when
    the entry vertex is not a star leaf and every side hanging below it is
    clean.  An arrow is a t-arrow exactly when its head side is clean.
    """
    d = dd.base
    tree = d.tree
    count = len(d.bags)
    entry = [-1] * count
    for c in tree.order[1:]:
        p, q = d.marked_edges[tree.parent_edge[c]]
        entry[c] = p if d.bag_of[p] == c else q

    down = [True] * count
    dirty = [0] * count
    for c in reversed(tree.order):
        down[c] = dirty[c] == 0 and (c == 0 or d.role[entry[c]] != END_SP)
        if c and not down[c]:
            dirty[tree.parent[c]] += 1

    up = [True] * count
    for c in tree.order[1:]:
        p = tree.parent[c]
        x = d.partner(entry[c])
        siblings_dirty = dirty[p] - (0 if down[c] else 1)
        up[c] = d.role[x] != END_SP and siblings_dirty == 0 and (p == 0 or up[p])

    t_list = []
    for a in dd.arrows:
        b = d.bag_of[a.head]
        child = b if tree.parent_edge[b] == a.edge else d.bag_of[a.tail]
        if child == b:
            clean = down[child]
        else:
            clean = up[child]
        if clean:
            t_list.append(a)

    shape, head_bag = _classify(dd, t_list)
    logger.debug('t-arrows: %s shape=%d', [(a.tail, a.head) for a in t_list], shape)
    return TArrowReport(tuple(t_list), shape, head_bag)


def _classify(dd, t_list):
    d = dd.base
    tree = d.tree
    k = len(t_list)
    if k == 0:
        return NO_T_ARROW, None
    if k == 1:
        return SINGLE_OR_TAIL, None
    edges = set(a.edge for a in t_list)
    if k == 2 and len(edges) == 1:
        return OPPOSITE_PAIR, None
    if len(edges) != k:
        raise ConsistencyError('opposite t-arrows alongside further t-arrows')

    on_edge = {}
    for a in t_list:
        on_edge[a.edge] = on_edge.get(a.edge, 0) + 1
    below = [0] * len(d.bags)
    for c in reversed(tree.order):
        p = tree.parent[c]
        if p != -1:
            below[p] += below[c] + on_edge.get(tree.parent_edge[c], 0)

    inside = []
    for a in t_list:
        b = d.bag_of[a.head]
        if tree.parent_edge[b] == a.edge:
            inside.append(below[b])
        else:
            child = d.bag_of[a.tail]
            inside.append(k - below[child] - 1)

    if all(c == 0 for c in inside):
        return SINGLE_OR_TAIL, None
    if all(c == k - 1 for c in inside):
        heads = set(d.bag_of[a.head] for a in t_list)
        if len(heads) != 1:
            raise ConsistencyError('head-connected t-arrows with heads in bags %s' % sorted(heads))
        head_bag = heads.pop()
        if d.bags[head_bag].type != CLIQUE:
            raise ConsistencyError('head-connected t-arrows point into star bag %d' % head_bag)
        return HEAD_CONNECTED, head_bag
    raise ConsistencyError('t-arrows neither pairwise head-connected nor tail-connected')


def is_special_side(dd, a, side):
    """A side is special when one removal from it serves every arrow at once.

    The side must be a single star around the arrow end with two leaves,
    both unmarked, or one unmarked and the other leading into a clique bag
    with no further marked vertex.
    """
    d = dd.base
    endpoint = a.head if side == HEAD else a.tail
    bag = d.bags[d.bag_of[endpoint]]
    if bag.type != STAR or bag.center != endpoint or len(bag.members) != 3:
        return SpecialCheck(False, None)
    leaves = [x for x in bag.members if x != endpoint]
    unmarked = [x for x in leaves if not d.is_marked(x)]
    if len(unmarked) == 2:
        return SpecialCheck(True, min(unmarked))
    if len(unmarked) == 1:
        marked = [x for x in leaves if d.is_marked(x)][0]
        other = d.bags[d.bag_of[d.partner(marked)]]
        if other.type == CLIQUE and all(not d.is_marked(x) for x in other.members
                                        if x != d.partner(marked)):
            return SpecialCheck(True, unmarked[0])
    return SpecialCheck(False, None)


def sigma_is_cut_set(dd):
    return dd.sigma == cut_vertices(recompose(dd.base))
