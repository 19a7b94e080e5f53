# -*- coding: utf-8 -*-

"""
dhmv.algorithm
~~~~~~~~~~~~~~

Mutual-visibility number of a distance-hereditary graph.

Start from every vertex that is not a cut vertex and remove the fewest
extra vertices that keep each t-arrow's head side hit: one per t-arrow
when they are pairwise tail-connected, otherwise one or two depending
on what the shared clique bag or the special sides offer.

"""

import logging

from dhmv.datatypes import (
    HEAD, TAIL, STAR,
    NO_T_ARROW, SINGLE_OR_TAIL, HEAD_CONNECTED, OPPOSITE_PAIR,
    HEAD_WITNESS, KBAG_UNMARKED, SPECIAL_VERTEX, GENERIC_PAIR,
    VertexSet, Removal, MuResult, VisibilityWitness,
)
from dhmv.decomposition import canonical_decomposition, bag_path
from dhmv.directed import orient, t_arrows, side_view, is_special_side
from dhmv.error import ConsistencyError, DisconnectedError, NotDistanceHereditaryError, VertexError
from dhmv.graph import components, induced_subgraph, is_connected
from dhmv.oracle import recognize_dh


logger = logging.getLogger(__file__)


def decompose(g):
    """Recognise ``g`` and return its oriented canonical decomposition."""
    if not is_connected(g):
        raise DisconnectedError('graph has more than one component')
    seq = recognize_dh(g)
    if not seq.accepted:
        raise NotDistanceHereditaryError(seq.remainder, seq.vertices)
    return orient(canonical_decomposition(g, seq))


def _min_unmarked(d, view):
    return min(x for x in view.component_vertices if not d.is_marked(x))


def algorithm_a(dd, report):
    d = dd.base
    sigma = set(dd.sigma)
    removed = []
    if report.shape == SINGLE_OR_TAIL:
        seen = set()
        for a in report.t_arrows:
            view = side_view(dd, a, HEAD)
            unmarked = set(x for x in view.component_vertices if not d.is_marked(x))
            if unmarked & seen:
                raise ConsistencyError('head sides of tail-connected t-arrows overlap')
            seen |= unmarked
            removed.append(Removal(min(unmarked), HEAD_WITNESS))
    elif report.shape == HEAD_CONNECTED:
        unmarked = d.unmarked_members(report.head_bag)
        if unmarked:
            removed.append(Removal(min(unmarked), KBAG_UNMARKED))
        else:
            special = [is_special_side(dd, a, TAIL) for a in report.t_arrows]
            special = [s.special_vertex for s in special if s.is_special]
            if special:
                removed.append(Removal(min(special), SPECIAL_VERTEX))
            else:
                minima = sorted(_min_unmarked(d, side_view(dd, a, TAIL)) for a in report.t_arrows)
                removed.extend(Removal(w, GENERIC_PAIR) for w in minima[:2])
    elif report.shape == OPPOSITE_PAIR:
        a, b = report.t_arrows
        special = [is_special_side(dd, arrow, HEAD) for arrow in (a, b)]
        special = [s.special_vertex for s in special if s.is_special]
        if special:
            removed.append(Removal(min(special), SPECIAL_VERTEX))
        else:
            removed.append(Removal(_min_unmarked(d, side_view(dd, a, TAIL)), GENERIC_PAIR))
            removed.append(Removal(_min_unmarked(d, side_view(dd, b, TAIL)), GENERIC_PAIR))

    for r in removed:
        if r.vertex in sigma:
            raise ConsistencyError('vertex %d chosen for removal is a cut vertex' % r.vertex)
    drop = sigma | set(r.vertex for r in removed)
    members = VertexSet(v for v in range(d.n) if v not in drop)
    removed.sort()
    logger.debug('mu=%d, %d cut vertices, %d extra removals', len(members), len(sigma), len(removed))
    return MuResult(len(members), members, dd.sigma, tuple(removed), report.shape)


def mu_set(g):
    """A maximum mutual-visibility set of a connected distance-hereditary graph."""
    if g.n == 0:
        raise DisconnectedError('empty graph')
    if not is_connected(g):
        raise DisconnectedError('graph has more than one component')
    if g.n <= 2:
        members = VertexSet(range(g.n))
        return MuResult(g.n, members, VertexSet(), (), NO_T_ARROW)
    dd = decompose(g)
    return algorithm_a(dd, t_arrows(dd))


def mu_number(g):
    return mu_set(g).mu


def mu_components(g):
    """Run :func:`mu_set` on every component; return ``(best, results)``.

    ``results`` holds one ``(vertices, MuResult)`` per component with the
    result mapped back to the original ids.  ``best`` is the largest
    result, ties broken by the smallest component vertex.
    """
    results = []
    for vertices in components(g):
        sub, mapping = induced_subgraph(g, vertices)
        r = mu_set(sub)
        results.append((vertices, MuResult(
            r.mu,
            VertexSet(mapping[v] for v in r.set),
            VertexSet(mapping[v] for v in r.removed_sigma),
            tuple(Removal(mapping[x.vertex], x.reason) for x in r.removed_extra),
            r.shape)))
    best = None
    for vertices, r in results:
        if best is None or r.mu > best.mu:
            best = r
    return best, results


def visibility_witness(dd, x, y):
    """Cut vertices and arrow tails crossed leaf-to-leaf between ``x`` and ``y``."""
    d = dd.base
    sigma = []
    arrows = []
    for b, enter, leave in bag_path(d, x, y):
        bag = d.bags[b]
        if bag.type != STAR or enter == bag.center or leave == bag.center:
            continue
        if d.is_marked(bag.center):
            arrows.extend(dd.arrows_from(bag.center))
        else:
            sigma.append(bag.center)
    return VisibilityWitness(VertexSet(sigma), tuple(arrows))


def pair_visible_decomp(dd, X, x, y):
    """X-visibility of ``x`` and ``y`` read off the decomposition."""
    d = dd.base
    for v in (x, y):
        if not 0 <= v < d.n:
            raise VertexError('vertex %r not in graph of %d vertices' % (v, d.n))
    if x == y:
        return True
    X = set(X)
    witness = visibility_witness(dd, x, y)
    if X.intersection(witness.sigma_on_path):
        return False
    for a in witness.branching_arrows:
        if dd.head_vertices(a) <= X:
            return False
    return True


def check_ledger(result, n):
    """Problems with the cardinality bookkeeping of a result, if any."""
    problems = []
    removed = set(result.removed_sigma) | set(r.vertex for r in result.removed_extra)
    if result.mu != len(result.set):
        problems.append('mu %d differs from set size %d' % (result.mu, len(result.set)))
    if result.mu != n - len(removed):
        problems.append('mu %d differs from %d - %d removed' % (result.mu, n, len(removed)))
    if set(result.set) & removed:
        problems.append('removed vertices remain in the set')
    expected = {
        NO_T_ARROW: (0, 0),
        SINGLE_OR_TAIL: (1, n),
        HEAD_CONNECTED: (1, 2),
        OPPOSITE_PAIR: (1, 2),
    }[result.shape]
    if n > 2 and not expected[0] <= len(result.removed_extra) <= expected[1]:
        problems.append('%d extra removals for shape %d' % (len(result.removed_extra), result.shape))
    return problems
