# -*- coding: utf-8 -*-

"""
dhmv.generators
~~~~~~~~~~~~~~~

Distance-hereditary graphs from expansion sequences: seeded random ones,
named families and the exhaustive enumeration of small labelled ones.

Random draws come from :class:`random.Random` seeded with the expansion
seed, using only ``random()`` and ``randrange()``, so a seed produces
the same graph on every platform.

"""

import logging
import random

from dhmv import util
from dhmv.datatypes import (
    PENDANT, TRUE_TWIN, STEP_KINDS,
    PruningStep, PruningSequence,
)
from dhmv.error import FamilyError, CapExceededError
from dhmv.graph import Graph, build_graph
from dhmv.oracle import replay


logger = logging.getLogger(__file__)


def expand(seq):
    """Build the graph a pruning sequence reduces; the empty one gives K1."""
    return replay(seq)


def _draw_kind(rng, weights):
    total = sum(weights)
    r = rng.random() * total
    for kind, w in zip(STEP_KINDS, weights):
        if r < w:
            return kind
        r -= w
    return STEP_KINDS[-1]


def random_sequence(spec):
    """Vertex ``k`` joins as pendant or twin of a uniformly drawn ``j < k``."""
    if spec.n < 1:
        raise FamilyError('random graph needs at least one vertex, got %r' % (spec.n,))
    if len(spec.weights) != 3 or any(w < 0 for w in spec.weights) or not sum(spec.weights):
        raise FamilyError('weights must be three non-negative numbers, got %r' % (spec.weights,))
    rng = random.Random(spec.seed)
    steps = []
    for k in range(1, spec.n):
        anchor = rng.randrange(k)
        if k == 1:
            weights = (spec.weights[PENDANT], spec.weights[TRUE_TWIN], 0)
            if not sum(weights):
                weights = (1, 0, 0)
        else:
            weights = spec.weights
        steps.append(PruningStep(_draw_kind(rng, weights), k, anchor))
    steps.reverse()
    return PruningSequence(spec.n, 0, tuple(steps))


def random_dh(spec):
    g = expand(random_sequence(spec))
    logger.debug('random graph seed=%r n=%d m=%d', spec.seed, g.n, g.m)
    return g


def _path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _star(n):
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def _clique(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _complete_bipartite(a, b):
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _cycle(n):
    if n != 4:
        raise FamilyError('only C_4 is offered among cycles, got C_%d' % n)
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def _block_chain(b, k):
    """``b`` cliques of size ``k``, consecutive ones sharing a cut vertex."""
    edges = []
    for i in range(b):
        start = i * (k - 1)
        block = range(start, start + k)
        edges.extend((u, v) for u in block for v in block if u < v)
    return build_graph(b * (k - 1) + 1, edges)


def _octahedron():
    return build_graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)
                           if (u, v) not in ((0, 1), (2, 3), (4, 5))])


def _tail_gadget():
    # 0 joined to a clique on 1..4; 5 sees 1, 2 and 6 sees 3, 4
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    edges += [(5, 1), (5, 2), (6, 3), (6, 4)]
    return build_graph(7, edges)


FAMILIES = {
    'path'               : (_path, 1, 1),
    'star'               : (_star, 1, 1),
    'clique'             : (_clique, 1, 1),
    'complete-bipartite' : (_complete_bipartite, 2, 1),
    'cycle'              : (_cycle, 1, 3),
    'block-chain'        : (_block_chain, 2, 1),
    'octahedron'         : (_octahedron, 0, 0),
    'tail-gadget'        : (_tail_gadget, 0, 0),
}


def family(name, *params):
    """Named distance-hereditary family; see ``FAMILIES`` for arities."""
    entry = FAMILIES.get(name)
    if entry is None:
        raise FamilyError('unknown family %r' % (name,))
    build, arity, minimum = entry
    if len(params) != arity:
        raise FamilyError('family %r takes %d parameters, got %d' % (name, arity, len(params)))
    try:
        params = [int(p) for p in params]
    except (TypeError, ValueError):
        raise FamilyError('family %r parameters must be integers: %r' % (name, params))
    if any(p < minimum for p in params):
        raise FamilyError('family %r parameters must be at least %d' % (name, minimum))
    if name == 'block-chain' and params[1] < 2:
        raise FamilyError('block-chain cliques need at least 2 vertices')
    return build(*params)


def enumerate_small_dh(n_max, cap=None):
    """Every labelled graph reachable by expansions adding vertex ``k`` at step ``k``.

    Graphs are yielded level by level, deduplicated by edge set.
    """
    if cap is None:
        cap = util.enumerate_cap()
    if n_max > cap:
        raise CapExceededError(n_max, cap)
    if n_max < 1:
        return
    level = [frozenset()]
    yield Graph(1, [()])
    for k in range(1, n_max):
        seen = set()
        following = []
        for edges in level:
            for y in range(k):
                nbrs = frozenset(u if v == y else v for u, v in edges if y in (u, v))
                for kind in STEP_KINDS:
                    if kind == PENDANT:
                        joined = frozenset([y])
                    elif kind == TRUE_TWIN:
                        joined = nbrs | frozenset([y])
                    elif nbrs:
                        joined = nbrs
                    else:
                        continue
                    grown = edges | frozenset((w, k) for w in joined)
                    if grown not in seen:
                        seen.add(grown)
                        following.append(grown)
        level = following
        logger.debug('enumerated %d graphs on %d vertices', len(level), k + 1)
        for edges in level:
            yield build_graph(k + 1, edges)
