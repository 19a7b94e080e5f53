# -*- coding: utf-8 -*-

from collections import namedtuple

from dhmv.util import DEFAULT_WEIGHTS


INF = float('inf')

(PENDANT, TRUE_TWIN, FALSE_TWIN) = STEP_KINDS = range(3)
STEP_NAME = {
    PENDANT    : 'pendant',
    TRUE_TWIN  : 'true-twin',
    FALSE_TWIN : 'false-twin',
}

(CLIQUE, STAR) = BAG_TYPES = range(2)
BAG_TYPE_NAME = {
    CLIQUE : 'K',
    STAR   : 'S',
}

# position of a vertex inside its bag
(END_K, END_SP, END_SC) = END_ROLES = range(3)
END_ROLE_NAME = {
    END_K  : 'K',
    END_SP : 'Sp',
    END_SC : 'Sc',
}

(HEAD, TAIL) = SIDES = range(2)
SIDE_NAME = {
    HEAD : 'head',
    TAIL : 'tail',
}

(NO_T_ARROW, SINGLE_OR_TAIL, HEAD_CONNECTED, OPPOSITE_PAIR) = SHAPES = range(4)
SHAPE_NAME = {
    NO_T_ARROW     : 'NoTArrow',
    SINGLE_OR_TAIL : 'SingleOrTailConnected',
    HEAD_CONNECTED : 'HeadConnected',
    OPPOSITE_PAIR  : 'OppositePair',
}

(HEAD_WITNESS, KBAG_UNMARKED, SPECIAL_VERTEX, GENERIC_PAIR) = REASONS = range(4)
REASON_NAME = {
    HEAD_WITNESS   : 'per-t-arrow-head-witness',
    KBAG_UNMARKED  : 'K-bag-unmarked',
    SPECIAL_VERTEX : 'special-vertex',
    GENERIC_PAIR   : 'generic-pair',
}


class VertexSet(tuple):
    """Sorted, duplicate-free tuple of vertex ids."""

    def __new__(cls, members=()):
        return tuple.__new__(cls, sorted(set(members)))

    def __repr__(self):
        return 'VertexSet(%s)' % list(self)


class PruningStep(namedtuple('PruningStep', ('kind', 'removed', 'anchor'))):
    def __str__(self):
        return '%s %d -> %d' % (STEP_NAME[self.kind], self.removed, self.anchor)


class PruningSequence(namedtuple('PruningSequence', ('n', 'root', 'steps'))):
    """Steps in removal order; ``root`` is the vertex left at the end."""
    accepted = True


class Rejection(namedtuple('Rejection', ('remainder', 'vertices'))):
    """Irreducible remainder; ``vertices`` maps its ids back to the input."""
    accepted = False


class ExpansionSpec(namedtuple('ExpansionSpec', ('seed', 'n', 'weights'))):
    def __new__(cls, seed, n, weights=None):
        if weights is None:
            weights = DEFAULT_WEIGHTS
        return super(ExpansionSpec, cls).__new__(cls, seed, n, tuple(weights))


Bag = namedtuple('Bag', ('id', 'members', 'type', 'center'))

DVertex = namedtuple('DVertex', ('id', 'marked', 'bag', 'original'))

Violation = namedtuple('Violation', ('code', 'detail'))

Arrow = namedtuple('Arrow', ('index', 'tail', 'head', 'edge', 'opposite'))

SideView = namedtuple('SideView', ('arrow', 'side', 'component_vertices', 'reachable_unmarked'))

TArrowReport = namedtuple('TArrowReport', ('t_arrows', 'shape', 'head_bag'))

SpecialCheck = namedtuple('SpecialCheck', ('is_special', 'special_vertex'))

VisibilityWitness = namedtuple('VisibilityWitness', ('sigma_on_path', 'branching_arrows'))

Removal = namedtuple('Removal', ('vertex', 'reason'))


class MuResult(namedtuple('MuResult', ('mu', 'set', 'removed_sigma', 'removed_extra', 'shape'))):
    @property
    def shape_name(self):
        return SHAPE_NAME[self.shape]
