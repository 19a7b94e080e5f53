# -*- coding: utf-8 -*-

"""
    dhmv.tests
    ~~~~~~~~~~

    Tests for the oriented decomposition and t-arrows.
"""

from collections import deque

from hypothesis import given, settings

from dhmv.datatypes import (
    HEAD, TAIL, END_SC, NO_T_ARROW, SINGLE_OR_TAIL, HEAD_CONNECTED, OPPOSITE_PAIR,
    Arrow, SpecialCheck, VertexSet,
)
from dhmv.decomposition import canonical_decomposition
from dhmv.directed import orient, side_view, t_arrows, is_special_side, sigma_is_cut_set
from dhmv.generators import family
from dhmv.graph import build_graph, cut_vertices, is_block_graph, pair_visible
from dhmv.oracle import recognize_dh

from helpers import P4, K23, K33, OCTAHEDRON, TAIL_GADGET, dh_graphs

import logging
logging.basicConfig(level='DEBUG')

logger = logging.getLogger(__file__)


def directed(g):
    return orient(canonical_decomposition(g, recognize_dh(g)))


def is_t_arrow_by_definition(dd, a):
    """Walk every alternating path out of the head looking for a cut vertex or an arrow tail."""
    d = dd.base
    stack = [a.head]
    while stack:
        z = stack.pop()
        for w in d.bag_neighbors(z):
            if not d.is_marked(w):
                if w in dd.sigma:
                    return False
            elif d.role[w] == END_SC:
                return False
            else:
                stack.append(d.partner(w))
    return True


def reaches(dd, start, goal, banned):
    d = dd.base
    adjacency = {}
    for u, v in d.unmarked_edges + d.marked_edges:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    seen = set([start]) | set(banned)
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if u == goal:
            return True
        for v in adjacency.get(u, ()):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return False


class TestOrient:
    def test_complete_bipartite(self):
        dd = directed(K23)
        assert dd.arrows == (Arrow(0, 5, 6, 0, 1), Arrow(1, 6, 5, 0, 0))
        assert dd.opposite(dd.arrows[0]) == dd.arrows[1]
        assert dd.arrows_from(6) == (dd.arrows[1],)
        assert dd.arrows_from(2) == ()
        assert dd.sigma == VertexSet()
        assert dd.plain_marked_edges == ()

    def test_path(self):
        dd = directed(P4)
        assert dd.arrows == ()
        assert dd.plain_marked_edges == (0,)
        assert dd.sigma == VertexSet([1, 2])
        assert t_arrows(dd).shape == NO_T_ARROW

    def test_bags(self):
        dd = directed(K23)
        a = dd.arrows[1]
        assert dd.head_bag(a) == 1
        assert dd.tail_bag(a) == 0


class TestSides:
    def test_head_side(self):
        dd = directed(K23)
        view = side_view(dd, dd.arrows[1], HEAD)
        assert view.reachable_unmarked == VertexSet([2, 3, 4])
        assert view.component_vertices == VertexSet([2, 3, 4, 5])
        view = side_view(dd, dd.arrows[1], TAIL)
        assert view.reachable_unmarked == VertexSet([0, 1])

    def test_special(self):
        dd = directed(K23)
        assert is_special_side(dd, dd.arrows[0], HEAD) == SpecialCheck(True, 0)
        assert is_special_side(dd, dd.arrows[1], HEAD) == SpecialCheck(False, None)

    def test_not_special(self):
        dd = directed(K33)
        for a in dd.arrows:
            assert not is_special_side(dd, a, HEAD).is_special


class TestShapes:
    def test_opposite_pair(self):
        assert t_arrows(directed(K23)).shape == OPPOSITE_PAIR
        assert t_arrows(directed(K33)).shape == OPPOSITE_PAIR

    def test_head_connected(self):
        dd = directed(OCTAHEDRON)
        report = t_arrows(dd)
        assert report.shape == HEAD_CONNECTED
        assert len(report.t_arrows) == 3
        assert report.head_bag == 3
        specials = [is_special_side(dd, a, TAIL) for a in report.t_arrows]
        assert sorted(s.special_vertex for s in specials) == [0, 2, 4]

    def test_tail_connected(self):
        report = t_arrows(directed(TAIL_GADGET))
        assert report.shape == SINGLE_OR_TAIL
        assert len(report.t_arrows) == 2

    def test_single(self):
        diamond = build_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        report = t_arrows(directed(diamond))
        assert report.shape == SINGLE_OR_TAIL
        assert len(report.t_arrows) == 1

    def test_square(self):
        assert t_arrows(directed(family('cycle', 4))).shape == OPPOSITE_PAIR

    def test_block_graph(self):
        report = t_arrows(directed(family('block-chain', 3, 3)))
        assert report.shape == NO_T_ARROW


class TestProperties:
    @settings(max_examples=200, deadline=None)
    @given(dh_graphs(min_n=3, max_n=30))
    def test_t_arrows_match_definition(self, g):
        dd = directed(g)
        report = t_arrows(dd)
        expected = [a for a in dd.arrows if is_t_arrow_by_definition(dd, a)]
        assert list(report.t_arrows) == expected

    @settings(max_examples=200, deadline=None)
    @given(dh_graphs(min_n=3, max_n=30))
    def test_sigma_are_cut_vertices(self, g):
        dd = directed(g)
        assert dd.sigma == cut_vertices(g)
        assert sigma_is_cut_set(dd)

    @settings(max_examples=200, deadline=None)
    @given(dh_graphs(min_n=3, max_n=30))
    def test_no_arrows_iff_block_graph(self, g):
        assert (directed(g).arrows == ()) == is_block_graph(g)

    @settings(max_examples=150, deadline=None)
    @given(dh_graphs(min_n=3, max_n=30))
    def test_no_path_leaves_one_t_arrow_into_another(self, g):
        dd = directed(g)
        report = t_arrows(dd)
        for a in report.t_arrows:
            for b in report.t_arrows:
                if a.edge == b.edge:
                    continue
                assert not reaches(dd, a.head, b.tail, [a.tail, b.head])

    @settings(max_examples=150, deadline=None)
    @given(dh_graphs(min_n=3, max_n=30))
    def test_head_side_of_t_arrow_fully_reachable(self, g):
        dd = directed(g)
        d = dd.base
        for a in t_arrows(dd).t_arrows:
            view = side_view(dd, a, HEAD)
            unmarked = VertexSet(x for x in view.component_vertices if not d.is_marked(x))
            assert view.reachable_unmarked == unmarked
            assert dd.head_vertices(a) == frozenset(unmarked)

    @settings(max_examples=100, deadline=None)
    @given(dh_graphs(min_n=3, max_n=16))
    def test_one_free_head_vertex_connects_the_tail(self, g):
        dd = directed(g)
        for a in dd.arrows:
            free = min(dd.head_vertices(a))
            X = [v for v in range(g.n) if v != free]
            tail = side_view(dd, a, TAIL).reachable_unmarked
            for i, u in enumerate(tail):
                for v in tail[i + 1:]:
                    assert pair_visible(g, X, u, v)
