# -*- coding: utf-8 -*-

"""
    dhmv.tests
    ~~~~~~~~~~

    Tests for the graph generators.
"""

import pytest
from hypothesis import given, settings, strategies as st

from dhmv.datatypes import PENDANT, TRUE_TWIN, FALSE_TWIN, ExpansionSpec, PruningStep, PruningSequence
from dhmv.error import FamilyError, CapExceededError, InvalidSequenceError
from dhmv.generators import expand, random_sequence, random_dh, family, enumerate_small_dh
from dhmv.graph import build_graph, is_connected
from dhmv.oracle import recognize_dh, is_dh_metric

import logging
logging.basicConfig(level='DEBUG')


class TestExpand:
    def test_single_vertex(self):
        g = expand(PruningSequence(1, 0, ()))
        assert g.n == 1
        assert g.m == 0

    def test_steps(self):
        steps = (
            PruningStep(FALSE_TWIN, 3, 1),
            PruningStep(TRUE_TWIN, 2, 1),
            PruningStep(PENDANT, 1, 0),
        )
        g = expand(PruningSequence(4, 0, steps))
        assert g == build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (2, 3)])

    def test_false_twin_of_lone_vertex(self):
        with pytest.raises(InvalidSequenceError):
            expand(PruningSequence(2, 0, (PruningStep(FALSE_TWIN, 1, 0),)))

    def test_anchor_missing(self):
        with pytest.raises(InvalidSequenceError):
            expand(PruningSequence(3, 0, (PruningStep(PENDANT, 1, 2), PruningStep(PENDANT, 2, 0))))


class TestRandom:
    def test_deterministic(self):
        spec = ExpansionSpec(42, 50)
        assert random_dh(spec) == random_dh(ExpansionSpec(42, 50))
        assert random_sequence(spec) == random_sequence(spec)

    def test_weights(self):
        pendants = random_dh(ExpansionSpec(7, 30, (1, 0, 0)))
        assert pendants.m == 29
        twins = random_dh(ExpansionSpec(7, 12, (0, 1, 0)))
        assert twins.m == 12 * 11 // 2

    def test_invalid(self):
        with pytest.raises(FamilyError):
            random_sequence(ExpansionSpec(0, 0))
        with pytest.raises(FamilyError):
            random_sequence(ExpansionSpec(0, 5, (1, -1, 0)))
        with pytest.raises(FamilyError):
            random_sequence(ExpansionSpec(0, 5, (0, 0, 0)))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32), st.integers(min_value=1, max_value=200))
    def test_recognised(self, seed, n):
        g = random_dh(ExpansionSpec(seed, n))
        assert g.n == n
        assert is_connected(g)
        assert recognize_dh(g).accepted


class TestFamilies:
    def test_sizes(self):
        assert family('path', 5).m == 4
        assert family('star', 5).n == 6
        assert family('clique', 5).m == 10
        assert family('complete-bipartite', 2, 3).m == 6
        assert family('cycle', 4).m == 4
        assert family('octahedron').m == 12
        assert family('tail-gadget').m == 14

    def test_block_chain(self):
        g = family('block-chain', 3, 4)
        assert g.n == 10
        assert g.m == 3 * 6
        assert family('block-chain', '2', '3').n == 5

    @pytest.mark.parametrize('name,params', [
        ('unknown', ()),
        ('path', ()),
        ('path', (0,)),
        ('path', ('x',)),
        ('cycle', (5,)),
        ('block-chain', (2, 1)),
        ('octahedron', (1,)),
    ])
    def test_errors(self, name, params):
        with pytest.raises(FamilyError):
            family(name, *params)

    @pytest.mark.parametrize('name,params', [
        ('path', (6,)),
        ('star', (4,)),
        ('clique', (5,)),
        ('complete-bipartite', (3, 3)),
        ('cycle', (4,)),
        ('block-chain', (2, 3)),
        ('octahedron', ()),
        ('tail-gadget', ()),
    ])
    def test_distance_hereditary(self, name, params):
        g = family(name, *params)
        assert recognize_dh(g).accepted
        assert is_dh_metric(g)


class TestEnumerate:
    def test_counts(self):
        counts = {}
        for g in enumerate_small_dh(4):
            counts[g.n] = counts.get(g.n, 0) + 1
        assert counts[1] == 1
        assert counts[2] == 1
        assert counts[3] == 3

    def test_all_distance_hereditary(self):
        seen = set()
        for g in enumerate_small_dh(6):
            assert is_connected(g)
            assert recognize_dh(g).accepted
            key = (g.n, frozenset(g.sorted_edges()))
            assert key not in seen
            seen.add(key)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            list(enumerate_small_dh(9))
        assert len(list(enumerate_small_dh(3, cap=3))) == 5
