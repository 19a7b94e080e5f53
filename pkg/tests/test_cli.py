# -*- coding: utf-8 -*-

"""
    dhmv.tests
    ~~~~~~~~~~

    Tests for the ``dhmv`` command line.
"""

import io
import os
import json

import pytest

from dhmv.cli import main, EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_NOT_DH, EXIT_CAP

from helpers import data_path

import logging
logging.basicConfig(level='DEBUG')


def lines(capsys):
    return capsys.readouterr().out.splitlines()


class TestMu:
    def test_text(self, capsys):
        assert main(['mu', data_path('k23.edges')]) == EXIT_OK
        assert lines(capsys) == ['mu: 4', 'set: 1 2 3 4', 'shape: OppositePair']

    def test_set_only(self, capsys):
        assert main(['mu', '--set-only', data_path('p4.edges')]) == EXIT_OK
        assert lines(capsys) == ['0 3']

    def test_json(self, capsys):
        assert main(['mu', '--json', data_path('k23.edges')]) == EXIT_OK
        with io.open(data_path('k23.json'), encoding='utf-8') as f:
            assert json.loads(capsys.readouterr().out) == json.load(f)

    def test_timings(self, capsys):
        assert main(['mu', '--json', '--timings', data_path('k23.edges')]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert sorted(doc['timings']) == ['algorithm_ms', 'decompose_ms', 'orient_ms']

    def test_components(self, capsys):
        assert main(['mu', data_path('split.edges')]) == EXIT_OK
        assert lines(capsys) == ['mu: 3', 'set: 4 5 6', 'shape: NoTArrow']

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr('sys.stdin', io.StringIO('0 1\n1 2\n2 3\n'))
        assert main(['mu', '--set-only', '-']) == EXIT_OK
        assert lines(capsys) == ['0 3']

    def test_not_distance_hereditary(self, capsys):
        assert main(['mu', data_path('c5.edges')]) == EXIT_NOT_DH
        assert 'not distance-hereditary' in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(['mu', str(tmp_path / 'absent.edges')]) == EXIT_INPUT

    def test_bad_input(self, tmp_path, capsys):
        path = tmp_path / 'bad.edges'
        path.write_text(u'0 1\n1 x\n')
        assert main(['mu', str(path)]) == EXIT_INPUT
        assert 'line 2' in capsys.readouterr().err


class TestCheck:
    def test_visible(self, capsys):
        assert main(['check', data_path('p4.edges'), '0', '3']) == EXIT_OK
        assert lines(capsys) == ['mutual-visibility set']

    def test_not_visible(self, capsys):
        assert main(['check', data_path('p4.edges'), '0', '1', '3']) == EXIT_FAIL
        assert lines(capsys) == ['not visible: 0 3']

    def test_across_components(self, capsys):
        assert main(['check', data_path('split.edges'), '0', '4']) == EXIT_FAIL
        assert lines(capsys) == ['not visible: 0 4']

    def test_first_pair_in_order(self, tmp_path, capsys):
        path = tmp_path / 'forest.edges'
        path.write_text(u'n 6\n0 1\n1 2\n3 4\n4 5\n')
        assert main(['check', str(path), '5', '2', '1', '0']) == EXIT_FAIL
        assert lines(capsys) == ['not visible: 0 2']

    def test_unknown_vertex(self):
        assert main(['check', data_path('p4.edges'), '9']) == EXIT_INPUT


class TestOracle:
    def test_cycle(self, capsys):
        assert main(['oracle', data_path('c5.edges')]) == EXIT_OK
        assert lines(capsys) == ['mu: 3', 'set: 0 1 3']

    def test_cap(self):
        assert main(['oracle', '--cap', '3', data_path('c5.edges')]) == EXIT_CAP


class TestGen:
    def test_family(self, capsys):
        assert main(['gen', 'path', '3']) == EXIT_OK
        assert capsys.readouterr().out == 'n 3\n0 1\n1 2\n'

    def test_random(self, capsys):
        assert main(['gen', 'random', '--n', '25', '--seed', '3']) == EXIT_OK
        first = capsys.readouterr().out
        assert main(['gen', 'random', '--n', '25', '--seed', '3']) == EXIT_OK
        assert capsys.readouterr().out == first
        assert first.startswith('n 25\n')

    def test_errors(self):
        assert main(['gen', 'random']) == EXIT_INPUT
        assert main(['gen', 'cycle', '5']) == EXIT_INPUT
        assert main(['gen', 'random', '--n', '5', '--weights', '1,2']) == EXIT_INPUT

    def test_round_trip_through_mu(self, tmp_path, capsys):
        assert main(['gen', 'octahedron']) == EXIT_OK
        path = tmp_path / 'octahedron.edges'
        path.write_text(capsys.readouterr().out)
        assert main(['mu', str(path)]) == EXIT_OK
        assert lines(capsys)[0] == 'mu: 5'


class TestDecompose:
    def test_dot(self, capsys):
        assert main(['decompose', '--dot', data_path('k23.edges')]) == EXIT_OK
        out = capsys.readouterr().out
        assert 'cluster_bag0' in out
        assert 'm5 -> m6' in out

    def test_tree(self, capsys):
        assert main(['decompose', '--tree', data_path('k23.edges')]) == EXIT_OK
        assert 'dir=both' in capsys.readouterr().out


class TestMisc:
    def test_version(self, capsys):
        assert main(['--version']) == EXIT_OK
        assert capsys.readouterr().out.startswith('dhmv ')

    def test_no_command(self):
        assert main([]) == EXIT_INPUT

    def test_bench(self, capsys):
        assert main(['bench', '50', '100', '--repeat', '2']) == EXIT_OK
        out = lines(capsys)
        assert out[0].split()[-2:] == ['us_per_item', 'ratio']
        assert len(out) == 3
        assert out[1].split()[0] == '50'
        assert out[1].split()[-1] == '-'


CORPUS_MU = {
    'block-chain-2-3': 4, 'block-chain-2-4': 6, 'block-chain-3-3': 5, 'block-chain-4-3': 6,
    'clique-3': 3, 'clique-4': 4, 'clique-5': 5, 'clique-6': 6, 'clique-7': 7,
    'complete-bipartite-2-3': 4, 'complete-bipartite-2-4': 5, 'complete-bipartite-3-3': 4,
    'complete-bipartite-3-4': 5, 'complete-bipartite-4-4': 6,
    'cycle-4': 3, 'diamond': 3, 'octahedron': 5, 'paw': 3, 'tail-gadget': 5,
    'path-2': 2, 'path-3': 2, 'path-4': 2, 'path-5': 2, 'path-6': 2, 'path-7': 2, 'path-8': 2,
    'star-2': 2, 'star-3': 3, 'star-4': 4, 'star-5': 5,
}


@pytest.mark.parametrize('name', sorted(CORPUS_MU))
def test_corpus_is_stable(name, capsys):
    path = data_path(os.path.join('corpus', name + '.edges'))
    assert main(['mu', '--json', path]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(['mu', '--json', path]) == EXIT_OK
    assert capsys.readouterr().out == first
    with io.open(data_path(os.path.join('corpus', name + '.json')), encoding='utf-8') as f:
        assert first == f.read()
    doc = json.loads(first)
    assert doc['mu'] == CORPUS_MU[name]
    assert len(doc['mu_set']) == doc['mu']


@pytest.mark.slow
def test_bench_linear(capsys):
    assert main(['bench', '100000', '200000', '--repeat', '5']) == EXIT_OK
    out = lines(capsys)
    ratio = float(out[2].split()[-1])
    assert ratio <= 2.5
