# -*- coding: utf-8 -*-

try:
    from importlib.metadata import version as _version
    version = _version('dhmv')
except Exception:
    version = 'unknown'

import io

from dhmv.datatypes import *
from dhmv.error import *
from dhmv.graph import Graph, build_graph, pair_visible, is_mutual_visibility_set, cut_vertices
from dhmv.oracle import recognize_dh, is_dh_metric, mu_bruteforce
from dhmv.decomposition import MarkedGraph, canonical_decomposition, recompose
from dhmv.directed import DirectedDecomposition, orient, t_arrows
from dhmv.algorithm import decompose, mu_set, mu_number, mu_components
from dhmv.generators import expand, random_dh, family
from dhmv import formats


def from_file(fileobj):
    return formats.create('edgelist').load(fileobj)


def load(path):
    with io.open(path, encoding='utf-8') as f:
        return from_file(f)


__all__ = [
    'version', 'Graph', 'build_graph', 'load', 'from_file',
    'pair_visible', 'is_mutual_visibility_set', 'cut_vertices',
    'recognize_dh', 'is_dh_metric', 'mu_bruteforce',
    'MarkedGraph', 'canonical_decomposition', 'recompose',
    'DirectedDecomposition', 'orient', 't_arrows', 'decompose',
    'mu_set', 'mu_number', 'mu_components',
    'expand', 'random_dh', 'family', 'formats',
]
