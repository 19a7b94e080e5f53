# -*- coding: utf-8 -*-

"""
    dhmv.tests.helpers
    ~~~~~~~~~~~~~~~~~~

    Shared graphs and strategies.
"""

import os
import random

from hypothesis import strategies as st

from dhmv.datatypes import ExpansionSpec
from dhmv.generators import random_dh, family
from dhmv.graph import build_graph


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


def data_path(name):
    return os.path.join(DATA_DIR, name)


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(seed, n, p):
    rng = random.Random(seed)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def dh_graphs(draw, min_n=1, max_n=12):
    seed = draw(st.integers(min_value=0, max_value=2 ** 32))
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return random_dh(ExpansionSpec(seed, n))


@st.composite
def small_graphs(draw, max_n=8):
    seed = draw(st.integers(min_value=0, max_value=2 ** 32))
    n = draw(st.integers(min_value=1, max_value=max_n))
    p = draw(st.sampled_from([0.3, 0.5, 0.7]))
    return random_graph(seed, n, p)


P4 = family('path', 4)
K23 = family('complete-bipartite', 2, 3)
K33 = family('complete-bipartite', 3, 3)
OCTAHEDRON = family('octahedron')
TAIL_GADGET = family('tail-gadget')
C4 = family('cycle', 4)
C5 = cycle(5)
