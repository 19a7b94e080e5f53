# -*- coding: utf-8 -*-

"""
dhmv.oracle
~~~~~~~~~~~

Reference machinery that does not rely on the split decomposition:
pruning-sequence recognition, the exhaustive metric test and the
brute-force mutual-visibility number.

"""

import heapq
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

import networkx as nx

from dhmv import util
from dhmv.datatypes import (
    INF, PENDANT, TRUE_TWIN, FALSE_TWIN,
    VertexSet, PruningStep, PruningSequence, Rejection,
)
from dhmv.error import CapExceededError, ConsistencyError, DisconnectedError, InvalidSequenceError
from dhmv.graph import Graph, bfs_distances, induced_subgraph, is_connected, check_vertex


logger = logging.getLogger(__file__)

_MASK = (1 << 64) - 1
_HASH_SEED = 0x5eed


class _TwinGroups(object):
    """Vertices grouped by a neighbourhood hash, with lazy min-heaps."""

    def __init__(self):
        self.members = {}
        self.heaps = {}
        self.candidates = []

    def add(self, key, v):
        group = self.members.setdefault(key, set())
        group.add(v)
        heapq.heappush(self.heaps.setdefault(key, []), v)
        if len(group) == 2:
            for u in group:
                heapq.heappush(self.candidates, u)
        elif len(group) > 2:
            heapq.heappush(self.candidates, v)

    def discard(self, key, v):
        group = self.members.get(key)
        if group is None:
            return
        group.discard(v)
        if not group:
            del self.members[key]
            del self.heaps[key]

    def smallest(self, key):
        heap = self.heaps[key]
        group = self.members[key]
        while heap[0] not in group:
            heapq.heappop(heap)
        return heap[0]


class _Pruner(object):

    def __init__(self, g):
        rng = random.Random(_HASH_SEED)
        self.token = [rng.getrandbits(64) for _ in range(g.n)]
        self.adj = [set(a) for a in g.adjacency]
        self.removed = [False] * g.n
        self.alive = g.n
        self.open_key = [sum(self.token[w] for w in a) & _MASK for a in self.adj]
        self.closed_key = [(self.open_key[v] + self.token[v]) & _MASK for v in range(g.n)]
        self.pendants = [v for v in range(g.n) if len(self.adj[v]) == 1]
        heapq.heapify(self.pendants)
        self.true_groups = _TwinGroups()
        self.false_groups = _TwinGroups()
        for v in range(g.n):
            self.true_groups.add(self.closed_key[v], v)
            self.false_groups.add(self.open_key[v], v)

    def _pendant(self):
        heap = self.pendants
        while heap and (self.removed[heap[0]] or len(self.adj[heap[0]]) != 1):
            heapq.heappop(heap)
        if not heap:
            return None
        v = heap[0]
        return PruningStep(PENDANT, v, next(iter(self.adj[v])))

    def _twin(self, kind):
        if kind == TRUE_TWIN:
            groups, keys = self.true_groups, self.closed_key
        else:
            groups, keys = self.false_groups, self.open_key
        heap = groups.candidates
        while heap:
            v = heap[0]
            group = groups.members.get(keys[v])
            if self.removed[v] or group is None or v not in group or len(group) < 2:
                heapq.heappop(heap)
                continue
            groups.discard(keys[v], v)
            u = groups.smallest(keys[v])
            groups.add(keys[v], v)
            if kind == TRUE_TWIN:
                same = self.adj[v] | set([v]) == self.adj[u] | set([u])
            else:
                same = self.adj[v] == self.adj[u]
            if not same:
                raise ConsistencyError('neighbourhood hash collision between %d and %d' % (v, u))
            return PruningStep(kind, v, u)
        return None

    def _remove(self, v):
        token = self.token[v]
        self.true_groups.discard(self.closed_key[v], v)
        self.false_groups.discard(self.open_key[v], v)
        self.removed[v] = True
        self.alive -= 1
        for w in self.adj[v]:
            self.adj[w].discard(v)
            self.true_groups.discard(self.closed_key[w], w)
            self.false_groups.discard(self.open_key[w], w)
            self.open_key[w] = (self.open_key[w] - token) & _MASK
            self.closed_key[w] = (self.closed_key[w] - token) & _MASK
            self.true_groups.add(self.closed_key[w], w)
            self.false_groups.add(self.open_key[w], w)
            if len(self.adj[w]) == 1:
                heapq.heappush(self.pendants, w)
        self.adj[v] = set()

    def run(self):
        steps = []
        while self.alive > 1:
            step = self._pendant() or self._twin(TRUE_TWIN) or self._twin(FALSE_TWIN)
            if step is None:
                break
            self._remove(step.removed)
            steps.append(step)
        return steps


def recognize_dh(g):
    """Prune pendants and twins until one vertex is left.

    At every step the smallest vertex admitting a pendant step is removed,
    otherwise the smallest one with a true twin, otherwise the smallest
    one with a false twin; the anchor is the smallest partner.  Returns a
    :class:`PruningSequence`, or a :class:`Rejection` holding the
    irreducible remainder.
    """
    if g.n == 0:
        raise DisconnectedError('empty graph')
    if not is_connected(g):
        raise DisconnectedError('graph has more than one component')
    pruner = _Pruner(g)
    steps = pruner.run()
    if pruner.alive > 1:
        alive = [v for v in range(g.n) if not pruner.removed[v]]
        remainder, mapping = induced_subgraph(g, alive)
        logger.debug('rejected: irreducible remainder on %d vertices', remainder.n)
        return Rejection(remainder, VertexSet(mapping))
    root = [v for v in range(g.n) if not pruner.removed[v]][0]
    logger.debug('pruned %d vertices down to %d', len(steps), root)
    return PruningSequence(g.n, root, tuple(steps))


def replay(seq):
    """Expand a pruning sequence back into the graph it came from."""
    n = seq.n
    present = [False] * n
    adjacency = [set() for _ in range(n)]
    if not 0 <= seq.root < n:
        raise InvalidSequenceError('root %r out of range' % (seq.root,))
    present[seq.root] = True
    for step in reversed(seq.steps):
        x, y = step.removed, step.anchor
        if not (0 <= x < n and 0 <= y < n):
            raise InvalidSequenceError('step %s out of range' % (step,))
        if present[x]:
            raise InvalidSequenceError('vertex %d added twice' % x)
        if not present[y]:
            raise InvalidSequenceError('anchor %d not present when %d is added' % (y, x))
        if step.kind == PENDANT:
            adjacency[x] = set([y])
        elif step.kind == TRUE_TWIN:
            adjacency[x] = adjacency[y] | set([y])
        elif step.kind == FALSE_TWIN:
            if not adjacency[y]:
                raise InvalidSequenceError('false twin of isolated vertex %d disconnects' % y)
            adjacency[x] = set(adjacency[y])
        else:
            raise InvalidSequenceError('unknown step kind %r' % (step.kind,))
        for w in adjacency[x]:
            adjacency[w].add(x)
        present[x] = True
    if not all(present):
        missing = [v for v in range(n) if not present[v]]
        raise InvalidSequenceError('vertices never added: %s' % missing)
    return Graph(n, adjacency)


def is_dh_metric(g, n_cap=None):
    """Check every connected induced subgraph for isometry, exhaustively."""
    if n_cap is None:
        n_cap = util.metric_cap()
    if g.n > n_cap:
        raise CapExceededError(g.n, n_cap)
    full = g.to_networkx()
    dist = dict(nx.all_pairs_shortest_path_length(full))
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.n), size):
            sub = full.subgraph(subset)
            if not nx.is_connected(sub):
                continue
            for u, lengths in nx.all_pairs_shortest_path_length(sub):
                for v, d in lengths.items():
                    if dist[u][v] != d:
                        return False
    return True


class _VisibilityTable(object):
    """Geodesic layers of every pair as bitmasks over ``0..n-1``."""

    def __init__(self, g):
        n = g.n
        self.nbr = [sum(1 << w for w in g.adjacency[v]) for v in range(n)]
        dist = [bfs_distances(g, s) for s in range(n)]
        self.layers = {}
        for u in range(n):
            for v in range(u + 1, n):
                d = dist[u][v]
                if d == INF:
                    raise DisconnectedError('%d and %d lie in different components' % (u, v))
                self.layers[(u, v)] = tuple(
                    sum(1 << w for w in range(n) if dist[u][w] == i and dist[w][v] == d - i)
                    for i in range(1, d))

    def visible(self, u, v, xmask):
        front = 1 << u
        for layer in self.layers[(u, v)]:
            free = layer & ~xmask
            reached = 0
            while free:
                low = free & -free
                free ^= low
                if self.nbr[low.bit_length() - 1] & front:
                    reached |= low
            if not reached:
                return False
            front = reached
        return bool(self.nbr[v] & front)

    def is_mutual(self, members):
        xmask = 0
        for v in members:
            xmask |= 1 << v
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if not self.visible(u, v, xmask):
                    return False
        return True


def _first_in_block(table, allowed, k, first):
    """First mutual-visibility ``k``-subset of ``allowed`` starting with ``allowed[first]``."""
    head = allowed[first]
    for rest in combinations(allowed[first + 1:], k - 1):
        members = (head,) + rest
        if table.is_mutual(members):
            return members
    return None


def _search_block(args):
    g, allowed, k, first = args
    return _first_in_block(_VisibilityTable(g), allowed, k, first)


def _search(g, allowed, n_cap, jobs):
    if n_cap is None:
        n_cap = util.oracle_cap()
    if g.n > n_cap:
        raise CapExceededError(g.n, n_cap)
    if not is_connected(g):
        raise DisconnectedError('graph has more than one component')
    allowed = list(VertexSet(allowed))
    if not allowed:
        return 0, None
    table = _VisibilityTable(g)
    if jobs > 1 and len(allowed) > 1:
        executor = ProcessPoolExecutor(max_workers=jobs)
    else:
        executor = None
    try:
        for k in range(len(allowed), 0, -1):
            blocks = range(len(allowed) - k + 1)
            if executor is None:
                found = (_first_in_block(table, allowed, k, first) for first in blocks)
            else:
                found = executor.map(_search_block, [(g, allowed, k, first) for first in blocks])
            for members in found:
                if members is not None:
                    logger.debug('oracle: mutual-visibility set of size %d found', k)
                    return k, VertexSet(members)
    finally:
        if executor is not None:
            executor.shutdown(cancel_futures=True)
    return 0, None


def mu_bruteforce(g, n_cap=None, jobs=1):
    """Largest mutual-visibility set, by decreasing size then lexicographic order."""
    if g.n == 0:
        return 0, VertexSet()
    return _search(g, range(g.n), n_cap, jobs)


def mu_set_avoiding(g, forbidden, n_cap=None):
    forbidden = set(forbidden)
    for v in forbidden:
        check_vertex(g, v)
    return _search(g, [v for v in range(g.n) if v not in forbidden], n_cap, 1)
