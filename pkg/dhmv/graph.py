# -*- coding: utf-8 -*-

"""
dhmv.graph
~~~~~~~~~~

Simple undirected graphs on vertices ``0..n-1`` and the visibility
primitives everything else is checked against.

"""

import logging
from collections import deque

import networkx as nx

from dhmv.datatypes import INF, VertexSet
from dhmv.error import GraphError, VertexError, DisconnectedError


logger = logging.getLogger(__file__)


class Graph(object):
    __slots__ = ('n', 'adjacency', 'edges')

    def __init__(self, n, adjacency):
        self.n = n
        self.adjacency = tuple(tuple(sorted(a)) for a in adjacency)
        self.edges = frozenset((u, v) for u in range(n) for v in self.adjacency[u] if u < v)

    @property
    def m(self):
        return len(self.edges)

    def neighbors(self, v):
        return self.adjacency[v]

    def has_edge(self, u, v):
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def sorted_edges(self):
        return sorted(self.edges)

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return 'Graph(n=%d, m=%d)' % (self.n, self.m)


def build_graph(n, edges):
    """Build a graph from an edge list; duplicate edges collapse."""
    if n < 0:
        raise GraphError('negative vertex count %r' % n)
    adjacency = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexError('edge (%r, %r) out of range for n=%d' % (u, v, n))
        if u == v:
            raise GraphError('self-loop at %d' % u)
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(n, adjacency)


def check_vertex(g, v):
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise VertexError('vertex %r not in graph of %d vertices' % (v, g.n))


def bfs_distances(g, source):
    check_vertex(g, source)
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] == INF:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _restricted_distances(g, source, blocked):
    """BFS from ``source`` that may enter but not leave vertices in ``blocked``."""
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v != source and v in blocked:
            continue
        for w in g.adjacency[v]:
            if dist[w] == INF:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def is_connected(g):
    if g.n == 0:
        return True
    return INF not in bfs_distances(g, 0)


def components(g):
    seen = [False] * g.n
    result = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        members = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        result.append(VertexSet(members))
    return result


def induced_subgraph(g, vertices):
    """Return ``(subgraph, mapping)`` where ``mapping[i]`` is the original id of ``i``."""
    mapping = list(VertexSet(vertices))
    for v in mapping:
        check_vertex(g, v)
    index = dict((v, i) for i, v in enumerate(mapping))
    adjacency = [[index[w] for w in g.adjacency[v] if w in index] for v in mapping]
    return Graph(len(mapping), adjacency), mapping


def pair_visible(g, X, u, v):
    check_vertex(g, u)
    check_vertex(g, v)
    if u == v:
        return True
    dist = bfs_distances(g, u)
    if dist[v] == INF:
        raise DisconnectedError('%d and %d lie in different components' % (u, v))
    blocked = set(X)
    blocked.discard(u)
    return _restricted_distances(g, u, blocked)[v] == dist[v]


def first_invisible_pair(g, X, across_components=False):
    """Lexicographically first pair of ``X`` that is not X-visible, or None.

    A pair split across components raises, or with ``across_components``
    counts as the invisible pair.
    """
    members = VertexSet(X)
    for v in members:
        check_vertex(g, v)
    blocked = set(members)
    for i, u in enumerate(members):
        dist = bfs_distances(g, u)
        restricted = _restricted_distances(g, u, blocked)
        for v in members[i + 1:]:
            if dist[v] == INF:
                if across_components:
                    return u, v
                raise DisconnectedError('%d and %d lie in different components' % (u, v))
            if restricted[v] != dist[v]:
                return u, v
    return None


def is_mutual_visibility_set(g, X):
    X = VertexSet(X)
    for v in X:
        check_vertex(g, v)
    if not is_connected(g):
        raise DisconnectedError('graph has more than one component')
    return first_invisible_pair(g, X) is None


def cut_vertices(g):
    """Articulation points, by an iterative lowpoint DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.adjacency[w])))
                    break
                elif w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if parent != -1:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if parent != root and low[v] >= disc[parent]:
                        cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return VertexSet(cut)


def biconnected_components(g):
    """Blocks as ``(vertices, edge_count)`` pairs, isolated vertices excluded."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    blocks = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack = []
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(g.adjacency[w])))
                    break
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if parent == -1:
                    continue
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    members = set()
                    count = 0
                    while True:
                        a, b = edge_stack.pop()
                        members.add(a)
                        members.add(b)
                        count += 1
                        if (a, b) == (parent, v):
                            break
                    blocks.append((VertexSet(members), count))
    return blocks


def is_block_graph(g):
    """True when every block is a clique."""
    for members, count in biconnected_components(g):
        k = len(members)
        if count != k * (k - 1) // 2:
            return False
    return True
