# -*- coding: utf-8 -*-

"""
dhmv.decomposition
~~~~~~~~~~~~~~~~~~

Canonical split decomposition of a distance-hereditary graph.

Vertex ids ``0..n-1`` of the decomposition are the unmarked vertices and
coincide with the graph's vertices; marked vertices are numbered from
``n`` upwards in creation order.  Bags are numbered by their smallest
member.

"""

import logging
from collections import deque

from dhmv.datatypes import (
    PENDANT, TRUE_TWIN, FALSE_TWIN,
    CLIQUE, STAR, BAG_TYPE_NAME, END_K, END_SP, END_SC, END_ROLE_NAME,
    Bag, DVertex, Violation,
)
from dhmv.error import Error, InvalidSequenceError
from dhmv.graph import Graph


logger = logging.getLogger(__file__)


class MarkedGraph(object):
    """A decomposition: bags joined by marked edges into a tree.

    ``bags`` is a sequence of ``(members, type, center)`` triples, ``center``
    being ``None`` for clique bags; ``marked_edges`` pairs marked vertices.
    """

    def __init__(self, n, bags, marked_edges):
        self.n = n
        size = 0
        for members, _, _ in bags:
            for x in members:
                size = max(size, x + 1)
        size = max(size, n)
        self.size = size
        self.bag_of = [-1] * size
        self.bags = []
        for i, (members, kind, center) in enumerate(bags):
            self.bags.append(Bag(i, tuple(sorted(members)), kind, center))
            for x in members:
                if self.bag_of[x] != -1:
                    raise Error('vertex %d appears in bags %d and %d' % (x, self.bag_of[x], i))
                self.bag_of[x] = i
        self.bags = tuple(self.bags)
        self.partners = [[] for _ in range(size)]
        edges = []
        for a, b in marked_edges:
            if a > b:
                a, b = b, a
            edges.append((a, b))
            self.partners[a].append(b)
            self.partners[b].append(a)
        self.marked_edges = tuple(sorted(edges))
        self.edge_of = [-1] * size
        for i, (a, b) in enumerate(self.marked_edges):
            self.edge_of[a] = i
            self.edge_of[b] = i
        self.role = [None] * size
        for bag in self.bags:
            for x in bag.members:
                if bag.type == CLIQUE:
                    self.role[x] = END_K
                elif x == bag.center:
                    self.role[x] = END_SC
                else:
                    self.role[x] = END_SP
        self._tree = None

    def is_marked(self, x):
        return x >= self.n

    def partner(self, x):
        p = self.partners[x]
        return p[0] if p else -1

    def bag_neighbors(self, x):
        bag = self.bags[self.bag_of[x]]
        if bag.type == CLIQUE:
            return tuple(y for y in bag.members if y != x)
        if x == bag.center:
            return tuple(y for y in bag.members if y != x)
        return (bag.center,)

    @property
    def vertices(self):
        return tuple(DVertex(x, x >= self.n, self.bag_of[x], x if x < self.n else None)
                     for x in range(self.size) if self.bag_of[x] != -1)

    @property
    def unmarked_edges(self):
        edges = []
        for bag in self.bags:
            if bag.type == CLIQUE:
                for i, x in enumerate(bag.members):
                    for y in bag.members[i + 1:]:
                        edges.append((x, y))
            else:
                for y in bag.members:
                    if y != bag.center:
                        edges.append(tuple(sorted((bag.center, y))))
        return tuple(sorted(edges))

    @property
    def tree(self):
        if self._tree is None:
            self._tree = DecompositionTree(self)
        return self._tree

    def unmarked_members(self, bag_id):
        return [x for x in self.bags[bag_id].members if x < self.n]

    def __repr__(self):
        return 'MarkedGraph(n=%d, bags=%d, marked_edges=%d)' % (
            self.n, len(self.bags), len(self.marked_edges))


class DecompositionTree(object):
    """Bags and marked edges, rooted at bag 0."""

    def __init__(self, d):
        count = len(d.bags)
        self.adjacency = [[] for _ in range(count)]
        for i, (a, b) in enumerate(d.marked_edges):
            ba, bb = d.bag_of[a], d.bag_of[b]
            self.adjacency[ba].append((bb, i))
            self.adjacency[bb].append((ba, i))
        self.parent = [-1] * count
        self.parent_edge = [-1] * count
        self.depth = [0] * count
        self.children = [[] for _ in range(count)]
        self.order = []
        if not count:
            return
        seen = [False] * count
        seen[0] = True
        queue = deque([0])
        while queue:
            b = queue.popleft()
            self.order.append(b)
            for c, e in self.adjacency[b]:
                if not seen[c]:
                    seen[c] = True
                    self.parent[c] = b
                    self.parent_edge[c] = e
                    self.depth[c] = self.depth[b] + 1
                    self.children[b].append(c)
                    queue.append(c)

    @property
    def nodes(self):
        return range(len(self.adjacency))

    def neighbours(self, bag):
        return [c for c, _ in self.adjacency[bag]]

    def is_tree(self):
        edges = sum(len(a) for a in self.adjacency) // 2
        return len(self.order) == len(self.adjacency) and edges == len(self.adjacency) - 1

    def path(self, a, b):
        """Bags from ``a`` to ``b`` and the edges between them."""
        left, right = [a], [b]
        left_edges, right_edges = [], []
        while a != b:
            if self.depth[a] >= self.depth[b]:
                left_edges.append(self.parent_edge[a])
                a = self.parent[a]
                left.append(a)
            else:
                right_edges.append(self.parent_edge[b])
                b = self.parent[b]
                right.append(b)
        right.pop()
        return left + right[::-1], left_edges + right_edges[::-1]

    def subtree(self, bag):
        result = []
        stack = [bag]
        while stack:
            b = stack.pop()
            result.append(b)
            stack.extend(self.children[b])
        return result


class _Builder(object):
    """Incremental decomposition; each expansion step costs O(1)."""

    def __init__(self, n, root):
        self.n = n
        self.next_id = n
        self.bag_of = {root: 0}
        self.members = [set([root])]
        self.kind = [CLIQUE]
        self.center = [None]
        self.edges = []

    def _new_bag(self, members, kind, center):
        self.members.append(set(members))
        self.kind.append(kind)
        self.center.append(center)
        b = len(self.members) - 1
        for x in members:
            self.bag_of[x] = b
        return b

    def _split_off(self, y, x, kind):
        """Replace ``y`` in its bag by a marked vertex joined to a new 3-bag."""
        b = self.bag_of[y]
        m, m2 = self.next_id, self.next_id + 1
        self.next_id += 2
        self.members[b].discard(y)
        self.members[b].add(m)
        if self.center[b] == y:
            self.center[b] = m
        self.bag_of[m] = b
        if kind == TRUE_TWIN:
            self._new_bag([m2, y, x], CLIQUE, None)
        elif kind == FALSE_TWIN:
            self._new_bag([m2, y, x], STAR, m2)
        else:
            self._new_bag([m2, y, x], STAR, y)
        self.edges.append((m, m2))

    def add(self, kind, x, y):
        if x in self.bag_of:
            raise InvalidSequenceError('vertex %d added twice' % x)
        if y not in self.bag_of:
            raise InvalidSequenceError('anchor %d not present when %d is added' % (y, x))
        b = self.bag_of[y]
        members = self.members[b]
        if len(members) == 1:
            if kind == FALSE_TWIN:
                raise InvalidSequenceError('false twin of isolated vertex %d disconnects' % y)
            members.add(x)
            self.bag_of[x] = b
            return
        if len(members) == 2:
            z = [v for v in members if v != y][0]
            members.add(x)
            self.bag_of[x] = b
            if kind == TRUE_TWIN:
                self.kind[b] = CLIQUE
            else:
                self.kind[b] = STAR
                self.center[b] = y if kind == PENDANT else z
            return
        if self.kind[b] == CLIQUE:
            merge = kind == TRUE_TWIN
        elif self.center[b] == y:
            merge = kind == PENDANT
        else:
            merge = kind == FALSE_TWIN
        if merge:
            members.add(x)
            self.bag_of[x] = b
        else:
            self._split_off(y, x, kind)

    def freeze(self):
        order = sorted(range(len(self.members)), key=lambda b: min(self.members[b]))
        bags = [(self.members[b], self.kind[b], self.center[b]) for b in order]
        return MarkedGraph(self.n, bags, self.edges)


def canonical_decomposition(g, seq):
    """Canonical split decomposition of ``g`` built from a pruning sequence."""
    if seq.n != g.n:
        raise InvalidSequenceError('sequence is for %d vertices, graph has %d' % (seq.n, g.n))
    builder = _Builder(g.n, seq.root)
    for step in reversed(seq.steps):
        if step.kind not in (PENDANT, TRUE_TWIN, FALSE_TWIN):
            raise InvalidSequenceError('unknown step kind %r' % (step.kind,))
        if not (0 <= step.removed < g.n and 0 <= step.anchor < g.n):
            raise InvalidSequenceError('step %s out of range' % (step,))
        builder.add(step.kind, step.removed, step.anchor)
    if len(builder.bag_of) - 2 * len(builder.edges) != g.n:
        raise InvalidSequenceError('sequence does not cover all %d vertices' % g.n)
    d = builder.freeze()
    logger.debug('decomposition: %d bags, %d marked edges', len(d.bags), len(d.marked_edges))
    if d.n <= 32 and logger.isEnabledFor(logging.DEBUG):
        logger.debug('bags:\n%s', describe(d))
    return d


def decomposition_tree(d):
    return d.tree


def alternating_paths(d, x):
    """Yield every alternating path from unmarked ``x`` to an unmarked vertex."""
    stack = [(y, [x]) for y in reversed(d.bag_neighbors(x))]
    while stack:
        z, path = stack.pop()
        path = path + [z]
        if not d.is_marked(z):
            yield path
            continue
        z2 = d.partner(z)
        if z2 == -1:
            continue
        path = path + [z2]
        for w in reversed(d.bag_neighbors(z2)):
            stack.append((w, path))


def alternating_path(d, x, y):
    for path in alternating_paths(d, x):
        if path[-1] == y:
            return path
    return None


def recompose(d):
    """The graph whose edges are the alternating paths between unmarked vertices."""
    adjacency = [set() for _ in range(d.n)]
    for x in range(d.n):
        for path in alternating_paths(d, x):
            adjacency[x].add(path[-1])
    return Graph(d.n, adjacency)


def bag_path(d, x, y):
    """Bags traversed between ``x`` and ``y`` as ``(bag, enter, leave)`` triples."""
    tree = d.tree
    bags, edges = tree.path(d.bag_of[x], d.bag_of[y])
    result = []
    enter = x
    for i, b in enumerate(bags):
        if i < len(edges):
            a, c = d.marked_edges[edges[i]]
            leave, following = (a, c) if d.bag_of[a] == b else (c, a)
        else:
            leave, following = y, None
        result.append((b, enter, leave))
        enter = following
    return result


def validate_canonical(d):
    """Return the list of violations; empty when ``d`` is canonical."""
    violations = []
    for bag in d.bags:
        if bag.type not in (CLIQUE, STAR):
            violations.append(Violation('bag-type', 'bag %d has unknown type %r' % (bag.id, bag.type)))
            continue
        if bag.type == STAR and bag.center not in bag.members:
            violations.append(Violation('bag-type', 'bag %d has no centre among its members' % bag.id))
        if len(d.bags) > 1 and len(bag.members) < 3:
            violations.append(Violation('bag-size', 'bag %d has %d members' % (bag.id, len(bag.members))))
    for x in range(d.size):
        if d.bag_of[x] == -1:
            continue
        count = len(d.partners[x])
        if d.is_marked(x) and count != 1:
            violations.append(Violation('matching', 'marked vertex %d has %d marked edges' % (x, count)))
        elif not d.is_marked(x) and count:
            violations.append(Violation('matching', 'unmarked vertex %d has a marked edge' % x))
    for v in range(d.n):
        if v >= d.size or d.bag_of[v] == -1:
            violations.append(Violation('unmarked-bijection', 'vertex %d missing' % v))
    for a, b in d.marked_edges:
        if d.bag_of[a] == -1 or d.bag_of[b] == -1:
            continue
        if d.bag_of[a] == d.bag_of[b]:
            violations.append(Violation('cut-edge', 'marked edge (%d, %d) inside bag %d' % (a, b, d.bag_of[a])))
            continue
        roles = set([d.role[a], d.role[b]])
        if roles == set([END_K]):
            violations.append(Violation('marked edge type KK', 'marked edge (%d, %d)' % (a, b)))
        elif roles == set([END_SP, END_SC]):
            violations.append(Violation('marked edge type SpSc', 'marked edge (%d, %d)' % (a, b)))
    if d.bags and not d.tree.is_tree():
        violations.append(Violation('cut-edge', 'bags and marked edges do not form a tree'))
    for v in violations:
        logger.warning('non-canonical decomposition: %s (%s)', v.code, v.detail)
    return violations


def describe(d):
    """One line per bag and marked edge, for logs."""
    lines = []
    for bag in d.bags:
        members = ' '.join(('m%d' if x >= d.n else '%d') % x for x in bag.members)
        if bag.type == STAR:
            lines.append('%s%d [%s] centre=%s' % (BAG_TYPE_NAME[bag.type], bag.id, members, bag.center))
        else:
            lines.append('%s%d [%s]' % (BAG_TYPE_NAME[bag.type], bag.id, members))
    for a, b in d.marked_edges:
        lines.append('m%d -- m%d (%s%s)' % (a, b, END_ROLE_NAME[d.role[a]], END_ROLE_NAME[d.role[b]]))
    return '\n'.join(lines)
