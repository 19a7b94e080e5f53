# -*- coding: utf-8 -*-

"""
dhmv.formats.dot
~~~~~~~~~~~~~~~~

Graphviz rendering of an oriented decomposition.  Each bag is a cluster;
marked vertices are grey, cut vertices are double circles and arrows are
the only directed edges.  With ``tree=True`` each bag collapses to a
single node labelled ``K<size>``, ``S<size>`` or ``σ<size>``.

"""

import pydot

from dhmv.datatypes import CLIQUE, STAR, BAG_TYPE_NAME
from dhmv.formats.base import FormatBase


def _node(d, x):
    return ('m%d' if d.is_marked(x) else 'v%d') % x


def _label(labels, x):
    return str(labels[x] if labels is not None else x)


class DotFormat(FormatBase):

    def dumps(self, dd, tree=False, labels=None):
        """``labels`` maps unmarked vertex ids to the names to print."""
        if tree:
            return self.to_tree(dd).to_string()
        return self.to_pydot(dd, labels).to_string()

    def to_pydot(self, dd, labels=None):
        d = dd.base
        sigma = set(dd.sigma)
        P = pydot.Dot('decomposition', graph_type='digraph')
        for bag in d.bags:
            cluster = pydot.Cluster('bag%d' % bag.id, label='%s%d' % (BAG_TYPE_NAME[bag.type], bag.id))
            for x in bag.members:
                if d.is_marked(x):
                    cluster.add_node(pydot.Node(_node(d, x), label='', shape='point',
                                                style='filled', fillcolor='grey'))
                elif x in sigma:
                    cluster.add_node(pydot.Node(_node(d, x), label=_label(labels, x), shape='doublecircle',
                                                xlabel='σ'))
                else:
                    cluster.add_node(pydot.Node(_node(d, x), label=_label(labels, x), shape='circle'))
            for u, v in _bag_edges(bag):
                cluster.add_edge(pydot.Edge(_node(d, u), _node(d, v), dir='none'))
            P.add_subgraph(cluster)
        directed = set()
        for a in dd.arrows:
            directed.add(a.edge)
            P.add_edge(pydot.Edge(_node(d, a.tail), _node(d, a.head), style='bold'))
        for e, (p, q) in enumerate(d.marked_edges):
            if e not in directed:
                P.add_edge(pydot.Edge(_node(d, p), _node(d, q), style='bold', dir='none'))
        return P

    def to_tree(self, dd):
        d = dd.base
        sigma = set(dd.sigma)
        P = pydot.Dot('tree', graph_type='digraph')
        for bag in d.bags:
            if bag.type == STAR and bag.center in sigma:
                label = 'σ%d' % len(bag.members)
            else:
                label = '%s%d' % (BAG_TYPE_NAME[bag.type], len(bag.members))
            P.add_node(pydot.Node('b%d' % bag.id, label=label))
        by_edge = {}
        for a in dd.arrows:
            by_edge.setdefault(a.edge, []).append(a)
        for e, (p, q) in enumerate(d.marked_edges):
            arrows = by_edge.get(e, [])
            if len(arrows) == 2:
                attrs = {'dir': 'both'}
                src, dst = p, q
            elif arrows:
                attrs = {}
                src, dst = arrows[0].tail, arrows[0].head
            else:
                attrs = {'dir': 'none'}
                src, dst = p, q
            P.add_edge(pydot.Edge('b%d' % d.bag_of[src], 'b%d' % d.bag_of[dst], **attrs))
        return P


def _bag_edges(bag):
    if bag.type == CLIQUE:
        return [(u, v) for i, u in enumerate(bag.members) for v in bag.members[i + 1:]]
    return [(bag.center, v) for v in bag.members if v != bag.center]
