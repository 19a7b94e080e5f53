# -*- coding: utf-8 -*-

"""
dhmv.formats.edgelist
~~~~~~~~~~~~~~~~~~~~~

Plain edge lists: an optional ``n <count>`` header, then one ``u v`` pair
per line.  ``#`` starts a comment; blank lines are skipped.  Without a
header the vertex count is one more than the largest id seen.

"""

import logging

from dhmv.error import ParseError, GraphError
from dhmv.formats.base import FormatBase
from dhmv.graph import build_graph


logger = logging.getLogger(__file__)


class EdgeListFormat(FormatBase):

    def loads(self, text):
        n = None
        edges = []
        seen = set()
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if fields[0] == 'n':
                if n is not None or edges:
                    raise ParseError('vertex-count header must come first', lineno)
                if len(fields) != 2:
                    raise ParseError('malformed header %r' % line, lineno)
                n = self._int(fields[1], lineno)
                if n < 0:
                    raise ParseError('negative vertex count', lineno)
                continue
            if len(fields) != 2:
                raise ParseError('expected two vertex ids, got %r' % line, lineno)
            u, v = self._int(fields[0], lineno), self._int(fields[1], lineno)
            if u < 0 or v < 0:
                raise ParseError('negative vertex id', lineno)
            if u == v:
                raise ParseError('self-loop at %d' % u, lineno)
            if n is not None and max(u, v) >= n:
                raise ParseError('vertex %d out of range for n=%d' % (max(u, v), n), lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                logger.warning('line %d: duplicate edge %d %d ignored', lineno, u, v)
                continue
            seen.add(key)
            edges.append(key)
        if n is None:
            n = max([v for e in edges for v in e] or [-1]) + 1
        try:
            return build_graph(n, edges)
        except GraphError as e:
            raise ParseError(str(e))

    def _int(self, field, lineno):
        try:
            return int(field)
        except ValueError:
            raise ParseError('not an integer: %r' % field, lineno)

    def dumps(self, g):
        lines = ['n %d' % g.n]
        lines.extend('%d %d' % e for e in g.sorted_edges())
        return '\n'.join(lines) + '\n'
