# -*- coding: utf-8 -*-

"""
dhmv.error
~~~~~~~~~~

"""


class Error(Exception):
    pass


class GraphError(Error):
    pass


class VertexError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class NotDistanceHereditaryError(Error):
    def __init__(self, remainder, vertices=()):
        self.remainder = remainder
        self.vertices = tuple(vertices)
        Error.__init__(self, 'not distance-hereditary (irreducible remainder of %d vertices)' % remainder.n)


class InvalidSequenceError(Error):
    pass


class CapExceededError(Error):
    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        Error.__init__(self, '%d vertices exceeds the cap of %d' % (n, cap))


class ConsistencyError(Error):
    pass


class FamilyError(Error):
    pass


class ParseError(Error):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = 'line %d: %s' % (lineno, message)
        Error.__init__(self, message)


class UnsupportedFormat(Error):
    pass
