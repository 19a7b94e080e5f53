# -*- coding: utf-8 -*-

from dhmv.error import UnsupportedFormat
from dhmv.formats.edgelist import EdgeListFormat
from dhmv.formats.dot import DotFormat
from dhmv.formats.result import ResultFormat


drivers = {
    'edgelist' : EdgeListFormat,
    'dot'      : DotFormat,
    'json'     : ResultFormat,
}


def create(name, *args, **kws):
    cls = drivers.get((name or '').lower(), None)
    if not cls:
        raise UnsupportedFormat(name)
    return cls(*args, **kws)
