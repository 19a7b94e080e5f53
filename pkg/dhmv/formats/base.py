# -*- coding: utf-8 -*-

class FormatBase(object):
    def __init__(self, *args, **kws):
        pass

    def loads(self, text):
        raise NotImplementedError

    def dumps(self, obj, *args, **kws):
        raise NotImplementedError

    def load(self, fileobj):
        return self.loads(fileobj.read())

    def dump(self, obj, fileobj, *args, **kws):
        fileobj.write(self.dumps(obj, *args, **kws))
