# -*- coding: utf-8 -*-

"""
dhmv.formats.result
~~~~~~~~~~~~~~~~~~~

The JSON result document of ``dhmv mu --json``.  Keys are sorted and
sets are sorted lists, so the same input always yields the same bytes.

"""

try:
    import simplejson as json
except ImportError:
    import json

from dhmv.datatypes import SHAPE_NAME, REASON_NAME
from dhmv.formats.base import FormatBase


class ResultFormat(FormatBase):

    def document(self, g, result, connected=True, is_dh=True, timings=None):
        doc = {
            'n': g.n,
            'm': g.m,
            'connected': connected,
            'is_dh': is_dh,
            'mu': None,
            'mu_set': None,
            'sigma_vertices': None,
            'shape': None,
            'removed_extra': None,
        }
        if result is not None:
            doc.update({
                'mu': result.mu,
                'mu_set': list(result.set),
                'sigma_vertices': list(result.removed_sigma),
                'shape': SHAPE_NAME[result.shape],
                'removed_extra': [{'vertex': r.vertex, 'reason': REASON_NAME[r.reason]}
                                  for r in result.removed_extra],
            })
        if timings is not None:
            doc['timings'] = dict((k, round(v, 3)) for k, v in timings.items())
        return doc

    def dumps(self, doc):
        return json.dumps(doc, sort_keys=True, indent=2, separators=(',', ': ')) + '\n'

    def loads(self, text):
        return json.loads(text)
