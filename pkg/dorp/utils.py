# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.

import json
import operator


def _safe_repr(obj):
    try:
        return log_repr(obj)
    except Exception:
        return '<bad_repr object at %s>' % id(obj)


class log_pprint(object):
    """Helper for properly printing args / kwargs passed to an operation.

    Since it is only used with dorp.debug(), the computation is
    performed lazily.
    """
    __slots__ = ['args', 'kwargs']

    def __init__(self, args=(), kwargs=None):
        self.args = args
        self.kwargs = kwargs or {}

    def __repr__(self):
        return repr(str(self))

    def __str__(self):
        return ', '.join(
            [
                _safe_repr(arg) for arg in self.args
            ] + [
                '%s=%s' % (key, _safe_repr(value))
                for key, value in sorted(self.kwargs.items())
            ]
        )


def log_repr(obj):
    """Generate a text repr of an object, for log lines."""
    return str(repr(obj))


def ceil_half(n):
    """⌈n/2⌉, the largest height an antitone element of DORP_n can reach."""
    return (n + 1) // 2


def sort_elements(elements):
    """Deduplicate and sort PartialMap or ReesElement values in canonical order."""
    return sorted(set(elements), key=operator.methodcaller('sort_key'))


def dump_json(payload):
    """Stable JSON rendering used by every report and table."""
    return json.dumps(payload, sort_keys=True, indent=2)
