# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.

from unittest import mock

from dorp import maps


def lit(text):
    """Shortcut for maps.parse_literal."""
    return maps.parse_literal(text)


def pm(n, *pairs):
    """PartialMap on [n] from (x, xρ) pairs."""
    return maps.PartialMap.from_pairs(n, pairs)


class MultiModulePatcher(object):
    """An abstract context processor for patching multiple modules."""

    def __init__(self, *target_modules, **kwargs):
        super(MultiModulePatcher, self).__init__(**kwargs)
        self.patchers = [self._build_patcher(mod) for mod in target_modules]

    def _build_patcher(self, target_module):  # pragma: no cover
        """Build a mock patcher for the target module."""
        raise NotImplementedError()

    def __enter__(self):
        for patcher in self.patchers:
            patcher.start()
        return self

    def __exit__(self, exc_type=None, exc_val=None, exc_tb=None):
        for patcher in self.patchers:
            patcher.stop()


class mocked_urlopen(MultiModulePatcher):
    """Replace the OEIS transport with canned bodies, recording every URL."""

    def __init__(self, bodies, *target_modules, **kwargs):
        self.bodies = dict(bodies)
        self.requested = []
        super(mocked_urlopen, self).__init__(*target_modules, **kwargs)

    def _open(self, url, timeout):
        self.requested.append(url)
        for needle, body in self.bodies.items():
            if needle in url:
                return body
        return 'null'

    def _build_patcher(self, target_module):
        return mock.patch.object(target_module, '_urlopen', self._open)


class FakeClock(object):
    """A monotonic clock that only moves when sleep() is called."""

    def __init__(self, start=100.0):
        self.now = start
        self.sleeps = []

    def monotonic(self):
        return self.now

    def sleep(self, seconds):
        self.sleeps.append(seconds)
        self.now += seconds

    def wall(self):
        return 1700000000.0 + self.now
