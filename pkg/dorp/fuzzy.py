# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Random partial maps and DORP_n elements for the sampling suite.

Every fuzzer draws from dorp.random.randgen, so reseed_random(seed) makes
a run reproducible.
"""

import itertools

from . import maps
from . import random


class BaseFuzzer(object):
    """Base class for fuzzers.

    Custom fuzzers should override the `fuzz()` method.
    """

    def fuzz(self):  # pragma: no cover
        raise NotImplementedError()

    def __call__(self):
        return self.fuzz()

    def sample(self, count):
        return [self.fuzz() for _i in range(count)]


class FuzzyPartialMap(BaseFuzzer):
    """Any partial map of [n]; each point is left out with probability `gap`."""

    def __init__(self, n, gap=0.3):
        self.n = n
        self.gap = gap

    def fuzz(self):
        values = [
            maps.UNDEFINED if random.randgen.random() < self.gap else random.randgen.randint(1, self.n)
            for _x in range(self.n)
        ]
        return maps.PartialMap(self.n, values)


class FuzzyDorpMap(BaseFuzzer):
    """A random element of DORP_n, built from a domain, kernel cuts and images.

    Args:
        n (int): the chain size
        antitone (float): probability of drawing an antitone map
        gap (float): probability of leaving a point out of the domain
    """

    def __init__(self, n, antitone=0.5, gap=0.3):
        self.n = n
        self.antitone = antitone
        self.gap = gap

    def _domain(self):
        return [x for x in range(1, self.n + 1) if random.randgen.random() >= self.gap]

    def _blocks(self, domain, p):
        cuts = sorted(random.randgen.sample(range(1, len(domain)), p - 1))
        bounds = [0] + cuts + [len(domain)]
        return [domain[bounds[k]:bounds[k + 1]] for k in range(p)]

    def fuzz(self):
        domain = self._domain()
        if not domain:
            return maps.PartialMap.empty(self.n)

        antitone = random.randgen.random() < self.antitone
        highest = min(len(domain), domain[0]) if antitone else len(domain)
        p = random.randgen.randint(1, highest)
        blocks = self._blocks(domain, p)

        if antitone:
            images = sorted(random.randgen.sample(range(1, domain[0] + 1), p), reverse=True)
        else:
            images = []
            floor = 0
            for block in blocks:
                floor = random.randgen.randint(floor + 1, block[0])
                images.append(floor)

        return maps.PartialMap.from_pairs(self.n, itertools.chain.from_iterable(
            ((x, image) for x in block) for block, image in zip(blocks, images)
        ))
