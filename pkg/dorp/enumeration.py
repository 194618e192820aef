# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Element sets and enumerators for DORP_n, LS_n, DRP_n, I(n,p) and J*_p."""

import itertools
import logging

from . import config
from . import errors
from . import maps
from . import utils

logger = logging.getLogger('dorp.enumeration')


class Carrier(object):
    """A finite semigroup given by its members and a product rule.

    Subclasses provide `members` (canonically ordered tuple), `n`,
    `multiply(a, b)` and `adjoined_identity()`.
    """

    label = None

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, element):
        return element in self._index

    def multiply(self, a, b):  # pragma: no cover
        raise NotImplementedError()

    def adjoined_identity(self):  # pragma: no cover
        raise NotImplementedError()

    def with_identity(self):
        """Members of S¹, the carrier with an identity adjoined."""
        return list(self.members) + [self.adjoined_identity()]

    def subset(self, predicate, label=None):  # pragma: no cover
        raise NotImplementedError()

    def literals(self):
        return [element.literal() for element in self.members]


class ElementSet(Carrier):
    """A deduplicated, canonically ordered set of maps on the same chain.

    Attributes:
        n (int): the chain size shared by all members
        members (PartialMap tuple): the members, in canonical order
        label (str): a human-readable name, for reports
    """

    def __init__(self, n, members, label=None):
        members = utils.sort_elements(members)
        for member in members:
            if member.n != n:
                raise errors.SizeMismatch(
                    "ElementSet on [%d] cannot hold %s" % (n, member))
        self.n = n
        self.members = tuple(members)
        self._index = frozenset(self.members)
        self.label = label or 'set'

    def multiply(self, a, b):
        return maps.compose(a, b)

    def adjoined_identity(self):
        return maps.PartialMap.identity(self.n)

    def subset(self, predicate, label=None):
        return ElementSet(self.n, [m for m in self.members if predicate(m)], label=label)

    def union(self, other, label=None):
        return ElementSet(self.n, self.members + tuple(other), label=label)

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.n == other.n and self._index == other._index

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.n, self._index))

    def __repr__(self):
        return '<ElementSet %s n=%d size=%d>' % (self.label, self.n, len(self.members))


def _check_bound(n, bound, what):
    if n < 1:
        raise errors.DomainError("Chain size must be positive, got %r" % (n,))
    if n > bound:
        raise errors.ResourceLimitError(
            "%s at n=%d exceeds the configured bound %d" % (what, n, bound))


def _check_height(n, p):
    if not 0 <= p <= n:
        raise errors.DomainError("Height p=%r outside 0..%d" % (p, n))


def enumerate_all_partial_maps(n, options=None):
    """Stream every partial map of [n] once, in canonical order."""
    options = config.resolve(options)
    _check_bound(n, options.oracle_bound, "Filter-all enumeration")

    values = [maps.UNDEFINED] * n

    def walk(start):
        yield maps.PartialMap._trusted(n, tuple(values))
        for x in range(start, n + 1):
            for v in range(1, n + 1):
                values[x - 1] = v
                for item in walk(x + 1):
                    yield item
            values[x - 1] = maps.UNDEFINED

    return walk(1)


def _convex_partitions(domain, p):
    """Split a sorted domain into p consecutive non-empty runs."""
    for cuts in itertools.combinations(range(1, len(domain)), p - 1):
        bounds = (0,) + cuts + (len(domain),)
        yield tuple(domain[bounds[k]:bounds[k + 1]] for k in range(p))


def _isotone_images(blocks, floor=0):
    """Image chains a_1 < ... < a_p with a_i ≤ min A_i."""
    if not blocks:
        yield ()
        return
    for a in range(floor + 1, blocks[0][0] + 1):
        for rest in _isotone_images(blocks[1:], a):
            yield (a,) + rest


def _antitone_images(blocks):
    """Aligned images for antitone maps: the p-subset a_1 < ... < a_p of
    [min A_1], sent in reverse order onto A_1 < ... < A_p."""
    p = len(blocks)
    for chain in itertools.combinations(range(1, blocks[0][0] + 1), p):
        yield tuple(reversed(chain))


def _build(n, blocks, images):
    values = [maps.UNDEFINED] * n
    for block, image in zip(blocks, images):
        for x in block:
            values[x - 1] = image
    return maps.PartialMap._trusted(n, tuple(values))


def _kernels(n, heights):
    """(domain, blocks) for every kernel of height in `heights`, height > 0."""
    for w in range(1, n + 1):
        for domain in itertools.combinations(range(1, n + 1), w):
            for p in range(1, w + 1):
                if p not in heights:
                    continue
                for blocks in _convex_partitions(domain, p):
                    yield blocks


def _generate(n, heights, isotone=True, antitone=True):
    """Direct generation by domain, then kernel blocks, then image chain."""
    if 0 in heights:
        yield maps.PartialMap.empty(n)
    for blocks in _kernels(n, heights):
        if isotone:
            for images in _isotone_images(blocks):
                yield _build(n, blocks, images)
        # Height-1 maps are both isotone and antitone: emit them once.
        if antitone and (len(blocks) >= 2 or not isotone):
            for images in _antitone_images(blocks):
                yield _build(n, blocks, images)


def _heights(n, p=None, exact=False):
    if p is None:
        return frozenset(range(0, n + 1))
    if exact:
        return frozenset([p])
    return frozenset(range(0, p + 1))


def enumerate_dorp(n, options=None):
    """DORP_n = LS_n ∪ DRP_n, generated directly."""
    options = config.resolve(options)
    _check_bound(n, options.direct_bound, "Direct enumeration of DORP_n")
    result = ElementSet(n, _generate(n, _heights(n)), label='DORP_%d' % n)
    logger.debug("Enumerated %r", result)
    return result


def enumerate_ls(n, options=None):
    """LS_n, the isotone decreasing partial maps."""
    options = config.resolve(options)
    _check_bound(n, options.direct_bound, "Direct enumeration of LS_n")
    return ElementSet(n, _generate(n, _heights(n), antitone=False), label='LS_%d' % n)


def enumerate_drp(n, options=None):
    """DRP_n, the antitone decreasing partial maps (the empty map included)."""
    options = config.resolve(options)
    _check_bound(n, options.direct_bound, "Direct enumeration of DRP_n")
    return ElementSet(n, _generate(n, _heights(n), isotone=False), label='DRP_%d' % n)


def enumerate_ideal(n, p, options=None):
    """I(n,p), the elements of DORP_n of height at most p."""
    options = config.resolve(options)
    _check_bound(n, options.direct_bound, "Direct enumeration of I(n,p)")
    _check_height(n, p)
    return ElementSet(n, _generate(n, _heights(n, p)), label='I(%d,%d)' % (n, p))


def enumerate_jstar(n, p, options=None):
    """J*_p, the elements of DORP_n of height exactly p."""
    options = config.resolve(options)
    _check_bound(n, options.direct_bound, "Direct enumeration of J*_p")
    _check_height(n, p)
    return ElementSet(n, _generate(n, _heights(n, p, exact=True)), label='J*_%d(n=%d)' % (p, n))


def enumerate_jstar_idempotents(n, p):
    """E(J*_p): one idempotent per kernel, each block sent to its minimum."""
    _check_height(n, p)
    if p == 0:
        return ElementSet(n, [maps.PartialMap.empty(n)], label='E(J*_0)')
    return ElementSet(
        n,
        (_build(n, blocks, [block[0] for block in blocks]) for blocks in _kernels(n, frozenset([p]))),
        label='E(J*_%d)' % p,
    )
