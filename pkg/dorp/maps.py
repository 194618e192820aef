# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Partial transformations of the chain [n] = {1, ..., n}.

Maps act on the right and compose left to right: x(ρσ) = ((x)ρ)σ.
"""

import collections
import logging
import re

from . import errors
from . import utils

logger = logging.getLogger('dorp.maps')

#: Marker stored at positions outside the domain.
UNDEFINED = 0


MapClass = collections.namedtuple('MapClass', ['isotone', 'antitone', 'decreasing'])

KernelDecomposition = collections.namedtuple('KernelDecomposition', ['blocks', 'images'])


class PartialMap(object):
    """A partial self-map of [n].

    Attributes:
        n (int): the size of the chain
        values (int tuple): position x-1 holds xρ, or UNDEFINED
    """
    __slots__ = ('n', 'values', '_hash')

    def __init__(self, n, values):
        values = tuple(values)
        if not isinstance(n, int) or n < 1:
            raise errors.DomainError("Chain size must be a positive integer, got %r" % (n,))
        if len(values) != n:
            raise errors.DomainError(
                "A map on [%d] needs %d entries, got %d" % (n, n, len(values)))
        for value in values:
            if not isinstance(value, int) or not UNDEFINED <= value <= n:
                raise errors.DomainError("Value %r outside [%d]" % (value, n))
        self.n = n
        self.values = values
        self._hash = hash((n, values))

    @classmethod
    def _trusted(cls, n, values):
        """Build from an already-validated tuple."""
        obj = cls.__new__(cls)
        obj.n = n
        obj.values = values
        obj._hash = hash((n, values))
        return obj

    @classmethod
    def from_pairs(cls, n, pairs):
        """Build a map from (x, xρ) pairs, or a {x: xρ} dict."""
        if isinstance(pairs, dict):
            pairs = pairs.items()
        values = [UNDEFINED] * n
        for source, target in pairs:
            if not 1 <= source <= n:
                raise errors.DomainError("Source %r outside [%d]" % (source, n))
            if values[source - 1] not in (UNDEFINED, target):
                raise errors.DomainError("Source %d given two images" % source)
            values[source - 1] = target
        return cls(n, values)

    @classmethod
    def identity(cls, n, domain=None):
        """The identity on `domain`, or on the whole chain."""
        if domain is None:
            domain = range(1, n + 1)
        return cls.from_pairs(n, [(x, x) for x in domain])

    @classmethod
    def empty(cls, n):
        return cls._trusted(n, (UNDEFINED,) * n)

    def __call__(self, x):
        value = self.values[x - 1]
        return None if value == UNDEFINED else value

    def __mul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, PartialMap):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        if not isinstance(other, PartialMap):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (PartialMap, (self.n, self.values))

    def pairs(self):
        """The (x, xρ) pairs, by increasing x."""
        return tuple((x, v) for x, v in enumerate(self.values, 1) if v != UNDEFINED)

    def sort_key(self):
        return (self.n, self.pairs())

    @property
    def domain(self):
        return tuple(x for x, v in enumerate(self.values, 1) if v != UNDEFINED)

    @property
    def image(self):
        return tuple(sorted(set(v for v in self.values if v != UNDEFINED)))

    @property
    def height(self):
        return len(self.image)

    @property
    def width(self):
        return len(self.domain)

    @property
    def fixed_points(self):
        return frozenset(x for x, v in enumerate(self.values, 1) if v == x)

    def restrict(self, domain):
        """The restriction of this map to `domain`."""
        domain = set(domain)
        return PartialMap._trusted(self.n, tuple(
            v if x in domain else UNDEFINED
            for x, v in enumerate(self.values, 1)
        ))

    def literal(self):
        return format_literal(self)

    def __str__(self):
        return format_literal(self)

    def __repr__(self):
        return 'PartialMap(%r)' % format_literal(self)


def _check_sizes(*maps):
    sizes = set(m.n for m in maps)
    if len(sizes) > 1:
        raise errors.SizeMismatch(
            "Maps act on chains of different sizes: %s" % ', '.join(str(s) for s in sorted(sizes)))


def compose(rho, sigma):
    """ρσ: x is defined iff x ∈ dom ρ and xρ ∈ dom σ."""
    if rho.n != sigma.n:
        _check_sizes(rho, sigma)
    target = sigma.values
    return PartialMap._trusted(
        rho.n,
        tuple(target[v - 1] if v != UNDEFINED else UNDEFINED for v in rho.values),
    )


def compose_all(maps):
    """Left-to-right product of a non-empty sequence of maps."""
    maps = list(maps)
    if not maps:
        raise errors.DomainError("Cannot compose an empty word")
    result = maps[0]
    for factor in maps[1:]:
        result = compose(result, factor)
    return result


def classify(rho):
    pairs = rho.pairs()
    isotone = antitone = True
    for (_x, v), (_y, w) in zip(pairs, pairs[1:]):
        if v > w:
            isotone = False
        if v < w:
            antitone = False
    decreasing = all(v <= x for x, v in pairs)
    return MapClass(isotone=isotone, antitone=antitone, decreasing=decreasing)


def in_dorp(rho):
    """Whether ρ is monotone and order-decreasing."""
    klass = classify(rho)
    return klass.decreasing and (klass.isotone or klass.antitone)


def is_idempotent(rho):
    return compose(rho, rho) == rho


def kernel_decomposition(rho):
    """Blocks of dom ρ with equal image, in increasing order, with their images."""
    preimages = collections.OrderedDict()
    for x, v in rho.pairs():
        preimages.setdefault(v, []).append(x)
    blocks = sorted((tuple(block), v) for v, block in preimages.items())
    return KernelDecomposition(
        blocks=tuple(block for block, _v in blocks),
        images=tuple(v for _block, v in blocks),
    )


def height(rho):
    return rho.height


def width(rho):
    return rho.width


def fix(rho):
    return rho.fixed_points


def _require_dorp(rho, operation):
    if not in_dorp(rho):
        raise errors.DomainError("%s requires an element of DORP_%d, got %s" % (operation, rho.n, rho))


def is_reversible(rho):
    """The reversibility condition: height 1, or a_p ≤ min A_1 and p ≤ ⌈n/2⌉."""
    _require_dorp(rho, 'is_reversible')
    p = rho.height
    if p == 0:
        raise errors.DomainError("Reversal needs a map of height at least 1")
    if p == 1:
        return True
    blocks = kernel_decomposition(rho).blocks
    return max(rho.image) <= blocks[0][0] and p <= utils.ceil_half(rho.n)


def reverse(rho):
    """Same kernel blocks, images in the opposite order; None if that leaves DORP_n."""
    _require_dorp(rho, 'reverse')
    if rho.height == 0:
        raise errors.DomainError("Reversal needs a map of height at least 1")
    if rho.height == 1:
        return rho

    decomposition = kernel_decomposition(rho)
    pairs = []
    for block, image in zip(decomposition.blocks, reversed(decomposition.images)):
        pairs.extend((x, image) for x in block)
    reversed_map = PartialMap.from_pairs(rho.n, pairs)
    if not in_dorp(reversed_map):
        logger.debug("Reversal of %s leaves DORP_%d", rho, rho.n)
        return None
    return reversed_map


def inverse_witness(rho):
    """ρ′ sending the image of each block A_i to c_i = min A_i.

    Then ρρ′ρ = ρ, ρρ′ = (A_i → c_i) is an idempotent of DORP_n and
    ρ′ρ is the identity on im ρ.
    """
    _require_dorp(rho, 'inverse_witness')
    decomposition = kernel_decomposition(rho)
    return PartialMap.from_pairs(rho.n, [
        (image, block[0])
        for block, image in zip(decomposition.blocks, decomposition.images)
    ])


_LITERAL_RE = re.compile(r'n=([0-9]+);(.*)')
_PAIR_RE = re.compile(r'([0-9]+)->([0-9]+)')


def format_literal(rho):
    return 'n=%d;%s' % (rho.n, ','.join('%d->%d' % pair for pair in rho.pairs()))


def parse_literal(text):
    """Parse `n=<INT>;<src>-><dst>,...` with strictly increasing sources."""
    match = _LITERAL_RE.fullmatch(text)
    if match is None:
        raise errors.ParseError("Invalid map literal %r: expected 'n=<INT>;<pairs>'" % (text,))
    n = int(match.group(1))
    if n < 1:
        raise errors.ParseError("Invalid map literal %r: chain size must be positive" % (text,))
    body = match.group(2)
    pairs = []
    if body:
        for chunk in body.split(','):
            pair = _PAIR_RE.fullmatch(chunk)
            if pair is None:
                raise errors.ParseError("Invalid pair %r in map literal %r" % (chunk, text))
            source, target = int(pair.group(1)), int(pair.group(2))
            if pairs and source <= pairs[-1][0]:
                raise errors.ParseError("Sources must be strictly increasing in %r" % (text,))
            if not (1 <= source <= n and 1 <= target <= n):
                raise errors.ParseError("Pair %r outside [%d] in %r" % (chunk, n, text))
            pairs.append((source, target))
    return PartialMap.from_pairs(n, pairs)
