# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Vital elements, constructive factorizations and generating sets.

A vital element of height p ≥ 2 is the injective antitone map with convex
domain {y_p, ..., y_p + p - 1} sending y_p + j to y_{p-j}, where
y_1 < ... < y_p is its image. It is convex when the image is the run
i - p + 1, ..., i; that map is written δ_{p,i}.
"""

import collections
import functools
import logging
import multiprocessing

from . import closure
from . import config
from . import enumeration
from . import enums
from . import errors
from . import maps
from . import utils
from .counting import count_convex_vitals  # noqa: F401

logger = logging.getLogger('dorp.generators')


class VitalElement(object):
    """A vital element together with its image chain.

    Attributes:
        underlying (PartialMap): the map itself
        y (int tuple): the image, y_1 < ... < y_p
        p (int): the height
        i (int): y_p, the fixed minimum of the domain
        convex (bool): whether the image is a run of consecutive points
        extreme (bool): convex with i ∈ {p, n - p + 1}
    """

    def __init__(self, underlying):
        if not is_vital(underlying):
            raise errors.DomainError("%s is not a vital element" % (underlying,))
        self.underlying = underlying
        self.y = underlying.image
        self.p = len(self.y)
        self.i = self.y[-1]
        self.convex = self.y == tuple(range(self.i - self.p + 1, self.i + 1))
        self.extreme = self.convex and self.i in (self.p, underlying.n - self.p + 1)

    @property
    def n(self):
        return self.underlying.n

    @property
    def tag(self):
        return enums.CONVEX_VITAL if self.convex else enums.VITAL

    def literal(self):
        return self.underlying.literal()

    def __eq__(self, other):
        if not isinstance(other, VitalElement):
            return NotImplemented
        return self.underlying == other.underlying

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.underlying)

    def __repr__(self):
        return 'VitalElement(%r)' % self.underlying.literal()


def is_vital(rho):
    if not maps.in_dorp(rho):
        return False
    image = rho.image
    p = len(image)
    if p < 2 or rho.width != p:
        return False
    start = image[-1]
    if rho.domain != tuple(range(start, start + p)):
        return False
    return all(rho(start + j) == image[p - 1 - j] for j in range(p))


def _vital_map(n, image):
    image = sorted(image)
    p = len(image)
    start = image[-1]
    return maps.PartialMap.from_pairs(n, [(start + j, image[p - 1 - j]) for j in range(p)])


def vital_of_lstar_class(image, n):
    """The unique vital element of the L*-class with image set `image`."""
    image = sorted(set(image))
    p = len(image)
    if p < 2:
        raise errors.DomainError("Vital elements have height at least 2, got image %r" % (image,))
    if image[0] < 1 or image[-1] + p - 1 > n:
        raise errors.DomainError(
            "No vital element of DORP_%d has image %r: needs y_p + p - 1 ≤ n" % (n, image))
    return VitalElement(_vital_map(n, image))


def _check_convex_height(n, p):
    if not 2 <= p <= utils.ceil_half(n):
        raise errors.DomainError(
            "Convex vital elements need 2 ≤ p ≤ ⌈n/2⌉, got p=%r, n=%r" % (p, n))


def convex_vital(n, p, i):
    """δ_{p,i}: i + j ↦ i - j for 0 ≤ j < p."""
    _check_convex_height(n, p)
    if not p <= i <= n - p + 1:
        raise errors.DomainError("δ_{%d,i} needs %d ≤ i ≤ %d, got i=%r" % (p, p, n - p + 1, i))
    return VitalElement(maps.PartialMap.from_pairs(n, [(i + j, i - j) for j in range(p)]))


def convex_vitals(n, p):
    """M(p): every δ_{p,i}, by ascending i."""
    _check_convex_height(n, p)
    return [convex_vital(n, p, i) for i in range(p, n - p + 2)]


def extreme_elements(n, upto):
    """δ_{i,i} and δ_{i,n-i+1} for 2 ≤ i ≤ upto, each once."""
    found = []
    for i in range(2, upto + 1):
        found.append(convex_vital(n, i, i).underlying)
        found.append(convex_vital(n, i, n - i + 1).underlying)
    return utils.sort_elements(found)


def _require_antitone(rho, operation):
    if not maps.in_dorp(rho):
        raise errors.DomainError("%s needs an element of DORP_%d, got %s" % (operation, rho.n, rho))
    if rho.height < 2 or not maps.classify(rho).antitone:
        raise errors.DomainError("%s needs an antitone map of height at least 2, got %s" % (operation, rho))


def _identity_on(n, points):
    return maps.PartialMap.identity(n, points)


def factor_injective_antitone(rho):
    """ρ = ϵ ε_1 ⋯ ε_p δ for an injective antitone ρ with convex domain.

    ϵ is the identity on dom ρ, each ε_i slides the point t + i - 1 down to
    a_p + i - 1, and δ is the vital element sharing the image of ρ.
    """
    _require_antitone(rho, 'factor_injective_antitone')
    n, p = rho.n, rho.height
    domain = rho.domain
    t = domain[0]
    if rho.width != p or domain != tuple(range(t, t + p)):
        raise errors.DomainError("%s is not injective with a convex domain" % (rho,))

    low = rho.image[-1]
    factors = [(enums.IDEMPOTENT, _identity_on(n, domain))]
    for i in range(1, p + 1):
        pairs = [(x, x) for x in range(low, low + i - 1)]
        pairs.append((low + i - 1, low + i - 1))
        if t + i - 1 != low + i - 1:
            pairs.append((t + i - 1, low + i - 1))
        pairs.extend((x, x) for x in range(t + i, t + p))
        factors.append((enums.IDEMPOTENT, maps.PartialMap.from_pairs(n, pairs)))

    vital = vital_of_lstar_class(rho.image, n)
    factors.append((vital.tag, vital.underlying))
    return closure.FactorizationWord(rho, factors)


def factor_antitone(rho):
    """ρ = ε ξ_1 ⋯ ξ_{p-1} σ, with σ injective and further factorized.

    ε sends each kernel block A_i to t_i = min A_i; ξ_i then gathers
    t_1 + i, ..., t_{i+1} onto t_1 + i so the domain becomes the run
    starting at t_1; σ maps that run onto im ρ in reverse order.
    """
    _require_antitone(rho, 'factor_antitone')
    n, p = rho.n, rho.height
    decomposition = maps.kernel_decomposition(rho)
    t = [block[0] for block in decomposition.blocks]

    factors = [(enums.IDEMPOTENT, maps.PartialMap.from_pairs(n, [
        (x, block[0]) for block in decomposition.blocks for x in block
    ]))]
    for i in range(1, p):
        pairs = [(x, x) for x in range(t[0], t[0] + i)]
        pairs.extend((x, t[0] + i) for x in range(t[0] + i, t[i] + 1))
        pairs.extend((x, x) for x in t[i + 1:])
        factors.append((enums.IDEMPOTENT, maps.PartialMap.from_pairs(n, pairs)))

    sigma = maps.PartialMap.from_pairs(n, [
        (t[0] + j, image) for j, image in enumerate(decomposition.images)
    ])
    factors.extend(factor_injective_antitone(sigma).factors)
    return closure.FactorizationWord(rho, factors)


@functools.lru_cache(maxsize=None)
def _isotone_trace(n, p):
    """Closure of E(J*_p) in RQ_p(n); its words keep every prefix at height p."""
    generators = [
        closure.ReesElement(rho, p)
        for rho in enumeration.enumerate_jstar_idempotents(n, p)
    ]
    return closure.closure(generators, closure.rees_product)


def factor_isotone(rho):
    """A word over E(J*_p) for an isotone ρ of height p."""
    if not maps.in_dorp(rho) or not maps.classify(rho).isotone:
        raise errors.DomainError("factor_isotone needs an element of LS_%d, got %s" % (rho.n, rho))
    if maps.is_idempotent(rho):
        return closure.FactorizationWord(rho, [(enums.IDEMPOTENT, rho)])
    word = closure.word_for(closure.ReesElement(rho, rho.height), _isotone_trace(rho.n, rho.height))
    return closure.FactorizationWord(
        rho, [(enums.IDEMPOTENT, closure.unwrap(element)) for element in word.elements()])


def factor_nonconvex_vital(delta, expand_isotone=True):
    """δ = δ*_{p,i} γ with i = y_p and γ the injective isotone i - p + 1 + k ↦ y_{k+1}."""
    if isinstance(delta, VitalElement):
        delta = delta.underlying
    vital = VitalElement(delta)
    if vital.convex:
        raise errors.DomainError("%s is already convex" % (delta,))

    n, p, i = delta.n, vital.p, vital.i
    star = convex_vital(n, p, i)
    gamma = maps.PartialMap.from_pairs(n, [(i - p + 1 + k, vital.y[k]) for k in range(p)])

    factors = [(star.tag, star.underlying)]
    if expand_isotone:
        factors.extend(factor_isotone(gamma).factors)
    else:
        factors.append((enums.ISOTONE_PART, gamma))
    return closure.FactorizationWord(delta, factors)


class Deflation(collections.namedtuple('Deflation', ['vital', 'idempotent'])):
    """δ_{p,i} written as δ_{p+1,i} times an idempotent of height p + 1."""
    __slots__ = ()

    def word(self):
        target = maps.compose(self.vital.underlying, self.idempotent)
        return closure.FactorizationWord(target, [
            (self.vital.tag, self.vital.underlying),
            (enums.IDEMPOTENT, self.idempotent),
        ])


def deflate_convex_vital(n, p, i):
    """δ_{p,i} = δ_{p+1,i} ε with ε the identity on {i - p + 1, ..., i + 1}."""
    if i in (p, n - p + 1):
        raise errors.ExtremeElementError(
            "δ_{%d,%d} is extreme in DORP_%d and has no higher-height factorization" % (p, i, n))
    if not 2 <= p <= utils.ceil_half(n) - 1:
        raise errors.DomainError("Deflation needs 2 ≤ p ≤ ⌈n/2⌉ - 1, got p=%r, n=%r" % (p, n))
    if not p + 1 <= i <= n - p:
        raise errors.DomainError("Deflation needs %d ≤ i ≤ %d, got i=%r" % (p + 1, n - p, i))
    return Deflation(
        vital=convex_vital(n, p + 1, i),
        idempotent=_identity_on(n, range(i - p + 1, i + 2)),
    )


def generating_set_G(n, p):
    """G(p): E(J*_p), plus M(p) when 2 ≤ p ≤ ⌈n/2⌉."""
    if not 1 <= p <= n:
        raise errors.DomainError("G(p) needs 1 ≤ p ≤ n, got p=%r, n=%r" % (p, n))
    members = list(enumeration.enumerate_jstar_idempotents(n, p))
    if 2 <= p <= utils.ceil_half(n):
        members.extend(vital.underlying for vital in convex_vitals(n, p))
    return enumeration.ElementSet(n, members, label='G(%d)' % p)


def generating_set_W(n, p):
    """W(p), a generating set of I(n,p) of minimum size."""
    if not 0 <= p <= n - 1:
        raise errors.DomainError("W(p) needs 0 ≤ p ≤ n - 1, got p=%r, n=%r" % (p, n))
    h = utils.ceil_half(n)
    if p <= 1:
        members = list(enumeration.enumerate_jstar_idempotents(n, p))
    elif p <= h:
        members = list(generating_set_G(n, p)) + extreme_elements(n, p - 1)
    else:
        members = list(enumeration.enumerate_jstar_idempotents(n, p))
        members.extend(vital.underlying for vital in convex_vitals(n, h))
        members.extend(extreme_elements(n, h - 1))
    return enumeration.ElementSet(n, members, label='W(%d)' % p)


def dorp_generators(n):
    """W(n - 1) together with the identity of [n]."""
    generators = generating_set_W(n, n - 1)
    return generators.union([maps.PartialMap.identity(n)], label='W(%d)+1' % (n - 1))


def factorize(rho):
    """Every applicable constructive factorization of ρ ∈ DORP_n."""
    if not maps.in_dorp(rho):
        raise errors.DomainError("%s is not in DORP_%d" % (rho, rho.n))
    if maps.classify(rho).isotone:
        return [factor_isotone(rho)]
    words = [factor_antitone(rho)]
    if is_vital(rho) and not VitalElement(rho).convex:
        words.append(factor_nonconvex_vital(rho))
    return words


_scan_carrier = None


def _install_carrier(carrier):
    global _scan_carrier
    _scan_carrier = carrier


def _reducible_chunk(indices):
    carrier = _scan_carrier
    members = carrier.members
    found = set()
    for index in indices:
        rho = members[index]
        for sigma in members:
            product = carrier.multiply(rho, sigma)
            if product != rho and product != sigma:
                found.add(product)
    return found


def _chunks(size, count):
    return [list(range(start, size, count)) for start in range(count)]


def irreducibles(carrier, options=None):
    """Members with no factorization ρσ where both factors differ from the product.

    These belong to every generating set of the carrier.
    """
    options = config.resolve(options)
    if carrier.n > options.oracle_bound:
        raise errors.ResourceLimitError(
            "Pair scan at n=%d exceeds the configured bound %d" % (carrier.n, options.oracle_bound))

    size = len(carrier.members)
    jobs = min(options.jobs, max(size, 1))
    if jobs > 1:
        with multiprocessing.Pool(jobs, initializer=_install_carrier, initargs=(carrier,)) as pool:
            parts = pool.map(_reducible_chunk, _chunks(size, jobs))
    else:
        _install_carrier(carrier)
        try:
            parts = [_reducible_chunk(range(size))]
        finally:
            _install_carrier(None)

    reducible = set().union(*parts)
    found = [member for member in carrier.members if member not in reducible]
    logger.debug("Pair scan on %s: %d irreducible of %d", carrier.label, len(found), size)
    if isinstance(carrier, enumeration.ElementSet):
        return enumeration.ElementSet(carrier.n, found, label='Irr(%s)' % carrier.label)
    return found
