# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Subsemigroup closure, word recovery and Rees quotient arithmetic."""

import logging

from . import config
from . import enumeration
from . import enums
from . import errors
from . import maps
from . import utils

logger = logging.getLogger('dorp.closure')


class _Zero(object):
    """The absorbing zero of a Rees quotient."""
    __slots__ = ()

    is_zero = True
    height = 0

    def sort_key(self):
        return (0,)

    def literal(self):
        return '0'

    def __reduce__(self):
        return (_zero, ())

    def __repr__(self):
        return 'Zero'


class _AdjoinedOne(object):
    """An identity adjoined to a Rees quotient, for S¹ oracles."""
    __slots__ = ()

    is_zero = False

    def sort_key(self):
        return (2,)

    def literal(self):
        return '1'

    def __reduce__(self):
        return (_one, ())

    def __repr__(self):
        return 'One'


ZERO = _Zero()
ONE = _AdjoinedOne()


def _zero():
    return ZERO


def _one():
    return ONE


class ReesElement(object):
    """A non-zero element of RQ_p(n): a map of height exactly p.

    Attributes:
        map (PartialMap): the underlying map
        p (int): the height of the quotient it lives in
    """
    __slots__ = ('map', 'p')

    is_zero = False

    def __init__(self, rho, p):
        if rho.height != p:
            raise errors.DomainError("%s has height %d, not %d" % (rho, rho.height, p))
        self.map = rho
        self.p = p

    @property
    def n(self):
        return self.map.n

    @property
    def height(self):
        return self.p

    def sort_key(self):
        return (1,) + self.map.sort_key()

    def literal(self):
        return self.map.literal()

    def __eq__(self, other):
        if not isinstance(other, ReesElement):
            return NotImplemented
        return self.p == other.p and self.map == other.map

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.p, self.map))

    def __reduce__(self):
        return (ReesElement, (self.map, self.p))

    def __repr__(self):
        return 'ReesElement(%r, p=%d)' % (self.map.literal(), self.p)


def rees_product(a, b, p=None):
    """Product in RQ_p(n): Zero once the composed height drops below p."""
    if a is ZERO or b is ZERO:
        return ZERO
    if a.p != b.p or (p is not None and a.p != p):
        raise errors.DomainError("Rees elements of heights %d and %d cannot be multiplied" % (a.p, b.p))
    product = maps.compose(a.map, b.map)
    if product.height < a.p:
        return ZERO
    return ReesElement(product, a.p)


def unwrap(element):
    """The underlying map of a Rees element; maps pass through unchanged."""
    if isinstance(element, ReesElement):
        return element.map
    return element


class ReesSemigroup(enumeration.Carrier):
    """RQ_p(n) = I(n,p) / I(n,p-1): Zero plus the elements of height p."""

    def __init__(self, n, p, options=None):
        self.n = n
        self.p = p
        nonzero = [ReesElement(rho, p) for rho in enumeration.enumerate_jstar(n, p, options=options)]
        self.members = tuple([ZERO] + nonzero)
        self._index = frozenset(self.members)
        self.label = 'RQ_%d(%d)' % (p, n)

    def multiply(self, a, b):
        if a is ONE:
            return b
        if b is ONE:
            return a
        return rees_product(a, b, self.p)

    def adjoined_identity(self):
        return ONE

    def nonzero(self):
        return [element for element in self.members if element is not ZERO]

    def subset(self, predicate, label=None):
        return [element for element in self.members if predicate(element)]

    def lift(self, rho):
        """The Rees element for a map of height p."""
        return ReesElement(rho, self.p)

    def __repr__(self):
        return '<ReesSemigroup %s size=%d>' % (self.label, len(self.members))


def rees_quotient(n, p, options=None):
    if not 1 <= p <= n:
        raise errors.DomainError("Rees quotients need 1 ≤ p ≤ n, got p=%r, n=%r" % (p, n))
    return ReesSemigroup(n, p, options=options)


class FactorizationWord(object):
    """A tagged word whose left-to-right product is the target.

    Attributes:
        target: the element being factorized
        factors ((tag, element) list): the word
        product (callable): the product rule used to recompose the word
    """

    def __init__(self, target, factors, product=None):
        self.target = target
        self.factors = list(factors)
        self.product = product or maps.compose

    def elements(self):
        return [element for _tag, element in self.factors]

    def tags(self):
        return [tag for tag, _element in self.factors]

    def compose(self):
        elements = self.elements()
        if not elements:
            raise errors.DomainError("Empty factorization word for %s" % (self.target,))
        result = elements[0]
        for element in elements[1:]:
            result = self.product(result, element)
        return result

    def recomposes(self):
        return self.compose() == self.target

    def as_dict(self):
        return {
            'target': self.target.literal(),
            'factors': [
                {'tag': tag, 'map': element.literal()}
                for tag, element in self.factors
            ],
            'recomposes': self.recomposes(),
        }

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __repr__(self):
        return '<FactorizationWord %s = %s>' % (
            self.target.literal(), ' · '.join(element.literal() for element in self.elements()))


class GenerationTrace(object):
    """The result of a closure run.

    Attributes:
        generators (tuple): the generators, in canonical order
        members (tuple): the closure, in canonical order
        parents (dict): element -> (prefix, generator), for non-generators
        product (callable): the product rule
        rounds (int): breadth-first depth reached
        capped (bool): whether the run stopped at the size cap
    """

    def __init__(self, generators, members, parents, product, rounds, capped=False):
        self.generators = tuple(generators)
        self.members = tuple(utils.sort_elements(members))
        self.parents = parents
        self.product = product
        self.rounds = rounds
        self.capped = capped
        self._index = frozenset(self.members)
        self._generator_index = frozenset(self.generators)

    def __contains__(self, element):
        return element in self._index

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def as_set(self):
        return self._index

    def as_dict(self):
        return {
            'generator_count': len(self.generators),
            'closure_size': len(self.members),
            'rounds': self.rounds,
            'capped': self.capped,
        }

    def __repr__(self):
        return '<GenerationTrace: %d generators, %d elements, %d rounds>' % (
            len(self.generators), len(self.members), self.rounds)


def closure(generators, product=None, options=None, strict=True):
    """⟨generators⟩ under `product`, with a parent link per derived element.

    Each round multiplies the previous round's new elements on the right by
    every generator, so an element first found in round k has a word of
    length k + 1 and no shorter one.
    """
    options = config.resolve(options)
    product = product or maps.compose
    generators = utils.sort_elements(generators)
    if not generators:
        raise errors.DomainError("Closure needs at least one generator")

    cap = options.closure_cap
    seen = set(generators)
    parents = {}
    frontier = list(generators)
    rounds = 0
    capped = False

    while frontier and not capped:
        rounds += 1
        discovered = []
        for prefix in frontier:
            for generator in generators:
                element = product(prefix, generator)
                if element in seen:
                    continue
                seen.add(element)
                parents[element] = (prefix, generator)
                discovered.append(element)
                if len(seen) > cap:
                    if strict:
                        raise errors.ResourceLimitError(
                            "Closure exceeded the configured cap of %d elements" % cap)
                    capped = True
                    break
            if capped:
                break
        logger.debug("Closure round %d: %d new, %d total", rounds, len(discovered), len(seen))
        frontier = discovered

    return GenerationTrace(generators, seen, parents, product, rounds, capped=capped)


def _default_tag(element):
    rho = unwrap(element)
    if isinstance(rho, maps.PartialMap) and maps.is_idempotent(rho):
        return enums.IDEMPOTENT
    return enums.GENERATOR


def word_for(element, trace, tag=None):
    """A word over the generators of `trace` whose product is `element`."""
    if element not in trace:
        raise errors.NotGeneratedError("%s is not in the closure %r" % (element.literal(), trace))
    tag = tag or _default_tag

    reversed_word = []
    current = element
    while current not in trace._generator_index:
        prefix, generator = trace.parents[current]
        reversed_word.append(generator)
        current = prefix
    reversed_word.append(current)

    return FactorizationWord(
        element,
        [(tag(factor), factor) for factor in reversed(reversed_word)],
        product=trace.product,
    )


def is_generating(generators, carrier, options=None):
    """Whether ⟨generators⟩ is the whole carrier."""
    generators = list(generators)
    missing = [g for g in generators if g not in carrier]
    if missing:
        raise errors.DomainError("Generator %s is not in %r" % (missing[0].literal(), carrier))
    if not generators:
        return len(carrier) == 0
    trace = closure(generators, carrier.multiply, options=options)
    return trace.as_set() == frozenset(carrier.members)
