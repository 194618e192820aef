# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Closed-form ranks and closure-backed rank certificates."""

import logging

from . import closure
from . import config
from . import enumeration
from . import enums
from . import errors
from . import generators
from . import reports
from . import utils
from .counting import count_rstar_classes

logger = logging.getLogger('dorp.rank')


def _require_rank_n(n):
    if not isinstance(n, int) or n < 2:
        raise errors.DomainError(
            "Rank claims are stated for n ≥ 2; DORP_1 = {∅, 1} needs 2 generators, got n=%r" % (n,))


def rank_rq(n, p):
    """rank RQ_p(n), for 1 ≤ p ≤ n - 1."""
    _require_rank_n(n)
    if not 1 <= p <= n - 1:
        raise errors.DomainError("rank RQ_p(n) needs 1 ≤ p ≤ n - 1, got p=%r, n=%r" % (p, n))
    total = count_rstar_classes(n, p)
    if p == 1 or p > utils.ceil_half(n):
        return total
    return n - 2 * p + 2 + total


def rank_ideal(n, p):
    """rank I(n,p), for 0 ≤ p ≤ n - 1."""
    _require_rank_n(n)
    if not 0 <= p <= n - 1:
        raise errors.DomainError("rank I(n,p) needs 0 ≤ p ≤ n - 1, got p=%r, n=%r" % (p, n))
    if p == 0:
        return 1
    if p == 1:
        return 2 ** n - 1
    return n - 2 + count_rstar_classes(n, p)


def rank_dorp(n):
    _require_rank_n(n)
    return 3 * n - 2


def rank_formula(obj, n, p=None):
    """The closed-form rank of RQ_p(n), I(n,p) or DORP_n."""
    if obj == enums.RQ_OBJECT:
        return rank_rq(n, p)
    elif obj == enums.IDEAL_OBJECT:
        return rank_ideal(n, p)
    elif obj == enums.DORP_OBJECT:
        return rank_dorp(n)
    raise errors.DomainError("Unknown rank object %r; choose from %s" % (obj, ', '.join(enums.RANK_OBJECTS)))


def size_of_G(n, p):
    """|G(p)| for 1 ≤ p ≤ n, from the R*-class count."""
    if not 1 <= p <= n:
        raise errors.DomainError("G(p) needs 1 ≤ p ≤ n, got p=%r, n=%r" % (p, n))
    total = count_rstar_classes(n, p)
    if 2 <= p <= utils.ceil_half(n):
        total += generators.count_convex_vitals(n, p)
    return total


def _carrier_and_generators(obj, n, p, options):
    if obj == enums.RQ_OBJECT:
        carrier = closure.rees_quotient(n, p, options=options)
        gens = [carrier.lift(g) for g in generators.generating_set_G(n, p)]
    elif obj == enums.IDEAL_OBJECT:
        carrier = enumeration.enumerate_ideal(n, p, options=options)
        gens = list(generators.generating_set_W(n, p))
    else:
        carrier = enumeration.enumerate_dorp(n, options=options)
        gens = list(generators.dorp_generators(n))
    return carrier, gens


def _generates(gens, carrier, options):
    if not gens:
        return False
    return closure.is_generating(gens, carrier, options=options)


class RankCertificate(object):
    """Evidence that a generating set has the size of the rank formula.

    The certificate passes when the generators close to the carrier, their
    count equals the formula, they contain every irreducible element, and
    no generator can be dropped.
    """

    def __init__(self, obj, n, p, formula_rank, gens, trace, carrier, irreducible, irredundant):
        self.object = obj
        self.n = n
        self.p = p
        self.formula_rank = formula_rank
        self.generators = tuple(utils.sort_elements(gens))
        self.trace = trace
        self.carrier_size = len(carrier)
        self.generated = trace.as_set() == frozenset(carrier.members)
        self.irreducible_count = len(irreducible)
        self.irreducibles_within_generators = set(irreducible) <= set(self.generators)
        self.irredundant = irredundant

    @property
    def closure_size(self):
        return len(self.trace)

    @property
    def passed(self):
        return (
            self.generated
            and len(self.generators) == self.formula_rank
            and self.irreducibles_within_generators
            and self.irredundant is not False
        )

    def as_dict(self):
        return {
            'object': self.object,
            'n': self.n,
            'p': self.p,
            'formula_rank': self.formula_rank,
            'generators': [g.literal() for g in self.generators],
            'closure_size': self.closure_size,
            'carrier_size': self.carrier_size,
            'irreducible_count': self.irreducible_count,
            'irredundant': self.irredundant,
            'irreducibles_within_generators': self.irreducibles_within_generators,
            'pass': self.passed,
        }

    def to_report(self):
        report = reports.VerificationReport('rank', {'object': self.object, 'n': self.n, 'p': self.p})
        label = self._label()
        report.check('%s generated' % label, self.carrier_size, self.closure_size)
        report.check('%s generator count' % label, self.formula_rank, len(self.generators))
        report.check('%s irreducibles within generators' % label, True, self.irreducibles_within_generators)
        if self.irredundant is not None:
            report.check('%s irredundant' % label, True, self.irredundant)
        if self.irreducible_count < self.formula_rank:
            report.note("%s: %d irreducible elements, a lower bound below the rank %d"
                        % (label, self.irreducible_count, self.formula_rank))
        return report.finish()

    def _label(self):
        if self.object == enums.RQ_OBJECT:
            return 'RQ_%d(%d)' % (self.p, self.n)
        elif self.object == enums.IDEAL_OBJECT:
            return 'I(%d,%d)' % (self.n, self.p)
        return 'DORP_%d' % self.n

    def __repr__(self):
        return '<RankCertificate %s rank=%d %s>' % (
            self._label(), self.formula_rank, 'pass' if self.passed else 'FAIL')


def certify_rank(obj, n, p=None, options=None, check_irredundant=True):
    """Close the generating set for `obj`, scan for irreducibles and compare with the formula."""
    options = config.resolve(options)
    formula = rank_formula(obj, n, p)
    if obj == enums.DORP_OBJECT:
        p = None
    carrier, gens = _carrier_and_generators(obj, n, p, options)

    trace = closure.closure(gens, carrier.multiply, options=options)
    irreducible = generators.irreducibles(carrier, options=options)

    irredundant = None
    if check_irredundant:
        irredundant = all(
            not _generates([h for h in gens if h != g], carrier, options)
            for g in gens
        )

    certificate = RankCertificate(obj, n, p, formula, gens, trace, carrier, irreducible, irredundant)
    logger.debug("Certified %r", certificate)
    return certificate
