# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Verification suites: each one compares closed forms or constructions with brute force.

A suite takes the largest chain size `n` to check and returns a finished
VerificationReport.
"""

import collections
import itertools
import logging

from . import closure
from . import config
from . import counting
from . import enumeration
from . import enums
from . import errors
from . import fuzzy
from . import generators
from . import greens
from . import maps
from . import random
from . import rank
from . import reports
from . import utils

logger = logging.getLogger('dorp.suites')


Suite = collections.namedtuple('Suite', ['name', 'runner', 'default_n', 'description'])

SUITES = collections.OrderedDict()

# Largest n for the all-pairs regularity scan.
REGULARITY_BOUND = 5


def register(name, default_n, description):
    def decorator(runner):
        SUITES[name] = Suite(name, runner, default_n, description)
        return runner
    return decorator


def run_suite(name, n=None, options=None):
    try:
        suite = SUITES[name]
    except KeyError:
        raise errors.DomainError("Unknown suite %r; choose from %s" % (name, ', '.join(SUITES)))
    options = config.resolve(options)
    n = suite.default_n if n is None else n
    if n < 1:
        raise errors.DomainError("Suites need n ≥ 1, got %r" % (n,))
    logger.debug("Running suite %s up to n=%d", name, n)
    report = reports.VerificationReport('verify', {'suite': name, 'n': n})
    inner = suite.runner(n, options)
    report.parameters.update(inner.parameters)
    report.extend(inner)
    return report.finish()


def _filter_all(k, options, predicate):
    return sum(1 for rho in enumeration.enumerate_all_partial_maps(k, options=options) if predicate(rho))


@register('order', 8, "|DORP_n| = s_n + a_n against direct and filter-all enumeration")
def order_suite(n, options):
    report = reports.VerificationReport('order')
    for k in range(1, n + 1):
        expected = counting.order_dorp(k)
        report.check('|DORP_%d| direct' % k, expected, len(enumeration.enumerate_dorp(k, options=options)))
        report.check('|LS_%d| = s_%d' % (k, k), counting.schroder(k), len(enumeration.enumerate_ls(k, options=options)))
        report.check(
            '|DRP_%d| = 1 + Σ F(%d,p)' % (k, k),
            1 + sum(counting.count_Fp(k, p) for p in range(1, k + 1)),
            len(enumeration.enumerate_drp(k, options=options)),
        )
        if k <= options.oracle_bound:
            report.check('|DORP_%d| filter-all' % k, expected, _filter_all(k, options, maps.in_dorp))
        else:
            report.note("Filter-all oracle skipped at n=%d (bound %d)" % (k, options.oracle_bound))
    return report.finish()


def _antitone_decreasing(rho):
    klass = maps.classify(rho)
    return klass.antitone and klass.decreasing


@register('formula', 7, "F(n,r,p) and F(n,p) against brute-force counts of antitone maps")
def formula_suite(n, options):
    report = reports.VerificationReport('formula')
    for k in range(1, min(n, options.oracle_bound) + 1):
        observed = collections.Counter(
            (rho.width, rho.height)
            for rho in enumeration.enumerate_all_partial_maps(k, options=options)
            if rho.height >= 1 and _antitone_decreasing(rho)
        )
        mismatches = [
            (r, p) for p in range(1, k + 1) for r in range(p, k + 1)
            if observed[(r, p)] != counting.count_F(k, r, p)
        ]
        report.check('F(%d,r,p) for all r ≥ p ≥ 1' % k, [], mismatches)
        for p in range(1, k + 1):
            report.check(
                'F(%d,%d)' % (k, p),
                counting.count_Fp(k, p),
                sum(count for (_r, height), count in observed.items() if height == p),
            )
    if n > options.oracle_bound:
        report.note("Brute force stops at the oracle bound %d" % options.oracle_bound)
    return report.finish()


@register('identity', 20, "Σ C(j,k)C(m+n-j,n) = C(m+n+1,n+k+1) on the grid m,n,k ≤ N")
def identity_suite(n, options):
    report = reports.VerificationReport('identity')
    failures = [
        (m, j, k)
        for m, j, k in itertools.product(range(n + 1), repeat=3)
        if not counting.binomial_identity_check(m, j, k)
    ]
    report.check('binomial identity, grid ≤ %d' % n, [], failures)
    return report.finish()


@register('greens', 4, "definitional L, R, L*, R*, H, D, H*, D* against key characterizations")
def greens_suite(n, options):
    report = reports.VerificationReport('greens')
    upper = min(n, options.definitional_bound)
    for k in range(1, upper + 1):
        carrier = enumeration.enumerate_dorp(k, options=options)
        for kind in enums.KEYED_KINDS:
            report.check(
                'DORP_%d %s definitional = key' % (k, kind), True,
                greens.same_partition(
                    greens.definitional_partition(kind, carrier, options=options),
                    greens.partition(kind, carrier),
                ),
            )
        report.check(
            'DORP_%d H = R' % k, True,
            greens.same_partition(
                greens.definitional_partition(enums.H, carrier, options=options),
                greens.partition(enums.R, carrier),
            ),
        )
        report.check(
            'DORP_%d D = L' % k, True,
            greens.same_partition(
                greens.definitional_partition(enums.D, carrier, options=options),
                greens.partition(enums.L, carrier),
            ),
        )
    if n > upper:
        report.note("Definitional oracles stop at n=%d" % upper)
    return report.finish()


def _nonzero_dstar_classes(carrier):
    return len(set(
        greens.relation_key(enums.D_STAR, element)
        for element in carrier.members if element is not closure.ZERO
    ))


@register('abundance', 6, "every L*- and R*-class holds an idempotent, every R*-class exactly one")
def abundance_suite(n, options):
    report = reports.VerificationReport('abundance')
    for k in range(1, n + 1):
        report.extend(greens.abundance_checks(enumeration.enumerate_dorp(k, options=options)))
        for p in range(0, k + 1):
            report.extend(greens.abundance_checks(enumeration.enumerate_ideal(k, p, options=options)))
        for p in range(1, k + 1):
            quotient = closure.rees_quotient(k, p, options=options)
            report.extend(greens.abundance_checks(quotient))
            report.check('%s 0-*bisimple' % quotient.label, 1, _nonzero_dstar_classes(quotient))
    return report.finish()


@register('idempotents', 8, "|E(DORP_n)| = (3^n + 1)/2, E(DORP_n) = E(LS_n) and regular iff idempotent")
def idempotents_suite(n, options):
    report = reports.VerificationReport('idempotents')
    for k in range(1, n + 1):
        dorp = enumeration.enumerate_dorp(k, options=options)
        found = greens.idempotents(dorp)
        report.check('|E(DORP_%d)|' % k, counting.count_idempotents_formula(k), len(found))
        report.check(
            'E(DORP_%d) = E(LS_%d)' % (k, k), True,
            found == greens.idempotents(enumeration.enumerate_ls(k, options=options)),
        )
        if k <= min(REGULARITY_BOUND, options.oracle_bound):
            report.check(
                'DORP_%d regular iff idempotent' % k, [],
                [rho.literal() for rho in dorp
                 if greens.is_regular(rho, dorp, options=options) != (rho in found)],
            )
    if n > REGULARITY_BOUND:
        report.note("Regularity scan stops at n=%d" % REGULARITY_BOUND)
    return report.finish()


@register('starred', 5, "D* = L*∘R*∘L* = R*∘L*∘R* and the L*∘R* ≠ R*∘L* witness")
def starred_suite(n, options):
    report = reports.VerificationReport('starred')
    for k in range(1, min(n, options.oracle_bound) + 1):
        report.extend(greens.star_chain_checks(enumeration.enumerate_dorp(k, options=options), options=options))
    for k in range(1, min(n, 4) + 1):
        for p in range(0, k + 1):
            report.extend(greens.star_chain_checks(enumeration.enumerate_ideal(k, p, options=options), options=options))
        for p in range(1, k + 1):
            report.extend(greens.star_chain_checks(closure.rees_quotient(k, p, options=options), options=options))
    return report.finish()


@register('hstar', 6, "H*-class sizes against the image/domain predicate")
def hstar_suite(n, options):
    report = reports.VerificationReport('hstar')
    for k in range(1, n + 1):
        carrier = enumeration.enumerate_dorp(k, options=options)
        mismatched = [
            member
            for klass in greens.partition(enums.H_STAR, carrier)
            for member in klass
            if greens.hstar_class_size(member) != len(klass)
        ]
        report.check('DORP_%d H*-class sizes' % k, [], [m.literal() for m in mismatched])
        disagreements = greens.hstar_discrepancies(carrier)
        if disagreements:
            report.note("DORP_%d: the height-only case split misstates %d class sizes, e.g. %s"
                        % (k, len(disagreements), ', '.join(m.literal() for m in disagreements[:3])))
    return report.finish()


@register('classes', 7, "R*- and L*-class counts per J*_p")
def classes_suite(n, options):
    report = reports.VerificationReport('classes')
    for k in range(1, n + 1):
        for p in range(1, k + 1):
            layer = enumeration.enumerate_jstar(k, p, options=options)
            report.check('R*-classes in J*_%d, n=%d' % (p, k), counting.count_rstar_classes(k, p),
                         len(greens.partition(enums.R_STAR, layer)))
            report.check('L*-classes in J*_%d, n=%d' % (p, k), counting.count_lstar_classes(k, p),
                         len(greens.partition(enums.L_STAR, layer)))
    return report.finish()


def _descent_checks(k, options, report):
    h = utils.ceil_half(k)
    for p in range(0, k - 1):
        gens = list(enumeration.enumerate_jstar(k, p + 1, options=options))
        label = '⟨J*_%d⟩' % (p + 1)
        if 2 <= p <= h:
            gens.extend([generators.convex_vital(k, p, p).underlying,
                         generators.convex_vital(k, p, k - p + 1).underlying])
            label = '⟨J*_%d ∪ extremes⟩' % (p + 1)
        trace = closure.closure(gens, options=options)
        layer = enumeration.enumerate_jstar(k, p, options=options)
        report.check('n=%d: J*_%d ⊆ %s' % (k, p, label), True, all(rho in trace for rho in layer))


@register('ranks', 6, "rank certificates for RQ_p(n), I(n,p) and DORP_n, and layer descent by closure; "
                      "irredundancy is checked up to the irredundancy bound")
def ranks_suite(n, options):
    report = reports.VerificationReport('ranks')
    if n < 2:
        report.note("Rank claims are stated for n ≥ 2")
        return report.finish()
    for k in range(2, n + 1):
        irredundant = k <= options.irredundancy_bound
        for p in range(1, k + 1):
            report.check('|G(%d)|, n=%d' % (p, k), rank.size_of_G(k, p), len(generators.generating_set_G(k, p)))
        for p in range(0, k):
            report.check('|W(%d)|, n=%d' % (p, k), rank.rank_ideal(k, p), len(generators.generating_set_W(k, p)))
        for p in range(1, k):
            report.extend(rank.certify_rank(
                enums.RQ_OBJECT, k, p, options=options, check_irredundant=irredundant).to_report())
        for p in range(0, k):
            report.extend(rank.certify_rank(
                enums.IDEAL_OBJECT, k, p, options=options, check_irredundant=irredundant).to_report())
        report.extend(rank.certify_rank(
            enums.DORP_OBJECT, k, options=options, check_irredundant=irredundant).to_report())
        if k <= 6:
            _descent_checks(k, options, report)
    if n > options.irredundancy_bound:
        report.note("Irredundancy skipped above n=%d (irredundancy bound): it re-closes once per generator"
                    % options.irredundancy_bound)
    return report.finish()


def _recomposes(word_factory, elements):
    return sum(1 for element in elements if word_factory(element).recomposes())


@register('factorizations', 6, "every constructive factorization recomposes to its input")
def factorizations_suite(n, options):
    report = reports.VerificationReport('factorizations')
    for k in range(1, n + 1):
        dorp = enumeration.enumerate_dorp(k, options=options)
        antitone = [rho for rho in dorp if rho.height >= 2 and maps.classify(rho).antitone]
        injective = [rho for rho in antitone if rho.width == rho.height
                     and rho.domain == tuple(range(rho.domain[0], rho.domain[0] + rho.height))]
        vitals = [rho for rho in antitone if generators.is_vital(rho)]
        nonconvex = [rho for rho in vitals if not generators.VitalElement(rho).convex]
        isotone = [rho for rho in dorp if maps.classify(rho).isotone]

        report.check('n=%d factor_antitone' % k, len(antitone), _recomposes(generators.factor_antitone, antitone))
        report.check('n=%d factor_injective_antitone' % k, len(injective),
                     _recomposes(generators.factor_injective_antitone, injective))
        report.check('n=%d factor_nonconvex_vital' % k, len(nonconvex),
                     _recomposes(generators.factor_nonconvex_vital, nonconvex))
        report.check('n=%d isotone words' % k, len(isotone), _recomposes(generators.factor_isotone, isotone))

        by_image = collections.defaultdict(lambda: [0, 0])
        for rho in antitone:
            by_image[rho.image][0] += 1
        for rho in vitals:
            by_image[rho.image][1] += 1
        report.check('n=%d one vital per antitone L*-class' % k, len(by_image),
                     sum(1 for has_antitone, vital_count in by_image.values() if has_antitone and vital_count == 1))

        _deflation_checks(k, report)
    return report.finish()


def _deflation_checks(k, report):
    h = utils.ceil_half(k)
    attempted = recomposed = rejected = extremes = 0
    for p in range(2, h + 1):
        for i in range(p, k - p + 2):
            if i in (p, k - p + 1):
                extremes += 1
                try:
                    generators.deflate_convex_vital(k, p, i)
                except errors.ExtremeElementError:
                    rejected += 1
                continue
            if p > h - 1:
                continue
            attempted += 1
            deflation = generators.deflate_convex_vital(k, p, i)
            word = deflation.word()
            if word.recomposes() and word.target == generators.convex_vital(k, p, i).underlying:
                recomposed += 1
    report.check('n=%d deflations' % k, attempted, recomposed)
    report.check('n=%d extreme deflations rejected' % k, extremes, rejected)


@register('convex', 12, "|M(p)| = n - 2p + 2 and the total convex-vital count")
def convex_suite(n, options):
    report = reports.VerificationReport('convex')
    for k in range(2, n + 1):
        total = 0
        for p in range(2, utils.ceil_half(k) + 1):
            members = generators.convex_vitals(k, p)
            total += len(members)
            report.check('|M(%d)|, n=%d' % (p, k), k - 2 * p + 2, len(members))
            report.check(
                'M(%d), n=%d: minimum of domain fixed' % (p, k), True,
                all(vital.underlying(vital.underlying.domain[0]) == vital.underlying.domain[0] for vital in members),
            )
        report.check('Σ|M(p)|, n=%d' % k, counting.count_convex_vitals_total(k), total)
    return report.finish()


def _inverse_ok(rho):
    witness = maps.inverse_witness(rho)
    left = maps.compose(rho, witness)
    return (
        maps.compose(left, rho) == rho
        and maps.is_idempotent(left) and maps.in_dorp(left)
        and maps.compose(witness, rho) == maps.PartialMap.identity(rho.n, rho.image)
    )


@register('inverse', 6, "ρρ′ρ = ρ, ρρ′ ∈ E(DORP_n) and ρ′ρ = 1 on im ρ")
def inverse_suite(n, options):
    report = reports.VerificationReport('inverse')
    for k in range(1, n + 1):
        dorp = enumeration.enumerate_dorp(k, options=options)
        report.check('DORP_%d inverse witnesses' % k, len(dorp), sum(1 for rho in dorp if _inverse_ok(rho)))
    return report.finish()


def _kind(rho):
    if rho.height <= 1:
        return None
    return 'antitone' if maps.classify(rho).antitone else 'isotone'


def _in_dorp_pointwise(rho):
    pairs = rho.pairs()
    if any(v > x for x, v in pairs):
        return False
    ordered = list(itertools.combinations(pairs, 2))
    return all(v <= w for (_x, v), (_y, w) in ordered) or all(v >= w for (_x, v), (_y, w) in ordered)


@register('sample', 10, "random elements beyond the exhaustive bounds")
def sample_suite(n, options, count=200):
    report = reports.VerificationReport('sample', {'seed': options.seed})
    if options.seed is None:
        report.note("Unseeded run: samples differ between runs")
    with random.seeded(options.seed):
        elements = fuzzy.FuzzyDorpMap(n).sample(count)
        candidates = fuzzy.FuzzyPartialMap(n).sample(count)

    report.check('samples in DORP_%d' % n, count, sum(1 for rho in elements if maps.in_dorp(rho)))
    report.check(
        'DORP_%d membership against the pointwise definition' % n, [],
        [rho.literal() for rho in candidates + elements if maps.in_dorp(rho) != _in_dorp_pointwise(rho)],
    )
    triples = list(zip(elements, elements[1:], elements[2:]))
    report.check(
        'associativity', len(triples),
        sum(1 for a, b, c in triples if maps.compose(maps.compose(a, b), c) == maps.compose(a, maps.compose(b, c))),
    )
    pairs = list(zip(elements, elements[1:]))
    report.check('closed under products', len(pairs),
                 sum(1 for a, b in pairs if maps.in_dorp(maps.compose(a, b))))

    parity_pairs = [(a, b) for a, b in pairs if _kind(a) and _kind(b)]
    report.check(
        'product parity', len(parity_pairs),
        sum(
            1 for a, b in parity_pairs
            if (maps.classify(maps.compose(a, b)).isotone if _kind(a) == _kind(b)
                else maps.classify(maps.compose(a, b)).antitone)
        ),
    )
    report.check('inverse witnesses', count, sum(1 for rho in elements if _inverse_ok(rho)))
    return report.finish()
