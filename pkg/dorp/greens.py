# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Green's and starred Green's structure of DORP_n, I(n,p) and RQ_p(n).

Two views are offered for each relation: a key computed from the element
alone (kernel, image, height, ...) and a definitional oracle that
multiplies through the whole carrier.
"""

import collections
import logging

from . import closure
from . import config
from . import enums
from . import errors
from . import maps
from . import reports
from . import utils
from .counting import (  # noqa: F401
    count_idempotents_formula,
    count_lstar_classes,
    count_rstar_classes,
)

logger = logging.getLogger('dorp.greens')


RelationKey = collections.namedtuple('RelationKey', ['kind', 'key'])

_ZERO_KEY = ('zero',)


def _l_key(rho):
    decomposition = maps.kernel_decomposition(rho)
    by_image = sorted(zip(decomposition.images, decomposition.blocks))
    return (
        tuple(image for image, _block in by_image),
        tuple(block[0] for _image, block in by_image),
    )


def _raw_key(kind, rho):
    if kind == enums.L:
        return _l_key(rho)
    elif kind == enums.R:
        return rho.values
    elif kind == enums.L_STAR:
        return rho.image
    elif kind == enums.R_STAR:
        return maps.kernel_decomposition(rho).blocks
    elif kind == enums.H_STAR:
        return (rho.image, maps.kernel_decomposition(rho).blocks)
    elif kind == enums.D_STAR:
        return rho.height
    raise errors.DomainError("Unknown relation kind %r" % (kind,))


def relation_key(kind, element):
    """The characterization key of `element` for relation `kind`.

    L: (images, min preimage of each image); R: the map itself (R is
    trivial); L*: image set; R*: kernel blocks, hence the domain; H*: both;
    D* (and J*): height. Zero of a Rees quotient has its own key.
    """
    kind = enums.canonical_kind(kind)
    if element is closure.ZERO:
        return RelationKey(kind, _ZERO_KEY)
    return RelationKey(kind, _raw_key(kind, closure.unwrap(element)))


def related(kind, rho, sigma):
    return relation_key(kind, rho) == relation_key(kind, sigma)


def _check_definitional(carrier, options):
    options = config.resolve(options)
    if carrier.n > options.definitional_bound:
        raise errors.ResourceLimitError(
            "Definitional oracles at n=%d exceed the configured bound %d"
            % (carrier.n, options.definitional_bound))


def _signature(products):
    """Canonical form of the partition x ~ y ⟺ products[x] == products[y]."""
    first = {}
    return tuple(first.setdefault(value, index) for index, value in enumerate(products))


def _left_signature(element, carrier, ones):
    # ρx = ρy ⟺ σx = σy, for x, y in S¹
    return _signature([carrier.multiply(element, x) for x in ones])


def _right_signature(element, carrier, ones):
    # xρ = yρ ⟺ xσ = yσ, for x, y in S¹
    return _signature([carrier.multiply(x, element) for x in ones])


def _star_signature(kind, element, carrier, ones):
    if kind == enums.L_STAR:
        return _left_signature(element, carrier, ones)
    elif kind == enums.R_STAR:
        return _right_signature(element, carrier, ones)
    raise errors.DomainError("Definitional star oracle covers L* and R*, got %r" % (kind,))


def definitional_star(kind, rho, sigma, carrier, options=None):
    """Evaluate the cancellation definition of L* or R* over S¹."""
    _check_definitional(carrier, options)
    kind = enums.canonical_kind(kind)
    ones = carrier.with_identity()
    return _star_signature(kind, rho, carrier, ones) == _star_signature(kind, sigma, carrier, ones)


def _principal_ideal(kind, element, carrier, ones):
    if kind == enums.L:
        return frozenset(carrier.multiply(x, element) for x in ones)
    elif kind == enums.R:
        return frozenset(carrier.multiply(element, x) for x in ones)
    raise errors.DomainError("Definitional Green's oracle covers L and R, got %r" % (kind,))


def definitional_green(kind, rho, sigma, carrier, options=None):
    """S¹ρ = S¹σ (L) or ρS¹ = σS¹ (R), by explicit multiplication."""
    _check_definitional(carrier, options)
    ones = carrier.with_identity()
    return _principal_ideal(kind, rho, carrier, ones) == _principal_ideal(kind, sigma, carrier, ones)


def _group(members, label_of):
    classes = collections.OrderedDict()
    for member in members:
        classes.setdefault(label_of(member), []).append(member)
    return [tuple(members_) for members_ in classes.values()]


def partition(kind, carrier):
    """Classes of `kind` on the carrier, by characterization key."""
    return _group(carrier.members, lambda element: relation_key(kind, element))


class _UnionFind(object):
    def __init__(self, items):
        self.parent = dict((item, item) for item in items)

    def find(self, item):
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _join(members, labelings):
    finder = _UnionFind(members)
    for labeling in labelings:
        first = {}
        for member in members:
            label = labeling[member]
            if label in first:
                finder.union(first[label], member)
            else:
                first[label] = member
    return dict((member, finder.find(member)) for member in members)


def definitional_labels(kind, carrier, options=None):
    """Map each member to a label such that equal labels ⟺ related.

    L, R, L*, R* come from their definitions; H and H* are intersections,
    D and D* the joins L ∨ R and L* ∨ R*.
    """
    _check_definitional(carrier, options)
    kind = enums.canonical_kind(kind)
    members = carrier.members
    ones = carrier.with_identity()

    if kind in (enums.L, enums.R):
        return dict((m, _principal_ideal(kind, m, carrier, ones)) for m in members)
    elif kind in (enums.L_STAR, enums.R_STAR):
        return dict((m, _star_signature(kind, m, carrier, ones)) for m in members)

    if kind in (enums.H, enums.D):
        left, right = enums.L, enums.R
    elif kind in (enums.H_STAR, enums.D_STAR):
        left, right = enums.L_STAR, enums.R_STAR
    else:
        raise errors.DomainError("Unknown relation kind %r" % (kind,))

    left_labels = definitional_labels(left, carrier, options=options)
    right_labels = definitional_labels(right, carrier, options=options)
    if kind in (enums.H, enums.H_STAR):
        return dict((m, (left_labels[m], right_labels[m])) for m in members)
    return _join(members, [left_labels, right_labels])


def definitional_partition(kind, carrier, options=None):
    labels = definitional_labels(kind, carrier, options=options)
    return _group(carrier.members, lambda element: labels[element])


def same_partition(first, second):
    return set(frozenset(c) for c in first) == set(frozenset(c) for c in second)


class EggBox(object):
    """Per-relation partition of a carrier into classes.

    Classes are listed by their first member in canonical order.
    """

    def __init__(self, carrier, kinds=enums.KEYED_KINDS):
        self.carrier = carrier
        self.classes = collections.OrderedDict(
            (enums.canonical_kind(kind), partition(kind, carrier)) for kind in kinds
        )

    def __getitem__(self, kind):
        return self.classes[enums.canonical_kind(kind)]

    def count(self, kind):
        return len(self[kind])

    def as_dict(self, kind):
        return {
            'relation': enums.canonical_kind(kind),
            'classes': [[element.literal() for element in klass] for klass in self[kind]],
        }

    def to_json(self, kinds=None):
        kinds = kinds or list(self.classes)
        return utils.dump_json({
            'schema': enums.SCHEMA_VERSION,
            'carrier': self.carrier.label,
            'relations': [self.as_dict(kind) for kind in kinds],
        })

    def __repr__(self):
        return '<EggBox %s: %s>' % (
            self.carrier.label,
            ', '.join('%s=%d' % (kind, len(classes)) for kind, classes in self.classes.items()))


def _require_dorp(rho):
    if not maps.in_dorp(rho):
        raise errors.DomainError("%s is not in DORP_%d" % (rho, rho.n))


def hstar_class_size(rho):
    """2 iff height ≥ 2 and max(im ρ) ≤ min(dom ρ): only then does the
    reversed assignment of the image set to the kernel stay decreasing."""
    _require_dorp(rho)
    if rho.height >= 2 and max(rho.image) <= min(rho.domain):
        return 2
    return 1


def stated_hstar_class_size(rho):
    """The case split 2 ⟺ 2 ≤ h(ρ) ≤ ⌈n/2⌉, kept for discrepancy reports."""
    _require_dorp(rho)
    if 2 <= rho.height <= utils.ceil_half(rho.n):
        return 2
    return 1


def hstar_discrepancies(carrier):
    """Members where the height-only case split misstates the H*-class size."""
    return [
        rho for rho in carrier.members
        if hstar_class_size(rho) != stated_hstar_class_size(rho)
    ]


def is_idempotent(element, carrier):
    return carrier.multiply(element, element) == element


def idempotents(carrier):
    return carrier.subset(lambda element: is_idempotent(element, carrier), label='E(%s)' % carrier.label)


def is_regular(rho, carrier, options=None):
    """Whether ρσρ = ρ for some σ in the carrier."""
    options = config.resolve(options)
    if carrier.n > options.oracle_bound:
        raise errors.ResourceLimitError(
            "Regularity scan at n=%d exceeds the configured bound %d" % (carrier.n, options.oracle_bound))
    return any(
        carrier.multiply(carrier.multiply(rho, sigma), rho) == rho
        for sigma in carrier.members
    )


def _class_adjacency(carrier, row_kind, column_kind):
    adjacency = collections.defaultdict(set)
    for element in carrier.members:
        adjacency[relation_key(row_kind, element)].add(relation_key(column_kind, element))
    return adjacency


def _chain_matches_dstar(carrier, outer, inner):
    """Whether outer∘inner∘outer equals D* on the carrier.

    Both relations are unions of outer-class blocks, so it suffices to
    compare them on pairs of outer classes.
    """
    adjacency = _class_adjacency(carrier, outer, inner)
    heights = {}
    for element in carrier.members:
        heights[relation_key(outer, element)] = relation_key(enums.D_STAR, element)
    classes = sorted(adjacency, key=repr)
    for first in classes:
        for second in classes:
            chained = bool(adjacency[first] & adjacency[second])
            if chained != (heights[first] == heights[second]):
                logger.debug("Composed relation and D* differ on %s / %s", first, second)
                return False
    return True


def _witness_maps(n):
    return (
        maps.PartialMap.from_pairs(n, [(1, 1), (2, 2)]),
        maps.PartialMap.from_pairs(n, [(2, 2), (3, 3)]),
        maps.PartialMap.from_pairs(n, [(2, 1), (3, 2)]),
    )


def star_chain_checks(carrier, options=None):
    """D* = L*∘R*∘L* = R*∘L*∘R*, and L*∘R* ≠ R*∘L* on a witness pair."""
    options = config.resolve(options)
    if carrier.n > options.oracle_bound:
        raise errors.ResourceLimitError(
            "Starred chain checks at n=%d exceed the configured bound %d" % (carrier.n, options.oracle_bound))

    report = reports.VerificationReport('star_chain_checks', {'carrier': carrier.label})
    report.check('D* = L*∘R*∘L*', True, _chain_matches_dstar(carrier, enums.L_STAR, enums.R_STAR))
    report.check('D* = R*∘L*∘R*', True, _chain_matches_dstar(carrier, enums.R_STAR, enums.L_STAR))

    if carrier.n < 3:
        report.note("Witness triple needs n ≥ 3")
        return report.finish()

    rho, sigma, gamma = _witness_maps(carrier.n)
    lift = getattr(carrier, 'lift', lambda element: element)
    try:
        rho, sigma, gamma = lift(rho), lift(sigma), lift(gamma)
    except errors.DomainError:
        report.note("Witness triple does not live in %s" % carrier.label)
        return report.finish()
    if not all(element in carrier for element in (rho, sigma, gamma)):
        report.note("Witness triple does not live in %s" % carrier.label)
        return report.finish()

    report.check(
        'witness in L*∘R* via γ',
        True,
        related(enums.L_STAR, rho, gamma) and related(enums.R_STAR, gamma, sigma),
    )
    report.check(
        'witness not in R*∘L*',
        False,
        any(
            related(enums.R_STAR, rho, middle) and related(enums.L_STAR, middle, sigma)
            for middle in carrier.members
        ),
    )
    return report.finish()


def abundance_checks(carrier, label=None):
    """Every L*- and R*-class holds an idempotent; every R*-class exactly one.

    The zero of a Rees quotient is left out.
    """
    label = label or carrier.label
    report = reports.VerificationReport('abundance', {'carrier': label})
    members = [m for m in carrier.members if m is not closure.ZERO]
    idempotent = dict((m, is_idempotent(m, carrier)) for m in members)

    for kind in (enums.L_STAR, enums.R_STAR):
        counts = collections.Counter()
        for member in members:
            counts[relation_key(kind, member)] += int(idempotent[member])
        report.check('%s %s-classes with an idempotent' % (label, kind), len(counts),
                     sum(1 for value in counts.values() if value >= 1))
        if kind == enums.R_STAR:
            report.check('%s R*-classes with exactly one idempotent' % label, len(counts),
                         sum(1 for value in counts.values() if value == 1))
    return report.finish()
