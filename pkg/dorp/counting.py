# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Closed-form counts for DORP_n and its parts.

All counts are exact Python integers; C(a, b) is 0 outside 0 ≤ b ≤ a.
"""

import csv
import io
import logging
import math

from . import enumeration
from . import enums
from . import errors
from . import utils

logger = logging.getLogger('dorp.counting')


def binomial(a, b):
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _require_positive(n):
    if n < 1:
        raise errors.DomainError("Chain size must be positive, got %r" % (n,))


def schroder(n):
    """Large Schröder number s_n = |LS_n|."""
    if n < 0:
        raise errors.DomainError("Schröder index must be non-negative, got %r" % (n,))
    if n == 0:
        return 1
    total = sum(binomial(n + 1, n - r) * binomial(n + r, r) for r in range(n + 1))
    quotient, remainder = divmod(total, n + 1)
    assert remainder == 0, "Schröder sum %d not divisible by %d" % (total, n + 1)
    return quotient


def count_F(n, r, p):
    """F(n,r,p): antitone decreasing maps of width r and height p ≥ 1."""
    return binomial(r - 1, p - 1) * binomial(n + 1, r + p)


def count_Fp(n, p):
    """F(n,p): antitone decreasing maps of height p ≥ 1."""
    _require_positive(n)
    return sum(count_F(n, r, p) for r in range(p, n - p + 2))


def count_a(n):
    """a_n: antitone decreasing maps of height at least 2."""
    _require_positive(n)
    return sum(count_Fp(n, p) for p in range(2, utils.ceil_half(n) + 1))


def order_dorp(n):
    """|DORP_n| = s_n + a_n."""
    _require_positive(n)
    return schroder(n) + count_a(n)


def binomial_identity_check(m, n, k):
    """Σ_{j=k}^{m} C(j,k)C(m+n-j,n) == C(m+n+1,n+k+1)."""
    lhs = sum(binomial(j, k) * binomial(m + n - j, n) for j in range(k, m + 1))
    rhs = binomial(m + n + 1, n + k + 1)
    return lhs == rhs


def count_idempotents_formula(n):
    """|E(DORP_n)| = (3^n + 1) / 2."""
    _require_positive(n)
    return (3 ** n + 1) // 2


def count_rstar_classes(n, p):
    """R*-classes in J*_p: partially ordered partitions of height p."""
    if not 1 <= p <= n:
        raise errors.DomainError("Height p=%r outside 1..%d" % (p, n))
    return sum(binomial(n, r) * binomial(r - 1, p - 1) for r in range(p, n + 1))


def count_lstar_classes(n, p):
    """L*-classes in J*_p: one per image set of size p."""
    if not 1 <= p <= n:
        raise errors.DomainError("Height p=%r outside 1..%d" % (p, n))
    return binomial(n, p)


def count_convex_vitals(n, p):
    """|M(p)| = n - 2p + 2."""
    if not 2 <= p <= utils.ceil_half(n):
        raise errors.DomainError("Convex vital elements need 2 ≤ p ≤ ⌈n/2⌉, got p=%r, n=%r" % (p, n))
    return n - 2 * p + 2


def count_convex_vitals_total(n):
    """Σ_p |M(p)|, in closed form."""
    _require_positive(n)
    h = utils.ceil_half(n)
    return (n + 2) * (h - 1) - (h * (h + 1) - 2)


class CountTable(object):
    """Rows of exact counts, keyed by some of (n, p, r).

    Attributes:
        name (str): the table's name
        keys (str tuple): key columns, a subset of KEY_ORDER in that order
        rows (dict list): one dict per row, keys plus 'value'
    """

    KEY_ORDER = ('n', 'p', 'r')

    def __init__(self, name, keys):
        unknown = set(keys) - set(self.KEY_ORDER)
        if unknown:
            raise errors.DomainError("Unknown key column(s) %s" % ', '.join(sorted(unknown)))
        self.name = name
        self.keys = tuple(key for key in self.KEY_ORDER if key in keys)
        self.rows = []

    def add(self, value, **key):
        if set(key) != set(self.keys):
            raise errors.DomainError(
                "Row for table %s needs keys %s, got %s" % (self.name, self.keys, sorted(key)))
        row = dict(key)
        row['value'] = value
        self.rows.append(row)

    def values(self):
        return [row['value'] for row in self.rows]

    def to_csv(self):
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(self.keys + ('value',))
        for row in self.rows:
            writer.writerow([row[key] for key in self.keys] + [row['value']])
        return stream.getvalue()

    def as_dict(self):
        return {
            'schema': enums.SCHEMA_VERSION,
            'table': self.name,
            'keys': list(self.keys),
            'rows': self.rows,
        }

    def to_json(self):
        return utils.dump_json(self.as_dict())

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        return '<CountTable %s: %d rows>' % (self.name, len(self.rows))


def _heights_for(n, p, low=1, high=None):
    if high is None:
        high = n
    if p is not None:
        return [p] if low <= p <= high else []
    return list(range(low, high + 1))


def _schroder_table(ns, p=None, r=None):
    table = CountTable('schroder', ['n'])
    for n in ns:
        table.add(schroder(n), n=n)
    return table


def _F_table(ns, p=None, r=None):
    table = CountTable('F', ['n', 'p', 'r'])
    for n in ns:
        for height in _heights_for(n, p):
            widths = [r] if r is not None else range(height, n + 1)
            for width in widths:
                table.add(count_F(n, width, height), n=n, p=height, r=width)
    return table


def _Fp_table(ns, p=None, r=None):
    table = CountTable('Fp', ['n', 'p'])
    for n in ns:
        for height in _heights_for(n, p, high=utils.ceil_half(n)):
            table.add(count_Fp(n, height), n=n, p=height)
    return table


def _a_table(ns, p=None, r=None):
    table = CountTable('a', ['n'])
    for n in ns:
        table.add(count_a(n), n=n)
    return table


def _order_table(ns, p=None, r=None):
    table = CountTable('order', ['n'])
    for n in ns:
        table.add(order_dorp(n), n=n)
    return table


def _idempotents_table(ns, p=None, r=None):
    table = CountTable('idempotents', ['n'])
    for n in ns:
        table.add(count_idempotents_formula(n), n=n)
    return table


def _rstar_table(ns, p=None, r=None):
    table = CountTable('rstar', ['n', 'p'])
    for n in ns:
        for height in _heights_for(n, p):
            table.add(count_rstar_classes(n, height), n=n, p=height)
    return table


def _lstar_table(ns, p=None, r=None):
    table = CountTable('lstar', ['n', 'p'])
    for n in ns:
        for height in _heights_for(n, p):
            table.add(count_lstar_classes(n, height), n=n, p=height)
    return table


def _convex_table(ns, p=None, r=None):
    table = CountTable('convex', ['n', 'p'])
    for n in ns:
        for height in _heights_for(n, p, low=2, high=utils.ceil_half(n)):
            table.add(count_convex_vitals(n, height), n=n, p=height)
    return table


def _jstar_table(ns, p=None, r=None):
    table = CountTable('jstar', ['n', 'p'])
    for n in ns:
        for height in _heights_for(n, p, low=0):
            table.add(len(enumeration.enumerate_jstar(n, height)), n=n, p=height)
    return table


TABLES = {
    'schroder': _schroder_table,
    'F': _F_table,
    'Fp': _Fp_table,
    'a': _a_table,
    'order': _order_table,
    'idempotents': _idempotents_table,
    'rstar': _rstar_table,
    'lstar': _lstar_table,
    'convex': _convex_table,
    'jstar': _jstar_table,
}


def build_table(name, ns, p=None, r=None):
    """Build the named CountTable over the chain sizes `ns`."""
    try:
        builder = TABLES[name]
    except KeyError:
        raise errors.DomainError(
            "Unknown table %r; choose from %s" % (name, ', '.join(sorted(TABLES))))
    ns = list(ns)
    for n in ns:
        _require_positive(n)
    logger.debug("Building table %s for %s", name, utils.log_pprint(kwargs={'ns': ns, 'p': p, 'r': r}))
    return builder(ns, p=p, r=r)
