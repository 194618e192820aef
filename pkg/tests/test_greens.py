# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.

import json
import unittest

from dorp import closure
from dorp import config
from dorp import enumeration
from dorp import enums
from dorp import errors
from dorp import greens

from .utils import pm


class RelationKeyTestCase(unittest.TestCase):
    def test_keys(self):
        rho = pm(4, (2, 2), (3, 1), (4, 1))
        self.assertEqual((1, 2), greens.relation_key(enums.L_STAR, rho).key)
        self.assertEqual(((2,), (3, 4)), greens.relation_key(enums.R_STAR, rho).key)
        self.assertEqual(2, greens.relation_key(enums.D_STAR, rho).key)
        self.assertEqual(rho.values, greens.relation_key(enums.R, rho).key)

    def test_jstar_is_dstar(self):
        rho = pm(4, (3, 1))
        self.assertEqual(greens.relation_key(enums.D_STAR, rho), greens.relation_key(enums.J_STAR, rho))

    def test_zero(self):
        self.assertEqual(('zero',), greens.relation_key(enums.L_STAR, closure.ZERO).key)
        element = closure.ReesElement(pm(2, (2, 1)), 1)
        self.assertFalse(greens.related(enums.D_STAR, element, closure.ZERO))

    def test_related(self):
        rho = pm(4, (2, 2), (3, 1), (4, 1))
        sigma = pm(4, (2, 1), (3, 2), (4, 2))
        self.assertTrue(greens.related(enums.R_STAR, rho, sigma))
        self.assertTrue(greens.related(enums.H_STAR, rho, sigma))
        self.assertFalse(greens.related(enums.R, rho, sigma))

    def test_unknown(self):
        with self.assertRaises(errors.DomainError):
            greens.relation_key('Q', pm(2))


class DefinitionalTestCase(unittest.TestCase):
    def test_star_oracle(self):
        dorp = enumeration.enumerate_dorp(2)
        self.assertTrue(greens.definitional_star(enums.L_STAR, pm(2, (1, 1)), pm(2, (2, 1)), dorp))
        self.assertFalse(greens.definitional_star(enums.R_STAR, pm(2, (1, 1)), pm(2, (2, 1)), dorp))

    def test_green_oracle(self):
        dorp = enumeration.enumerate_dorp(2)
        self.assertFalse(greens.definitional_green(enums.L, pm(2, (1, 1), (2, 1)), pm(2, (2, 1)), dorp))
        self.assertTrue(greens.definitional_green(enums.L, pm(2, (1, 1)), pm(2, (1, 1)), dorp))

    def test_keys_match_definitions(self):
        for n in (1, 2, 3):
            dorp = enumeration.enumerate_dorp(n)
            for kind in enums.KEYED_KINDS:
                self.assertTrue(
                    greens.same_partition(greens.partition(kind, dorp), greens.definitional_partition(kind, dorp)),
                    (n, kind),
                )

    def test_bound(self):
        with self.assertRaises(errors.ResourceLimitError):
            greens.definitional_partition(enums.L_STAR, enumeration.enumerate_dorp(5))
        with config.override(definitional_bound=2):
            with self.assertRaises(errors.ResourceLimitError):
                greens.definitional_star(enums.L_STAR, pm(3), pm(3), enumeration.enumerate_dorp(3))


class EggBoxTestCase(unittest.TestCase):
    def setUp(self):
        self.box = greens.EggBox(enumeration.enumerate_dorp(2))

    def test_counts(self):
        self.assertEqual(4, self.box.count(enums.L_STAR))
        self.assertEqual(5, self.box.count(enums.R_STAR))
        self.assertEqual(3, self.box.count(enums.J_STAR))
        self.assertEqual(6, self.box.count(enums.R))

    def test_as_dict(self):
        self.assertEqual({
            'relation': 'D*',
            'classes': [
                ['n=2;'],
                ['n=2;1->1', 'n=2;1->1,2->1', 'n=2;2->1', 'n=2;2->2'],
                ['n=2;1->1,2->2'],
            ],
        }, self.box.as_dict(enums.D_STAR))

    def test_to_json(self):
        payload = json.loads(self.box.to_json([enums.L_STAR]))
        self.assertEqual(1, payload['schema'])
        self.assertEqual('DORP_2', payload['carrier'])
        self.assertEqual(['L*'], [relation['relation'] for relation in payload['relations']])

    def test_class_counts_per_layer(self):
        for p in range(1, 5):
            layer = enumeration.enumerate_jstar(4, p)
            box = greens.EggBox(layer, [enums.L_STAR, enums.R_STAR])
            self.assertEqual(greens.count_lstar_classes(4, p), box.count(enums.L_STAR))
            self.assertEqual(greens.count_rstar_classes(4, p), box.count(enums.R_STAR))


class HStarTestCase(unittest.TestCase):
    def test_sizes(self):
        self.assertEqual(2, greens.hstar_class_size(pm(4, (2, 2), (3, 1), (4, 1))))
        self.assertEqual(1, greens.hstar_class_size(pm(4, (3, 1))))
        self.assertEqual(1, greens.hstar_class_size(pm(4, (1, 1), (2, 2))))

    def test_discrepancy(self):
        rho = pm(4, (1, 1), (2, 2))
        self.assertEqual(2, greens.stated_hstar_class_size(rho))
        self.assertIn(rho, greens.hstar_discrepancies(enumeration.enumerate_dorp(4)))

    def test_sizes_match_partition(self):
        dorp = enumeration.enumerate_dorp(4)
        for klass in greens.partition(enums.H_STAR, dorp):
            for member in klass:
                self.assertEqual(len(klass), greens.hstar_class_size(member), member)

    def test_outside_dorp(self):
        with self.assertRaises(errors.DomainError):
            greens.hstar_class_size(pm(2, (1, 2)))


class IdempotentTestCase(unittest.TestCase):
    def test_counts(self):
        for n in range(1, 5):
            found = greens.idempotents(enumeration.enumerate_dorp(n))
            self.assertEqual(greens.count_idempotents_formula(n), len(found))
        self.assertEqual('E(DORP_3)', greens.idempotents(enumeration.enumerate_dorp(3)).label)

    def test_rees(self):
        quotient = closure.rees_quotient(2, 1)
        self.assertEqual(3, len(greens.idempotents(quotient)) - 1)
        self.assertIn(closure.ZERO, greens.idempotents(quotient))

    def test_regular(self):
        dorp = enumeration.enumerate_dorp(3)
        self.assertTrue(greens.is_regular(pm(3, (1, 1)), dorp))
        self.assertFalse(greens.is_regular(pm(3, (2, 1)), dorp))

    def test_regular_iff_idempotent(self):
        for n in range(1, 6):
            dorp = enumeration.enumerate_dorp(n)
            mismatched = [
                rho for rho in dorp
                if greens.is_regular(rho, dorp) != greens.is_idempotent(rho, dorp)
            ]
            self.assertEqual([], mismatched, n)


class StarChainTestCase(unittest.TestCase):
    def test_dorp(self):
        for n in (3, 4):
            report = greens.star_chain_checks(enumeration.enumerate_dorp(n))
            self.assertTrue(report.passed, report.failures)
            self.assertEqual(4, len(report.checks))

    def test_small_chain(self):
        report = greens.star_chain_checks(enumeration.enumerate_dorp(2))
        self.assertTrue(report.passed)
        self.assertEqual(2, len(report.checks))
        self.assertEqual(["Witness triple needs n ≥ 3"], report.notes)

    def test_witness_outside(self):
        report = greens.star_chain_checks(enumeration.enumerate_ideal(3, 1))
        self.assertEqual(2, len(report.checks))
        self.assertEqual(["Witness triple does not live in I(3,1)"], report.notes)


class AbundanceTestCase(unittest.TestCase):
    def test_dorp(self):
        report = greens.abundance_checks(enumeration.enumerate_dorp(3))
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(3, len(report.checks))

    def test_rees(self):
        report = greens.abundance_checks(closure.rees_quotient(3, 2))
        self.assertTrue(report.passed, report.failures)
        self.assertEqual('RQ_2(3)', report.parameters['carrier'])
