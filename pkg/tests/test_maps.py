# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.

import pickle
import unittest

from hypothesis import given
from hypothesis import strategies as st

from dorp import enumeration
from dorp import errors
from dorp import maps
from dorp import utils

from .utils import lit, pm


def partial_maps(n):
    return st.lists(st.integers(0, n), min_size=n, max_size=n).map(lambda values: maps.PartialMap(n, values))


class PartialMapTestCase(unittest.TestCase):
    def test_from_pairs(self):
        rho = pm(4, (2, 2), (3, 1), (4, 1))
        self.assertEqual((0, 2, 1, 1), rho.values)
        self.assertEqual(rho, maps.PartialMap.from_pairs(4, {2: 2, 3: 1, 4: 1}))

    def test_conflicting_pairs(self):
        with self.assertRaises(errors.DomainError):
            maps.PartialMap.from_pairs(3, [(2, 1), (2, 2)])

    def test_invalid_values(self):
        with self.assertRaises(errors.DomainError):
            maps.PartialMap(3, (1, 4, 0))
        with self.assertRaises(errors.DomainError):
            maps.PartialMap(3, (1, 2))
        with self.assertRaises(errors.DomainError):
            maps.PartialMap(0, ())

    def test_call(self):
        rho = pm(3, (2, 1))
        self.assertEqual(1, rho(2))
        self.assertIsNone(rho(1))

    def test_attributes(self):
        rho = pm(5, (2, 2), (3, 1), (5, 1))
        self.assertEqual((2, 3, 5), rho.domain)
        self.assertEqual((1, 2), rho.image)
        self.assertEqual(2, rho.height)
        self.assertEqual(3, rho.width)
        self.assertEqual(frozenset([2]), rho.fixed_points)
        self.assertEqual(((2, 2), (3, 1), (5, 1)), rho.pairs())

    def test_identity_and_empty(self):
        self.assertEqual(pm(3, (1, 1), (2, 2), (3, 3)), maps.PartialMap.identity(3))
        self.assertEqual(pm(3, (2, 2)), maps.PartialMap.identity(3, [2]))
        self.assertEqual(0, maps.PartialMap.empty(3).width)

    def test_restrict(self):
        rho = pm(4, (2, 2), (3, 1), (4, 1))
        self.assertEqual(pm(4, (3, 1)), rho.restrict([1, 3]))

    def test_ordering(self):
        self.assertLess(pm(3, (1, 1)), pm(3, (1, 1), (2, 1)))
        self.assertLess(pm(3, (1, 1), (3, 3)), pm(3, (2, 1)))

    def test_ordering_foreign(self):
        rho = pm(3, (1, 1))
        self.assertIs(NotImplemented, rho.__lt__(3))
        with self.assertRaises(TypeError):
            rho < 'n=3;1->1'

    def test_hash_and_pickle(self):
        rho = pm(4, (3, 1), (4, 2))
        self.assertEqual(hash(rho), hash(pm(4, (3, 1), (4, 2))))
        self.assertEqual(rho, pickle.loads(pickle.dumps(rho)))

    def test_repr(self):
        self.assertEqual("PartialMap('n=3;2->1')", repr(pm(3, (2, 1))))
        self.assertEqual('n=3;2->1', str(pm(3, (2, 1))))


class ComposeTestCase(unittest.TestCase):
    def test_left_to_right(self):
        rho = pm(3, (1, 2), (2, 3))
        sigma = pm(3, (2, 1), (3, 3))
        self.assertEqual(pm(3, (1, 1), (2, 3)), maps.compose(rho, sigma))
        self.assertEqual(pm(3, (3, 3)), maps.compose(sigma, sigma))
        self.assertEqual(maps.compose(rho, sigma), rho * sigma)

    def test_drops_points(self):
        self.assertEqual(maps.PartialMap.empty(2), maps.compose(pm(2, (2, 2)), pm(2, (1, 1))))

    def test_size_mismatch(self):
        with self.assertRaises(errors.SizeMismatch):
            maps.compose(pm(2, (1, 1)), pm(3, (1, 1)))

    def test_compose_all(self):
        word = [pm(3, (3, 3), (2, 2)), pm(3, (2, 1), (3, 2)), pm(3, (1, 1))]
        self.assertEqual(pm(3, (2, 1)), maps.compose_all(word))
        with self.assertRaises(errors.DomainError):
            maps.compose_all([])

    @given(partial_maps(4), partial_maps(4), partial_maps(4))
    def test_associative(self, a, b, c):
        self.assertEqual(maps.compose(maps.compose(a, b), c), maps.compose(a, maps.compose(b, c)))


class ClassifyTestCase(unittest.TestCase):
    def test_constant(self):
        self.assertEqual(maps.MapClass(True, True, True), maps.classify(pm(3, (2, 1), (3, 1))))

    def test_in_dorp(self):
        self.assertTrue(maps.in_dorp(pm(3, (1, 1), (2, 1), (3, 2))))
        self.assertTrue(maps.in_dorp(pm(4, (2, 2), (3, 1), (4, 1))))
        self.assertTrue(maps.in_dorp(maps.PartialMap.empty(3)))
        self.assertFalse(maps.in_dorp(pm(4, (2, 1), (3, 2), (4, 1))))
        self.assertFalse(maps.in_dorp(pm(2, (1, 2))))

    def test_is_idempotent(self):
        self.assertTrue(maps.is_idempotent(pm(4, (2, 2), (3, 2), (4, 4))))
        self.assertFalse(maps.is_idempotent(pm(3, (2, 1))))

    def test_kernel_decomposition(self):
        decomposition = maps.kernel_decomposition(pm(4, (2, 2), (3, 1), (4, 1)))
        self.assertEqual(((2,), (3, 4)), decomposition.blocks)
        self.assertEqual((2, 1), decomposition.images)

    def test_module_accessors(self):
        rho = pm(4, (3, 3), (4, 1))
        self.assertEqual(2, maps.height(rho))
        self.assertEqual(2, maps.width(rho))
        self.assertEqual(frozenset([3]), maps.fix(rho))


def _kind(rho):
    return 'antitone' if maps.classify(rho).antitone else 'isotone'


class DorpStructureTestCase(unittest.TestCase):
    """Exhaustive checks over DORP_n for small n."""

    def test_closed_under_products(self):
        for n in range(1, 5):
            elements = enumeration.enumerate_dorp(n)
            outside = [(a, b) for a in elements for b in elements if not maps.in_dorp(a * b)]
            self.assertEqual([], outside, n)

    def test_product_parity(self):
        for n in range(2, 5):
            elements = [rho for rho in enumeration.enumerate_dorp(n) if rho.height >= 2]
            for a in elements:
                for b in elements:
                    klass = maps.classify(a * b)
                    if _kind(a) == _kind(b):
                        self.assertTrue(klass.isotone, (a, b))
                    else:
                        self.assertTrue(klass.antitone, (a, b))

    def test_tall_elements_are_isotone(self):
        for n in range(1, 7):
            for rho in enumeration.enumerate_dorp(n):
                if rho.height > utils.ceil_half(n):
                    self.assertTrue(maps.classify(rho).isotone, rho)

    def test_kernel_blocks_are_convex(self):
        for n in range(1, 7):
            for rho in enumeration.enumerate_dorp(n):
                position = {x: index for index, x in enumerate(rho.domain)}
                for block in maps.kernel_decomposition(rho).blocks:
                    indices = [position[x] for x in block]
                    self.assertEqual(list(range(indices[0], indices[0] + len(block))), indices, rho)


class ReverseTestCase(unittest.TestCase):
    def test_reversible(self):
        rho = pm(4, (3, 1), (4, 2))
        self.assertTrue(maps.is_reversible(rho))
        self.assertEqual(pm(4, (3, 2), (4, 1)), maps.reverse(rho))

    def test_rejected(self):
        rho = pm(4, (1, 1), (2, 2))
        self.assertFalse(maps.is_reversible(rho))
        self.assertIsNone(maps.reverse(rho))

    def test_image_above_domain(self):
        rho = pm(5, (2, 1), (3, 2), (4, 3))
        self.assertFalse(maps.is_reversible(rho))
        self.assertIsNone(maps.reverse(rho))

    def test_height_one(self):
        rho = pm(3, (2, 1), (3, 1))
        self.assertTrue(maps.is_reversible(rho))
        self.assertEqual(rho, maps.reverse(rho))

    def test_errors(self):
        with self.assertRaises(errors.DomainError):
            maps.reverse(maps.PartialMap.empty(3))
        with self.assertRaises(errors.DomainError):
            maps.reverse(pm(2, (1, 2)))


class InverseWitnessTestCase(unittest.TestCase):
    def test_witness(self):
        rho = pm(4, (2, 2), (3, 1), (4, 1))
        witness = maps.inverse_witness(rho)
        self.assertEqual(pm(4, (1, 3), (2, 2)), witness)
        self.assertEqual(rho, rho * witness * rho)
        self.assertEqual(pm(4, (2, 2), (3, 3), (4, 3)), rho * witness)
        self.assertEqual(maps.PartialMap.identity(4, [1, 2]), witness * rho)


class LiteralTestCase(unittest.TestCase):
    def test_format(self):
        self.assertEqual('n=4;2->2,3->1', maps.format_literal(pm(4, (2, 2), (3, 1))))
        self.assertEqual('n=2;', maps.format_literal(maps.PartialMap.empty(2)))

    def test_parse(self):
        self.assertEqual(pm(4, (2, 2), (3, 1)), lit('n=4;2->2,3->1'))
        self.assertEqual(maps.PartialMap.empty(3), lit('n=3;'))

    def test_parse_errors(self):
        for text in ['x', 'n=0;', 'n=3;2->1,1->1', 'n=3;4->1', 'n=3;1-1', 'n=3;2->1,2->1', 'n=3;1->0']:
            with self.assertRaises(errors.ParseError, msg=text):
                lit(text)

    def test_parse_is_exact(self):
        for text in ['n=4;2->2,3->1\n', 'n=4;2->2\n,3->1', 'n=٤;2->2', 'n=4;٢->2', ' n=4;2->2']:
            with self.assertRaises(errors.ParseError, msg=repr(text)):
                lit(text)

    @given(partial_maps(5))
    def test_format_parse(self, rho):
        self.assertEqual(rho, lit(maps.format_literal(rho)))
