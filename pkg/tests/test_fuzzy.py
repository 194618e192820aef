# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.

import unittest
from unittest import mock

from dorp import fuzzy
from dorp import maps
from dorp import random


class FuzzyPartialMapTestCase(unittest.TestCase):
    def test_shape(self):
        for rho in fuzzy.FuzzyPartialMap(5).sample(50):
            self.assertEqual(5, rho.n)

    def test_no_gap(self):
        for rho in fuzzy.FuzzyPartialMap(4, gap=0.0).sample(20):
            self.assertEqual(4, rho.width)

    def test_mock(self):
        with mock.patch('dorp.random.randgen.random', lambda: 0.0):
            rho = fuzzy.FuzzyPartialMap(4).fuzz()
        self.assertEqual(maps.PartialMap.empty(4), rho)

    def test_call(self):
        with mock.patch('dorp.random.randgen.randint', lambda low, high: high):
            rho = fuzzy.FuzzyPartialMap(3, gap=0.0)()
        self.assertEqual(maps.PartialMap(3, (3, 3, 3)), rho)


class FuzzyDorpMapTestCase(unittest.TestCase):
    def test_in_dorp(self):
        for rho in fuzzy.FuzzyDorpMap(10).sample(300):
            self.assertTrue(maps.in_dorp(rho), rho)

    def test_antitone_only(self):
        for rho in fuzzy.FuzzyDorpMap(8, antitone=1.0).sample(100):
            self.assertTrue(maps.classify(rho).antitone, rho)

    def test_isotone_only(self):
        for rho in fuzzy.FuzzyDorpMap(8, antitone=0.0).sample(100):
            self.assertTrue(maps.classify(rho).isotone, rho)

    def test_empty_domain(self):
        self.assertEqual(maps.PartialMap.empty(3), fuzzy.FuzzyDorpMap(3, gap=1.0).fuzz())


class ReseedTestCase(unittest.TestCase):
    def test_reseed_replays(self):
        random.reseed_random(42)
        first = fuzzy.FuzzyDorpMap(9).sample(10)
        random.reseed_random(42)
        second = fuzzy.FuzzyDorpMap(9).sample(10)
        self.assertEqual(first, second)

    def test_state_roundtrip(self):
        state = random.get_random_state()
        first = fuzzy.FuzzyPartialMap(8).sample(5)
        random.set_random_state(state)
        self.assertEqual(first, fuzzy.FuzzyPartialMap(8).sample(5))

    def test_seeded_restores(self):
        random.reseed_random(3)
        state = random.get_random_state()
        with random.seeded(11):
            inside = fuzzy.FuzzyDorpMap(9).sample(3)
        self.assertEqual(state, random.get_random_state())
        with random.seeded(11):
            self.assertEqual(inside, fuzzy.FuzzyDorpMap(9).sample(3))

    def test_seeded_none(self):
        state = random.get_random_state()
        with random.seeded(None):
            fuzzy.FuzzyPartialMap(4).fuzz()
        self.assertNotEqual(state, random.get_random_state())
