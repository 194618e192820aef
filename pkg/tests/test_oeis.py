# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.

import json
import os
import shutil
import tempfile
import unittest
import urllib.error
from unittest import mock

from dorp import config
from dorp import enums
from dorp import errors
from dorp import oeis

from . import utils

SCHRODER_BODY = json.dumps({'results': [{'number': 6318, 'name': 'Large Schroeder numbers'}]})


class SequenceQueryTestCase(unittest.TestCase):
    def test_terms(self):
        query = oeis.SequenceQuery([1, 2, 6], 'demo')
        self.assertEqual('1,2,6', query.term_string)
        self.assertEqual(64, len(query.cache_key))
        self.assertEqual(query.cache_key, oeis.SequenceQuery((1, 2, 6), 'other').cache_key)
        self.assertFalse(query.expect_found)

    def test_invalid(self):
        with self.assertRaises(errors.DomainError):
            oeis.SequenceQuery([], 'empty')
        with self.assertRaises(errors.DomainError):
            oeis.SequenceQuery([1, '2'], 'text')

    def test_default_queries(self):
        queries = oeis.default_queries()
        self.assertEqual(['schroder', 'a_n', 's_n+a_n', 'F(n,p)'], [q.label for q in queries])
        self.assertEqual((1, 2, 6, 22, 90, 394, 1806, 8558), queries[0].terms)
        self.assertTrue(queries[0].expect_found)
        self.assertEqual((0, 1, 7, 31, 112), queries[1].terms[:5])
        self.assertEqual((2, 6, 23, 97, 425, 1918), queries[2].terms[:6])
        self.assertEqual((4, 11, 1, 26, 7), queries[3].terms[:5])


class ParseResponseTestCase(unittest.TestCase):
    def test_shapes(self):
        self.assertEqual([], oeis.parse_response('null'))
        self.assertEqual([], oeis.parse_response('{"results": null}'))
        self.assertEqual(['A000006'], oeis.parse_response('[{"number": 6}]'))
        self.assertEqual(['A006318'], oeis.parse_response(SCHRODER_BODY))

    def test_malformed(self):
        for body in ['nope', '3', '[{"name": "x"}]', '{"results": 4}']:
            with self.assertRaises(errors.ParseError, msg=body):
                oeis.parse_response(body)


class OEISClientTestCase(unittest.TestCase):
    def setUp(self):
        self.cache_dir = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.cache_dir)
        self.options = config.WorkbenchOptions(environ={}, cache_dir=self.cache_dir)
        self.clock = utils.FakeClock()
        self.requested = []
        self.bodies = {'q=1%2C2%2C6': SCHRODER_BODY}

    def opener(self, url, timeout):
        self.requested.append(url)
        for needle, body in self.bodies.items():
            if needle in url:
                return body
        return 'null'

    def client(self, **kwargs):
        kwargs.setdefault('opener', self.opener)
        return oeis.OEISClient(
            options=kwargs.pop('options', self.options),
            clock=self.clock.wall,
            monotonic=self.clock.monotonic,
            sleep=self.clock.sleep,
            **kwargs
        )

    def test_url(self):
        self.assertEqual(
            'https://oeis.org/search?q=1%2C2%2C6&fmt=json',
            self.client().url_for(oeis.SequenceQuery([1, 2, 6], 'demo')),
        )

    def test_live_then_cache(self):
        client = self.client()
        query = oeis.SequenceQuery([1, 2, 6], 'demo')

        verdict = client.lookup(query)
        self.assertEqual(enums.LIVE_SOURCE, verdict.source)
        self.assertEqual(['A006318'], verdict.matches)
        self.assertTrue(verdict.found)
        self.assertEqual(1, len(self.requested))

        with open(client.cache_path(query), encoding='utf-8') as stream:
            entry = json.load(stream)
        self.assertEqual('1,2,6', entry['query'])
        self.assertEqual(self.clock.wall(), entry['fetched_at'])
        self.assertEqual(SCHRODER_BODY, entry['body'])

        verdict = client.lookup(query)
        self.assertEqual(enums.CACHE_SOURCE, verdict.source)
        self.assertEqual(['A006318'], verdict.matches)
        self.assertEqual(1, len(self.requested))

    def test_not_found(self):
        verdict = self.client().lookup(oeis.SequenceQuery([5, 3, 9, 9], 'odd'))
        self.assertFalse(verdict.found)
        self.assertEqual({'label': 'odd', 'found': False, 'matches': [], 'source': 'live'}, verdict.as_dict())

    def test_rate_limit(self):
        client = self.client()
        client.lookup(oeis.SequenceQuery([1, 2, 6], 'first'))
        client.lookup(oeis.SequenceQuery([1, 2, 7], 'second'))
        self.assertEqual([1.0], self.clock.sleeps)
        self.assertEqual(2, len(self.requested))

    def test_offline(self):
        client = self.client(options=self.options.replace(offline=True))
        with self.assertRaises(errors.NetworkError):
            client.lookup(oeis.SequenceQuery([1, 2, 6], 'demo'))
        self.assertEqual([], self.requested)

    def test_offline_uses_cache(self):
        query = oeis.SequenceQuery([1, 2, 6], 'demo')
        self.client().lookup(query)
        verdict = self.client(options=self.options.replace(offline=True)).lookup(query)
        self.assertEqual(enums.CACHE_SOURCE, verdict.source)

    def test_transport_errors(self):
        def failing(url, timeout):
            raise urllib.error.URLError('unreachable')

        with self.assertRaises(errors.NetworkError):
            self.client(opener=failing).lookup(oeis.SequenceQuery([1, 2, 6], 'demo'))

    def test_corrupt_cache(self):
        client = self.client()
        query = oeis.SequenceQuery([1, 2, 6], 'demo')
        path = client.cache_path(query)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, 'w', encoding='utf-8') as stream:
            stream.write('{not json')
        with self.assertRaises(errors.ParseError):
            client.lookup(query)

    def test_undecodable_body(self):
        response = mock.MagicMock()
        response.__enter__.return_value.read.return_value = b'\xff\xfe{}'
        with mock.patch.object(oeis.urllib.request, 'urlopen', return_value=response):
            with self.assertRaises(errors.ParseError):
                oeis._urlopen('https://oeis.org/search?q=1&fmt=json', 1.0)
            with self.assertRaises(errors.ParseError):
                oeis.OEISClient(options=self.options, sleep=self.clock.sleep).lookup(
                    oeis.SequenceQuery([1, 2, 6], 'demo'))

    def test_patched_transport(self):
        with utils.mocked_urlopen({'q=1%2C2%2C6': SCHRODER_BODY}, oeis) as patched:
            client = oeis.OEISClient(options=self.options, sleep=self.clock.sleep)
            verdict = client.lookup(oeis.SequenceQuery([1, 2, 6], 'demo'))
        self.assertEqual(['A006318'], verdict.matches)
        self.assertEqual(1, len(patched.requested))


class CheckTestCase(unittest.TestCase):
    def setUp(self):
        self.cache_dir = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.cache_dir)
        self.clock = utils.FakeClock()

    def test_report(self):
        options = config.WorkbenchOptions(environ={}, cache_dir=self.cache_dir)

        def opener(url, timeout):
            if 'q=1%2C2%2C6%2C22' in url:
                return SCHRODER_BODY
            return 'null'

        client = oeis.OEISClient(
            options=options, opener=opener,
            clock=self.clock.wall, monotonic=self.clock.monotonic, sleep=self.clock.sleep,
        )
        report = oeis.check(client=client)
        self.assertTrue(report.passed)
        self.assertEqual('oeis-check', report.command)
        self.assertEqual(4, len(report.checks))
        schroder = report.checks[0]
        self.assertEqual('schroder found', schroder.name)
        self.assertTrue(schroder.actual)
        self.assertEqual('live; A006318', schroder.note)
        self.assertEqual('live; no match', report.checks[1].note)
        self.assertEqual(3, len(self.clock.sleeps))
