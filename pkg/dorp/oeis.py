# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Sequence lookups against the OEIS search endpoint, with an on-disk cache."""

import hashlib
import json
import logging
import os
import threading
import time
import urllib.error
import urllib.parse
import urllib.request

from . import config
from . import counting
from . import enums
from . import errors
from . import reports
from . import utils

logger = logging.getLogger('dorp.oeis')

USER_AGENT = 'dorp-workbench'


class SequenceQuery(object):
    """A run of integer terms to search for.

    Attributes:
        terms (int tuple): the terms, in order
        label (str): a name unique within one report
        expect_found (bool): whether the sequence is expected to be recorded
    """

    def __init__(self, terms, label, expect_found=False):
        terms = tuple(terms)
        if not terms:
            raise errors.DomainError("Query %r has no terms" % (label,))
        if not all(isinstance(term, int) for term in terms):
            raise errors.DomainError("Query %r holds non-integer terms" % (label,))
        self.terms = terms
        self.label = label
        self.expect_found = expect_found

    @property
    def term_string(self):
        return ','.join(str(term) for term in self.terms)

    @property
    def cache_key(self):
        return hashlib.sha256(self.term_string.encode('utf-8')).hexdigest()

    def __repr__(self):
        return '<SequenceQuery %s: %s>' % (self.label, self.term_string)


class LookupVerdict(object):
    """Outcome of one lookup; found iff at least one match."""

    def __init__(self, label, matches, source):
        self.label = label
        self.matches = list(matches)
        self.source = source

    @property
    def found(self):
        return bool(self.matches)

    def as_dict(self):
        return {
            'label': self.label,
            'found': self.found,
            'matches': self.matches,
            'source': self.source,
        }

    def __repr__(self):
        return '<LookupVerdict %s: %s (%s)>' % (
            self.label, ', '.join(self.matches) or 'not found', self.source)


def parse_response(body):
    """Sequence identifiers from a search response body.

    The endpoint answers with null, a bare result list, or an object with
    a "results" list; each result carries its A-number as "number".
    """
    try:
        payload = json.loads(body)
    except ValueError as exc:
        raise errors.ParseError("Search response is not JSON: %s" % exc)

    if payload is None:
        return []
    if isinstance(payload, dict):
        results = payload.get('results') or []
    elif isinstance(payload, list):
        results = payload
    else:
        raise errors.ParseError("Unexpected search response of type %s" % type(payload).__name__)

    if not isinstance(results, list):
        raise errors.ParseError("Search results are not a list")
    matches = []
    for result in results:
        number = result.get('number') if isinstance(result, dict) else None
        if not isinstance(number, int):
            raise errors.ParseError("Search result without a sequence number: %r" % (result,))
        matches.append('A%06d' % number)
    return matches


def _urlopen(url, timeout):
    request = urllib.request.Request(url, headers={'User-Agent': USER_AGENT})
    with urllib.request.urlopen(request, timeout=timeout) as response:
        payload = response.read()
    try:
        return payload.decode('utf-8')
    except UnicodeDecodeError as exc:
        raise errors.ParseError("Response from %s is not UTF-8: %s" % (url, exc))


class OEISClient(object):
    """Rate-limited, cached lookups.

    Args:
        options (WorkbenchOptions): endpoint, cache, offline and timing settings
        opener (callable): opener(url, timeout) -> body text
        clock (callable): wall clock, for the cache's fetched_at
        monotonic (callable), sleep (callable): used for rate limiting
    """

    def __init__(self, options=None, opener=None, clock=time.time, monotonic=time.monotonic, sleep=time.sleep):
        self.options = config.resolve(options)
        self.opener = opener or _urlopen
        self.clock = clock
        self.monotonic = monotonic
        self.sleep = sleep
        self._lock = threading.Lock()
        self._last_request = None

    def cache_path(self, query):
        return os.path.join(self.options.expanded_cache_dir, query.cache_key + '.json')

    def read_cache(self, query):
        path = self.cache_path(query)
        if not os.path.exists(path):
            return None
        with open(path, encoding='utf-8') as stream:
            try:
                entry = json.load(stream)
            except ValueError as exc:
                raise errors.ParseError("Corrupt cache entry %s: %s" % (path, exc))
        logger.debug("Cache hit for %s at %s", query.label, path)
        return entry['body']

    def write_cache(self, query, body):
        path = self.cache_path(query)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        entry = {'query': query.term_string, 'fetched_at': self.clock(), 'body': body}
        with open(path, 'w', encoding='utf-8') as stream:
            stream.write(utils.dump_json(entry))

    def url_for(self, query):
        return '%s?%s' % (self.options.endpoint, urllib.parse.urlencode({'q': query.term_string, 'fmt': 'json'}))

    def fetch(self, query):
        if self.options.offline:
            raise errors.NetworkError("No cached response for %s and network access is disabled" % query.label)

        with self._lock:
            if self._last_request is not None:
                wait = self._last_request + self.options.rate_limit - self.monotonic()
                if wait > 0:
                    logger.debug("Rate limit: sleeping %.2fs", wait)
                    self.sleep(wait)
            url = self.url_for(query)
            logger.debug("Requesting %s", url)
            try:
                return self.opener(url, self.options.timeout)
            except (urllib.error.URLError, OSError) as exc:
                raise errors.NetworkError("Request for %s failed: %s" % (query.label, exc))
            finally:
                self._last_request = self.monotonic()

    def lookup(self, query):
        body = self.read_cache(query)
        source = enums.CACHE_SOURCE
        if body is None:
            body = self.fetch(query)
            source = enums.LIVE_SOURCE
            matches = parse_response(body)
            self.write_cache(query, body)
        else:
            matches = parse_response(body)
        return LookupVerdict(query.label, matches, source)


def default_queries():
    """The Schröder control, a_n, s_n + a_n and the F(n,p) triangle."""
    triangle = [
        counting.count_Fp(n, p)
        for n in range(2, 9)
        for p in range(1, utils.ceil_half(n) + 1)
    ]
    return [
        SequenceQuery([counting.schroder(n) for n in range(0, 8)], 'schroder', expect_found=True),
        SequenceQuery([counting.count_a(n) for n in range(2, 10)], 'a_n'),
        SequenceQuery([counting.order_dorp(n) for n in range(1, 9)], 's_n+a_n'),
        SequenceQuery(triangle, 'F(n,p)'),
    ]


def check(queries=None, client=None, options=None):
    """Look up every query; verdicts are reported but never fail the report."""
    client = client or OEISClient(options=options)
    queries = default_queries() if queries is None else list(queries)
    report = reports.VerificationReport('oeis-check', {'queries': [q.label for q in queries]})
    for query in queries:
        verdict = client.lookup(query)
        report.check(
            '%s found' % query.label,
            query.expect_found,
            verdict.found,
            passed=True,
            note='%s; %s' % (verdict.source, ', '.join(verdict.matches) or 'no match'),
        )
    return report.finish()
