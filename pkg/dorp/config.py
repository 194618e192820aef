# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Workbench options: oracle bounds, closure cap, sampling and OEIS settings."""

import contextlib
import logging
import os

from . import errors

logger = logging.getLogger('dorp.config')

ENV_PREFIX = 'DORP_'

DEFAULT_SEED = 1

DEFAULT_CACHE_DIR = os.path.join('~', '.cache', 'dorp-workbench', 'oeis')


def _parse_bool(text):
    return str(text).strip().lower() in ('1', 'true', 'yes', 'on')


def _parse_optional_int(text):
    if text in (None, '', 'none', 'None'):
        return None
    return int(text)


def _positive(name, value):
    if not isinstance(value, int) or value < 1:
        raise errors.DomainError("Option %s must be a positive integer, got %r" % (name, value))


def _optional_int(name, value):
    if value is not None and not isinstance(value, int):
        raise errors.DomainError("Option %s must be an integer or None, got %r" % (name, value))


def _at_least_one_second(name, value):
    if value < 1.0:
        raise errors.DomainError("Option %s must be at least 1 second, got %r" % (name, value))


def _positive_number(name, value):
    if value <= 0:
        raise errors.DomainError("Option %s must be positive, got %r" % (name, value))


class OptionDefault(object):
    """The default for an option.

    Attributes:
        name: str, the name of the option
        value: object, the default value for the option
        checker: callable or None, an optional function used to detect invalid
            option values; called as checker(name, value)
        parser: callable, converts the text of a DORP_<NAME> environment
            variable into a value
    """
    def __init__(self, name, value, checker=None, parser=int):
        self.name = name
        self.value = value
        self.checker = checker
        self.parser = parser

    @property
    def env_name(self):
        return ENV_PREFIX + self.name.upper()

    def apply(self, overrides, environ):
        value = self.value
        if self.env_name in environ:
            value = self.parser(environ[self.env_name])
        if self.name in overrides:
            value = overrides[self.name]

        if self.checker is not None:
            self.checker(self.name, value)

        return value

    def __str__(self):
        return '%s(%r, %r)' % (self.__class__.__name__, self.name, self.value)


class WorkbenchOptions(object):
    """Resolved workbench options.

    Values come from explicit overrides first, then from DORP_<NAME>
    environment variables, then from the defaults below.
    """

    def __init__(self, environ=None, **overrides):
        if environ is None:
            environ = os.environ
        self._fill(overrides, environ)

    def _build_default_options(self):
        """Provide the default value for all allowed options."""
        return [
            OptionDefault('oracle_bound', 7, checker=_positive),
            OptionDefault('direct_bound', 9, checker=_positive),
            OptionDefault('definitional_bound', 4, checker=_positive),
            OptionDefault('irredundancy_bound', 4, checker=_positive),
            OptionDefault('closure_cap', 5000000, checker=_positive),
            OptionDefault('jobs', 1, checker=_positive),
            OptionDefault('seed', DEFAULT_SEED, checker=_optional_int, parser=_parse_optional_int),
            OptionDefault('cache_dir', DEFAULT_CACHE_DIR, parser=str),
            OptionDefault('offline', False, parser=_parse_bool),
            OptionDefault('rate_limit', 1.0, checker=_at_least_one_second, parser=float),
            OptionDefault('endpoint', 'https://oeis.org/search', parser=str),
            OptionDefault('timeout', 30.0, checker=_positive_number, parser=float),
        ]

    def _fill(self, overrides, environ):
        remaining = dict(overrides)
        self._names = []
        for option in self._build_default_options():
            value = option.apply(overrides, environ)
            remaining.pop(option.name, None)
            setattr(self, option.name, value)
            self._names.append(option.name)

        if remaining:
            raise TypeError(
                "WorkbenchOptions got unknown option(s) %s"
                % ','.join(sorted(remaining.keys())))

    def as_dict(self):
        return dict((name, getattr(self, name)) for name in self._names)

    def replace(self, **overrides):
        """Build a new set of options, with some values replaced."""
        values = self.as_dict()
        values.update(overrides)
        return WorkbenchOptions(environ={}, **values)

    @property
    def expanded_cache_dir(self):
        return os.path.expanduser(self.cache_dir)

    def __repr__(self):
        return '<WorkbenchOptions: %s>' % ', '.join(
            '%s=%r' % (name, getattr(self, name)) for name in self._names)


_stack = []


def get_options():
    """Retrieve the active options."""
    if not _stack:
        _stack.append(WorkbenchOptions())
    return _stack[-1]


def resolve(options=None):
    if options is None:
        return get_options()
    return options


@contextlib.contextmanager
def override(**overrides):
    """Activate options derived from the current ones for a block of code."""
    options = get_options().replace(**overrides)
    logger.debug("Activating options %r", options)
    _stack.append(options)
    try:
        yield options
    finally:
        _stack.pop()
