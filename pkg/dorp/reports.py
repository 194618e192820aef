# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.

import collections
import logging
import time

from . import enums
from . import utils

logger = logging.getLogger('dorp.reports')


Check = collections.namedtuple('Check', ['name', 'expected', 'actual', 'passed', 'note'])


class VerificationReport(object):
    """Named checks with expected and actual values.

    Attributes:
        command (str): the command or suite that produced the report
        parameters (dict): the inputs of that command
        checks (Check list): the checks, in the order they ran
        notes (str list): informational lines that never fail the report
        elapsed (float): seconds between creation and finish()
    """

    def __init__(self, command, parameters=None):
        self.command = command
        self.parameters = dict(parameters or {})
        self.checks = []
        self.notes = []
        self.elapsed = None
        self._started = time.monotonic()

    def check(self, name, expected, actual, passed=None, note=None):
        """Record a check; passes when expected == actual unless told otherwise."""
        if passed is None:
            passed = expected == actual
        self.checks.append(Check(name, expected, actual, bool(passed), note))
        if not passed:
            logger.debug("Check %s failed: expected %s, got %s",
                         name, utils.log_repr(expected), utils.log_repr(actual))
        return bool(passed)

    def note(self, text):
        self.notes.append(text)

    def extend(self, other, prefix=None):
        """Copy another report's checks and notes into this one."""
        for check in other.checks:
            name = check.name if prefix is None else '%s/%s' % (prefix, check.name)
            self.checks.append(check._replace(name=name))
        self.notes.extend(other.notes)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def finish(self):
        self.elapsed = round(time.monotonic() - self._started, 3)
        return self

    def as_dict(self):
        checks = []
        for check in self.checks:
            entry = {
                'name': check.name,
                'expected': check.expected,
                'actual': check.actual,
                'pass': check.passed,
            }
            if check.note:
                entry['note'] = check.note
            checks.append(entry)
        return {
            'schema': enums.SCHEMA_VERSION,
            'command': self.command,
            'parameters': self.parameters,
            'checks': checks,
            'notes': list(self.notes),
            'elapsed': self.elapsed,
            'pass': self.passed,
        }

    def to_json(self):
        return utils.dump_json(self.as_dict())

    def __repr__(self):
        return '<VerificationReport %s: %d checks, %s>' % (
            self.command, len(self.checks), 'pass' if self.passed else 'FAIL')
