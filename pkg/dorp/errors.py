# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


class WorkbenchError(Exception):
    """Any exception raised by the DORP workbench."""


class SizeMismatch(WorkbenchError):
    """Raised when maps on chains of different sizes are combined."""


class DomainError(WorkbenchError):
    """Raised when an operation's precondition does not hold for its input."""


class ExtremeElementError(DomainError):
    """Raised when an extreme convex vital element is asked to deflate.

    Extreme elements δ_{p,p} and δ_{p,n-p+1} are not a product of a convex
    vital element and an idempotent of the next height.
    """


class ParseError(WorkbenchError):
    """Raised when a map literal or a remote response cannot be parsed."""


class ResourceLimitError(WorkbenchError):
    """Raised when an enumeration, scan or closure exceeds its configured cap."""


class NotGeneratedError(WorkbenchError):
    """Raised when a word is requested for an element outside a closure."""


class NetworkError(WorkbenchError):
    """Raised when the sequence database is unreachable and nothing is cached."""
