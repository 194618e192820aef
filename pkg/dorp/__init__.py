# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.

from .errors import (
    WorkbenchError,
    SizeMismatch,
    DomainError,
    ExtremeElementError,
    ParseError,
    ResourceLimitError,
    NotGeneratedError,
    NetworkError,
)

from .maps import (
    PartialMap,
    compose,
    parse_literal,
    format_literal,
)

from .enumeration import (
    ElementSet,
    enumerate_dorp,
    enumerate_ls,
    enumerate_drp,
    enumerate_ideal,
    enumerate_jstar,
)

from .closure import (
    ReesElement,
    ZERO,
    rees_quotient,
    word_for,
)

from .config import (
    get_options,
    override,
)

from .helpers import (
    debug,
)

__version__ = '0.1.0.dev0'

