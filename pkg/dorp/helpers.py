# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""Simple wrappers around logging and element rendering."""

import contextlib
import logging


@contextlib.contextmanager
def debug(logger='dorp', stream=None):
    logger_obj = logging.getLogger(logger)
    old_level = logger_obj.level

    handler = logging.StreamHandler(stream)
    handler.setLevel(logging.DEBUG)
    logger_obj.addHandler(handler)
    logger_obj.setLevel(logging.DEBUG)

    try:
        yield
    finally:
        logger_obj.setLevel(old_level)
        logger_obj.removeHandler(handler)


def literals(elements):
    """Render a collection of maps (or Rees elements) as literal strings."""
    return [element.literal() for element in elements]
