# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""The random generator behind dorp.fuzzy and the sampling suite."""

import contextlib
import logging
import random

logger = logging.getLogger('dorp.random')

randgen = random.Random()


def get_random_state():
    return randgen.getstate()


def set_random_state(state):
    randgen.setstate(state)


def reseed_random(seed):
    """Reseed the generator; equal seeds give equal samples."""
    logger.debug("Reseeding sampler with %r", seed)
    set_random_state(random.Random(seed).getstate())


@contextlib.contextmanager
def seeded(seed):
    """Sample from `seed` inside the block, then restore the previous state.

    A seed of None leaves the generator untouched.
    """
    if seed is None:
        yield randgen
        return
    state = get_random_state()
    reseed_random(seed)
    try:
        yield randgen
    finally:
        set_random_state(state)
