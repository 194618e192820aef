# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.

#: Version tag carried by every JSON document the workbench emits.
SCHEMA_VERSION = 1


# Green's relations
L = 'L'
R = 'R'
H = 'H'
D = 'D'

# Starred Green's relations
L_STAR = 'L*'
R_STAR = 'R*'
H_STAR = 'H*'
D_STAR = 'D*'
J_STAR = 'J*'

KEYED_KINDS = (L, R, L_STAR, R_STAR, H_STAR, D_STAR)


def canonical_kind(kind):
    """J* coincides with D* on DORP_n and its ideals."""
    if kind == J_STAR:
        return D_STAR
    return kind


# Factor tags, for FactorizationWord
IDEMPOTENT = 'idempotent'
VITAL = 'vital'
CONVEX_VITAL = 'convex-vital'
ISOTONE_PART = 'isotone-part'
GENERATOR = 'generator'


# Objects with a closed-form rank
RQ_OBJECT = 'rq'
IDEAL_OBJECT = 'ideal'
DORP_OBJECT = 'dorp'
RANK_OBJECTS = (RQ_OBJECT, IDEAL_OBJECT, DORP_OBJECT)


# Where a sequence lookup verdict came from
LIVE_SOURCE = 'live'
CACHE_SOURCE = 'cache'


class ExitCode:
    #: Every check passed
    OK = 0

    #: At least one check failed
    VERIFICATION_FAILURE = 1

    #: Bad arguments or malformed input
    USAGE = 2

    #: A configured cap was exceeded
    RESOURCE_LIMIT = 3

    #: Network failure with no cached response
    NETWORK = 4
