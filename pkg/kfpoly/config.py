# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

import os

THREADS = 1
QUIET = False
# request size caps, see check_limit
LIMITS = {
    "max_rank": 8,
    "max_crystal_rank": 7,
    "max_size": 10,
    "max_q_degree": 200,
}
TRUE_VALUES = ["1", "true", "yes", "on"]
FALSE_VALUES = ["0", "false", "no", "off", ""]


def _parse_bool(name, value):
    if value.lower() in TRUE_VALUES:
        return True
    elif value.lower() in FALSE_VALUES:
        return False
    else:
        raise ValueError("invalid boolean for %s: %r" % (name, value))


def setup_config():
    """
    Read KFPOLY_THREADS and KFPOLY_QUIET from the environment.
    """
    global THREADS, QUIET

    threads = os.environ.get("KFPOLY_THREADS")
    if threads is not None:
        set_threads(threads)
    quiet = os.environ.get("KFPOLY_QUIET")
    if quiet is not None:
        QUIET = _parse_bool("KFPOLY_QUIET", quiet)


def set_threads(threads):
    global THREADS

    try:
        value = int(threads)
    except (TypeError, ValueError):
        raise ValueError("invalid thread count: %r" % (threads,))
    if value < 1:
        raise ValueError("invalid thread count: %r" % (threads,))
    THREADS = value


def get_threads():
    return THREADS


def set_quiet(quiet):
    global QUIET
    QUIET = bool(quiet)


def get_quiet():
    return QUIET


def get_limits():
    return dict(LIMITS)


def set_limit(name, value):
    if name not in LIMITS:
        raise ValueError("unknown limit: %r" % name)
    if not isinstance(value, int) or value < 0:
        raise ValueError("invalid value for limit %r: %r" % (name, value))
    LIMITS[name] = value


def check_limit(name, value):
    """
    Raise ValueError when value exceeds the named cap in LIMITS.
    """
    if name not in LIMITS:
        raise ValueError("unknown limit: %r" % name)
    if value > LIMITS[name]:
        raise ValueError(
            "%s=%r exceeds the limit of %r" % (name, value, LIMITS[name])
        )
