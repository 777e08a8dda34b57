#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
"""Utility functions: size caps, binomials and file output.
"""
from __future__ import absolute_import

import math
import os.path
import os

import anyconfig
import jmespath

from . import errors


ENV_MAX_N = "CATALG_MAX_N"

# Caps on the ambient size n; keys are '<purpose>:<family>'.
DEFAULT_MAX_N = {
    "invariants:po": 6,
    "invariants:pf": 5,
    "invariants:pc": 5,
    "presentation:po": 5,
    "presentation:pc": 4,
    "presentation:pf": 4,
    "monoid": 7,
}

# Max number of paths enumerated from a single source object.
MAX_PATHS = 500000


def get_max_n(key, max_n=None):
    """
    Resolve the size cap for `key`: explicit value, then the environment
    variable CATALG_MAX_N, then the default.

    :param key: A key of DEFAULT_MAX_N, e.g. 'invariants:pc'
    :param max_n: Explicitly given cap or None

    :return: An int gives the cap
    :raises: InvalidInput

    >>> get_max_n("presentation:pf")
    4
    >>> get_max_n("presentation:pf", 3)
    3
    """
    if max_n is not None:
        return int(max_n)

    val = os.environ.get(ENV_MAX_N)
    if val:
        try:
            return int(val)
        except ValueError:
            raise errors.InvalidInput("Invalid value of {}: "
                                      "{!r}".format(ENV_MAX_N, val))

    try:
        return DEFAULT_MAX_N[key]
    except KeyError:
        raise errors.InvalidInput("Unknown size cap: {}".format(key))


def check_size(n, key, max_n=None):
    """
    :param n: Ambient size
    :param key: A key of DEFAULT_MAX_N
    :param max_n: Explicitly given cap or None

    :return: `n` itself if it's acceptable
    :raises: InvalidInput, ResourceLimit

    >>> check_size(3, "monoid")
    3
    >>> check_size(9, "monoid")  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ResourceLimit: ...
    """
    if not isinstance(n, int) or n < 0:
        raise errors.InvalidInput("Size must be a non-negative int: "
                                  "{!r}".format(n))

    cap = get_max_n(key, max_n=max_n)
    if n > cap:
        raise errors.ResourceLimit("n={} exceeds the cap {} for "
                                   "{}".format(n, cap, key))
    return n


def binomial(top, bottom):
    """
    Binomial coefficient with C(a, b) = 0 for b < 0 or b > a, except
    C(-1, -1) = 1 which fills the (empty, empty) corners of Cartan matrices.

    >>> binomial(4, 2)
    6
    >>> binomial(-1, -1)
    1
    >>> binomial(3, -1)
    0
    >>> binomial(2, 3)
    0
    """
    if top == bottom == -1:
        return 1

    if bottom < 0 or bottom > top:
        return 0

    return math.comb(top, bottom)


def ensure_dir_exists(filepath):
    """Ensure dir for given file path `filepath` exists

    :param filepath: File path might be created later
    :return: A dir path
    """
    tdir = os.path.dirname(filepath)
    if tdir and not os.path.exists(tdir):
        os.makedirs(tdir)

    return tdir


def dumps_json(data):
    """
    Serialize `data` to a JSON string with sorted keys so that identical
    inputs give byte-identical outputs.

    >>> dumps_json({"b": 1, "a": [1, 2]})
    '{\\n  "a": [\\n    1,\\n    2\\n  ],\\n  "b": 1\\n}'
    """
    return anyconfig.dumps(data, ac_parser="json", indent=2, sort_keys=True)


def loads_json(content):
    """
    >>> loads_json('{"a": [1, 2]}')
    {'a': [1, 2]}
    """
    return anyconfig.loads(content, ac_parser="json")


def save_file(content, filepath):
    """
    Save text `content` to `filepath`.

    :param content: A str to save
    :param filepath:  Path to output file
    """
    ensure_dir_exists(filepath)
    with open(filepath, 'w') as out:
        out.write(content)


def search(jmespath_exp, data):
    """
    Just an wrapper for :func:`jmespath.search`

    >>> search("[?!passed].name",
    ...        [dict(name="a", passed=True), dict(name="b", passed=False)])
    ['b']
    """
    return jmespath.search(jmespath_exp, data)

# vim:sw=4:ts=4:et:
