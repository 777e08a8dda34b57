#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
r"""Exceptions.

All of them derive from ValueError so callers catching ValueError keep
working.
"""
from __future__ import absolute_import


class Error(ValueError):
    """Base class of the errors raised from this package.
    """


class InvalidInput(Error):
    """Malformed subsets, maps, family names and so on.
    """


class EndpointMismatch(Error):
    """Composition of two morphisms which are not composable.
    """


class ResourceLimit(Error):
    """Size or path count exceeds the configured cap.
    """


class Infeasible(Error):
    """No domain reduction exists; the hom-set is empty.
    """

# vim:sw=4:ts=4:et:
