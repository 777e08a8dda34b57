#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
r"""Closed-form counts: hom-set sizes, Cartan matrices, radical dimensions.

Lattice paths from (1, 1) to (n+1, n+1) are n-tuples (p_1, ..., p_n) with
1 <= p_1 <= ... <= p_n <= n+1, p_i being the height of the i-th horizontal
step. P <= X iff p_i <= x_i for every i.

Order-preserving order-decreasing total maps [n] -> B correspond to the
paths below the boundary bar(B) whose ascents sit at the positions in B,
and their number is a determinant of binomials. Inclusion-exclusion over
the subsets of B turns that into the onto maps, i.e. the Cartan entries of
EC_n, once the domain is reduced to [m] by the replacement process of
:func:`reduce_domain` and :func:`rename_to_initial`.
"""
from __future__ import absolute_import

import collections
import itertools
import logging
import math

from . import errors, maps, matrix
from .utils import binomial


LOG = logging.getLogger(__name__)

LatticePath = collections.namedtuple("LatticePath", "n steps")
BoundaryData = collections.namedtuple("BoundaryData", "B bar")


def lattice_path(steps):
    """
    :param steps: A sequence of ints
    :return: A :class:`LatticePath` object
    :raises: InvalidInput

    >>> lattice_path([1, 1, 3])
    LatticePath(n=3, steps=(1, 1, 3))
    """
    steps = tuple(steps)
    size = len(steps)
    if any(a > b for a, b in zip(steps, steps[1:])) or \
            (steps and (steps[0] < 1 or steps[-1] > size + 1)):
        raise errors.InvalidInput("Not a lattice path: {!r}".format(steps))

    return LatticePath(size, steps)


def _sub_subsets_itr(bset):
    """
    :param bset: A maps.SubsetOfN object
    :yield: (|B| - |X|, X) for every subset X of `bset`
    """
    size = len(bset.elements)
    for xsize in range(size + 1):
        for elts in itertools.combinations(bset.elements, xsize):
            yield (size - xsize, maps.SubsetOfN(bset.n, elts))


def count_onto_op(msize, lsize):
    """
    Number of onto order-preserving maps [m] -> [l].

    >>> count_onto_op(3, 2)
    2
    >>> count_onto_op(0, 0)
    1
    >>> count_onto_op(5, 3)
    6
    """
    return binomial(msize - 1, lsize - 1)


def cartan_po_closed(n):
    """
    The extended upper-triangular Pascal matrix over the objects [0..n].

    >>> cartan_po_closed(2).entries
    ((1, 0, 0), (0, 1, 1), (0, 0, 1))
    >>> cartan_po_closed(4).entries[2][4]
    3
    """
    return matrix.from_function(
        n + 1, lambda i, j: binomial(j - 1, i - 1) if j >= i else 0
    )


def dim_rad_po(n, k):
    """
    Dimension of Rad^k of kPO_n, the number of morphisms of EO_n of defect
    k or more.

    :param n: Ambient size
    :param k: A positive int

    >>> dim_rad_po(2, 1)
    2
    >>> dim_rad_po(3, 3)
    0
    """
    if k < 1:
        raise errors.InvalidInput("k must be positive: {!r}".format(k))

    return sum(binomial(n, m) * binomial(n, l) * binomial(m - 1, l - 1)
               for m in range(k + 1, n + 1) for l in range(1, m - k + 1))


def count_po_total(n):
    """
    |PO_n|, summing the hom-set sizes of EO_n.

    >>> [count_po_total(n) for n in range(5)]
    [1, 2, 8, 38, 192]
    """
    return sum(binomial(n, m) * binomial(n, l) * binomial(m - 1, l - 1)
               for m in range(n + 1) for l in range(m + 1))


def count_pf_total(n):
    """
    |PF_n| = (n+1)!, as order-decreasing partial maps on [n] correspond to
    total ones on n+1 elements.

    >>> count_pf_total(4)
    120
    """
    return math.factorial(n + 1)


def bar_path(n, bset):
    """
    :param n: Ambient size
    :param bset: A maps.SubsetOfN object of [n]

    :return: A :class:`BoundaryData` object

    >>> bar_path(8, maps.subset(8, [1, 3, 4, 5, 8])).bar.steps
    (1, 1, 2, 3, 4, 4, 4, 5)
    >>> bar_path(3, maps.subset(3)).bar.steps
    (1, 1, 1)
    """
    if bset.n != n:
        raise errors.InvalidInput("Not a subset of [{}]: {}".format(n, bset))

    steps = []
    for i in range(1, n + 1):
        if i == 1:
            steps.append(1)
        else:
            steps.append(steps[-1] + (1 if i in bset.elements else 0))

    return BoundaryData(bset, LatticePath(n, tuple(steps)))


def p_b(n, bset):
    """
    The maximum path whose values are in B and which stays below the
    diagonal; renaming the elements of B by their positions gives bar(B).

    >>> p_b(8, maps.subset(8, [1, 3, 4, 5, 8]))
    (1, 1, 3, 4, 5, 5, 5, 8)
    """
    if 1 not in bset.elements:
        raise errors.InvalidInput("1 must be in {}".format(bset.elements))

    return tuple(max(b for b in bset.elements if b <= i)
                 for i in range(1, n + 1))


def path_matrix(xpath):
    """
    :param xpath: A :class:`LatticePath` object
    :return: A matrix.ExactMatrix with (i, j) entry C(x_i, j - i + 1)

    >>> path_matrix(lattice_path([1, 2, 3])).entries
    ((1, 0, 0), (1, 2, 1), (0, 1, 3))
    """
    return matrix.from_function(
        xpath.n, lambda i, j: binomial(xpath.steps[i], j - i + 1)
    )


def paths_below_det(xpath):
    """
    Number of lattice paths P <= X, as a determinant.

    >>> paths_below_det(lattice_path([1, 1, 1]))
    1
    >>> paths_below_det(lattice_path([1, 2, 3]))
    5
    """
    return matrix.determinant(path_matrix(xpath))


def paths_below_dp(xpath):
    """
    Number of lattice paths P <= X, counted by a cumulative sum DP over the
    last value.

    >>> paths_below_dp(lattice_path([1, 2]))
    2
    >>> paths_below_dp(lattice_path([1, 2, 3, 4]))
    14
    """
    top = xpath.n + 1
    counts = [0] * (top + 1)  # counts[v]: prefixes ending at value v
    counts[1] = 1

    for bound in xpath.steps:
        acc = 0
        nxt = [0] * (top + 1)
        for val in range(1, top + 1):
            acc += counts[val]
            nxt[val] = acc if val <= bound else 0
        counts = nxt

    return sum(counts)


def count_C(n, bset):  # noqa: N802
    """
    Number of order-preserving order-decreasing total maps [n] -> B.

    >>> count_C(3, maps.subset(3, [1, 2, 3]))
    5
    >>> count_C(3, maps.subset(3, [1, 2]))
    3
    >>> count_C(2, maps.subset(2, [2]))
    0
    """
    if n and 1 not in bset.elements:
        return 0  # No value for 1.

    return paths_below_det(bar_path(n, bset).bar)


def count_EC_full(n, bset):  # noqa: N802
    """
    Number of order-preserving order-decreasing onto maps [n] -> B.

    >>> count_EC_full(2, maps.subset(2, [1]))
    1
    >>> count_EC_full(3, maps.subset(3, [1, 2]))
    2
    >>> count_EC_full(2, maps.subset(2))
    0
    """
    return sum((-1) ** diff * count_C(n, xset)
               for diff, xset in _sub_subsets_itr(bset))


def reduce_domain_steps(aset, bset):
    """
    Replace, for each b_i of B in turn, the minimal element a >= b_i of the
    current set by b_i.

    :param aset: A maps.SubsetOfN object, the domain
    :param bset: A maps.SubsetOfN object, the codomain

    :return: A list of maps.SubsetOfN objects [A_0 = A, A_1, ..., A_k]
    :raises: Infeasible

    >>> [s.elements for s in reduce_domain_steps(maps.subset(3, [2, 3]),
    ...                                          maps.subset(3, [1, 3]))]
    [(2, 3), (1, 3), (1, 3)]
    """
    if aset.n != bset.n:
        raise errors.InvalidInput("Ambient sizes differ: "
                                  "{} != {}".format(aset.n, bset.n))
    res = [aset]
    current = set(aset.elements)
    for belt in bset.elements:
        cands = [a for a in current if a >= belt]
        if not cands:
            raise errors.Infeasible("No element >= {} in {}"
                                    "".format(belt, sorted(current)))
        current.remove(min(cands))
        current.add(belt)
        res.append(maps.SubsetOfN(aset.n, tuple(sorted(current))))

    return res


def reduce_domain(aset, bset):
    """
    :return: A' such that B is in A', |A'| = |A| and |EC(A, B)| = |EC(A', B)|
    :raises: Infeasible

    >>> reduce_domain(maps.subset(3, [2, 3]), maps.subset(3, [1, 3]))
    SubsetOfN(n=3, elements=(1, 3))
    """
    return reduce_domain_steps(aset, bset)[-1]


def rename_to_initial(aset, bset):
    """
    Rename the elements of A' to 1, ..., m keeping the order.

    :return: A tuple of (m, renamed B as a maps.SubsetOfN of [m])
    :raises: InvalidInput if B is not in A'

    >>> rename_to_initial(maps.subset(3, [1, 3]), maps.subset(3, [1, 3]))
    (2, SubsetOfN(n=2, elements=(1, 2)))
    """
    if not set(bset.elements) <= set(aset.elements):
        raise errors.InvalidInput("{} is not in {}".format(bset.elements,
                                                           aset.elements))
    size = len(aset.elements)
    sigma = {a: pos for pos, a in enumerate(aset.elements, start=1)}

    return (size, maps.SubsetOfN(size, tuple(sigma[b]
                                             for b in bset.elements)))


def cartan_entry_ec(aset, bset):
    """
    |EC(A, B)|, by domain reduction, renaming and inclusion-exclusion.

    >>> cartan_entry_ec(maps.subset(3, [1, 2, 3]), maps.subset(3, [1, 2]))
    2
    >>> cartan_entry_ec(maps.subset(3, [1]), maps.subset(3, [1, 2]))
    0
    """
    try:
        reduced = reduce_domain(aset, bset)
    except errors.Infeasible as exc:
        LOG.debug("Empty hom-set: %s", exc)
        return 0

    return count_EC_full(*rename_to_initial(reduced, bset))


def count_decreasing(aset, bset):
    """
    Number of order-decreasing total maps A -> B.

    >>> count_decreasing(maps.subset(3, [2, 3]), maps.subset(3, [1, 2]))
    4
    >>> count_decreasing(maps.subset(2, [1]), maps.subset(2, [2]))
    0
    >>> count_decreasing(maps.subset(2), maps.subset(2, [2]))
    1
    """
    return math.prod(sum(1 for b in bset.elements if b <= a)
                     for a in aset.elements)


def cartan_entry_ef(aset, bset):
    """
    |EF(A, B)| by inclusion-exclusion on the subsets of B.

    >>> cartan_entry_ef(maps.subset(3, [2, 3]), maps.subset(3, [1, 2]))
    2
    """
    return sum((-1) ** diff * count_decreasing(aset, xset)
               for diff, xset in _sub_subsets_itr(bset))


def _cartan_closed(n, entry_fn):
    """
    :param entry_fn: A callable takes (A, B) and returns |Hom(A, B)|
    """
    objs = maps.all_subsets(n)
    return matrix.from_function(len(objs),
                                lambda i, j: entry_fn(objs[j], objs[i]))


def cartan_ec_matrix(n):
    """
    The Cartan matrix of kPC_n from the closed forms, objects of EC_n in
    the object order.

    >>> cartan_ec_matrix(2).entries[1]
    (0, 1, 1, 1)
    >>> cartan_ec_matrix(2).entries[2]
    (0, 0, 1, 0)
    """
    return _cartan_closed(n, cartan_entry_ec)


def cartan_ef_matrix(n):
    """
    >>> cartan_ef_matrix(1).entries
    ((1, 0), (0, 1))
    """
    return _cartan_closed(n, cartan_entry_ef)


def monoid_size_closed(family, n):
    """
    :param family: PO, PF or PC (or EO, EF, EC)
    :return: Size of the monoid from closed forms

    >>> monoid_size_closed("pc", 2)
    6
    """
    tag = maps.normalize_family(family)
    if tag in (maps.PO, maps.EO, maps.SEO):
        return count_po_total(n)

    if tag in (maps.PF, maps.EF):
        return count_pf_total(n)

    objs = maps.all_subsets(n)
    return sum(cartan_entry_ec(a, b) for a in objs for b in objs)

# vim:sw=4:ts=4:et:
