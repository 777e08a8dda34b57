#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
r"""Integer matrices with arbitrary-precision entries.
"""
from __future__ import absolute_import

import collections

import pandas

from . import errors


ExactMatrix = collections.namedtuple("ExactMatrix", "rows cols entries")


def make_matrix(rows):
    """
    :param rows: A list of lists of ints
    :return: A :class:`ExactMatrix` object
    :raises: InvalidInput

    >>> make_matrix([[1, 2], [3, 4]])
    ExactMatrix(rows=2, cols=2, entries=((1, 2), (3, 4)))
    """
    entries = tuple(tuple(int(x) for x in row) for row in rows)
    cols = len(entries[0]) if entries else 0
    if any(len(row) != cols for row in entries):
        raise errors.InvalidInput("Rows of different lengths: "
                                  "{!r}".format(rows))

    return ExactMatrix(len(entries), cols, entries)


def from_function(size, fun):
    """
    :param size: Number of rows and columns
    :param fun: A callable takes 0-based (row, col) and returns an int

    >>> from_function(2, lambda i, j: i + j).entries
    ((0, 1), (1, 2))
    """
    return make_matrix([[fun(i, j) for j in range(size)]
                        for i in range(size)])


def to_lists(mat):
    """
    >>> to_lists(make_matrix([[1]]))
    [[1]]
    """
    return [list(row) for row in mat.entries]


def determinant(mat):
    """
    Determinant by the fraction-free (Bareiss) elimination; every division
    is exact so no rational arithmetic is needed.

    :param mat: A square :class:`ExactMatrix` object
    :return: An int

    >>> determinant(make_matrix([[1, 0, 0], [1, 2, 1], [0, 1, 3]]))
    5
    >>> determinant(make_matrix([[0, 1], [1, 0]]))
    -1
    >>> determinant(make_matrix([]))
    1
    """
    if mat.rows != mat.cols:
        raise errors.InvalidInput("Not a square matrix: "
                                  "{}x{}".format(mat.rows, mat.cols))

    size = mat.rows
    work = [list(row) for row in mat.entries]
    (sign, prev) = (1, 1)

    for k in range(size - 1):
        if not work[k][k]:
            for i in range(k + 1, size):
                if work[i][k]:
                    (work[i], work[k]) = (work[k], work[i])
                    sign = -sign
                    break
            else:
                return 0

        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i][j] = ((work[k][k] * work[i][j] -
                               work[i][k] * work[k][j]) // prev)
        prev = work[k][k]

    return sign * work[size - 1][size - 1] if size else 1


def is_upper_unitriangular(mat):
    """
    >>> is_upper_unitriangular(make_matrix([[1, 3], [0, 1]]))
    True
    >>> is_upper_unitriangular(make_matrix([[1, 0], [1, 1]]))
    False
    """
    return mat.rows == mat.cols and all(
        mat.entries[i][j] == (1 if i == j else mat.entries[i][j])
        and (j >= i or mat.entries[i][j] == 0)
        for i in range(mat.rows) for j in range(mat.cols)
    )


def to_dataframe(mat, labels=None):
    """
    :param mat: A :class:`ExactMatrix` object
    :param labels: A list of row (and column) labels or None

    :return: A :class:`pandas.DataFrame` object of Python ints
    """
    return pandas.DataFrame(to_lists(mat), index=labels, columns=labels,
                            dtype=object)

# vim:sw=4:ts=4:et:
