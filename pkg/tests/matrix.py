#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
# pylint: disable=missing-docstring,invalid-name
from __future__ import absolute_import

import itertools
import random

import catalg.errors as E
import catalg.matrix as TT
import tests.common as C


def _det_by_permutations(rows):
    size = len(rows)
    res = 0
    for perm in itertools.permutations(range(size)):
        inversions = sum(1 for i, j in itertools.combinations(range(size), 2)
                         if perm[i] > perm[j])
        prod = 1
        for i in range(size):
            prod *= rows[i][perm[i]]
        res += (-1) ** inversions * prod
    return res


class TestCase(C.TestCase):

    def test_10_make_matrix__ng(self):
        with self.assertRaises(E.InvalidInput):
            TT.make_matrix([[1, 2], [3]])

    def test_20_determinant(self):
        rnd = random.Random(0)
        for size in range(1, 6):
            for _ in range(20):
                rows = [[rnd.randint(-3, 3) for _j in range(size)]
                        for _i in range(size)]
                self.assertEqual(TT.determinant(TT.make_matrix(rows)),
                                 _det_by_permutations(rows), rows)

    def test_22_determinant__zero_pivots(self):
        rows = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
        self.assertEqual(TT.determinant(TT.make_matrix(rows)), -1)
        rows = [[1, 2], [2, 4]]
        self.assertEqual(TT.determinant(TT.make_matrix(rows)), 0)

    def test_24_determinant__big_entries(self):
        big = 10 ** 30
        rows = [[big, 1], [1, big]]
        self.assertEqual(TT.determinant(TT.make_matrix(rows)),
                         big * big - 1)

    def test_26_determinant__not_square(self):
        with self.assertRaises(E.InvalidInput):
            TT.determinant(TT.make_matrix([[1, 2]]))

    def test_30_to_dataframe(self):
        dfr = TT.to_dataframe(TT.make_matrix([[1, 2], [0, 1]]), ["a", "b"])
        self.assertEqual(dfr.loc["a", "b"], 2)
        self.assertEqual(list(dfr.columns), ["a", "b"])

# vim:sw=4:ts=4:et:
