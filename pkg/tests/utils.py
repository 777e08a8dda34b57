#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
# pylint: disable=missing-docstring,invalid-name
from __future__ import absolute_import

import os.path
import unittest.mock

import catalg.errors as E
import catalg.utils as TT
import tests.common as C


class SimpleFunctionTestCases(C.TestCase):

    def test_10_get_max_n__defaults(self):
        with unittest.mock.patch.dict(os.environ, clear=True):
            self.assertEqual(TT.get_max_n("invariants:po"), 6)
            self.assertEqual(TT.get_max_n("presentation:pc"), 4)

    def test_12_get_max_n__env(self):
        with unittest.mock.patch.dict(os.environ, {TT.ENV_MAX_N: "9"}):
            self.assertEqual(TT.get_max_n("invariants:po"), 9)
            self.assertEqual(TT.get_max_n("invariants:po", 2), 2)

    def test_14_get_max_n__ng(self):
        with unittest.mock.patch.dict(os.environ, {TT.ENV_MAX_N: "x"}):
            with self.assertRaises(E.InvalidInput):
                TT.get_max_n("monoid")

        with unittest.mock.patch.dict(os.environ, clear=True):
            with self.assertRaises(E.InvalidInput):
                TT.get_max_n("no-such-key")

    def test_20_check_size(self):
        with unittest.mock.patch.dict(os.environ, clear=True):
            self.assertEqual(TT.check_size(0, "monoid"), 0)
            self.assertEqual(TT.check_size(7, "monoid"), 7)

            with self.assertRaises(E.ResourceLimit):
                TT.check_size(8, "monoid")
            with self.assertRaises(E.InvalidInput):
                TT.check_size(-1, "monoid")

    def test_22_check_size__resource_limit_is_a_value_error(self):
        with self.assertRaises(ValueError):
            TT.check_size(3, "monoid", max_n=2)

    def test_30_binomial(self):
        self.assertEqual([TT.binomial(4, k) for k in range(-1, 6)],
                         [0, 1, 4, 6, 4, 1, 0])
        self.assertEqual(TT.binomial(-1, -1), 1)
        self.assertEqual(TT.binomial(-1, 0), 0)
        self.assertEqual(TT.binomial(0, 0), 1)

    def test_40_search(self):
        data = dict(checks=[dict(name="a", passed=True),
                            dict(name="b", passed=False)])
        self.assertEqual(TT.search("checks[?!passed].name", data), ["b"])


class FileFunctionTestCases(C.TestCaseWithWorkdir):

    def test_10_save_file(self):
        path = os.path.join(self.workdir, "a", "b", "out.txt")
        TT.save_file("abc\n", path)
        with open(path) as inp:
            self.assertEqual(inp.read(), "abc\n")

    def test_30_dumps_json__sorted(self):
        self.assertEqual(TT.dumps_json(dict(b=1, a=2)),
                         TT.dumps_json(dict(a=2, b=1)))

# vim:sw=4:ts=4:et:
