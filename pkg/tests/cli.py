#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
# pylint: disable=missing-docstring,invalid-name
from __future__ import absolute_import

import os.path
import os
import unittest.mock

import click.testing

import catalg.cli as TT
import catalg.utils as U
import tests.common as C


class TestCliCases(C.TestCase):

    def setUp(self):
        self.runner = click.testing.CliRunner()

    def _invoke(self, *args):
        with unittest.mock.patch.dict(os.environ, clear=True):
            return self.runner.invoke(TT.main, list(args))

    def test_10_invariants(self):
        res = self._invoke("invariants", "--family", "pc", "--n", "3")
        self.assertEqual(res.exit_code, 0)

        rep = U.loads_json(res.output)
        self.assertEqual(rep["loewy_length"], 4)
        self.assertEqual(rep["block_count"], 2)
        self.assertEqual(rep["quiver"]["arrow_count"], 8)

    def test_12_invariants__po(self):
        res = self._invoke("invariants", "-f", "po", "-n", "4")
        self.assertEqual(res.exit_code, 0)
        rep = U.loads_json(res.output)
        self.assertEqual((rep["loewy_length"], rep["block_count"]), (4, 2))

        res = self._invoke("invariants", "-f", "po", "-n", "0")
        rep = U.loads_json(res.output)
        self.assertEqual((rep["loewy_length"], rep["block_count"]), (1, 1))

    def test_14_invariants__text(self):
        res = self._invoke("-v", "invariants", "-f", "pc", "-n", "3",
                           "--format", "text")
        self.assertEqual(res.exit_code, 0)
        self.assertTrue(res.output.startswith("invariants: pc, n = 3"))

    def test_16_invariants__deterministic(self):
        outs = [self._invoke("invariants", "-f", "pf", "-n", "3").output
                for _ in range(2)]
        self.assertEqual(outs[0], outs[1])

    def test_20_crosscheck(self):
        for family in ("pc", "pf"):
            res = self._invoke("crosscheck", "-f", family, "-n", "4")
            self.assertEqual(res.exit_code, 0, res.output)
            self.assertEqual(U.loads_json(res.output)["command"],
                             "crosscheck")

    def test_30_verify_presentation(self):
        res = self._invoke("verify-presentation", "-f", "pc", "-n", "3",
                           "-F", "text")
        self.assertEqual(res.exit_code, 0)
        self.assertIn("presentation of EC_3: PASSED", res.output)

    def test_32_verify_presentation__mutation(self):
        res = self._invoke("verify-presentation", "-f", "pc", "-n", "3",
                           "--exclude", "PC2")
        self.assertEqual(res.exit_code, TT.EXIT_FAILED)

    def test_40_count(self):
        res = self._invoke("count", "-f", "pf", "-n", "4")
        self.assertEqual(res.exit_code, 0)
        rep = U.loads_json(res.output)
        self.assertEqual((rep["closed"], rep["counted"]), (120, 120))

    def test_42_count__hom(self):
        res = self._invoke("count", "-f", "pc", "-n", "3", "--dom", "1,2,3",
                           "--cod", "1,2")
        self.assertEqual(res.exit_code, 0)
        rep = U.loads_json(res.output)
        self.assertEqual((rep["dom"], rep["cod"]), ([1, 2, 3], [1, 2]))
        self.assertEqual(rep["closed"], 2)

    def test_44_count__bad_elements(self):
        res = self._invoke("count", "-f", "pc", "-n", "3", "--dom", "1,x")
        self.assertEqual(res.exit_code, TT.EXIT_USAGE)

        res = self._invoke("count", "-f", "pc", "-n", "3", "--dom", "4",
                           "--cod", "1")
        self.assertEqual(res.exit_code, TT.EXIT_USAGE)

    def test_50_out(self):
        with self.runner.isolated_filesystem():
            res = self._invoke("invariants", "-f", "po", "-n", "3",
                               "-F", "csv", "-o", "out/cartan.csv")
            self.assertEqual(res.exit_code, 0)
            self.assertFalse(res.output)
            self.assertTrue(os.path.exists(os.path.join("out",
                                                        "cartan.csv")))

    def test_60_usage_errors(self):
        for args in (["invariants", "-f", "xx", "-n", "3"],
                     ["invariants", "-f", "pc", "-n", "-1"],
                     ["invariants", "-f", "pc"]):
            res = self._invoke(*args)
            self.assertEqual(res.exit_code, TT.EXIT_USAGE, args)

    def test_70_resource_limit(self):
        res = self._invoke("invariants", "-f", "pc", "-n", "6")
        self.assertEqual(res.exit_code, TT.EXIT_LIMIT)

        res = self._invoke("invariants", "-f", "pc", "-n", "4",
                           "--max-n", "3")
        self.assertEqual(res.exit_code, TT.EXIT_LIMIT)

    def test_72_resource_limit__env(self):
        with unittest.mock.patch.dict(os.environ, {U.ENV_MAX_N: "2"}):
            res = self.runner.invoke(TT.main, ["count", "-f", "po",
                                               "-n", "3"])
        self.assertEqual(res.exit_code, TT.EXIT_LIMIT)

    def test_74_resource_limit__count_hom(self):
        res = self._invoke("count", "-f", "pf", "-n", "9", "--dom",
                           "1,2,3,4,5,6,7,8", "--cod", "1,2,3",
                           "--max-n", "3")
        self.assertEqual(res.exit_code, TT.EXIT_LIMIT)

        res = self._invoke("count", "-f", "pc", "-n", "6", "--dom", "1,2",
                           "--cod", "1")
        self.assertEqual(res.exit_code, TT.EXIT_LIMIT)

# vim:sw=4:ts=4:et:
