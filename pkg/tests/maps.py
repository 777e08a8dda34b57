#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
# pylint: disable=missing-docstring,invalid-name
from __future__ import absolute_import

import itertools
import math

import catalg.errors as E
import catalg.maps as TT
import tests.common as C


def _onto(n, dom, cod, values):
    return TT.morphism(C.subset(n, *dom), C.subset(n, *cod), values)


class SubsetTestCase(C.TestCase):

    def test_10_subset(self):
        self.assertEqual(TT.subset(3, [3, 1, 1]).elements, (1, 3))
        self.assertNotEqual(TT.subset(3, [1]), TT.subset(4, [1]))

    def test_12_subset__ng(self):
        for n, elts in ((2, [3]), (2, [0]), (-1, [])):
            with self.assertRaises(E.InvalidInput):
                TT.subset(n, elts)

    def test_20_all_subsets(self):
        for n in range(5):
            subs = TT.all_subsets(n)
            self.assertEqual(len(subs), 2 ** n)
            self.assertEqual(subs, sorted(subs, key=TT.object_key))


class MorphismTestCase(C.TestCase):

    def test_10_morphism__ng(self):
        with self.assertRaises(E.InvalidInput):
            _onto(2, [1, 2], [1, 2], [1, 1])  # not onto
        with self.assertRaises(E.InvalidInput):
            _onto(2, [1, 2], [1], [1])  # not total

    def test_20_is_order_preserving(self):
        self.assertTrue(TT.is_order_preserving(
            TT.identity(C.subset(3, 1, 3))))
        self.assertTrue(TT.is_order_preserving(
            _onto(2, [1, 2], [1], [1, 1])))
        self.assertFalse(TT.is_order_preserving(
            _onto(2, [1, 2], [1, 2], [2, 1])))

    def test_30_is_order_decreasing(self):
        for obj in TT.all_subsets(3):
            self.assertTrue(TT.is_order_decreasing(TT.identity(obj)))

        self.assertTrue(TT.is_order_decreasing(_onto(2, [2], [1], [1])))
        self.assertFalse(TT.is_order_decreasing(
            _onto(2, [1, 2], [1, 2], [2, 1])))

    def test_40_compose(self):
        ffun = _onto(3, [1, 2, 3], [1, 2], [1, 1, 2])
        gfun = _onto(3, [1, 2], [1], [1, 1])

        self.assertEqual(TT.compose(TT.identity(ffun.cod), ffun), ffun)
        self.assertEqual(TT.compose(ffun, TT.identity(ffun.dom)), ffun)
        self.assertEqual(TT.compose(gfun, ffun),
                         _onto(3, [1, 2, 3], [1], [1, 1, 1]))

    def test_42_compose__mismatch(self):
        with self.assertRaises(E.EndpointMismatch):
            TT.compose(TT.identity(C.subset(2, 2)),
                       TT.identity(C.subset(2, 1)))

    def test_44_compose__keeps_predicates(self):
        for tag in (TT.EO, TT.EF, TT.EC):
            funs = [f for a, b in itertools.product(TT.all_subsets(3),
                                                    repeat=2)
                    for f in TT.enumerate_hom(tag, a, b)]
            (pres, decr) = TT.predicates(tag)
            for ffun, gfun in itertools.product(funs, funs):
                if ffun.cod != gfun.dom:
                    continue
                comp = TT.compose(gfun, ffun)
                if pres:
                    self.assertTrue(TT.is_order_preserving(comp))
                if decr:
                    self.assertTrue(TT.is_order_decreasing(comp))

    def test_46_compose__associative(self):
        for tag, n in itertools.product((TT.EO, TT.EF, TT.EC), range(4)):
            by_dom = {}
            for dom, cod in itertools.product(TT.all_subsets(n), repeat=2):
                by_dom.setdefault(dom, []).extend(
                    TT.enumerate_hom(tag, dom, cod)
                )
            for ffun in itertools.chain.from_iterable(by_dom.values()):
                for gfun in by_dom[ffun.cod]:
                    for hfun in by_dom[gfun.cod]:
                        self.assertEqual(
                            TT.compose(hfun, TT.compose(gfun, ffun)),
                            TT.compose(TT.compose(hfun, gfun), ffun),
                            (tag, n)
                        )

    def test_50_apply(self):
        fun = _onto(3, [2, 3], [1], [1, 1])
        self.assertEqual(TT.apply(fun, 3), 1)
        with self.assertRaises(E.InvalidInput):
            TT.apply(fun, 1)


class EnumerationTestCase(C.TestCase):

    def test_10_enumerate_hom(self):
        self.assertEqual(
            len(TT.enumerate_hom("EO", C.subset(3, 1, 2, 3),
                                 C.subset(3, 1, 2))),
            math.comb(2, 1)
        )
        self.assertEqual(
            TT.enumerate_hom("EC", C.subset(2, 1, 2), C.subset(2, 1, 2)),
            [TT.identity(C.subset(2, 1, 2))]
        )
        self.assertEqual(
            [f.values for f in TT.enumerate_hom("EF", C.subset(3, 2, 3),
                                                C.subset(3, 1, 2))],
            [(1, 2), (2, 1)]
        )

    def test_12_enumerate_hom__by_predicates(self):
        for n in range(4):
            for aset, bset in itertools.product(TT.all_subsets(n),
                                                repeat=2):
                allf = TT._enumerate_onto(aset, bset)
                for tag in (TT.EO, TT.EF, TT.EC):
                    (pres, decr) = TT.predicates(tag)
                    ref = [f for f in allf
                           if (not pres or TT.is_order_preserving(f))
                           and (not decr or TT.is_order_decreasing(f))]
                    self.assertEqual(TT.enumerate_hom(tag, aset, bset), ref)

    def test_20_monoid_size(self):
        sizes = {TT.PO: [1, 2, 8, 38, 192],
                 TT.PF: [math.factorial(n + 1) for n in range(5)],
                 TT.PC: [1, 2, 6, 22, 90]}
        for tag, refs in sizes.items():
            for n, ref in enumerate(refs):
                self.assertEqual(TT.monoid_size(TT.MonoidFamily(tag, n)),
                                 ref, "{}_{}".format(tag, n))

    def test_22_monoid_size__pf_6(self):
        self.assertEqual(TT.monoid_size(TT.MonoidFamily(TT.PF, 6)),
                         math.factorial(7))

    def test_24_enumerate_monoid__cap(self):
        with self.assertRaises(E.ResourceLimit):
            TT.enumerate_monoid(TT.MonoidFamily(TT.PO, 3), max_n=2)

    def test_30_normalize_family__ng(self):
        for family in ("XX", None, 1):
            with self.assertRaises(E.InvalidInput):
                TT.normalize_family(family)

# vim:sw=4:ts=4:et:
