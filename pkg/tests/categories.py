#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
# pylint: disable=missing-docstring,invalid-name
from __future__ import absolute_import

import itertools
import os.path

import catalg.categories as TT
import catalg.errors as E
import catalg.maps as M
import catalg.utils as U
import tests.common as C


class BuildTestCase(C.TestCase):

    def test_10_build_category(self):
        for family, n, nobjs, nmorphs in (("EC", 2, 4, 6), ("EO", 2, 4, 8),
                                          ("EF", 0, 1, 1)):
            cat = TT.build_category(family, n)
            self.assertEqual(len(cat.objects), nobjs)
            self.assertEqual(len(TT.morphisms(cat)), nmorphs)

    def test_12_build_category__monoid_tags(self):
        self.assertEqual(TT.build_category("pc", 2).family, M.EC)

    def test_14_build_category__ng(self):
        with self.assertRaises(E.InvalidInput):
            TT.build_category("SEO", 2)
        with self.assertRaises(E.ResourceLimit):
            TT.build_category("EO", 3, max_n=2)

    def test_20_build_skeleton_seo(self):
        cat = TT.build_skeleton_seo(2)
        self.assertEqual([o.elements for o in cat.objects],
                         [(), (1, ), (1, 2)])
        self.assertEqual(len(TT.hom(cat, M.chain(2, 2), M.chain(2, 1))), 1)

        cat = TT.build_skeleton_seo(3)
        self.assertEqual(len(TT.hom(cat, M.chain(3, 3), M.chain(3, 2))), 2)
        for obj in cat.objects:
            self.assertEqual(TT.hom(cat, obj, obj), (M.identity(obj), ))

    def test_22_build_skeleton_seo__punctured(self):
        cat = TT.build_skeleton_seo(3, punctured=True)
        self.assertEqual(len(cat.objects), 3)
        self.assertNotIn(M.chain(3, 0), cat.index)

    def test_30_hom__ng(self):
        cat = TT.build_skeleton_seo(2)
        with self.assertRaises(E.InvalidInput):
            TT.hom(cat, C.subset(2, 2), M.chain(2, 1))


class StructureTestCase(C.TestCase):

    def test_10_ec_3(self):
        rep = TT.check_structure(TT.build_category("EC", 3))
        self.assertTrue(rep.locally_trivial)
        self.assertTrue(rep.skeletal)
        self.assertTrue(rep.composition_closed)
        self.assertTrue(TT.is_partial_order(rep.order))

    def test_20_eo_2(self):
        cat = TT.build_category("EO", 2)
        rep = TT.check_structure(cat)
        self.assertTrue(rep.locally_trivial)
        self.assertFalse(rep.skeletal)
        self.assertFalse(TT.is_partial_order(rep.order))
        self.assertEqual(TT.isomorphic_objects(cat), [[0], [1, 2], [3]])

    def test_22_eo__isomorphic_iff_same_size(self):
        for n in range(6):
            cat = TT.build_category("EO", n)
            sizes = {}
            for idx, obj in enumerate(cat.objects):
                sizes.setdefault(len(obj.elements), []).append(idx)
            self.assertEqual(TT.isomorphic_objects(cat),
                             sorted(sizes.values()), n)

            for idxs in sizes.values():
                for i, j in itertools.product(idxs, repeat=2):
                    self.assertEqual(len(cat.homs[(i, j)]), 1, (n, i, j))

    def test_24_ef_ec__skeletal(self):
        for family, n in itertools.product(("EF", "EC"), range(6)):
            rep = TT.check_structure(TT.build_category(family, n))
            self.assertTrue(rep.skeletal and rep.locally_trivial,
                            (family, n))
            self.assertTrue(TT.is_partial_order(rep.order), (family, n))

    def test_30_seo__skeletal(self):
        for n in range(7):
            rep = TT.check_structure(TT.build_skeleton_seo(n))
            self.assertTrue(rep.skeletal and rep.locally_trivial, n)
            self.assertTrue(TT.is_partial_order(rep.order), n)

    def test_40_composition_failures(self):
        for family in ("EO", "EF", "EC"):
            cat = TT.build_category(family, 3, validate=False)
            self.assertEqual(TT.composition_failures(cat), [])

    def test_42_composition_failures__broken(self):
        cat = TT.build_skeleton_seo(3)
        homs = dict(cat.homs)
        homs[(3, 1)] = ()  # [3] -> [1] removed, but [3] -> [2] -> [1] kept
        self.assertTrue(TT.composition_failures(cat._replace(homs=homs)))

    def test_50_category_to_dict(self):
        res = TT.category_to_dict(TT.build_category("EC", 1))
        self.assertEqual(res["objects"], [[], [1]])
        self.assertEqual(len(res["homs"]), 2)

    def test_52_category_to_dict__res_files(self):
        paths = C.list_res_files("categories", "*.json")
        self.assertTrue(paths)
        for path in paths:
            (family, size) = os.path.basename(path)[:-5].split("_")
            cat = TT.build_category(family.upper(), int(size))
            with open(path) as inp:
                ref = U.loads_json(inp.read())
            self.assertEqual(TT.category_to_dict(cat), ref, path)

# vim:sw=4:ts=4:et:
