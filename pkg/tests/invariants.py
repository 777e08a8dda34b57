#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
# pylint: disable=missing-docstring,invalid-name
from __future__ import absolute_import

import itertools

import networkx

import catalg.categories as CA
import catalg.invariants as TT
import catalg.maps as M
import tests.common as C


def _is_irreducible(cat, fun):
    """Brute force: not an identity nor a composite of two non-identities.
    """
    if M.is_identity(fun):
        return False

    for ffun in CA.outgoing(cat, cat.index[fun.dom]):
        if M.is_identity(ffun) or ffun.cod == fun.cod:
            continue
        for gfun in CA.hom(cat, ffun.cod, fun.cod):
            if not M.is_identity(gfun) and M.compose(gfun, ffun) == fun:
                return False
    return True


class DepthTestCase(C.TestCase):

    def test_10_composition_depth(self):
        cat = CA.build_category("EC", 3)
        depth = TT.composition_depth(cat)
        const = M.morphism(M.chain(3, 3), M.chain(3, 1), [1, 1, 1])
        self.assertEqual(depth[const], 3)

        for obj in cat.objects:
            self.assertEqual(depth[M.identity(obj)], 0)

    def test_20_radical_dimension(self):
        cat = CA.build_category("EO", 2)
        loewy = TT.loewy_length(cat)
        self.assertEqual(TT.radical_dimension(cat, 0), 8)
        self.assertEqual(TT.radical_dimension(cat, 1), 2)
        self.assertEqual(TT.radical_dimension(cat, loewy), 0)
        self.assertEqual(TT.radical_dimensions(cat), [8, 2, 0])

    def test_30_loewy_length(self):
        for n in range(1, 6):
            self.assertEqual(TT.loewy_length(CA.build_category("EO", n)), n)
            ref = n * (n - 1) // 2 + 1
            self.assertEqual(TT.loewy_length(CA.build_category("EC", n)),
                             ref)
            self.assertEqual(TT.loewy_length(CA.build_category("EF", n)),
                             ref)

    def test_32_loewy_length__skeleton(self):
        for n in range(1, 6):
            self.assertEqual(TT.loewy_length(CA.build_skeleton_seo(n)), n)

    def test_40_defect(self):
        cat = CA.build_category("EO", 4)
        depth = TT.composition_depth(cat)
        for fun in CA.morphisms(cat):
            self.assertEqual(depth[fun], TT.defect(fun))

    def test_42_defect__additive(self):
        cat = CA.build_category("EO", 4)
        for ffun in CA.morphisms(cat):
            for gfun in CA.outgoing(cat, cat.index[ffun.cod]):
                self.assertEqual(TT.defect(M.compose(gfun, ffun)),
                                 TT.defect(gfun) + TT.defect(ffun))


class QuiverTestCase(C.TestCase):

    def test_10_seo_arrows(self):
        for n in range(1, 6):
            cat = CA.build_skeleton_seo(n)
            quiver = TT.irreducible_morphisms(cat)
            counts = {}
            for src, tgt, _fun in quiver.arrows:
                counts[(src, tgt)] = counts.get((src, tgt), 0) + 1
            ref = {(k + 1, k): k for k in range(1, n)}
            self.assertEqual(counts, ref)

    def test_20_brute_force(self):
        for family, n in itertools.product(("EF", "EC"), (2, 3)):
            cat = CA.build_category(family, n)
            arrows = set(f for _s, _t, f
                         in TT.irreducible_morphisms(cat).arrows)
            ref = set(f for f in CA.morphisms(cat) if _is_irreducible(cat, f))
            self.assertEqual(arrows, ref, "{}_{}".format(family, n))

    def test_30_ec_arrows(self):
        """Arrows of EC_n move a unique j to j - 1."""
        for n in range(1, 5):
            cat = CA.build_category("EC", n)
            for _src, _tgt, fun in TT.irreducible_morphisms(cat).arrows:
                moved = [(x, v) for x, v in M.as_dict(fun).items() if x != v]
                self.assertEqual(len(moved), 1)
                self.assertEqual(moved[0][1], moved[0][0] - 1)

    def test_32_ec_arrow_count(self):
        for n in range(1, 6):
            quiver = TT.irreducible_morphisms(CA.build_category("EC", n))
            self.assertEqual(len(quiver.arrows), (n - 1) * 2 ** (n - 1), n)

    def test_40_quiver_graph(self):
        cat = CA.build_category("EC", 2)
        graph = TT.quiver_graph(TT.irreducible_morphisms(cat), cat)
        self.assertEqual(graph.number_of_nodes(), 4)
        self.assertEqual(graph.number_of_edges(), 2)

    def test_42_longest_path(self):
        for family, n in itertools.product(("SEO", "EC", "EF"), range(1, 6)):
            if family == "SEO":
                (cat, bound) = (CA.build_skeleton_seo(n), n)
            else:
                cat = CA.build_category(family, n)
                bound = n * (n - 1) // 2

            graph = networkx.DiGraph(
                TT.quiver_graph(TT.irreducible_morphisms(cat))
            )
            longest = networkx.dag_longest_path_length(graph)
            self.assertLessEqual(longest, bound, (family, n))
            self.assertEqual(longest, TT.loewy_length(cat) - 1, (family, n))


class CartanAndBlocksTestCase(C.TestCase):

    def test_10_cartan_matrix(self):
        self.assertEqual(
            TT.cartan_matrix(CA.build_skeleton_seo(2)).entries,
            ((1, 0, 0), (0, 1, 1), (0, 0, 1))
        )

    def test_30_blocks(self):
        for family, n in itertools.product(("EO", "EF", "EC"), range(1, 6)):
            cat = CA.build_category(family, n)
            blocks = TT.blocks(cat)
            self.assertEqual(len(blocks), 2)
            self.assertEqual(blocks[0], [0])
            quiver = TT.irreducible_morphisms(cat)
            if family != "EO":
                self.assertEqual(len(TT.quiver_blocks(quiver)), 2)

    def test_32_blocks__empty(self):
        for family in ("EO", "EF", "EC"):
            self.assertEqual(TT.blocks(CA.build_category(family, 0)), [[0]])

# vim:sw=4:ts=4:et:
