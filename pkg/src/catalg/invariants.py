#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
r"""Invariants of the category algebra of a finite EI category.

The radical of the algebra is spanned by the non-isomorphisms and its k-th
power by the composites of k non-isomorphisms. So everything below is
computed from the composition depth of morphisms:

- Rad^k: the morphisms of depth >= k,
- Loewy length: 1 + the maximum depth,
- quiver: the morphisms of depth 1 (irreducible morphisms),
- Cartan matrix: the hom-set sizes,
- blocks: the connected components of the category.
"""
from __future__ import absolute_import

import collections
import logging

import networkx

from . import categories, maps, matrix


LOG = logging.getLogger(__name__)

# :param vertices: A tuple of object indices
# :param arrows: A tuple of (source index, target index, maps.Morphism)
Quiver = collections.namedtuple("Quiver", "vertices arrows")


def _iso_classes(cat):
    """
    :return: {object index: index of its class of isomorphic objects}
    """
    return {idx: cid for cid, comp
            in enumerate(categories.isomorphic_objects(cat))
            for idx in comp}


def is_isomorphism(cat, fun, classes=None):
    """
    In a finite EI category, a morphism is an isomorphism iff its domain and
    codomain are isomorphic.

    :param cat: A categories.FiniteCategory object
    :param fun: A maps.Morphism object of `cat`
    :param classes: Cached result of :func:`_iso_classes`
    """
    if classes is None:
        classes = _iso_classes(cat)

    return classes[cat.index[fun.dom]] == classes[cat.index[fun.cod]]


def _processing_order(cat):
    """
    Object indices such that every non-isomorphism goes from an object to
    an object listed earlier.
    """
    cgraph = networkx.condensation(categories.object_graph(cat))
    members = cgraph.graph["mapping"]
    rank = {cid: pos for pos, cid
            in enumerate(reversed(list(networkx.topological_sort(cgraph))))}

    return sorted(range(len(cat.objects)), key=lambda i: (rank[members[i]], i))


def composition_depth(cat):
    """
    The maximum number of non-isomorphisms a morphism factors into.

    Objects are processed sinks first, so when a non-isomorphism h: A -> X
    is extended by g: X -> B, the depth of g is already final; the rightmost
    factor of a longest factorization can be taken irreducible.

    :param cat: A categories.FiniteCategory object
    :return: {maps.Morphism: depth}

    >>> cat = categories.build_category("EC", 3)
    >>> depth = composition_depth(cat)
    >>> const = maps.morphism(maps.chain(3, 3), maps.chain(3, 1), [1, 1, 1])
    >>> depth[const]
    3
    """
    classes = _iso_classes(cat)
    depth = {}

    for idx in _processing_order(cat):
        outs = categories.outgoing(cat, idx)
        for fun in outs:
            depth[fun] = 0 if is_isomorphism(cat, fun, classes) else 1

        for hfun in outs:
            if is_isomorphism(cat, hfun, classes):
                continue

            mid = cat.index[hfun.cod]
            for gfun in categories.outgoing(cat, mid):
                if is_isomorphism(cat, gfun, classes):
                    continue

                fun = maps.compose(gfun, hfun)
                depth[fun] = max(depth[fun], depth[gfun] + 1)

    LOG.debug("%s_%d: max depth = %d", cat.family, cat.n,
              max(depth.values()))
    return depth


def radical_dimension(cat, k, depth=None):
    """
    :param cat: A categories.FiniteCategory object
    :param k: A non-negative int
    :param depth: Cached result of :func:`composition_depth`

    :return: The dimension of Rad^k, the number of morphisms of depth >= k

    >>> cat = categories.build_category("EO", 2)
    >>> [radical_dimension(cat, k) for k in (0, 1, 2)]
    [8, 2, 0]
    """
    if depth is None:
        depth = composition_depth(cat)

    return sum(1 for d in depth.values() if d >= k)


def radical_dimensions(cat, depth=None):
    """
    :return: A list of dim Rad^k for k = 0, 1, ..., Loewy length
    """
    if depth is None:
        depth = composition_depth(cat)

    return [radical_dimension(cat, k, depth=depth)
            for k in range(loewy_length(cat, depth=depth) + 1)]


def loewy_length(cat, depth=None):
    """
    :return: The minimal k such that Rad^k = 0

    >>> loewy_length(categories.build_category("EO", 4))
    4
    >>> loewy_length(categories.build_category("EF", 4))
    7
    """
    if depth is None:
        depth = composition_depth(cat)

    return 1 + max(depth.values())


def irreducible_morphisms(cat, depth=None):
    """
    :param cat: A categories.FiniteCategory object
    :param depth: Cached result of :func:`composition_depth`

    :return: A :class:`Quiver` object, arrows are irreducible morphisms

    >>> len(irreducible_morphisms(categories.build_category("EC", 3)).arrows)
    8
    """
    if depth is None:
        depth = composition_depth(cat)

    arrows = tuple((cat.index[f.dom], cat.index[f.cod], f)
                   for f in categories.morphisms(cat) if depth[f] == 1)

    return Quiver(tuple(range(len(cat.objects))), arrows)


def quiver_graph(quiver, cat=None):
    """
    :param quiver: A :class:`Quiver` object
    :param cat: A categories.FiniteCategory object to label vertices

    :return: A :class:`networkx.MultiDiGraph` object
    """
    graph = networkx.MultiDiGraph()
    for idx in quiver.vertices:
        graph.add_node(idx, obj=(cat.objects[idx] if cat else None))

    for src, tgt, fun in quiver.arrows:
        graph.add_edge(src, tgt, morphism=fun)

    return graph


def cartan_matrix(cat):
    """
    Entry (i, j) is the size of the hom-set from the j-th object to the
    i-th object.

    :param cat: A categories.FiniteCategory object
    :return: A matrix.ExactMatrix object

    >>> cartan_matrix(categories.build_skeleton_seo(2)).entries
    ((1, 0, 0), (0, 1, 1), (0, 0, 1))
    """
    return matrix.from_function(len(cat.objects),
                                lambda i, j: len(cat.homs[(j, i)]))


def object_labels(cat):
    """
    >>> object_labels(categories.build_skeleton_seo(1))
    ['{}', '{1}']
    """
    return [maps.subset_text(obj) for obj in cat.objects]


def blocks(cat):
    """
    :param cat: A categories.FiniteCategory object

    :return:
        A list of lists of object indices, the connected components of the
        category, sorted by the smallest index

    >>> blocks(categories.build_category("EO", 3))[0]
    [0]
    >>> len(blocks(categories.build_category("EC", 0)))
    1
    """
    graph = categories.object_graph(cat).to_undirected()
    return sorted(sorted(c) for c in networkx.connected_components(graph))


def quiver_blocks(quiver):
    """
    :return: Connected components of the quiver, same form as :func:`blocks`
    """
    graph = quiver_graph(quiver).to_undirected()
    return sorted(sorted(c) for c in networkx.connected_components(graph))


def defect(fun):
    """
    :param fun: A maps.Morphism object of EO_n
    :return: |dom| - |cod|

    >>> defect(maps.identity(maps.chain(3, 2)))
    0
    >>> defect(maps.morphism(maps.chain(3, 3), maps.chain(3, 1), [1, 1, 1]))
    2
    """
    return len(fun.dom.elements) - len(fun.cod.elements)

# vim:sw=4:ts=4:et:
