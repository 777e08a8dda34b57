#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
r"""Finite categories EO_n, EF_n, EC_n and the skeleton SEO_n.

Objects are subsets of [n]; the hom-set from A to B consists of the onto
maps A -> B of the family (order-preserving for EO, order-decreasing for
EF, both for EC). SEO_n is the full subcategory of EO_n on the chains
[0], [1], ..., [n]. Every hom-set is materialized.
"""
from __future__ import absolute_import

import collections
import functools
import itertools
import logging

import networkx

from . import errors, maps, utils


LOG = logging.getLogger(__name__)

_CAP_KEYS = {maps.EO: "invariants:po", maps.EF: "invariants:pf",
             maps.EC: "invariants:pc"}

# :param family: one of maps.CATEGORY_FAMILIES
# :param objects: A tuple of maps.SubsetOfN in the object order
# :param homs: {(source index, target index): (maps.Morphism, ...)}
# :param index: {maps.SubsetOfN: index in `objects`}
FiniteCategory = collections.namedtuple("FiniteCategory",
                                        "family n objects homs index")

ObjectOrder = collections.namedtuple(
    "ObjectOrder", "pairs reflexive antisymmetric transitive"
)

StructureReport = collections.namedtuple(
    "StructureReport",
    "locally_trivial skeletal composition_closed identities order"
)


def _make_category(family, n, objects):
    """
    :param family: A family tag
    :param n: Ambient size
    :param objects: A list of maps.SubsetOfN objects in the object order
    """
    homs = {(i, j): tuple(maps.enumerate_hom(family, src, tgt))
            for (i, src), (j, tgt)
            in itertools.product(enumerate(objects), repeat=2)}
    index = {obj: idx for idx, obj in enumerate(objects)}

    return FiniteCategory(family, n, tuple(objects), homs, index)


def composition_failures(cat):
    """
    :param cat: A :class:`FiniteCategory` object
    :return: A list of (g, f) pairs whose composite is not a morphism of `cat`
    """
    homsets = {key: frozenset(fs) for key, fs in cat.homs.items()}
    size = len(cat.objects)
    res = []
    for (i, j), ffuns in cat.homs.items():
        for k in range(size):
            for ffun, gfun in itertools.product(ffuns, cat.homs[(j, k)]):
                if maps.compose(gfun, ffun) not in homsets[(i, k)]:
                    res.append((gfun, ffun))
    return res


def _validate(cat):
    """
    :raises: Error if `cat` is not closed under composition
    """
    fails = composition_failures(cat)
    if fails:
        raise errors.Error("{}_{} is not closed under composition, e.g. "
                           "{!r}".format(cat.family, cat.n, fails[0]))


@functools.lru_cache(maxsize=32)
def build_category(family, n, max_n=None, validate=True):
    """
    :param family: EO, EF or EC (or PO, PF, PC for the same)
    :param n: Ambient size
    :param max_n: Cap of n [utils.DEFAULT_MAX_N]
    :param validate: Check the composition closure if True

    :return: A :class:`FiniteCategory` object
    :raises: InvalidInput, ResourceLimit

    >>> cat = build_category("EC", 2)
    >>> (len(cat.objects), len(morphisms(cat)))
    (4, 6)
    """
    family = {maps.PO: maps.EO, maps.PF: maps.EF,
              maps.PC: maps.EC}.get(maps.normalize_family(family), family)
    family = maps.normalize_family(family)
    if family not in _CAP_KEYS:
        raise errors.InvalidInput("Not a family of E_n: {}".format(family))

    utils.check_size(n, _CAP_KEYS[family], max_n=max_n)

    LOG.debug("Building %s_%d", family, n)
    cat = _make_category(family, n, maps.all_subsets(n))
    if validate:
        _validate(cat)

    return cat


@functools.lru_cache(maxsize=32)
def build_skeleton_seo(n, punctured=False):
    """
    :param n: Ambient size
    :param punctured: Remove the object [0] (empty set) if True

    :return: A :class:`FiniteCategory` object of SEO_n (or SEO_n•)

    >>> cat = build_skeleton_seo(3)
    >>> len(hom(cat, maps.chain(3, 3), maps.chain(3, 2)))
    2
    """
    if n < 0:
        raise errors.InvalidInput("Size must be non-negative: "
                                  "{!r}".format(n))

    objects = [maps.chain(n, k) for k in range(1 if punctured else 0, n + 1)]
    return _make_category(maps.SEO, n, objects)


def hom(cat, src, tgt):
    """
    :param cat: A :class:`FiniteCategory` object
    :param src: A maps.SubsetOfN object
    :param tgt: A maps.SubsetOfN object

    :return: A tuple of maps.Morphism objects
    """
    try:
        return cat.homs[(cat.index[src], cat.index[tgt])]
    except KeyError:
        raise errors.InvalidInput("Not objects of {}_{}: {}, "
                                  "{}".format(cat.family, cat.n, src, tgt))


def morphisms(cat):
    """
    :return: A list of all the morphisms of `cat`
    """
    return list(itertools.chain.from_iterable(
        cat.homs[key] for key in sorted(cat.homs)
    ))


def outgoing(cat, idx):
    """
    :return: A list of the morphisms of `cat` from the `idx`-th object
    """
    return list(itertools.chain.from_iterable(
        cat.homs[(idx, j)] for j in range(len(cat.objects))
    ))


def object_graph(cat):
    """
    :return:
        A :class:`networkx.DiGraph` object has the object indices as nodes
        and an edge i -> j (i != j) if the hom-set from i to j is not empty
    """
    graph = networkx.DiGraph()
    graph.add_nodes_from((idx, dict(obj=obj))
                         for idx, obj in enumerate(cat.objects))
    graph.add_edges_from((i, j) for (i, j), fs in cat.homs.items()
                         if fs and i != j)
    return graph


def isomorphic_objects(cat):
    """
    :return:
        A list of lists of object indices, the classes of mutually
        isomorphic objects, smallest index first

    >>> isomorphic_objects(build_category("EO", 2))
    [[0], [1, 2], [3]]
    """
    comps = networkx.strongly_connected_components(object_graph(cat))
    return sorted(sorted(c) for c in comps)


def object_order(cat):
    """
    The relation a <= b iff the hom-set from a to b is not empty.

    :return: A :class:`ObjectOrder` object
    """
    size = len(cat.objects)
    pairs = frozenset(key for key, fs in cat.homs.items() if fs)

    refl = all((i, i) in pairs for i in range(size))
    antisym = all(i == j or (j, i) not in pairs for i, j in pairs)
    trans = all((i, k) in pairs for i, j in pairs for k in range(size)
                if (j, k) in pairs)

    return ObjectOrder(pairs, refl, antisym, trans)


def is_partial_order(order):
    """
    :param order: A :class:`ObjectOrder` object
    """
    return order.reflexive and order.antisymmetric and order.transitive


def check_structure(cat):
    """
    :param cat: A :class:`FiniteCategory` object
    :return: A :class:`StructureReport` object

    >>> rep = check_structure(build_category("EO", 2))
    >>> (rep.locally_trivial, rep.skeletal)
    (True, False)
    """
    size = len(cat.objects)
    identities = all(maps.identity(obj) in cat.homs[(idx, idx)]
                     for idx, obj in enumerate(cat.objects))
    locally_trivial = all(cat.homs[(idx, idx)] == (maps.identity(obj), )
                          for idx, obj in enumerate(cat.objects))
    skeletal = all(not (cat.homs[(i, j)] and cat.homs[(j, i)])
                   for i, j in itertools.combinations(range(size), 2))
    closed = not composition_failures(cat)

    if not (identities and locally_trivial and closed):
        LOG.warning("%s_%d: identities=%s, locally trivial=%s, closed=%s",
                    cat.family, cat.n, identities, locally_trivial, closed)

    return StructureReport(locally_trivial, skeletal, closed, identities,
                           object_order(cat))


def category_to_dict(cat):
    """
    :param cat: A :class:`FiniteCategory` object
    :return: A mapping object can be serialized to JSON

    >>> category_to_dict(build_skeleton_seo(1))["homs"]
    [{'source': [], 'target': [], 'values': [[]]}, \
{'source': [1], 'target': [1], 'values': [[1]]}]
    """
    return dict(family=cat.family, n=cat.n,
                objects=[list(o.elements) for o in cat.objects],
                homs=[dict(source=list(cat.objects[i].elements),
                           target=list(cat.objects[j].elements),
                           values=[list(f.values) for f in fs])
                      for (i, j), fs in sorted(cat.homs.items()) if fs])

# vim:sw=4:ts=4:et:
