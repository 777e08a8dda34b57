#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
r"""Subsets of [n] = {1, ..., n} and onto maps between them.

Objects of every category here are subsets of [n] and morphisms are onto
maps between them. A partial function on [n] is identified with its
corestriction to the image, an onto map from its domain to its image.

.. note:: Subsets are sorted tuples of elements, carried along with the
   ambient size n; two subsets are equal only if their n are equal, too.
"""
from __future__ import absolute_import

import collections
import itertools
import logging

from . import errors, utils


LOG = logging.getLogger(__name__)

MONOID_FAMILIES = (PO, PF, PC) = ("PO", "PF", "PC")

# Category families and the monoid each one linearizes.
CATEGORY_FAMILIES = (EO, EF, EC, SEO) = ("EO", "EF", "EC", "SEO")

# family tag -> (order-preserving, order-decreasing)
_PREDICATES = {
    PO: (True, False), EO: (True, False), SEO: (True, False),
    PF: (False, True), EF: (False, True),
    PC: (True, True), EC: (True, True),
}

SubsetOfN = collections.namedtuple("SubsetOfN", "n elements")
Morphism = collections.namedtuple("Morphism", "n dom cod values")
MonoidFamily = collections.namedtuple("MonoidFamily", "tag n")


def subset(n, elements=()):
    """
    :param n: Ambient size
    :param elements: An iterable yields ints in [1, n]

    :return: A :class:`SubsetOfN` object
    :raises: InvalidInput

    >>> subset(3, [3, 1])
    SubsetOfN(n=3, elements=(1, 3))
    >>> subset(0)
    SubsetOfN(n=0, elements=())
    """
    elts = tuple(sorted(set(elements)))
    if n < 0 or any(e < 1 or e > n for e in elts):
        raise errors.InvalidInput("Not a subset of [{}]: "
                                  "{!r}".format(n, elements))

    return SubsetOfN(n, elts)


def chain(n, size):
    """
    :return: The subset [size] = {1, ..., size} of [n]

    >>> chain(4, 2)
    SubsetOfN(n=4, elements=(1, 2))
    """
    return subset(n, range(1, size + 1))


def subset_text(obj):
    """
    >>> subset_text(subset(3, [1, 3]))
    '{1,3}'
    >>> subset_text(subset(2))
    '{}'
    """
    return "{" + ",".join(str(e) for e in obj.elements) + "}"


def object_key(obj):
    """
    Sort key of objects: cardinality first, then lexicographic.

    >>> sorted([subset(3, [2, 3]), subset(3, [3]), subset(3, [1, 2])],
    ...        key=object_key)[0]
    SubsetOfN(n=3, elements=(3,))
    """
    return (len(obj.elements), obj.elements)


def all_subsets(n):
    """
    :param n: Ambient size
    :return: A list of all subsets of [n] in the object order

    >>> [s.elements for s in all_subsets(2)]
    [(), (1,), (2,), (1, 2)]
    """
    return [SubsetOfN(n, elts) for size in range(n + 1)
            for elts in itertools.combinations(range(1, n + 1), size)]


def _check_values(dom, cod, values):
    """
    :raises: InvalidInput if `values` does not give an onto map dom -> cod
    """
    if dom.n != cod.n:
        raise errors.InvalidInput("Ambient sizes differ: "
                                  "{} != {}".format(dom.n, cod.n))

    if len(values) != len(dom.elements):
        raise errors.InvalidInput("Not total on {}: "
                                  "{!r}".format(dom.elements, values))

    if set(values) != set(cod.elements):
        raise errors.InvalidInput("Image of {!r} is not {}"
                                  "".format(values, cod.elements))


def morphism(dom, cod, values):
    """
    :param dom: A :class:`SubsetOfN` object, the domain
    :param cod: A :class:`SubsetOfN` object, the codomain
    :param values:
        A sequence of ints, values[k] is the image of the k-th (smallest
        first) element of `dom`

    :return: A :class:`Morphism` object
    :raises: InvalidInput

    >>> morphism(subset(2, [1, 2]), subset(2, [1]), [1, 1]).values
    (1, 1)
    """
    values = tuple(values)
    _check_values(dom, cod, values)

    return Morphism(dom.n, dom, cod, values)


def identity(obj):
    """
    >>> identity(subset(3, [1, 3])).values
    (1, 3)
    """
    return Morphism(obj.n, obj, obj, obj.elements)


def is_identity(fun):
    """
    >>> is_identity(identity(subset(2, [2])))
    True
    """
    return fun.dom == fun.cod and fun.values == fun.dom.elements


def as_dict(fun):
    """
    >>> as_dict(identity(subset(2, [1, 2])))
    {1: 1, 2: 2}
    """
    return dict(zip(fun.dom.elements, fun.values))


def apply(fun, elt):
    """
    :param fun: A :class:`Morphism` object
    :param elt: An element of the domain of `fun`

    :return: The image of `elt`
    :raises: InvalidInput
    """
    try:
        return fun.values[fun.dom.elements.index(elt)]
    except ValueError:
        raise errors.InvalidInput("{} is not in the domain "
                                  "{}".format(elt, fun.dom.elements))


def is_order_preserving(fun):
    """
    True if x <= y implies fun(x) <= fun(y); as the domain is sorted, it
    is enough to check the value table is non-decreasing.

    >>> is_order_preserving(identity(subset(3, [1, 3])))
    True
    >>> is_order_preserving(morphism(subset(2, [1, 2]), subset(2, [1, 2]),
    ...                              [2, 1]))
    False
    """
    return all(a <= b for a, b in zip(fun.values, fun.values[1:]))


def is_order_decreasing(fun):
    """
    >>> is_order_decreasing(morphism(subset(2, [2]), subset(2, [1]), [1]))
    True
    >>> is_order_decreasing(morphism(subset(2, [1, 2]), subset(2, [1, 2]),
    ...                              [2, 1]))
    False
    """
    return all(v <= x for x, v in zip(fun.dom.elements, fun.values))


def compose(gfun, ffun):
    """
    Composite `gfun` after `ffun`.

    :param gfun: A :class:`Morphism` object applied second
    :param ffun: A :class:`Morphism` object applied first

    :return: A :class:`Morphism` object, dom = dom(ffun), cod = cod(gfun)
    :raises: EndpointMismatch

    >>> f = morphism(subset(3, [1, 2, 3]), subset(3, [1, 2]), [1, 1, 2])
    >>> g = morphism(subset(3, [1, 2]), subset(3, [1]), [1, 1])
    >>> compose(g, f).values
    (1, 1, 1)
    """
    if ffun.cod != gfun.dom:
        raise errors.EndpointMismatch("Not composable: {} -> {} then "
                                      "{} -> {}".format(ffun.dom.elements,
                                                        ffun.cod.elements,
                                                        gfun.dom.elements,
                                                        gfun.cod.elements))
    gmap = as_dict(gfun)
    return Morphism(ffun.n, ffun.dom, gfun.cod,
                    tuple(gmap[v] for v in ffun.values))


def normalize_family(family):
    """
    :param family:
        A :class:`MonoidFamily` object or a family tag, one of PO, PF, PC,
        EO, EF, EC, SEO (case insensitive)

    :return: A family tag in upper case
    :raises: InvalidInput

    >>> normalize_family("pc")
    'PC'
    >>> normalize_family(MonoidFamily("PF", 3))
    'PF'
    """
    tag = family.tag if isinstance(family, MonoidFamily) else family
    try:
        tag = tag.upper()
    except AttributeError:
        raise errors.InvalidInput("Invalid family: {!r}".format(family))

    if tag not in _PREDICATES:
        raise errors.InvalidInput("Unknown family: {!r}".format(family))

    return tag


def predicates(family):
    """
    :return: A tuple of (order-preserving, order-decreasing) flags

    >>> predicates("EC")
    (True, True)
    """
    return _PREDICATES[normalize_family(family)]


def _op_value_tables_itr(dom, cod):
    """
    Onto order-preserving maps from `dom` to `cod`: choose where the value
    steps up among the |dom| - 1 gaps.
    """
    (size, csize) = (len(dom.elements), len(cod.elements))
    if size == csize == 0:
        yield ()
        return

    if csize == 0 or csize > size:
        return

    for cuts in itertools.combinations(range(1, size), csize - 1):
        bounds = (0, ) + cuts + (size, )
        yield tuple(itertools.chain.from_iterable(
            [cod.elements[k]] * (bounds[k + 1] - bounds[k])
            for k in range(csize)
        ))


def _decreasing_value_tables_itr(dom, cod):
    """Onto order-decreasing maps from `dom` to `cod`.
    """
    choices = [[b for b in cod.elements if b <= x] for x in dom.elements]
    for vals in itertools.product(*choices):
        if set(vals) == set(cod.elements):
            yield vals


def _onto_value_tables_itr(dom, cod):
    """All onto maps from `dom` to `cod`.
    """
    for vals in itertools.product(cod.elements, repeat=len(dom.elements)):
        if set(vals) == set(cod.elements):
            yield vals


def enumerate_hom(family, dom, cod):
    """
    :param family: A family tag or a :class:`MonoidFamily` object
    :param dom: A :class:`SubsetOfN` object
    :param cod: A :class:`SubsetOfN` object

    :return:
        A list of :class:`Morphism` objects in the hom-set, sorted
        lexicographically by value tables

    >>> [f.values for f in enumerate_hom("EO", subset(3, [1, 2, 3]),
    ...                                  subset(3, [1, 2]))]
    [(1, 1, 2), (1, 2, 2)]
    >>> [f.values for f in enumerate_hom("EF", subset(3, [2, 3]),
    ...                                  subset(3, [1, 2]))]
    [(1, 2), (2, 1)]
    """
    if dom.n != cod.n:
        raise errors.InvalidInput("Ambient sizes differ: "
                                  "{} != {}".format(dom.n, cod.n))

    (preserving, decreasing) = predicates(family)
    if preserving:
        tables = _op_value_tables_itr(dom, cod)
        if decreasing:
            tables = (t for t in tables
                      if all(v <= x for x, v in zip(dom.elements, t)))
    else:
        tables = _decreasing_value_tables_itr(dom, cod)

    return [Morphism(dom.n, dom, cod, t) for t in sorted(tables)]


def _enumerate_onto(dom, cod):
    """
    All onto maps without order predicates; the full category E_n, used
    as a test oracle only.
    """
    return [Morphism(dom.n, dom, cod, t)
            for t in sorted(_onto_value_tables_itr(dom, cod))]


def corestrict(n, pairs):
    """
    Corestrict a partial function on [n] to its image.

    :param n: Ambient size
    :param pairs: An iterable yields (x, f(x)) pairs

    :return: A :class:`Morphism` object onto the image

    >>> corestrict(3, [(3, 1), (2, 1)])
    Morphism(n=3, dom=SubsetOfN(n=3, elements=(2, 3)), \
cod=SubsetOfN(n=3, elements=(1,)), values=(1, 1))
    """
    pairs = sorted(pairs)
    dom = subset(n, [x for x, _v in pairs])
    cod = subset(n, [v for _x, v in pairs])

    return morphism(dom, cod, [v for _x, v in pairs])


def _partial_functions_itr(n, preserving, decreasing):
    """
    Brute force over all partial functions on [n], independent of
    :func:`enumerate_hom`.
    """
    for dom in all_subsets(n):
        choices = [range(1, (x if decreasing else n) + 1)
                   for x in dom.elements]
        for vals in itertools.product(*choices):
            if preserving and \
                    any(a > b for a, b in zip(vals, vals[1:])):
                continue
            yield list(zip(dom.elements, vals))


def enumerate_monoid(family, max_n=None):
    """
    :param family:
        A :class:`MonoidFamily` object, or a tuple of (tag, n)
    :param max_n: Cap of n [utils.DEFAULT_MAX_N["monoid"]]

    :return:
        A list of :class:`Morphism` objects, the corestrictions of the
        elements of the monoid
    :raises: ResourceLimit

    >>> len(enumerate_monoid(MonoidFamily("PO", 2)))
    8
    """
    (tag, n) = family
    utils.check_size(n, "monoid", max_n=max_n)
    (preserving, decreasing) = predicates(tag)

    LOG.debug("Enumerating the monoid %s_%d", tag, n)
    res = [corestrict(n, pairs) for pairs
           in _partial_functions_itr(n, preserving, decreasing)]

    return sorted(res, key=lambda f: (object_key(f.dom), object_key(f.cod),
                                      f.values))


def monoid_size(family, max_n=None):
    """
    >>> monoid_size(MonoidFamily("PF", 3))
    24
    """
    return len(enumerate_monoid(family, max_n=max_n))

# vim:sw=4:ts=4:et:
