#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
r"""Quiver presentations of SEO_n, EC_n and EF_n and their verification.

Generators are labelled irreducible morphisms:

- Simplicial(k, i), d_i^k: [k+1] -> [k], the onto order-preserving map
  with f(i) = f(i+1),
- Catalan(A, j), d_j^A: A -> A_j, j -> j-1 and the rest fixed,
- Decreasing(A, i, j), d_{i,j}^A: A -> A_{i,j}, j -> i and the rest fixed,
  where i <|_A j, i.e. i < j and (i, j] is in A.

A path is a word of labels in composition order: the last label is
applied first, so (g, f) means g after f.

A presentation (Q, R) is verified by enumerating every path of each
hom-pair, taking the least equivalence closed under replacing a subword
matching one side of a relation by the other side, and checking that the
classes and the morphisms of the hom-set are in one-to-one correspondence
by evaluation.
"""
from __future__ import absolute_import

import collections
import functools
import itertools
import logging

import networkx.utils

from . import categories, errors, maps, utils


LOG = logging.getLogger(__name__)

Simplicial = collections.namedtuple("Simplicial", "k i")
Catalan = collections.namedtuple("Catalan", "A j")
Decreasing = collections.namedtuple("Decreasing", "A i j")

# :param source: A maps.SubsetOfN object
# :param target: A maps.SubsetOfN object
# :param labels: A tuple of labels in composition order
Path = collections.namedtuple("Path", "source target labels")
Relation = collections.namedtuple("Relation", "name left right")

PathClass = collections.namedtuple("PathClass", "morphism paths")

# :param classes: {(source index, target index): [PathClass]}
# :param sound: True if every class evaluates to a single morphism
CongruenceResult = collections.namedtuple("CongruenceResult",
                                          "classes sound")

HomPairResult = collections.namedtuple(
    "HomPairResult", "source target paths classes hom_size injective"
)
Witness = collections.namedtuple("Witness", "source target left right reason")
VerificationReport = collections.namedtuple(
    "VerificationReport",
    "family n passed generator_count relation_count unsound hom_pairs witness"
)

# A morphism of the categories of strict order-preserving maps: sizes of the
# domain and the codomain and the value table.
StrictMap = collections.namedtuple("StrictMap", "dom cod values")
FunctorPair = collections.namedtuple("FunctorPair", "n G G_inv F F_inv")

_FAMILIES = {maps.PO: maps.SEO, maps.EO: maps.SEO, maps.SEO: maps.SEO,
             maps.PC: maps.EC, maps.EC: maps.EC,
             maps.PF: maps.EF, maps.EF: maps.EF}

_CAP_KEYS = {maps.SEO: "presentation:po", maps.EC: "presentation:pc",
             maps.EF: "presentation:pf"}


def normalize_family(family):
    """
    :param family: A family tag; PO and EO mean SEO, PC means EC, PF means EF
    :return: One of SEO, EC, EF

    >>> normalize_family("po")
    'SEO'
    """
    return _FAMILIES[maps.normalize_family(family)]


def is_below(aset, i, j):
    """
    i <|_A j: i < j and every x with i < x <= j is in A.

    >>> is_below(maps.subset(4, [2, 3]), 1, 3)
    True
    >>> is_below(maps.subset(4, [3]), 1, 3)
    False
    """
    return 1 <= i < j and all(x in aset.elements for x in range(i + 1, j + 1))


def _moving_map(aset, src, dst):
    """The map on `aset` moving `src` to `dst` and fixing the rest.
    """
    values = [dst if x == src else x for x in aset.elements]
    return maps.morphism(aset, maps.subset(aset.n, values), values)


@functools.lru_cache(maxsize=None)
def label_morphism(label, n=None):
    """
    :param label: A generator label
    :param n: Ambient size, needed for Simplicial labels only

    :return: A maps.Morphism object
    :raises: InvalidInput

    >>> label_morphism(Simplicial(2, 1), 3).values
    (1, 1, 2)
    >>> label_morphism(Catalan(maps.subset(3, [1, 3]), 3)).values
    (1, 2)
    >>> label_morphism(Decreasing(maps.subset(3, [2, 3]), 1, 3)).values
    (2, 1)
    """
    if isinstance(label, Simplicial):
        if n is None or not 1 <= label.i <= label.k or label.k + 1 > n:
            raise errors.InvalidInput("Invalid label {!r} for n={!r}"
                                      "".format(label, n))
        dom = maps.chain(n, label.k + 1)
        return maps.morphism(dom, maps.chain(n, label.k),
                             [x if x <= label.i else x - 1
                              for x in dom.elements])

    if isinstance(label, Catalan):
        if label.j < 2 or label.j not in label.A.elements:
            raise errors.InvalidInput("Invalid label {!r}".format(label))
        return _moving_map(label.A, label.j, label.j - 1)

    if isinstance(label, Decreasing):
        if label.j not in label.A.elements or \
                not is_below(label.A, label.i, label.j):
            raise errors.InvalidInput("Invalid label {!r}".format(label))
        return _moving_map(label.A, label.j, label.i)

    raise errors.InvalidInput("Not a label: {!r}".format(label))


def label_text(label):
    """
    >>> label_text(Simplicial(2, 1))
    'd_1^2'
    >>> label_text(Catalan(maps.subset(2, [1, 2]), 2))
    'd_2^{1,2}'
    >>> label_text(Decreasing(maps.subset(3, [2, 3]), 1, 2))
    'd_1,2^{2,3}'
    """
    if isinstance(label, Simplicial):
        return "d_{}^{}".format(label.i, label.k)

    if isinstance(label, Catalan):
        return "d_{}^{}".format(label.j, maps.subset_text(label.A))

    return "d_{},{}^{}".format(label.i, label.j, maps.subset_text(label.A))


def path_text(path):
    """
    >>> path_text(Path(maps.chain(3, 3), maps.chain(3, 1),
    ...                (Simplicial(1, 1), Simplicial(2, 2))))
    'd_1^1 d_2^2'
    >>> path_text(Path(maps.chain(1, 1), maps.chain(1, 1), ()))
    'id_{1}'
    """
    if not path.labels:
        return "id_" + maps.subset_text(path.source)

    return " ".join(label_text(label) for label in path.labels)


def generators(family, n):
    """
    :param family: SEO, EC or EF (or PO, PC, PF)
    :param n: Ambient size

    :return: A list of labels of the irreducible morphisms

    >>> generators("SEO", 3)
    [Simplicial(k=1, i=1), Simplicial(k=2, i=1), Simplicial(k=2, i=2)]
    >>> [label_text(g) for g in generators("EC", 2)]
    ['d_2^{2}', 'd_2^{1,2}']
    >>> [label_text(g) for g in generators("EF", 2)]
    ['d_1,2^{2}', 'd_1,2^{1,2}']
    """
    family = normalize_family(family)
    if family == maps.SEO:
        return [Simplicial(k, i) for k in range(1, n) for i in range(1, k + 1)]

    objs = maps.all_subsets(n)
    if family == maps.EC:
        return [Catalan(aset, j) for aset in objs
                for j in aset.elements if j >= 2]

    return [Decreasing(aset, i, j) for aset in objs
            for j in aset.elements for i in range(1, j)
            if is_below(aset, i, j)]


def _catalan_word(aset, steps):
    """
    :param steps: Elements moved down by one, in the order applied
    :return: A :class:`Path` object or None if some step is not admissible
    """
    (cur, labels) = (aset, [])
    for j in steps:
        if j < 2 or j not in cur.elements:
            return None
        labels.append(Catalan(cur, j))
        cur = label_morphism(labels[-1]).cod

    return Path(aset, cur, tuple(reversed(labels)))


def _decreasing_word(aset, steps):
    """
    :param steps: (i, j) pairs, j moved to i, in the order applied
    :return: A :class:`Path` object or None if some step is not admissible
    """
    (cur, labels) = (aset, [])
    for i, j in steps:
        if j not in cur.elements or not is_below(cur, i, j):
            return None
        labels.append(Decreasing(cur, i, j))
        cur = label_morphism(labels[-1]).cod

    return Path(aset, cur, tuple(reversed(labels)))


def _relation(name, left, right, steps=None):
    """
    :return: A :class:`Relation` or None if it's not well-formed
    """
    if left is None:
        return None

    if right is None or (left.source, left.target) != (right.source,
                                                       right.target):
        LOG.info("Rejected %s instance on %s: %s = %r", name,
                 maps.subset_text(left.source), path_text(left), steps)
        return None

    return Relation(name, left, right)


def _simplicial_relations(n, kmax, name):
    """
    d_i^{k-1} d_j^k = d_{j-1}^{k-1} d_i^k for 2 <= k <= kmax, i < j <= k.
    """
    res = []
    for k in range(2, kmax + 1):
        (src, tgt) = (maps.chain(n, k + 1), maps.chain(n, k - 1))
        for i, j in itertools.combinations(range(1, k + 1), 2):
            res.append(Relation(name,
                                Path(src, tgt, (Simplicial(k - 1, i),
                                                Simplicial(k, j))),
                                Path(src, tgt, (Simplicial(k - 1, j - 1),
                                                Simplicial(k, i)))))
    return res


def _catalan_relations_itr(n):
    for aset in maps.all_subsets(n):
        elts = aset.elements
        for i, j in itertools.combinations(elts, 2):
            if i >= 2 and j > i + 1:
                yield _relation("PC1", _catalan_word(aset, [j, i]),
                                _catalan_word(aset, [i, j]))

        for i in elts:
            if i >= 2 and i + 1 in elts:
                yield _relation("PC2", _catalan_word(aset, [i + 1, i]),
                                _catalan_word(aset, [i, i + 1, i]))


def _pf_case(aset, i, j, s, t):
    """
    Right hand side of d_{i,j} d_{s,t} with j < t; the cases are exclusive.

    :return: A tuple of (name, steps in the order applied)
    """
    if s > j:
        return ("PF1", [(i, j), (s, t)])
    if s == j:
        return ("PF2", [(i, j), (j, t), (i, j)])
    if s <= i:
        return ("PF4", [(i, j), (j, t), (s, j)])
    if s in aset.elements:
        return ("PF3", [(i, j), (j, t), (s, j)])

    return ("PF5", [(s, j), (i, s), (j, t), (s, j)])


def _decreasing_relations_itr(n):
    for aset in maps.all_subsets(n):
        elts = aset.elements
        for j, t in itertools.combinations(elts, 2):
            for s, i in itertools.product(range(1, t), range(1, j)):
                left = _decreasing_word(aset, [(s, t), (i, j)])
                if left is None:
                    continue

                (name, steps) = _pf_case(aset, i, j, s, t)
                yield _relation(name, left, _decreasing_word(aset, steps),
                                steps)

            for s, i in itertools.combinations(range(1, j), 2):
                if i in elts:
                    continue
                steps = [(i, j), (j, t), (s, j)]
                yield _relation("PF6",
                                _decreasing_word(aset,
                                                 [(i, t), (s, i), (i, j)]),
                                _decreasing_word(aset, steps), steps)


def relations(family, n, exclude=()):
    """
    :param family: SEO, EC or EF (or PO, PC, PF)
    :param n: Ambient size
    :param exclude: Names of relation families to leave out, e.g. ['PC2']

    :return: A list of :class:`Relation` objects

    >>> [(path_text(r.left), path_text(r.right))
    ...  for r in relations("SEO", 3)]
    [('d_1^1 d_2^2', 'd_1^1 d_1^2')]
    >>> relations("EC", 2)
    []
    >>> sorted(set(r.name for r in relations("EC", 3)))
    ['PC2']
    """
    family = normalize_family(family)
    if family == maps.SEO:
        rels = _simplicial_relations(n, n - 1, "SEO")
    elif family == maps.EC:
        rels = [r for r in _catalan_relations_itr(n) if r is not None]
    else:
        rels = [r for r in _decreasing_relations_itr(n) if r is not None]

    rels = [r for r in rels if r.name not in exclude]
    LOG.debug("%d relations of %s_%d", len(rels), family, n)
    return rels


def _cosimplicial_identities(kmax):
    """
    delta_j^k delta_i^{k-1} = delta_i^k delta_{j-1}^{k-1} : [k-2] -> [k] for
    2 <= k <= kmax and i < j <= k.

    :return: A list of (k, left, right), each side a tuple (outer, inner) of
        face maps
    """
    return [(k, (face_map(k, j), face_map(k - 1, i)),
             (face_map(k, i), face_map(k - 1, j - 1)))
            for k in range(2, kmax + 1)
            for i, j in itertools.combinations(range(1, k + 1), 2)]


def relations_delta(n):
    """
    Relations of SEO_{n+1} obtained from the cosimplicial identities of
    Delta_n by G^-1 F, for 2 <= k <= n.

    >>> [(path_text(r.left), path_text(r.right))
    ...  for r in relations_delta(2)]
    [('d_1^1 d_2^2', 'd_1^1 d_1^2')]
    """
    ambient = n + 1
    seo = {label_morphism(lab, ambient): lab
           for lab in generators(maps.SEO, ambient)}

    def word(outer, inner):
        # G^-1 F is contravariant: the inner face map is applied last.
        return tuple(seo[functor_g_inv(functor_f(d), ambient)]
                     for d in (inner, outer))

    res = []
    for k, left, right in _cosimplicial_identities(n):
        if compose_strict(*left) != compose_strict(*right):
            LOG.warning("Not an identity of Delta: %r = %r", left, right)
            continue

        (src, tgt) = (maps.chain(ambient, k + 1), maps.chain(ambient, k - 1))
        res.append(Relation("DELTA", Path(src, tgt, word(*left)),
                            Path(src, tgt, word(*right))))
    return res


def evaluate(path):
    """
    :param path: A :class:`Path` object
    :return: The composite maps.Morphism

    >>> evaluate(Path(maps.chain(3, 3), maps.chain(3, 1),
    ...               (Simplicial(1, 1), Simplicial(2, 2)))).values
    (1, 1, 1)
    """
    fun = maps.identity(path.source)
    for label in reversed(path.labels):
        fun = maps.compose(label_morphism(label, path.source.n), fun)

    return fun


def _adjacency(labels, n):
    """
    :return: {source object: [(label, target object)]}
    """
    adj = collections.defaultdict(list)
    for label in labels:
        fun = label_morphism(label, n)
        adj[fun.dom].append((label, fun.cod))

    return dict(adj)


def _paths_from(adj, source, memo, limit):
    """
    All paths from `source`; the quivers are graded so this terminates.

    :return: {target object: [tuple of labels in composition order]}
    """
    if source in memo:
        return memo[source]

    res = collections.defaultdict(list)
    res[source].append(())
    for label, mid in adj.get(source, ()):
        for tgt, words in _paths_from(adj, mid, memo, limit).items():
            res[tgt].extend(word + (label, ) for word in words)

    total = sum(len(ws) for ws in res.values())
    if total > limit:
        raise errors.ResourceLimit("Too many paths from {}: {} > {}"
                                   "".format(maps.subset_text(source),
                                             total, limit))
    memo[source] = dict(res)
    return memo[source]


def enumerate_paths(labels, source, target, max_paths=None):
    """
    :param labels: Labels of the arrows of the quiver
    :param source: A maps.SubsetOfN object
    :param target: A maps.SubsetOfN object
    :param max_paths: Cap of the number of paths [utils.MAX_PATHS]

    :return: A list of :class:`Path` objects, shorter ones first
    :raises: ResourceLimit

    >>> gens = generators("SEO", 3)
    >>> [path_text(p) for p in enumerate_paths(gens, maps.chain(3, 3),
    ...                                        maps.chain(3, 1))]
    ['d_1^1 d_1^2', 'd_1^1 d_2^2']
    """
    limit = max_paths or utils.MAX_PATHS
    paths = _paths_from(_adjacency(labels, source.n), source, {}, limit)

    return [Path(source, target, w)
            for w in sorted(paths.get(target, []), key=lambda w: (len(w), w))]


def _relation_index(rels):
    """
    :return: {one side's labels: [other sides' labels]}
    """
    index = collections.defaultdict(list)
    for rel in rels:
        index[rel.left.labels].append(rel.right.labels)
        index[rel.right.labels].append(rel.left.labels)

    return dict(index)


def _path_classes(source, target, words, index, lengths):
    """
    :param words: Label tuples of every path from `source` to `target`
    :return: A list of :class:`PathClass` objects
    """
    pos = {word: k for k, word in enumerate(words)}
    ufind = networkx.utils.UnionFind(range(len(words)))

    for k, word in enumerate(words):
        for start, size in itertools.product(range(len(word)), lengths):
            for other in index.get(word[start:start + size], ()):
                new = word[:start] + other + word[start + size:]
                try:
                    ufind.union(k, pos[new])
                except KeyError:
                    LOG.warning("Rewritten path out of the hom-set: %r", new)

    groups = collections.OrderedDict()
    for k, word in enumerate(words):
        groups.setdefault(ufind[k], []).append(Path(source, target,
                                                         word))

    return [PathClass(evaluate(ps[0]), tuple(ps)) for ps in groups.values()]


def congruence_closure(cat, labels, rels, max_paths=None):
    """
    :param cat: A categories.FiniteCategory object
    :param labels: Labels of the arrows of the quiver
    :param rels: A list of :class:`Relation` objects
    :param max_paths: Cap of the number of paths from an object

    :return: A :class:`CongruenceResult` object
    :raises: ResourceLimit

    >>> cat = categories.build_skeleton_seo(3)
    >>> res = congruence_closure(cat, generators("SEO", 3),
    ...                          relations("SEO", 3))
    >>> len(res.classes[(3, 1)])
    1
    >>> len(congruence_closure(cat, generators("SEO", 3),
    ...                        []).classes[(3, 1)])
    2
    """
    index = _relation_index(rels)
    lengths = sorted(set(len(side) for side in index))
    (adj, memo) = (_adjacency(labels, cat.n), {})
    limit = max_paths or utils.MAX_PATHS

    classes = {}
    sound = True
    for i, src in enumerate(cat.objects):
        paths = _paths_from(adj, src, memo, limit)
        for j, tgt in enumerate(cat.objects):
            if tgt not in paths:
                continue

            pcs = _path_classes(src, tgt, paths[tgt], index, lengths)
            for pcl in pcs:
                if any(evaluate(p) != pcl.morphism for p in pcl.paths[1:]):
                    LOG.warning("A class of %s -> %s has different values",
                                maps.subset_text(src), maps.subset_text(tgt))
                    sound = False

            classes[(i, j)] = pcs
        LOG.debug("Closure done from %s", maps.subset_text(src))

    return CongruenceResult(classes, sound)


def _witness(src, tgt, pcs, hom_size):
    seen = {}
    for pcl in pcs:
        if pcl.morphism in seen:
            return Witness(src, tgt, seen[pcl.morphism].paths[0],
                           pcl.paths[0], "inequivalent paths with the same "
                           "value")
        seen[pcl.morphism] = pcl

    return Witness(src, tgt, None, None,
                   "{} classes for {} morphisms".format(len(pcs), hom_size))


def verify_presentation(cat, labels=None, rels=None, max_n=None,
                        max_paths=None):
    """
    Verify (Q, R) presents `cat`: every relation is sound and evaluation
    gives a bijection from the classes of paths onto each hom-set.

    :param cat: A categories.FiniteCategory object of SEO, EC or EF
    :param labels: Labels of the quiver [generators of the family]
    :param rels: A list of :class:`Relation` objects [relations of it]
    :param max_n: Cap of the ambient size
    :param max_paths: Cap of the number of paths from an object

    :return: A :class:`VerificationReport` object
    :raises: InvalidInput, ResourceLimit

    >>> verify_presentation(categories.build_skeleton_seo(3)).passed
    True
    >>> cat = categories.build_category("EC", 3)
    >>> rep = verify_presentation(cat, rels=relations("EC", 3, ["PC2"]))
    >>> (rep.passed, rep.witness.reason)
    (False, 'inequivalent paths with the same value')
    """
    if cat.family not in _CAP_KEYS:
        raise errors.InvalidInput("No presentation for {}, use SEO"
                                  "".format(cat.family))
    utils.check_size(cat.n, _CAP_KEYS[cat.family], max_n=max_n)

    if labels is None:
        labels = generators(cat.family, cat.n)
    if rels is None:
        rels = relations(cat.family, cat.n)

    unsound = [rel for rel in rels
               if (rel.left.source, rel.left.target) !=
               (rel.right.source, rel.right.target)
               or evaluate(rel.left) != evaluate(rel.right)]
    for rel in unsound:
        LOG.warning("Unsound relation %s: %s = %s", rel.name,
                    path_text(rel.left), path_text(rel.right))

    closure = congruence_closure(cat, labels, rels, max_paths=max_paths)
    (results, witness) = ([], None)
    for key in sorted(cat.homs):
        (homset, pcs) = (cat.homs[key], closure.classes.get(key, []))
        if not homset and not pcs:
            continue

        (src, tgt) = (cat.objects[key[0]], cat.objects[key[1]])
        injective = len(set(c.morphism for c in pcs)) == len(pcs)
        results.append(HomPairResult(src, tgt,
                                     sum(len(c.paths) for c in pcs),
                                     len(pcs), len(homset), injective))

        if witness is None and not (injective and len(pcs) == len(homset)):
            witness = _witness(src, tgt, pcs, len(homset))
            LOG.info("Not a presentation of %s_%d: %s -> %s, %s",
                     cat.family, cat.n, maps.subset_text(src),
                     maps.subset_text(tgt), witness.reason)

    passed = not unsound and closure.sound and witness is None
    return VerificationReport(cat.family, cat.n, passed, len(labels),
                              len(rels), unsound, results, witness)


def factorize(cat, fun):
    """
    Factorize `fun` into irreducible morphisms, splitting off the rightmost
    generator at the minimal moved element (EC, EF) or at the first
    collapsed pair (SEO).

    :param cat: A categories.FiniteCategory object of SEO, EC or EF
    :param fun: A maps.Morphism object of `cat`

    :return: A :class:`Path` object evaluating to `fun`
    :raises: InvalidInput

    >>> cat = categories.build_category("EC", 3)
    >>> const = maps.morphism(maps.chain(3, 3), maps.chain(3, 1), [1, 1, 1])
    >>> path_text(factorize(cat, const))
    'd_2^{1,2} d_3^{1,3} d_2^{1,2,3}'
    >>> factorize(cat, maps.identity(maps.chain(3, 2))).labels
    ()
    """
    if cat.family not in _CAP_KEYS:
        raise errors.InvalidInput("No generators for {}".format(cat.family))

    (steps, cur) = ([], fun)
    while not maps.is_identity(cur):
        (label, cur) = _split_rightmost(cat.family, cat.n, cur)
        steps.append(label)

    return Path(fun.dom, fun.cod, tuple(reversed(steps)))


def _split_rightmost(family, n, fun):
    """
    :return: A tuple of (label, g) such that fun = g after label
    """
    fmap = maps.as_dict(fun)
    elts = fun.dom.elements

    if family == maps.SEO:
        vals = fun.values
        i = next(x for x in range(1, len(vals)) if vals[x - 1] == vals[x])
        rest = vals[:i] + vals[i + 1:]
        return (Simplicial(len(vals) - 1, i),
                maps.morphism(maps.chain(n, len(rest)), fun.cod, rest))

    j = min(x for x in elts if maps.apply(fun, x) < x)
    if family == maps.EC:
        (label, img) = (Catalan(fun.dom, j), j - 1)
    else:
        gap = max([x for x in range(1, j) if x not in elts], default=0)
        img = max(maps.apply(fun, j), gap)
        label = Decreasing(fun.dom, img, j)

    pairs = [(x, v) for x, v in fmap.items() if x != j] + [(img, fmap[j])]
    return (label, maps.corestrict(n, sorted(set(pairs))))


def longest_factorization_witness(n):
    """
    The constant map [n] -> {1} of EC_n as the composite f_n ... f_2 where
    f_i = d_2 ... d_i moves i down to 1; C(n, 2) generators in all.

    :return: A :class:`Path` object

    >>> path = longest_factorization_witness(4)
    >>> (len(path.labels), evaluate(path).values)
    (6, (1, 1, 1, 1))
    """
    steps = [j for i in range(2, n + 1) for j in range(i, 1, -1)]
    return _catalan_word(maps.chain(n, n), steps)


def _strict_maps(dsize, csize, first_fixed=False):
    """
    Strict order-preserving maps [dsize] -> [csize], sending 1 to 1 if
    `first_fixed`.
    """
    if first_fixed:
        if dsize < 1 or csize < 1:
            return []
        return [StrictMap(dsize, csize, (1, ) + vs) for vs
                in itertools.combinations(range(2, csize + 1), dsize - 1)]

    return [StrictMap(dsize, csize, vs) for vs
            in itertools.combinations(range(1, csize + 1), dsize)]


def compose_strict(gmap, fmap):
    """
    :return: `gmap` after `fmap`
    :raises: EndpointMismatch

    >>> compose_strict(StrictMap(2, 3, (1, 3)), StrictMap(1, 2, (2, )))
    StrictMap(dom=1, cod=3, values=(3,))
    """
    if fmap.cod != gmap.dom:
        raise errors.EndpointMismatch("Not composable: {!r}, {!r}"
                                      "".format(gmap, fmap))

    return StrictMap(fmap.dom, gmap.cod,
                     tuple(gmap.values[v - 1] for v in fmap.values))


def functor_g(fun):
    """
    G(f)(i) = min f^-1(i), from SEO_{n+1} minus [0] to strict
    order-preserving maps fixing 1, reversing the arrows.

    >>> functor_g(maps.morphism(maps.chain(3, 3), maps.chain(3, 2),
    ...                         [1, 1, 2]))
    StrictMap(dom=2, cod=3, values=(1, 3))
    """
    (dsize, csize) = (len(fun.dom.elements), len(fun.cod.elements))
    return StrictMap(csize, dsize,
                     tuple(fun.values.index(i) + 1
                           for i in range(1, csize + 1)))


def functor_g_inv(gmap, n):
    """
    G^-1(g)(j) = max {i : g(i) <= j}.

    :param gmap: A :class:`StrictMap` object fixing 1
    :param n: Ambient size of SEO_n
    """
    return maps.morphism(maps.chain(n, gmap.cod), maps.chain(n, gmap.dom),
                         [max(i for i, v in enumerate(gmap.values, start=1)
                              if v <= j)
                          for j in range(1, gmap.cod + 1)])


def functor_f(gmap):
    """
    F(g)(1) = 1 and F(g)(i) = g(i-1) + 1.

    >>> functor_f(StrictMap(0, 2, ()))
    StrictMap(dom=1, cod=3, values=(1,))
    """
    return StrictMap(gmap.dom + 1, gmap.cod + 1,
                     (1, ) + tuple(v + 1 for v in gmap.values))


def functor_f_inv(gmap):
    """
    F^-1(g)(i) = g(i+1) - 1.
    """
    return StrictMap(gmap.dom - 1, gmap.cod - 1,
                     tuple(v - 1 for v in gmap.values[1:]))


def delta_iso(n):
    """
    Tables of the isomorphisms between SEO_{n+1} minus [0], the strict
    order-preserving maps fixing 1 on [1..n+1] and Delta_n.

    :param n: A non-negative int
    :return: A :class:`FunctorPair` object

    >>> pair = delta_iso(2)
    >>> len(pair.G) == len(pair.G_inv)
    True
    """
    cat = categories.build_skeleton_seo(n + 1, punctured=True)
    gtab = {f: functor_g(f) for f in categories.morphisms(cat)}

    sizes = range(1, n + 2)
    ginv = {g: functor_g_inv(g, n + 1) for k, r in itertools.product(sizes,
                                                                     sizes)
            for g in _strict_maps(k, r, first_fixed=True)}

    dsizes = range(0, n + 1)
    ftab = {g: functor_f(g) for r, k in itertools.product(dsizes, dsizes)
            for g in _strict_maps(r, k)}
    finv = {g: functor_f_inv(g) for g in ginv}

    return FunctorPair(n, gtab, ginv, ftab, finv)


def face_map(k, i):
    """
    The strict order-preserving map [k-1] -> [k] of Delta missing i.

    >>> face_map(3, 2)
    StrictMap(dom=2, cod=3, values=(1, 3))
    """
    return StrictMap(k - 1, k, tuple(x for x in range(1, k + 1) if x != i))


def _check(name, failures):
    return dict(name=name, passed=not failures,
                detail=("ok" if not failures else
                        "{} failures, e.g. {!r}".format(len(failures),
                                                        failures[0])))


def check_delta_iso(pair):
    """
    :param pair: A :class:`FunctorPair` object
    :return: A list of check results, mappings of name, passed and detail

    >>> all(c["passed"] for c in check_delta_iso(delta_iso(2)))
    True
    """
    (n, gtab, ginv, ftab, finv) = pair
    cat = categories.build_skeleton_seo(n + 1, punctured=True)
    morphs = categories.morphisms(cat)
    ambient = n + 1

    res = [
        _check("delta: G preserves identities",
               [f for f in morphs if maps.is_identity(f)
                and gtab[f] != StrictMap(len(f.dom.elements),
                                         len(f.dom.elements),
                                         f.dom.elements)]),
        _check("delta: G reverses composition",
               [(g, f) for f in morphs for g in morphs
                if f.cod == g.dom and
                gtab[maps.compose(g, f)] != compose_strict(gtab[f],
                                                           gtab[g])]),
        _check("delta: G is a bijection onto the strict maps fixing 1",
               [] if sorted(gtab.values()) == sorted(ginv) else
               [sorted(set(gtab.values()) ^ set(ginv))]),
        _check("delta: G^-1 G = id",
               [f for f in morphs if ginv[gtab[f]] != f]),
        _check("delta: G G^-1 = id",
               [g for g in ginv if gtab[ginv[g]] != g]),
        _check("delta: F preserves identities and composition",
               [(g, f) for f in ftab for g in ftab
                if f.cod == g.dom and
                ftab[compose_strict(g, f)] != compose_strict(ftab[g],
                                                             ftab[f])]
               + [g for g in ftab if g.dom == g.cod
                  and ftab[g].values != tuple(range(1, g.dom + 2))]),
        _check("delta: F^-1 F = id and F F^-1 = id",
               [g for g in ftab if finv.get(ftab[g]) != g]
               + [g for g in finv if ftab.get(finv[g]) != g]),
        _check("delta: G(d_i^k) = F(face map missing i)",
               [lab for lab in generators(maps.SEO, ambient)
                if gtab[label_morphism(lab, ambient)]
                != functor_f(face_map(lab.k, lab.i))]),
    ]
    for check in res:
        if not check["passed"]:
            LOG.warning("%s: %s", check["name"], check["detail"])

    return res


def relation_to_dict(rel):
    """
    :param rel: A :class:`Relation` object
    :return: A mapping object can be serialized to JSON
    """
    return dict(name=rel.name, source=list(rel.left.source.elements),
                target=list(rel.left.target.elements),
                left=[label_text(x) for x in rel.left.labels],
                right=[label_text(x) for x in rel.right.labels])


def report_to_dict(report):
    """
    :param report: A :class:`VerificationReport` object
    :return: A mapping object can be serialized to JSON
    """
    wit = report.witness
    return dict(family=report.family, n=report.n, passed=report.passed,
                generator_count=report.generator_count,
                relation_count=report.relation_count,
                unsound=[relation_to_dict(r) for r in report.unsound],
                hom_pairs=[dict(source=list(h.source.elements),
                                target=list(h.target.elements),
                                paths=h.paths, classes=h.classes,
                                hom_size=h.hom_size, injective=h.injective)
                           for h in report.hom_pairs],
                witness=(None if wit is None else
                         dict(source=list(wit.source.elements),
                              target=list(wit.target.elements),
                              left=wit.left and path_text(wit.left),
                              right=wit.right and path_text(wit.right),
                              reason=wit.reason)))


def certificate_text(report):
    """
    :param report: A :class:`VerificationReport` object
    :return: Plain text presentation certificate
    """
    lines = ["presentation of {}_{}: {}".format(report.family, report.n,
                                                "PASSED" if report.passed
                                                else "FAILED"),
             "generators: {}".format(report.generator_count),
             "relations: {}".format(report.relation_count),
             "unsound relations: {}".format(len(report.unsound)),
             "hom-pairs: {}".format(len(report.hom_pairs))]

    for hpr in report.hom_pairs:
        lines.append("{} -> {}: {} paths, {} classes, {} morphisms{}"
                     "".format(maps.subset_text(hpr.source),
                               maps.subset_text(hpr.target), hpr.paths,
                               hpr.classes, hpr.hom_size,
                               "" if hpr.classes == hpr.hom_size and
                               hpr.injective else "  <- NG"))

    wit = report.witness
    if wit is not None:
        lines.append("witness: {} -> {}: {}".format(
            maps.subset_text(wit.source), maps.subset_text(wit.target),
            wit.reason))
        if wit.left is not None:
            lines.append("  {}".format(path_text(wit.left)))
            lines.append("  {}".format(path_text(wit.right)))

    return "\n".join(lines) + "\n"

# vim:sw=4:ts=4:et:
