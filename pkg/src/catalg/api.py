#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
r"""Reports on the algebras of PO_n, PF_n and PC_n.

Every function here returns a plain mapping object ('document') which can be
serialized to JSON, with the common keys:

- schema: SCHEMA
- command: invariants, crosscheck, verify-presentation or count
- family: po, pf or pc
- n: the ambient size
- checks: a list of mappings of name, passed and detail
"""
from __future__ import absolute_import

import itertools
import logging

import pandas

from . import (
    categories, enumeration, errors, invariants, maps, matrix,
    presentations, utils
)
from .utils import binomial


LOG = logging.getLogger(__name__)

SCHEMA = "catalg/1"
FAMILIES = ("po", "pf", "pc")
FORMATS = ("json", "csv", "text")

_MONOID_TAGS = {maps.EO: maps.PO, maps.SEO: maps.PO, maps.EF: maps.PF,
                maps.EC: maps.PC}

# bar(B) of B = {1, 3, 4, 5, 8} in [8]
EXAMPLE_BOUNDARY = (1, 1, 2, 3, 4, 4, 4, 5)


def monoid_tag(family):
    """
    >>> monoid_tag("ec")
    'PC'
    >>> monoid_tag("po")
    'PO'
    """
    tag = maps.normalize_family(family)
    return _MONOID_TAGS.get(tag, tag)


def algebra_category(family, n, max_n=None):
    """
    :return: EO_n, EF_n or EC_n whose algebra is that of the monoid
    :raises: InvalidInput, ResourceLimit
    """
    return categories.build_category(monoid_tag(family), n, max_n=max_n)


def skeleton(family, n, max_n=None):
    """
    :return: SEO_n for PO, otherwise same as :func:`algebra_category`
    """
    tag = monoid_tag(family)
    if tag == maps.PO:
        utils.check_size(n, "invariants:po", max_n=max_n)
        return categories.build_skeleton_seo(n)

    return algebra_category(tag, n, max_n=max_n)


def make_check(name, passed, detail=None):
    """
    >>> make_check("x", True)
    {'name': 'x', 'passed': True, 'detail': 'ok'}
    """
    if not passed:
        LOG.warning("Check failed: %s: %s", name, detail)

    return dict(name=name, passed=bool(passed),
                detail=detail or ("ok" if passed else "failed"))


def _mismatch(name, pairs):
    """
    :param pairs: A list of (key, expected, actual) of mismatches
    """
    if not pairs:
        return make_check(name, True)

    (key, exp, act) = pairs[0]
    return make_check(name, False, "{} mismatches, e.g. {}: {!r} != {!r}"
                                   "".format(len(pairs), key, exp, act))


def _quiver_dict(quiver, cat):
    labels = invariants.object_labels(cat)
    return dict(vertices=labels, vertex_count=len(quiver.vertices),
                arrow_count=len(quiver.arrows),
                arrows=[dict(source=labels[src], target=labels[tgt],
                             values=list(fun.values))
                        for src, tgt, fun in quiver.arrows])


def make_report(family, n, max_n=None, command="invariants"):
    """
    Compute the invariants of the algebra of the monoid `family` of size
    `n`. The radical layers, Loewy length and blocks are computed on the
    category (EO_n for PO), the quiver and the Cartan matrix on its skeleton
    (SEO_n for PO).

    :param family: po, pf or pc
    :param n: Ambient size
    :param max_n: Cap of `n`

    :return: A mapping object
    :raises: InvalidInput, ResourceLimit

    >>> rep = make_report("pc", 3)
    >>> (rep["loewy_length"], rep["block_count"], rep["quiver"]["arrow_count"])
    (4, 2, 8)
    """
    tag = monoid_tag(family)
    cat = algebra_category(tag, n, max_n=max_n)
    depth = invariants.composition_depth(cat)

    skel = skeleton(tag, n, max_n=max_n)
    sdepth = depth if skel is cat else invariants.composition_depth(skel)
    quiver = invariants.irreducible_morphisms(skel, depth=sdepth)

    blocks = invariants.blocks(cat)
    labels = invariants.object_labels(cat)
    struct = categories.check_structure(skel)

    LOG.info("Computed the invariants of %s_%d", tag, n)
    return dict(
        schema=SCHEMA, command=command, family=tag.lower(), n=n,
        loewy_length=invariants.loewy_length(cat, depth=depth),
        block_count=len(blocks),
        blocks=[[labels[i] for i in block] for block in blocks],
        quiver=_quiver_dict(quiver, skel),
        cartan=dict(objects=invariants.object_labels(skel),
                    matrix=matrix.to_lists(invariants.cartan_matrix(skel))),
        radical_dimensions=invariants.radical_dimensions(cat, depth=depth),
        checks=[
            make_check("structure: locally trivial", struct.locally_trivial),
            make_check("structure: closed under composition",
                       struct.composition_closed),
            make_check("structure: skeletal", struct.skeletal),
            make_check("structure: objects partially ordered",
                       categories.is_partial_order(struct.order)),
        ]
    )


def _count_total_maps(n, bset):
    """
    Brute force count of order-preserving order-decreasing total maps
    [n] -> B.
    """
    choices = [[b for b in bset.elements if b <= x] for x in range(1, n + 1)]
    return sum(1 for vals in itertools.product(*choices)
               if all(a <= b for a, b in zip(vals, vals[1:])))


def _common_checks(tag, n, cat, skel, depth):
    morphs = categories.morphisms(cat)
    res = []

    size = maps.monoid_size(maps.MonoidFamily(tag, n), max_n=n)
    res.append(make_check("monoid size = number of morphisms",
                          size == len(morphs),
                          "{} vs {}".format(size, len(morphs))))

    closed = enumeration.monoid_size_closed(tag, n)
    res.append(make_check("monoid size: closed form", closed == len(morphs),
                          "{} vs {}".format(closed, len(morphs))))

    blocks = invariants.blocks(cat)
    squiver = invariants.irreducible_morphisms(skel)
    expected = 1 if n == 0 else 2
    res.append(make_check(
        "blocks: {} components, the empty set isolated".format(expected),
        len(blocks) == expected and blocks[0] == [0]
        and len(invariants.quiver_blocks(squiver)) == expected,
        "{!r}".format(blocks)
    ))

    gens = set(presentations.label_morphism(g, n)
               for g in presentations.generators(tag, n))
    arrows = set(fun for _src, _tgt, fun in squiver.arrows)
    res.append(make_check("quiver: arrows = generators", gens == arrows,
                          "{} arrows, {} generators".format(len(arrows),
                                                            len(gens))))

    res.append(make_check(
        "cartan: upper unitriangular",
        matrix.is_upper_unitriangular(invariants.cartan_matrix(skel))
    ))

    bounds = [enumeration.bar_path(n, b).bar for b in maps.all_subsets(n)]
    bounds.append(enumeration.lattice_path(EXAMPLE_BOUNDARY))
    res.append(_mismatch("paths below a boundary: determinant = DP",
                         [(x.steps, enumeration.paths_below_dp(x),
                           enumeration.paths_below_det(x)) for x in bounds
                          if enumeration.paths_below_det(x) !=
                          enumeration.paths_below_dp(x)]))

    sdepth = depth if skel is cat else invariants.composition_depth(skel)
    fails = []
    for fun in categories.morphisms(skel):
        path = presentations.factorize(skel, fun)
        if presentations.evaluate(path) != fun or \
                len(path.labels) > sdepth[fun]:
            fails.append((fun.values, sdepth[fun],
                          presentations.path_text(path)))
    res.append(_mismatch("factorize: evaluates back, no longer than depth",
                         fails))
    return res


def _po_checks(n, cat, skel, depth):
    res = [_mismatch("cartan: Pascal closed form = hom counts of SEO_n",
                     [("matrix", enumeration.cartan_po_closed(n).entries,
                       invariants.cartan_matrix(skel).entries)]
                     if enumeration.cartan_po_closed(n) !=
                     invariants.cartan_matrix(skel) else [])]

    morphs = categories.morphisms(cat)
    res.append(_mismatch(
        "radical: closed form = depth count = defect count",
        [(k, enumeration.dim_rad_po(n, k),
          invariants.radical_dimension(cat, k, depth=depth))
         for k in range(1, n + 2)
         if not (enumeration.dim_rad_po(n, k) ==
                 invariants.radical_dimension(cat, k, depth=depth) ==
                 sum(1 for f in morphs if invariants.defect(f) >= k))]
    ))
    res.append(_mismatch("hom sizes: C(m-1, l-1)",
                         [((i, j), enumeration.count_onto_op(
                             len(cat.objects[i].elements),
                             len(cat.objects[j].elements)), len(fs))
                          for (i, j), fs in sorted(cat.homs.items())
                          if len(fs) != enumeration.count_onto_op(
                              len(cat.objects[i].elements),
                              len(cat.objects[j].elements))]))

    loewy = invariants.loewy_length(cat, depth=depth)
    res.append(make_check("loewy length = n", loewy == max(n, 1),
                          "{}".format(loewy)))
    return res


def _hom_counts_check(name, cat, closed):
    counted = invariants.cartan_matrix(cat)
    labels = invariants.object_labels(cat)
    return _mismatch(name, [((labels[j], labels[i]), closed.entries[i][j],
                             counted.entries[i][j])
                            for i in range(counted.rows)
                            for j in range(counted.cols)
                            if closed.entries[i][j] != counted.entries[i][j]])


def _renamed(bset, values):
    """Rename the values in `bset` by their positions."""
    return tuple(bset.elements.index(v) + 1 for v in values)


def _pc_checks(n, cat, depth):
    res = [_hom_counts_check("cartan: closed form = hom counts", cat,
                             enumeration.cartan_ec_matrix(n))]

    res.append(_mismatch("count_C: determinant = brute force",
                         [(b.elements, _count_total_maps(n, b),
                           enumeration.count_C(n, b))
                          for b in maps.all_subsets(n)
                          if _count_total_maps(n, b) !=
                          enumeration.count_C(n, b)]))

    res.append(_mismatch("P_B renamed = bar(B)",
                         [(b.elements, enumeration.bar_path(n, b).bar.steps,
                           _renamed(b, enumeration.p_b(n, b)))
                          for b in maps.all_subsets(n)
                          if 1 in b.elements and _renamed(b, enumeration.p_b(n, b)) !=
                          enumeration.bar_path(n, b).bar.steps]))

    fails = []
    for aset, bset in itertools.product(cat.objects, repeat=2):
        size = len(categories.hom(cat, aset, bset))
        try:
            steps = enumeration.reduce_domain_steps(aset, bset)
        except errors.Infeasible:
            if size:
                fails.append(((aset.elements, bset.elements), 0, size))
            continue

        fails.extend(((s.elements, bset.elements), size,
                      len(categories.hom(cat, s, bset)))
                     for s in steps
                     if len(categories.hom(cat, s, bset)) != size)
    res.append(_mismatch("reduce_domain: hom sizes kept at every step",
                         fails))

    res.append(_loewy_check(n, cat, depth))
    if n:
        path = presentations.longest_factorization_witness(n)
        const = presentations.evaluate(path)
        res.append(make_check(
            "longest factorization: C(n,2) generators to [n] -> {1}",
            len(path.labels) == binomial(n, 2) == depth[const]
            and const.values == (1, ) * n,
            presentations.path_text(path)
        ))
    return res


def _pf_checks(n, cat, depth):
    res = [_hom_counts_check("cartan: closed form = hom counts", cat,
                             enumeration.cartan_ef_matrix(n))]

    fails = []
    for aset, bset in itertools.product(cat.objects, repeat=2):
        total = sum(len(categories.hom(cat, aset, xset))
                    for xset in cat.objects
                    if set(xset.elements) <= set(bset.elements))
        if total != enumeration.count_decreasing(aset, bset):
            fails.append(((aset.elements, bset.elements),
                          enumeration.count_decreasing(aset, bset), total))
    res.append(_mismatch("product formula = decreasing maps count", fails))

    total = len(categories.morphisms(cat))
    res.append(make_check("|PF_n| = (n+1)!",
                          total == enumeration.count_pf_total(n),
                          "{}".format(total)))
    res.append(_loewy_check(n, cat, depth))
    return res


def _loewy_check(n, cat, depth):
    loewy = invariants.loewy_length(cat, depth=depth)
    return make_check("loewy length = C(n,2)+1", loewy == binomial(n, 2) + 1,
                      "{}".format(loewy))


def crosscheck(family, n, max_n=None):
    """
    Run every closed form against its brute force oracle.

    :return: A mapping object, the report with the checks
    :raises: InvalidInput, ResourceLimit

    >>> failed_checks(crosscheck("pf", 2))
    []
    """
    report = make_report(family, n, max_n=max_n, command="crosscheck")
    tag = monoid_tag(family)
    cat = algebra_category(tag, n, max_n=max_n)
    skel = skeleton(tag, n, max_n=max_n)
    depth = invariants.composition_depth(cat)

    checks = _common_checks(tag, n, cat, skel, depth)
    if tag == maps.PO:
        checks.extend(_po_checks(n, cat, skel, depth))
    elif tag == maps.PC:
        checks.extend(_pc_checks(n, cat, depth))
    else:
        checks.extend(_pf_checks(n, cat, depth))

    report["checks"].extend(checks)
    return report


def verify(family, n, max_n=None, exclude=()):
    """
    Verify the quiver presentation of the algebra of `family`.

    :param family: po, pf or pc
    :param n: Ambient size
    :param max_n: Cap of `n`
    :param exclude: Names of relation families to leave out

    :return: A mapping object
    :raises: InvalidInput, ResourceLimit

    >>> failed_checks(verify("pc", 3))
    []
    """
    tag = monoid_tag(family)
    utils.check_size(n, "presentation:" + tag.lower(), max_n=max_n)

    if tag == maps.PO:
        cat = categories.build_skeleton_seo(n)
    else:
        cat = categories.build_category(tag, n, max_n=n)  # checked above

    rels = presentations.relations(tag, n, exclude=exclude)
    vrep = presentations.verify_presentation(cat, rels=rels, max_n=n)

    detail = None
    if vrep.witness:
        detail = vrep.witness.reason
    elif vrep.unsound:
        detail = "{} unsound relations".format(len(vrep.unsound))
    checks = [make_check("presentation", vrep.passed, detail)]

    if tag == maps.PO and n:
        checks.extend(presentations.check_delta_iso(
            presentations.delta_iso(n - 1)
        ))
        dels = presentations.relations_delta(n - 1)
        checks.append(make_check(
            "relations: Delta form = SEO form",
            [(r.left.labels, r.right.labels) for r in dels] ==
            [(r.left.labels, r.right.labels)
             for r in presentations.relations(tag, n)],
            "{} relations".format(len(dels))
        ))

    return dict(schema=SCHEMA, command="verify-presentation",
                family=tag.lower(), n=n,
                presentation=presentations.report_to_dict(vrep),
                relations=[presentations.relation_to_dict(r) for r in rels],
                certificate=presentations.certificate_text(vrep),
                checks=checks)


def count(family, n, dom=None, cod=None, max_n=None):
    """
    Count the monoid elements, or the morphisms dom -> cod, by the closed
    forms and by enumeration.

    :param family: po, pf or pc
    :param n: Ambient size
    :param dom: Elements of the domain or None
    :param cod: Elements of the codomain or None

    :return: A mapping object
    :raises: InvalidInput, ResourceLimit

    >>> rep = count("pc", 3, dom=[1, 2, 3], cod=[1, 2])
    >>> (rep["closed"], rep["counted"])
    (2, 2)
    """
    tag = monoid_tag(family)
    utils.check_size(n, "invariants:" + tag.lower(), max_n=max_n)
    if dom is None and cod is None:
        counted = maps.monoid_size(maps.MonoidFamily(tag, n), max_n=max_n)
        closed = enumeration.monoid_size_closed(tag, n)
        what = "monoid size"
    else:
        (aset, bset) = (maps.subset(n, dom or ()), maps.subset(n, cod or ()))
        if tag == maps.PO:
            closed = enumeration.count_onto_op(len(aset.elements),
                                               len(bset.elements))
        elif tag == maps.PC:
            closed = enumeration.cartan_entry_ec(aset, bset)
        else:
            closed = enumeration.cartan_entry_ef(aset, bset)

        counted = len(maps.enumerate_hom(tag, aset, bset))
        what = "hom {} -> {}".format(maps.subset_text(aset),
                                     maps.subset_text(bset))

    return dict(schema=SCHEMA, command="count", family=tag.lower(), n=n,
                dom=dom and list(dom), cod=cod and list(cod),
                closed=closed, counted=counted,
                checks=[make_check("{}: closed form = enumeration"
                                   "".format(what), closed == counted,
                                   "{} vs {}".format(closed, counted))])


def failed_checks(report):
    """
    :param report: A mapping object made by the functions above
    :return: A list of names of the failed checks
    """
    return utils.search("checks[?!passed].name", report) or []


def to_dataframe(report):
    """
    :return: A :class:`pandas.DataFrame` object for CSV output: the Cartan
        matrix, the checks, the hom-pairs or the counts
    """
    command = report.get("command")
    if command == "invariants":
        cartan = report["cartan"]
        return matrix.to_dataframe(matrix.make_matrix(cartan["matrix"]),
                                   cartan["objects"])

    if command == "verify-presentation":
        rows = [dict(hpr, source=maps.subset_text(maps.SubsetOfN(
                         report["n"], tuple(hpr["source"]))),
                     target=maps.subset_text(maps.SubsetOfN(
                         report["n"], tuple(hpr["target"]))))
                for hpr in report["presentation"]["hom_pairs"]]
        return pandas.DataFrame(rows, columns=["source", "target", "paths",
                                               "classes", "hom_size",
                                               "injective"])

    if command == "count":
        return pandas.DataFrame([dict(family=report["family"],
                                      n=report["n"],
                                      closed=report["closed"],
                                      counted=report["counted"])])

    return pandas.DataFrame(report["checks"],
                            columns=["name", "passed", "detail"])


def _checks_lines(report):
    fails = failed_checks(report)
    if fails:
        return ["checks: {} failed".format(len(fails))] + \
            ["  NG: {}".format(name) for name in fails]

    return ["checks: all {} passed".format(len(report["checks"]))]


def to_text(report):
    """
    :return: A plain text summary of `report`
    """
    head = "{}: {}, n = {}".format(report["command"], report["family"],
                                   report["n"])
    command = report["command"]
    if command == "verify-presentation":
        return "\n".join([head, report["certificate"].rstrip()]
                         + _checks_lines(report)) + "\n"

    if command == "count":
        lines = [head, "closed form: {}".format(report["closed"]),
                 "enumerated: {}".format(report["counted"])]
        return "\n".join(lines + _checks_lines(report)) + "\n"

    lines = [head,
             "loewy length: {}".format(report["loewy_length"]),
             "blocks: {}".format(report["block_count"]),
             "quiver: {} vertices, {} arrows"
             "".format(report["quiver"]["vertex_count"],
                       report["quiver"]["arrow_count"]),
             "radical dimensions: {}".format(
                 ", ".join(str(d) for d in report["radical_dimensions"])),
             "cartan matrix:",
             matrix.to_dataframe(matrix.make_matrix(report["cartan"]["matrix"]),
                                 report["cartan"]["objects"]).to_string()]
    return "\n".join(lines + _checks_lines(report)) + "\n"


def render(report, fmt="json"):
    """
    :param report: A mapping object made by the functions above
    :param fmt: json, csv or text

    :return: A str
    :raises: InvalidInput
    """
    if fmt == "json":
        return utils.dumps_json(report) + "\n"
    if fmt == "csv":
        return to_dataframe(report).to_csv(
            index=report.get("command") == "invariants"
        )
    if fmt == "text":
        return to_text(report)

    raise errors.InvalidInput("Unknown format: {}".format(fmt))


def save(report, filepath, fmt="json"):
    """
    Render and save `report` to `filepath`.
    """
    utils.save_file(render(report, fmt), filepath)

# vim:sw=4:ts=4:et:
