r"""Invariants and quiver presentations of the algebras of the monoids of
order-preserving and order-decreasing partial functions.
"""
from __future__ import absolute_import
from .api import (  # noqa: F401
    make_report,
    crosscheck,
    verify,
    count,
    failed_checks,
    render,
    save,
    SCHEMA,
    FAMILIES,
    FORMATS
)
from .categories import build_category, build_skeleton_seo  # noqa: F401
from .invariants import (  # noqa: F401
    composition_depth,
    radical_dimension,
    loewy_length,
    irreducible_morphisms,
    cartan_matrix,
    blocks
)
from .presentations import (  # noqa: F401
    generators,
    relations,
    verify_presentation,
    factorize,
    delta_iso
)


__version__ = "0.1.0"

__all__ = """
make_report
crosscheck
verify
count
failed_checks
render
save
SCHEMA
FAMILIES
FORMATS
build_category
build_skeleton_seo
composition_depth
radical_dimension
loewy_length
irreducible_morphisms
cartan_matrix
blocks
generators
relations
verify_presentation
factorize
delta_iso
""".split()

# vim:sw=4:ts=4:et:
