#
# Copyright (C) 2026 catalg authors.
# SPDX-License-Identifier: MIT
#
r"""CLI commands.

Exit codes: 0 success, 1 some check failed, 2 usage error, 3 resource limit.

.. versionadded:: 0.1.0

   - initial checkin
"""
from __future__ import absolute_import

import logging
import sys

import click

import catalg
import catalg.api
from catalg import errors, utils


LOG = logging.getLogger("catalg")

(EXIT_FAILED, EXIT_USAGE, EXIT_LIMIT) = (1, 2, 3)


def _common_options(fun):
    """Options shared by sub commands."""
    opts = [
        click.option("-f", "--family", type=click.Choice(catalg.FAMILIES),
                     required=True, help="Monoid family"),
        click.option("-n", "--n", "size", type=click.IntRange(min=0),
                     required=True, help="Size n of [n] = {1, ..., n}"),
        click.option("-F", "--format", "fmt",
                     type=click.Choice(catalg.FORMATS), default="json",
                     help="Output format [json]"),
        click.option("-o", "--out", "outpath", default=None,
                     help="Output file path [stdout]"),
        click.option("--max-n", type=click.IntRange(min=0), default=None,
                     help=("Cap of n; overrides the environment variable "
                           "{} and the defaults".format(utils.ENV_MAX_N))),
    ]
    for opt in reversed(opts):
        fun = opt(fun)

    return fun


def _run(fun, fmt, outpath, **kwargs):
    """
    Call `fun` to make a report, output it and exit with the code telling
    the result.
    """
    try:
        report = fun(**kwargs)
    except errors.ResourceLimit as exc:
        click.echo("Resource limit: {!s}".format(exc), err=True)
        sys.exit(EXIT_LIMIT)
    except ValueError as exc:
        click.echo("Error: {!s}".format(exc), err=True)
        sys.exit(EXIT_USAGE)

    content = catalg.api.render(report, fmt)
    if outpath:
        utils.save_file(content, outpath)
    else:
        click.echo(content, nl=False)

    fails = catalg.failed_checks(report)
    if fails:
        LOG.warning("Failed: %s", ", ".join(fails))
        sys.exit(EXIT_FAILED)


@click.command()
@_common_options
def invariants(family, size, fmt, outpath, max_n):
    """
    Compute the invariants of the algebra of the monoid: Loewy length,
    radical dimensions, quiver, Cartan matrix and blocks.

    Examples:

    \b
        $ catalg invariants --family pc --n 3 --format text
        invariants: pc, n = 3
        loewy length: 4
        blocks: 2
        quiver: 8 vertices, 8 arrows
        ... (snip) ...
    \f
    :param family: po, pf or pc
    :param size: n
    """
    _run(catalg.make_report, fmt, outpath, family=family, n=size,
         max_n=max_n)


@click.command()
@_common_options
def crosscheck(family, size, fmt, outpath, max_n):
    """
    Check every closed form formula against brute force enumeration.

    Examples:

    \b
        $ catalg crosscheck --family po --n 6 --format text | tail -n 1
        checks: all 15 passed
    \f
    """
    _run(catalg.crosscheck, fmt, outpath, family=family, n=size,
         max_n=max_n)


@click.command(name="verify-presentation")
@_common_options
@click.option("-x", "--exclude", multiple=True,
              help="Leave out the relation family, e.g. PC2 (repeatable)")
def verify_presentation(family, size, fmt, outpath, max_n, exclude):
    """
    Verify the quiver presentation of the algebra of the monoid and print
    the presentation certificate.

    Examples:

    \b
        $ catalg verify-presentation --family pc --n 3 --format text
        verify-presentation: pc, n = 3
        presentation of EC_3: PASSED
        generators: 8
        relations: 2
        ... (snip) ...
    \f
    """
    _run(catalg.verify, fmt, outpath, family=family, n=size, max_n=max_n,
         exclude=exclude)


def _parse_elements(ctx, param, value):
    """Parse '1,2,3' to [1, 2, 3]."""
    if value is None:
        return None
    try:
        return [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise click.BadParameter("Not a comma separated list of ints: "
                                 "{}".format(value), ctx=ctx, param=param)


@click.command()
@_common_options
@click.option("--dom", callback=_parse_elements, default=None,
              help="Domain A of the hom-set, e.g. 1,2,3")
@click.option("--cod", callback=_parse_elements, default=None,
              help="Codomain B of the hom-set, e.g. 1,2")
def count(family, size, fmt, outpath, max_n, dom, cod):
    """
    Count the elements of the monoid, or the morphisms A -> B if --dom and
    --cod are given, by the closed forms and by enumeration.

    Examples:

    \b
        $ catalg count --family pf --n 4 --format text
        count: pf, n = 4
        closed form: 120
        enumerated: 120
        checks: all 1 passed
    \f
    """
    _run(catalg.count, fmt, outpath, family=family, n=size, dom=dom,
         cod=cod, max_n=max_n)


@click.group()
@click.option("-v", "--verbose", count=True, default=0)
def main(verbose=0):
    """CLI frontend entrypoint.
    """
    verbose = min(verbose, 2)
    LOG.setLevel([logging.WARNING, logging.INFO, logging.DEBUG][verbose])


for cmd in (invariants, crosscheck, verify_presentation, count):
    main.add_command(cmd)

if __name__ == '__main__':
    main()

# vim:sw=4:ts=4:et:
