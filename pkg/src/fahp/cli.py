"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 inconsistency failure
(--strict-cr), 3 I/O or parse error.
"""

from __future__ import annotations

import csv
import json
import sys
import warnings

import click

from . import consistency as cons
from . import hierarchy as hier
from . import report as report_mod
from .errors import FahpError, ParseError, ValidationError
from .project import load_project, render_project
from .survey import RankPanel, kendalls_w, likert_percentages, load_tallies

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INCONSISTENT = 2
EXIT_IO = 3


def _load(path, strict_flag: bool | None):
    try:
        return load_project(path, strict=strict_flag)
    except ParseError as exc:
        loc = f" (line {exc.line}, column {exc.column})" if exc.line else ""
        click.echo(f"parse error: {exc}{loc}", err=True)
        sys.exit(EXIT_IO)
    except ValidationError as exc:
        where = f" at node {exc.node!r}" if exc.node else ""
        cell = f" cell {exc.cell}" if exc.cell else ""
        click.echo(f"validation error{where}{cell}: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(EXIT_IO)


def _effective(project, cr_threshold):
    threshold = project.options.cr_threshold
    env = cons.cr_threshold_from_env(threshold)
    if cr_threshold is not None:
        threshold = cr_threshold
    else:
        threshold = env
    ri = cons.ri_table_from_env() or project.options.ri_table
    return threshold, ri


strict_option = click.option(
    "--repair-paper-typos/--strict", "repair", default=None,
    help="Force typo repair on or off (default: per project options).",
)
cr_option = click.option("--cr-threshold", type=float, default=None,
                         help="Consistency ratio threshold (default 0.10).")


def _strict_to_loader(repair: bool | None) -> bool | None:
    if repair is None:
        return None
    return not repair  # strict=True means repair off


@click.group()
def main():
    """Fuzzy-AHP decision engine."""


@main.command()
@click.argument("project_path", type=click.Path())
@strict_option
def validate(project_path, repair):
    """Load and validate a project file."""
    project = _load(project_path, _strict_to_loader(repair))
    click.echo(f"{project.name}: OK")
    leaves = len(project.hierarchy.leaves())
    nodes = len(project.hierarchy.nodes())
    click.echo(f"nodes: {nodes}, leaves: {leaves}")
    for entry in project.repair_log:
        click.echo(
            f"repaired {entry['node']} cell {tuple(entry['cell'])}: "
            f"{entry['from']} -> {entry['to']}"
        )


@main.command()
@click.argument("project_path", type=click.Path())
@click.option("--node", "node_id", default=None, help="Check a single node.")
@click.option("--strict-cr", is_flag=True, help="Exit 2 if any CR >= threshold.")
@strict_option
@cr_option
def consistency(project_path, node_id, strict_cr, repair, cr_threshold):
    """Consistency reports for every fuzzy judgment matrix."""
    project = _load(project_path, _strict_to_loader(repair))
    threshold, ri = _effective(project, cr_threshold)
    nodes = project.hierarchy.nodes()
    if node_id is not None:
        try:
            nodes = [project.hierarchy.find(node_id)]
        except KeyError:
            click.echo(f"unknown node {node_id!r}", err=True)
            sys.exit(EXIT_VALIDATION)
    any_bad = False
    any_checked = False
    for node in nodes:
        matrix = node.matrix
        if matrix is None and node.experts is not None:
            from .aggregation import aggregate_matrices

            matrix = aggregate_matrices(node.experts)
        if matrix is None:
            continue
        any_checked = True
        rep = cons.check(matrix, ri_table=ri, threshold=threshold)
        status = "consistent" if rep.consistent else "INCONSISTENT"
        click.echo(
            f"{node.id}: n={rep.n} lambda_max={rep.lambda_max:.4f} "
            f"CI={rep.ci:.6f} CR={rep.cr:.6f} [{status}]"
        )
        if not rep.consistent:
            any_bad = True
            if rep.worst_cell:
                i, j = rep.worst_cell
                click.echo(
                    f"  worst cell: ({matrix.items[i]}, {matrix.items[j]}) "
                    "(heuristic pointer)"
                )
    if not any_checked:
        click.echo("no fuzzy matrices to check")
    if any_bad and strict_cr:
        sys.exit(EXIT_INCONSISTENT)


@main.command()
@click.argument("project_path", type=click.Path())
@click.option("--method", type=click.Choice(["extent", "colnorm"]), default=None)
@click.option("--node", "node_id", default=None, help="Weights for one node only.")
@click.option("--strict-cr", is_flag=True)
@strict_option
@cr_option
def weights(project_path, method, node_id, strict_cr, repair, cr_threshold):
    """Local weights for every non-leaf node."""
    project = _load(project_path, _strict_to_loader(repair))
    threshold, ri = _effective(project, cr_threshold)
    method = method or project.options.method
    nodes = [n for n in project.hierarchy.nodes() if not n.is_leaf]
    if node_id is not None:
        nodes = [n for n in nodes if n.id == node_id]
        if not nodes:
            click.echo(f"unknown or leaf node {node_id!r}", err=True)
            sys.exit(EXIT_VALIDATION)
    any_bad = False
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for node in nodes:
            try:
                lw, rep = hier.local_weights(
                    node, method=method, ri_table=ri, cr_threshold=threshold
                )
            except FahpError as exc:
                click.echo(f"{node.id}: error: {exc}", err=True)
                sys.exit(EXIT_VALIDATION)
            click.echo(f"{node.id}:")
            for child_id, w in lw.items():
                click.echo(f"  {child_id}: {w:.6f}")
            if rep is not None and not rep.consistent:
                any_bad = True
    if any_bad and strict_cr:
        sys.exit(EXIT_INCONSISTENT)


@main.command()
@click.argument("project_path", type=click.Path())
@click.option("--top", type=int, default=None, help="Only the top K leaves.")
@click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]),
              default="table")
@click.option("--method", type=click.Choice(["extent", "colnorm"]), default=None)
@click.option("--no-meta", is_flag=True, help="Suppress the metadata header.")
@click.option("--strict-cr", is_flag=True)
@strict_option
@cr_option
def rank(project_path, top, fmt, method, no_meta, strict_cr, repair, cr_threshold):
    """Global ranking of all leaves."""
    project = _load(project_path, _strict_to_loader(repair))
    threshold, ri = _effective(project, cr_threshold)
    method = method or project.options.method
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            ranked = hier.evaluate(
                project.hierarchy, method=method, ri_table=ri,
                cr_threshold=threshold,
            )
        except FahpError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_VALIDATION)
    click.echo(report_mod.render_report(ranked, format=fmt, top=top,
                                        meta=not no_meta), nl=False)
    if strict_cr and any(r.cr is not None and not r.consistent
                         for r in ranked.nodes):
        sys.exit(EXIT_INCONSISTENT)


@main.command()
@click.argument("project_path", type=click.Path())
@strict_option
def aggregate(project_path, repair):
    """Emit the geometric-mean merged matrix for every expert node."""
    project = _load(project_path, _strict_to_loader(repair))
    from .aggregation import aggregate_matrices

    out = {}
    for node in project.hierarchy.nodes():
        if node.experts is not None:
            merged = aggregate_matrices(node.experts)
            out[node.id] = {
                "items": merged.items,
                "cells": [[list(c.as_tuple()) for c in row] for row in merged.cells],
            }
    if not out:
        click.echo("no expert response sets in project", err=True)
    click.echo(json.dumps(out, indent=2))


@main.command()
@click.argument("tallies_path", type=click.Path())
def survey(tallies_path):
    """Likert frequency analysis of a tally file."""
    try:
        tallies = load_tallies(tallies_path)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(EXIT_IO)
    except FahpError as exc:
        click.echo(f"validation error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    click.echo("item,positive%,negative%,neutral%")
    for tally in tallies:
        pos, neg, neu = likert_percentages(tally)
        click.echo(f"{tally.item_id},{pos},{neg},{neu}")


@main.command()
@click.argument("panel_path", type=click.Path())
@click.option("--ties", is_flag=True, help="Apply the tie-corrected denominator.")
def kendall(panel_path, ties):
    """Kendall's coefficient of concordance for a CSV rank panel
    (one row per rater)."""
    try:
        with open(panel_path, newline="", encoding="utf-8") as fh:
            rows = [[float(x) for x in row] for row in csv.reader(fh) if row]
    except (OSError, ValueError) as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(EXIT_IO)
    try:
        panel = RankPanel(ranks=rows, allow_ties=ties)
        result = kendalls_w(panel, tie_correction=ties)
    except FahpError as exc:
        click.echo(f"validation error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    click.echo(f"W = {result.w:.6f}")
    click.echo(f"chi-square = {result.chi_square:.6f} "
               f"(df = {panel.n - 1}), p = {result.p_value:.6g}")


@main.command()
@click.argument("project_path", type=click.Path())
@click.option("--port", type=int, default=8642)
@click.option("--host", default="127.0.0.1")
@strict_option
def serve(project_path, port, host, repair):
    """Serve the engine over local HTTP for the companion UI."""
    import uvicorn

    from .server import create_app

    project = _load(project_path, _strict_to_loader(repair))
    app = create_app(project)
    uvicorn.run(app, host=host, port=port, log_level="warning")


@main.command("export")
@click.argument("project_path", type=click.Path())
@strict_option
def export_cmd(project_path, repair):
    """Re-serialize a project with all judgments as raw TFN triples."""
    project = _load(project_path, _strict_to_loader(repair))
    click.echo(render_project(project))


if __name__ == "__main__":
    main()
