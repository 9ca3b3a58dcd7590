"""Command-line interface: ``atlas <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import json
import logging
import sys
from typing import Optional

import click

from . import serialize
from .serialize import AtlasCache, atlases_for, render
from .transfer import build_graph
from .verify import VerificationReport, verify_theorems

EXIT_VERIFY_FAILED = 1
EXIT_IO_ERROR = 3
DEFAULT_N_CEILING = 40
CACHE_ENV = "ATLAS_CACHE_DIR"

format_option = click.option("--format", "fmt", type=click.Choice(serialize.FORMATS),
                             default="csv", show_default=True)
out_option = click.option("--out", type=click.Path(dir_okay=False), default=None,
                          help="Write to PATH instead of standard output.")


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc}", err=True)
        sys.exit(EXIT_IO_ERROR)


def _range(lo: int, hi: Optional[int]) -> range:
    hi = lo if hi is None else hi
    if lo < 1 or hi < lo:
        raise click.UsageError(f"invalid range {lo}..{hi}: need 1 <= from <= to")
    return range(lo, hi + 1)


def range_options(fn):
    fn = click.option("--to", "hi", type=int, default=None, help="Last n (default: --from).")(fn)
    fn = click.option("--from", "lo", type=int, required=True, help="First n.")(fn)
    return fn


def _check_n(n: int) -> None:
    if n < 1:
        raise click.UsageError("--n must be >= 1")


@click.group(name="atlas")
@click.option("--cache-dir", type=click.Path(file_okay=False), envvar=CACHE_ENV, default=None,
              help=f"Directory for per-n JSON results (env: {CACHE_ENV}).")
@click.option("-v", "--verbose", is_flag=True)
@click.pass_context
def main(ctx: click.Context, cache_dir: Optional[str], verbose: bool) -> None:
    """Support strata, jumps and components of the partition transfer graph."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = AtlasCache(cache_dir) if cache_dir else None


@main.command()
@range_options
@format_option
@out_option
@click.pass_obj
def strata(cache, lo, hi, fmt, out):
    """Support-stratum counts a_(n,r)."""
    _emit(render(serialize.strata_table(atlases_for(_range(lo, hi), cache)), fmt), out)


@main.command()
@range_options
@format_option
@out_option
@click.pass_obj
def jumps(cache, lo, hi, fmt, out):
    """Edge counts by support-jump magnitude."""
    _emit(render(serialize.jumps_table(atlases_for(_range(lo, hi), cache)), fmt), out)


@main.command()
@range_options
@format_option
@out_option
@click.pass_obj
def components(cache, lo, hi, fmt, out):
    """Component counts of each fixed-support induced subgraph."""
    _emit(render(serialize.components_table(atlases_for(_range(lo, hi), cache)), fmt), out)


@main.command("level-matrix")
@click.option("--n", "n", type=int, required=True)
@format_option
@out_option
@click.pass_obj
def level_matrix(cache, n, fmt, out):
    """Edges between support levels r and s (symmetric)."""
    _check_n(n)
    _emit(render(serialize.level_matrix_table(serialize.get_atlas(n, cache)), fmt), out)


@main.command()
@click.option("--n", "n", type=int, required=True)
@format_option
@out_option
@click.pass_obj
def summary(cache, n, fmt, out):
    """Per-level size, internal edges, components and degree range."""
    _check_n(n)
    _emit(render(serialize.summary_table(serialize.get_atlas(n, cache)), fmt), out)


@main.command("export-dot")
@click.option("--n", "n", type=int, required=True)
@click.option("--color-by", type=click.Choice(["sigma", "jump"]), default="sigma",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--no-edge-labels", is_flag=True)
@click.option("--force", is_flag=True,
              help=f"Allow n > {DEFAULT_N_CEILING}; edge generation is O(p(n) * support^2).")
def export_dot(n, color_by, out, no_edge_labels, force):
    """Write G_n as an undirected Graphviz DOT file."""
    _check_n(n)
    if n > DEFAULT_N_CEILING and not force:
        raise click.UsageError(f"refusing n={n} > {DEFAULT_N_CEILING} without --force")
    graph = build_graph(n)
    try:
        with open(out, "w") as fh:
            serialize.write_dot(graph, fh, color_by=color_by, label_edges=not no_edge_labels)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc}", err=True)
        sys.exit(EXIT_IO_ERROR)


def format_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "n_max": report.n_max,
            "passed": report.passed,
            "checks": [
                {"name": c.name, "description": c.description, "passed": c.passed,
                 "skipped": c.skipped, "counterexample": c.counterexample,
                 "per_n": {str(n): ok for n, ok in sorted(c.per_n.items())}}
                for c in report.checks
            ],
        }
        return json.dumps(doc, indent=1) + "\n"
    lines = []
    if fmt == "md":
        lines += ["| check | status | detail |", "|---|---|---|"]
    for c in report.checks:
        status = "SKIP" if c.skipped else ("PASS" if c.passed else "FAIL")
        if c.passed:
            ns = sorted(c.per_n)
            detail = f"n={ns[0]}..{ns[-1]}" if ns else "not applicable for this n_max"
        else:
            failed = [n for n, ok in sorted(c.per_n.items()) if not ok]
            detail = f"{c.counterexample} (failing n: {failed})"
        if fmt == "md":
            lines.append(f"| {c.name} | {status} | {detail} |")
        else:
            lines.append(f"{status} {c.name}: {detail}")
    verdict = "all checks passed" if report.passed else "verification FAILED"
    lines.append(f"{verdict} for 1 <= n <= {report.n_max}")
    return "\n".join(lines) + "\n"


@main.command()
@click.option("--n-max", "n_max", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "md", "json"]), default="text",
              show_default=True)
@out_option
def verify(n_max, fmt, out):
    """Check every structural result exhaustively for 1 <= n <= N."""
    if n_max < 1:
        raise click.UsageError("--n-max must be >= 1")
    report = verify_theorems(n_max)
    _emit(format_report(report, fmt), out)
    if not report.passed:
        sys.exit(EXIT_VERIFY_FAILED)


if __name__ == "__main__":
    main()
