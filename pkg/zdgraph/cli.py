"""
zdgraph command line
====================

    zdgraph build ID [--param value ...] [-o FILE] | --list
    zdgraph graph FILE [--dot | --metrics]
    zdgraph classify FILE
    zdgraph census --order N [--noncommutative] [--cancellative] [--entire] [--jobs J] [--csv PATH]
    zdgraph harness [--corpus C] [--theorem T ...] [--json | --table] [--jobs J] [--csv PATH]
    zdgraph iso A B

Algebra arguments are JSON files written by `build -o`, "-" for stdin, or ring catalog names.
Reports go to stdout; logs go to stderr.
"""

import json
import logging
import os
import sys
from typing import Dict, List

import click
import pandas as pd

from zdgraph.algebra.builders import CATALOG_FACTORIES, catalog_ring, product_splits
from zdgraph.algebra.isomorphism import find_isomorphism
from zdgraph.algebra.semiring import FiniteSemiring, MalformedTable, summary, validate
from zdgraph.config import CONFIG, apply_config
from zdgraph.constructions import CONSTRUCTIONS, UnknownConstruction, build as build_construction
from zdgraph.enumerate import EnumFilter, enumerate_semirings
from zdgraph.graphs.shapes import Disconnected, classify as classify_graph
from zdgraph.graphs.zdg import graph as zd_graph, metrics, to_dot
from zdgraph.harness.runner import CORPORA, corpus as named_corpus, run_suite
from zdgraph.harness.theorems import TheoremId
from zdgraph.log_utils import setup_logger

logger = logging.getLogger(__name__)


# ===============================
# HELPERS
# ===============================

def _load_algebra(source: str, param: str = "ALGEBRA") -> FiniteSemiring:
    """Read an algebra from a JSON file, stdin ("-") or the ring catalog."""
    try:
        if source == "-":
            S = FiniteSemiring.from_json(sys.stdin.read())
        elif os.path.exists(source):
            S = FiniteSemiring.load(source)
        elif source in CATALOG_FACTORIES or product_splits(source):
            S = catalog_ring(source)
        else:
            raise click.BadParameter(
                f"{source!r} is neither a file nor a catalog ring. "
                f"Run 'zdgraph build ID -o FILE' to create one.",
                param_hint=param,
            )
    except (MalformedTable, ValueError) as e:
        raise click.BadParameter(f"{e}. Regenerate the file with 'zdgraph build'.", param_hint=param)
    report = validate(S)
    if not report.passed:
        raise click.BadParameter(f"{S.name} is not a semiring: {report.describe()}", param_hint=param)
    return S


def _parse_params(args: List[str]) -> Dict[str, int]:
    """--name value and --name=value pairs."""
    params: Dict[str, int] = {}
    i = 0
    while i < len(args):
        arg = args[i]
        if not arg.startswith("--"):
            raise click.UsageError(f"Unexpected argument {arg!r}; parameters look like --n 3")
        if "=" in arg:
            key, value = arg[2:].split("=", 1)
            i += 1
        else:
            if i + 1 >= len(args):
                raise click.UsageError(f"Missing value for {arg}")
            key, value = arg[2:], args[i + 1]
            i += 2
        try:
            params[key] = int(value)
        except ValueError:
            raise click.UsageError(f"Invalid value for --{key}: {value!r} is not an integer")
    return params


# ===============================
# COMMAND GROUP
# ===============================

@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              help="YAML file overriding the built-in limits.")
@click.option("--verbose", is_flag=True, help="Log at DEBUG level.")
@click.option("--quiet", is_flag=True, help="Log warnings and errors only.")
def main(config_path, verbose, quiet):
    """Zero-divisor graphs of finite semirings."""
    if config_path:
        try:
            apply_config(config_path)
        except (ValueError, OSError) as e:
            raise click.BadParameter(str(e), param_hint="--config")
    level = "DEBUG" if verbose else "WARNING" if quiet else CONFIG["logging"]["level"]
    setup_logger("zdgraph", level)


@main.command(context_settings={"ignore_unknown_options": True, "allow_extra_args": True})
@click.argument("construction_id", required=False)
@click.option("-o", "--output", type=click.Path(dir_okay=False, allow_dash=True),
              help="Write the algebra JSON here ('-' for stdout).")
@click.option("--list", "list_all", is_flag=True, help="List constructions and their grids.")
@click.pass_context
def build(ctx, construction_id, output, list_all):
    """Build a construction and compare its graph with the expected shape."""
    if list_all:
        for cid, c in CONSTRUCTIONS.items():
            grid = c.grid()
            params = ", ".join(c.param_names) or "-"
            click.echo(f"{cid:<28} params: {params:<12} grid: {len(grid)} points  {c.description}")
        return
    if not construction_id:
        raise click.UsageError("Missing construction id. Run 'zdgraph build --list'.")
    params = _parse_params(ctx.args)
    try:
        S, spec = build_construction(construction_id, **params)
    except UnknownConstruction as e:
        raise click.BadParameter(f"{e}. Run 'zdgraph build --list'.", param_hint="CONSTRUCTION_ID")
    except ValueError as e:
        raise click.UsageError(f"{e}. Run 'zdgraph build --list' for valid parameters.")

    shape = classify_graph(zd_graph(S))
    to_stdout = output == "-"
    if output and not to_stdout:
        S.save(output)
    elif to_stdout:
        click.echo(S.to_json())
    click.echo(
        f"{spec.describe()}: order {S.order}, expected {spec.expected} / classified {shape}",
        err=to_stdout,
    )
    if shape != spec.expected:
        ctx.exit(1)


@main.command("graph")
@click.argument("source")
@click.option("--dot", "fmt", flag_value="dot", help="Graphviz DOT output.")
@click.option("--metrics", "fmt", flag_value="metrics", default=True, help="Metrics as JSON (default).")
def graph_command(source, fmt):
    """Zero-divisor graph of an algebra."""
    G = zd_graph(_load_algebra(source))
    if fmt == "dot":
        click.echo(to_dot(G), nl=False)
    else:
        click.echo(json.dumps(metrics(G), sort_keys=True))


@main.command()
@click.argument("source")
def classify(source):
    """Shape of the zero-divisor graph, with its role witness."""
    S = _load_algebra(source)
    try:
        shape = classify_graph(zd_graph(S))
    except Disconnected as e:
        raise click.ClickException(str(e))
    click.echo(json.dumps(shape.to_dict(), sort_keys=True, ensure_ascii=False))


@main.command()
@click.option("--order", type=int, default=None, help="Largest order (defaults to the configured maximum).")
@click.option("--commutative/--noncommutative", default=True, help="Restrict to commutative multiplication.")
@click.option("--cancellative", is_flag=True, help="Only additively cancellative algebras.")
@click.option("--entire", is_flag=True, help="Only entire algebras.")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), help="Write one row per algebra.")
def census(order, commutative, cancellative, entire, jobs, csv_path):
    """Enumerate small semirings, one per isomorphism class, as JSON lines."""
    filt = EnumFilter(
        commutative=commutative,
        require_cancellative=True if cancellative else None,
        require_entire=True if entire else None,
        max_order=order or CONFIG["enumeration"]["max_order"],
        min_order=CONFIG["enumeration"]["min_order"],
    )
    try:
        filt.validate()
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--order")

    rows = []
    for S in enumerate_semirings(filt, jobs):
        G = zd_graph(S)
        try:
            shape = str(classify_graph(G))
        except Disconnected:
            shape = "disconnected"
        rows.append({**summary(S), "zero_divisors": len(G), "shape": shape})
        click.echo(S.to_json())

    df = pd.DataFrame(rows, columns=[
        "name", "order", "commutative", "entire", "cancellative", "ring", "zero_divisors", "shape",
    ])
    if csv_path:
        df.to_csv(csv_path, index=False)
    click.echo(json.dumps({
        "summary": {
            "count": len(df),
            "by_order": {str(k): int(v) for k, v in df["order"].value_counts().sort_index().items()},
            "shapes": {str(k): int(v) for k, v in df["shape"].value_counts().sort_index().items()},
        }
    }, sort_keys=True))


@main.command()
@click.option("--corpus", "corpus_name", type=click.Choice(CORPORA), default="all", show_default=True)
@click.option("--theorem", "theorem_ids", multiple=True, help="Theorem id (repeatable; default all).")
@click.option("--json", "fmt", flag_value="json", help="One JSON line per report.")
@click.option("--table", "fmt", flag_value="table", default=True, help="Verdict counts per theorem (default).")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), help="Write one row per report.")
@click.option("--allow-vacuous", is_flag=True, help="Do not fail on theorems no algebra satisfies.")
def harness(corpus_name, theorem_ids, fmt, jobs, csv_path, allow_vacuous):
    """Check theorems over a corpus; exit 1 on any failure."""
    try:
        theorems = [TheoremId.parse(t) for t in theorem_ids] or None
    except ValueError as e:
        choices = ", ".join(t.value for t in TheoremId)
        raise click.BadParameter(f"{e} (choose from {choices})", param_hint="--theorem")

    result = run_suite(named_corpus(corpus_name, jobs), theorems, jobs, require_witness=not allow_vacuous)
    if fmt == "json":
        for report in result.reports:
            click.echo(report.to_json())
    else:
        click.echo(result.summary.to_string())
    if csv_path:
        result.reports_frame().to_csv(csv_path, index=False)
    for report in result.failures:
        click.echo(f"FAIL {report.theorem.value} on {report.algebra}: {report.detail}", err=True)
    for t in result.vacuous:
        click.echo(f"VACUOUS {t.value}: no algebra in the corpus satisfies its hypothesis", err=True)
    if not result.ok:
        sys.exit(1)


@main.command()
@click.argument("first")
@click.argument("second")
def iso(first, second):
    """Isomorphism between two algebras; exit 1 when there is none."""
    A = _load_algebra(first, "FIRST")
    B = _load_algebra(second, "SECOND")
    witness = find_isomorphism(A, B) if A.order == B.order else None
    if witness is None:
        click.echo(f"{A.name} and {B.name} are not isomorphic")
        sys.exit(1)
    click.echo(f"{A.name} ≅ {B.name}")
    for line in witness.describe(A, B):
        click.echo(f"  {line}")


if __name__ == "__main__":
    main()
