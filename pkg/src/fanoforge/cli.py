"""Command-line front end.

Every subcommand is a thin wrapper over the shared operations layer; output
is deterministic for fixed arguments and seed.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import operations
from .parsing import PolySyntaxError

FORMATS = ("json", "csv", "markdown", "text")


def _stringify(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return " ".join(_stringify(v) for v in value)
    return str(value)


def _rows_of(payload: dict) -> tuple[list[str], list[dict]]:
    """View any payload as a table: explicit rows, check list, or key/value."""
    if "columns" in payload and "rows" in payload:
        return payload["columns"], payload["rows"]
    if "checks" in payload:
        return ["check", "ok", "detail"], [
            {"check": c["name"], "ok": c["ok"], "detail": c["detail"]}
            for c in payload["checks"]
        ]
    return ["field", "value"], [
        {"field": k, "value": _stringify(v)} for k, v in payload.items()
    ]


def _render_csv(columns: list[str], rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_stringify(row.get(c, "")) for c in columns])
    return buffer.getvalue().rstrip("\n")


def _render_table(columns: list[str], rows: list[dict], markdown: bool) -> str:
    cells = [[_stringify(row.get(c, "")) for c in columns] for row in rows]
    widths = [
        max(len(c), *(len(r[i]) for r in cells)) if cells else len(c)
        for i, c in enumerate(columns)
    ]
    sep = " | " if markdown else "  "
    edge = ("| ", " |") if markdown else ("", "")

    def line(values):
        body = sep.join(v.ljust(w) for v, w in zip(values, widths))
        return (edge[0] + body + edge[1]).rstrip() if not markdown else edge[0] + body + edge[1]

    out = [line(columns)]
    if markdown:
        out.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    else:
        out.append("  ".join("-" * w for w in widths))
    out.extend(line(r) for r in cells)
    return "\n".join(out)


def emit(payload: dict, fmt: str):
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
        return
    columns, rows = _rows_of(payload)
    if fmt == "csv":
        click.echo(_render_csv(columns, rows))
    else:
        click.echo(_render_table(columns, rows, markdown=(fmt == "markdown")))


format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="text",
    show_default=True, help="Output format.",
)
seed_option = click.option(
    "--seed", type=int, default=0, show_default=True,
    envvar="FANOFORGE_SEED", help="Random seed (env FANOFORGE_SEED).",
)
trials_option = click.option(
    "--trials", type=int, default=20, show_default=True,
    help="Random instantiations per family.",
)


def _run(fn, fmt, *args, **kwargs):
    try:
        emit(fn(*args, **kwargs), fmt)
    except PolySyntaxError as exc:
        raise click.UsageError(str(exc)) from exc
    except (ValueError, KeyError) as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
def main():
    """Exact-arithmetic toolkit for a family of Q-Fano 3-fold constructions."""


@main.command()
@click.option("--which", type=click.IntRange(1, 3), default=2,
              show_default=True, help="Which reference table to print.")
@format_option
def tables(which, fmt):
    """Print one of the three embedded reference tables."""
    _run(operations.table, fmt, which)


@main.command()
@click.argument("r", type=int)
@click.argument("a", type=int)
@click.argument("e", type=int)
@format_option
def invariants(r, a, e, fmt):
    """Derived invariants of the (R, A, E) embedding case."""
    _run(operations.invariants, fmt, r, a, e)


@main.command()
@click.argument("singularity")
@format_option
def terminal(singularity, fmt):
    """Terminality of a cyclic quotient singularity, e.g. \"1/5(1,2,4)\"."""
    _run(operations.terminal, fmt, singularity)


def _hilbert_command(order):
    @click.argument("kind",
                    type=click.Choice(["lemma1", "wps", "hypersurface", "icecream"]))
    @click.argument("numbers", type=int, nargs=-1)
    @format_option
    def command(kind, numbers, fmt, **extra):
        n = extra.get("order", order)
        if kind == "lemma1":
            if len(numbers) != 3:
                raise click.UsageError("lemma1 takes exactly R A E")
            _run(operations.hilbert_series, fmt, kind, *numbers, order=n)
        elif kind == "wps":
            if not numbers:
                raise click.UsageError("wps takes the ambient weights")
            _run(operations.hilbert_series, fmt, kind, weights=list(numbers), order=n)
        elif kind == "hypersurface":
            if len(numbers) < 2:
                raise click.UsageError("hypersurface takes DEGREE then the weights")
            _run(operations.hilbert_series, fmt, kind,
                 weights=list(numbers[1:]), degree=numbers[0], order=n)
        else:
            if numbers:
                raise click.UsageError("icecream takes no numbers")
            _run(operations.hilbert_series, fmt, kind, order=n)

    return command


main.command(name="hilbert", help=(
    "A Hilbert series, exactly: 'lemma1 R A E', 'wps W...', "
    "'hypersurface DEGREE W...' or 'icecream'."
))(_hilbert_command(order=None))

main.command(name="expand", help=(
    "Expand a Hilbert series to the requested order; same arguments as "
    "'hilbert'."
))(click.option("--order", type=click.IntRange(0), default=10,
                show_default=True)(_hilbert_command(order=10)))


@main.command()
@click.option("--r", "r", type=click.IntRange(2), required=True,
              help="Order of the A_{r-1} Du Val point.")
@click.argument("expression")
@format_option
def classify(r, expression, fmt):
    """Classify a curve germ given by EXPRESSION in orbinates alpha, beta."""
    _run(operations.classify, fmt, r, expression)


@main.command()
@format_option
def moduli(fmt):
    """Monomial totals and dimensions of the three deformation families."""
    _run(operations.moduli, fmt)


@main.command()
@click.argument("target", default="all")
@format_option
@seed_option
@trials_option
def verify(target, fmt, seed, trials):
    """Run a verification batch; TARGET is 'all' or one named batch."""
    try:
        payload = operations.run_verify(target, seed, trials)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    emit(payload, fmt)
    if not payload["ok"]:
        sys.exit(1)


if __name__ == "__main__":
    main()
