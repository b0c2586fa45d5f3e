"""``circmem`` command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 size cap exceeded,
3 reference-suite failure.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from circmem import report as rpt
from circmem.circulant import BipolarState, CirculantMatrix, parse_first_row
from circmem.dynamics import AsynchronousSweep, Synchronous, converge as run_converge
from circmem.enumeration import GRAY_CAP
from circmem.errors import CircmemError, SizeTooLarge
from circmem.lab import FAIL, SearchConfig, analyze as run_analyze, figure_data, random_search, run_paper_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SIZE = 2
EXIT_SUITE = 3

format_option = click.option(
    "--format", "fmt", type=click.Choice(rpt.FORMATS), default="text", show_default=True,
)
out_option = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Write here instead of stdout.")
partitions_option = click.option(
    "--partitions", type=click.IntRange(min=1), default=1, show_default=True,
    envvar="CIRCMEM_PARTITIONS", help="Gray-code blocks to scan (env CIRCMEM_PARTITIONS).",
)
row_options = [
    click.option("--first-row", help='Comma-separated generator row, e.g. "0,2,-5,3".'),
    click.option("--spec", "spec_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
                 help="JSON matrix spec file with n and first_row."),
]


def with_row(f):
    for opt in reversed(row_options):
        f = opt(f)
    return f


def _resolve_row(first_row, spec_path):
    if (first_row is None) == (spec_path is None):
        raise click.UsageError("give exactly one of --first-row or --spec")
    if spec_path is not None:
        return rpt.read_matrix_spec(spec_path)
    return parse_first_row(first_row), None


def _write(text: str, out: Path | None):
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8", newline="\n")


def _check_size(n: int, force_large: bool):
    if n > GRAY_CAP and not force_large:
        raise SizeTooLarge(n, GRAY_CAP, "gray-code")


@click.group()
def cli():
    """Fixed-point capacity of circulant feedback networks."""


@cli.command()
@with_row
@click.option("--label", help="Label for the report (defaults to the row).")
@partitions_option
@click.option("--list-states", is_flag=True, help="Print every memory.")
@click.option("--force-large", is_flag=True, help=f"Allow n > {GRAY_CAP}.")
@format_option
@out_option
def analyze(first_row, spec_path, label, partitions, list_states, force_large, fmt, out):
    """Enumerate and summarise the memories of one matrix."""
    row, spec_label = _resolve_row(first_row, spec_path)
    _check_size(row.n, force_large)
    report = run_analyze(
        row, label=label or spec_label, partitions=partitions,
        list_states=list_states, force_large=force_large,
    )
    _write(rpt.emit_capacity(report, fmt), out)
    return EXIT_OK


@cli.command("paper-suite")
@partitions_option
@format_option
@out_option
def paper_suite(partitions, fmt, out):
    """Reproduce the capacity counts of every reference matrix."""
    suite = run_paper_suite(partitions=partitions)
    _write(rpt.emit_suite(suite, fmt), out)
    return EXIT_SUITE if suite.status == FAIL else EXIT_OK


@cli.command()
@click.option("--size", "n", type=click.IntRange(min=1), required=True)
@click.option("--trials", type=click.IntRange(min=0), required=True)
@click.option("--weight-min", type=int, required=True)
@click.option("--weight-max", type=int, required=True)
@click.option("--row-sum", type=int, default=None, help="Reject rows whose sum differs.")
@click.option("--seed", type=click.IntRange(min=0, max=(1 << 64) - 1), required=True)
@click.option("--max-rejections", type=click.IntRange(min=1), default=10_000, show_default=True)
@partitions_option
@click.option("--force-large", is_flag=True)
@format_option
@out_option
def search(n, trials, weight_min, weight_max, row_sum, seed, max_rejections, partitions, force_large, fmt, out):
    """Analyse seeded random generator rows."""
    _check_size(n, force_large)
    try:
        config = SearchConfig(
            n=n, trials=trials, weight_min=weight_min, weight_max=weight_max, seed=seed,
            row_sum_target=row_sum, max_rejections_per_trial=max_rejections,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    _write(rpt.emit_search(random_search(config, partitions=partitions), fmt), out)
    return EXIT_OK


def _parse_order(text: str | None, n: int):
    if text is None:
        return AsynchronousSweep()
    if text.startswith("random:"):
        try:
            seed = int(text.split(":", 1)[1])
        except ValueError:
            raise click.UsageError(f"bad random order seed in {text!r}") from None
        return AsynchronousSweep.seeded(n, seed)
    try:
        return AsynchronousSweep(tuple(int(t) for t in text.split(",")))
    except ValueError:
        raise click.UsageError(f"--order must be comma-separated indices or random:SEED, got {text!r}") from None


@cli.command()
@with_row
@click.option("--state", required=True, help='Initial state, e.g. "++--".')
@click.option("--mode", type=click.Choice(["sync", "async"]), default="sync", show_default=True)
@click.option("--order", help="Async update order: CSV permutation or random:SEED.")
@click.option("--max-iters", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def converge(first_row, spec_path, state, mode, order, max_iters, fmt):
    """Run the network dynamics from one state."""
    row, _ = _resolve_row(first_row, spec_path)
    W = CirculantMatrix(row)
    s0 = BipolarState.from_string(state)
    if mode == "sync":
        if order is not None:
            raise click.UsageError("--order only applies to --mode async")
        update = Synchronous()
    else:
        update = _parse_order(order, row.n)
    click.echo(rpt.emit_outcome(run_converge(W, s0, update, max_iters), fmt), nl=False)
    return EXIT_OK


@cli.command()
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False, path_type=Path))
@click.option("--counts", type=click.Choice(["computed", "reported"]), default="computed", show_default=True,
              help="Plot enumerated counts or the published ones.")
@partitions_option
def figures(out_dir, counts, partitions):
    """Write figure2.csv (all sizes), figure3.csv (even) and figure4.csv (odd)."""
    out_dir.mkdir(parents=True, exist_ok=True)
    data = figure_data(run_paper_suite(partitions=partitions), counts=counts)
    for name, text in rpt.figure_csvs(data).items():
        (out_dir / name).write_text(text, encoding="utf-8", newline="\n")
        click.echo(out_dir / name)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="circmem", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except SizeTooLarge as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_SIZE
    except (CircmemError, ValueError) as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_USAGE
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
