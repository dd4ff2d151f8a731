"""
Command-line routes for plotting and for the randomized oracle verification.
"""

# Standard library imports
from pathlib import Path
from typing import Annotated, Optional

# Third-party imports
import typer
from rich.console import Console
from rich.progress import Progress
from rich.table import Table

from relmaj.cli.dependencies import OutOption, SourceOption, error_console, get_config, handle_errors, load_resource
from relmaj.cli.service.emit import to_json, write_output
from relmaj.cli.service.render import render_lorenz
from relmaj.cli.service.verify import run_verification

router = typer.Typer()

# Constants
DEFAULT_PLOT = Path("lorenz.svg")


@router.command("lorenz")
@handle_errors
def lorenz(
    ctx: typer.Context,
    a: SourceOption,
    b: Annotated[Optional[Path], typer.Option("--b", help="Second resource drawn on the same axes")] = None,
    out: OutOption = None,
):
    """Draw the lower boundary of --a (and --b) as an SVG file."""
    config = get_config(ctx)
    resources = [load_resource(a)] + ([load_resource(b)] if b is not None else [])
    path = render_lorenz([(r.label, r.pair) for r in resources], out or config.plot_path or DEFAULT_PLOT)
    typer.echo(str(path))


@router.command("verify")
@handle_errors
def verify(
    ctx: typer.Context,
    seed: Annotated[Optional[int], typer.Option("--seed", help="Seed of the random instances")] = None,
    cases: Annotated[Optional[int], typer.Option("--cases", min=1, help="Number of random instances")] = None,
    out: OutOption = None,
):
    """Cross-check closed forms and geometric decisions against the LP oracle."""
    config = get_config(ctx)
    cases = cases if cases is not None else config.cases
    with Progress(console=error_console, transient=True) as bar:
        task = bar.add_task("verifying", total=cases)
        report = run_verification(
            seed if seed is not None else config.seed,
            cases,
            progress=lambda _: bar.advance(task),
        )

    table = Table(title=f"verification (seed {report.seed}, {report.cases} cases)")
    table.add_column("check")
    table.add_column("agreements", justify="right")
    table.add_column("disagreements", justify="right")
    for check in report.checks:
        style = "red" if check.disagreements else None
        table.add_row(check.name, str(check.agreements), str(check.disagreements), style=style)
    Console().print(table)

    if out is not None:
        write_output(to_json(report), out)
    if not report.ok:
        raise typer.Exit(code=1)
