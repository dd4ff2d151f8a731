"""
Command-line routes for (sub)majorization decisions and the feasible probability/work region.
"""

# Standard library imports
from pathlib import Path
from typing import Annotated, Optional

# Third-party imports
import typer

from relmaj.cli.dependencies import (
    ExactOption,
    FormatOption,
    GridOption,
    MethodOption,
    OutOption,
    SourceOption,
    TargetOption,
    get_config,
    grid_values,
    handle_errors,
    load_resource,
)
from relmaj.cli.service.emit import emit, records
from relmaj.cli.service.render import render_region
from relmaj.models import Method
from relmaj.submaj.service.optimal import region_boundary
from relmaj.submaj.service.report import check_report

router = typer.Typer()


@router.command("check")
@handle_errors
def check(
    ctx: typer.Context,
    a: SourceOption,
    b: TargetOption,
    method: MethodOption = Method.lp,
    exact: ExactOption = False,
    fmt: FormatOption = None,
    out: OutOption = None,
):
    """Decide whether --a majorizes and submajorizes --b, with witnesses."""
    config = get_config(ctx)
    source, target = load_resource(a), load_resource(b)
    report = check_report(source.pair, target.pair, method=method, tol=config.tolerance, exact=exact)
    rows = [
        {"relation": "majorizes", "verdict": report.majorization.verdict.value, "method": report.majorization.method.value},
        {"relation": "submajorizes", "verdict": report.submajorization.verdict.value, "method": report.submajorization.method.value},
    ]
    emit(report, rows, fmt or config.output_format, out)


@router.command("region")
@handle_errors
def region(
    ctx: typer.Context,
    a: SourceOption,
    b: TargetOption,
    z: Annotated[Optional[float], typer.Option("--z", help="Single work factor instead of a grid")] = None,
    grid: GridOption = None,
    plot: Annotated[Optional[Path], typer.Option("--plot", help="Also draw the boundary as SVG")] = None,
    fmt: FormatOption = None,
    out: OutOption = None,
):
    """Sample lambda*(z), the boundary of the feasible region of --a -> --b."""
    config = get_config(ctx)
    source, target = load_resource(a), load_resource(b)
    zs = [z] if z is not None else grid_values(grid, config)
    boundary = region_boundary(source.pair, target.pair, zs, tol=config.tolerance)
    plot_path = plot or config.plot_path
    if plot_path is not None:
        render_region(boundary, plot_path)
    emit(boundary, records(list(boundary.samples)), fmt or config.output_format, out)
