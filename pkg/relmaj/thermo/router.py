"""
Command-line routes for thermodynamic quantities: work, approximate transformations,
the bound suite and asymptotic rates.
"""

# Standard library imports
from pathlib import Path
from typing import Annotated, Optional

# Third-party imports
import typer

from relmaj.cli.dependencies import (
    FormatOption,
    GridOption,
    OutOption,
    SourceOption,
    TargetOption,
    get_config,
    grid_values,
    handle_errors,
    load_resource,
    parse_weights,
)
from relmaj.cli.service.emit import emit, records
from relmaj.settings import parse_grid
from relmaj.thermo.schema import BatteryContext
from relmaj.thermo.service.asymptotics import asymptotic_work_rate, erasure_cooling_rates
from relmaj.thermo.service.bounds import bounds_report
from relmaj.thermo.service.report import transform_report
from relmaj.thermo.service.work import work_report

router = typer.Typer()

ZOption = Annotated[float, typer.Option("--z", help="Work factor")]
LambdaOption = Annotated[float, typer.Option("--lambda", help="Success probability in (0, 1]")]


@router.command("work")
@handle_errors
def work(
    ctx: typer.Context,
    a: SourceOption,
    z: ZOption = 1.0,
    lam: LambdaOption = 1.0,
    z_cost: Annotated[float, typer.Option("--zcost", help="Work factor invested in the cost, at least 1")] = 1.0,
    fmt: FormatOption = None,
    out: OutOption = None,
):
    """Work value, work cost and phi of a resource."""
    config = get_config(ctx)
    report = work_report(load_resource(a), z, lam, z_cost)
    row = {
        "label": report.label,
        **{f"value_{key}": value for key, value in report.value.model_dump(mode="json").items()},
        **{f"cost_{key}": value for key, value in report.cost.model_dump(mode="json").items()},
        "phi": report.phi,
    }
    emit(report, [row], fmt or config.output_format, out)


@router.command("approx")
@handle_errors
def approx(
    ctx: typer.Context,
    a: SourceOption,
    b: TargetOption,
    grid: GridOption = None,
    lambdas: Annotated[str, typer.Option("--lambdas", help="lambda grid as start:stop:count")] = "0.25:1:4",
    beta: Annotated[Optional[float], typer.Option("--beta", help="Battery inverse temperature")] = None,
    energy: Annotated[float, typer.Option("--energy", help="Battery energy level")] = 0.0,
    zb: Annotated[float, typer.Option("--zb", help="Battery partition function")] = 1.0,
    fmt: FormatOption = None,
    out: OutOption = None,
):
    """Optimal errors, probabilities and work factors of --a -> --b over grids."""
    config = get_config(ctx)
    battery = BatteryContext(beta=beta, energy=energy, partition=zb) if beta is not None else None
    report = transform_report(
        load_resource(a),
        load_resource(b),
        grid_values(grid, config),
        parse_grid(lambdas),
        battery=battery,
    )
    rows = records(list(report.rows_z), table="z") + records(list(report.rows_lambda), table="lambda")
    emit(report, rows, fmt or config.output_format, out)


@router.command("bounds")
@handle_errors
def bounds(
    ctx: typer.Context,
    a: SourceOption,
    b: TargetOption,
    lam: LambdaOption = 1.0,
    z: ZOption = 1.0,
    z_prime: Annotated[float, typer.Option("--zprime", help="Second work factor")] = 1.0,
    c: Annotated[Optional[Path], typer.Option("--c", help="Third resource for the chain bounds")] = None,
    lam2: Annotated[Optional[float], typer.Option("--lambda2", help="Probability of the second link")] = None,
    z2: Annotated[Optional[float], typer.Option("--z2", help="Work factor of the second link")] = None,
    fmt: FormatOption = None,
    out: OutOption = None,
):
    """Evaluate every bound for --a -> --b; skipped bounds name their failed precondition."""
    config = get_config(ctx)
    third = load_resource(c) if c is not None else None
    report = bounds_report(
        load_resource(a),
        load_resource(b),
        lam,
        z,
        z_prime,
        c=third,
        lam2=lam2,
        z2=z2,
        tol=config.tolerance,
    )
    emit(report, records(list(report.entries)), fmt or config.output_format, out)


@router.command("asympt")
@handle_errors
def asympt(
    ctx: typer.Context,
    a: SourceOption,
    b: Annotated[Optional[Path], typer.Option("--b", help="Target resource; without it erasure rates are tabulated")] = None,
    n_max: Annotated[int, typer.Option("--nmax", help="Largest number of copies")] = 8,
    level: Annotated[float, typer.Option("--level", help="Testing level in (0, 1)")] = 0.5,
    cooling: Annotated[Optional[str], typer.Option("--cooling", help="Two-level target Gibbs state, e.g. 0.6,0.4")] = None,
    fmt: FormatOption = None,
    out: OutOption = None,
):
    """Per-copy work rates of --a -> --b, or erasure and cooling rates of --a alone."""
    config = get_config(ctx)
    source = load_resource(a)
    if b is not None:
        table = asymptotic_work_rate(source, load_resource(b), n_max, level=level, max_dimension=config.max_dimension)
    else:
        cooling_gibbs = parse_weights(cooling) if cooling is not None else None
        table = erasure_cooling_rates(source, n_max, cooling_gibbs=cooling_gibbs, max_dimension=config.max_dimension)
    emit(table, records(list(table.rows)), fmt or config.output_format, out)
