"""
Command-line route for pure-state entanglement transformations.
"""

# Standard library imports
from typing import Annotated

# Third-party imports
import typer

from relmaj.cli.dependencies import (
    FormatOption,
    OutOption,
    SourceOption,
    TargetOption,
    get_config,
    handle_errors,
    load_schmidt,
)
from relmaj.cli.service.emit import emit
from relmaj.entangle.service.logic import summarize

router = typer.Typer()


@router.command("entangle")
@handle_errors
def entangle(
    ctx: typer.Context,
    a: SourceOption,
    b: TargetOption,
    z: Annotated[float, typer.Option("--z", help="Work factor for the fidelity bounds")] = 1.0,
    battery: Annotated[bool, typer.Option("--battery", help="Also search integer battery sizes")] = False,
    fmt: FormatOption = None,
    out: OutOption = None,
):
    """Feasibility, probability, cost and fidelity bounds of Schmidt vector --a -> --b."""
    config = get_config(ctx)
    summary = summarize(
        load_schmidt(a),
        load_schmidt(b),
        z=z,
        battery_size=config.max_battery if battery else None,
    )
    row = {key: value for key, value in summary.model_dump(mode="json").items() if key not in ("fidelity", "battery")}
    row.update(summary.fidelity.model_dump(mode="json", exclude={"skipped"}))
    if summary.battery is not None:
        row.update(summary.battery.model_dump(mode="json"))
    emit(summary, [row], fmt or config.output_format, out)
