"""
Main application module for relmaj.
This module builds the Typer application, resolves the run configuration and logging,
and includes the command routers of every sub-package.
"""

# Standard library imports
from typing import Annotated, Optional

# Third-party imports
import typer

from relmaj import __version__
from relmaj.cli.router import router as cli_router
from relmaj.entangle.router import router as entangle_router
from relmaj.logger import configure_logging
from relmaj.settings import get_settings
from relmaj.submaj.router import router as submaj_router
from relmaj.thermo.router import router as thermo_router

app = typer.Typer(
    name="relmaj",
    help="Relative (sub)majorization, thermodynamic resources and entanglement transformations.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)


def include_router(application: typer.Typer, router: typer.Typer) -> None:
    """Mount a router's commands at the top level of the application."""
    application.registered_commands.extend(router.registered_commands)


def _show_version(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    log_level: Annotated[Optional[str], typer.Option("--log-level", help="DEBUG, INFO, WARNING or ERROR")] = None,
    log_json: Annotated[Optional[bool], typer.Option("--log-json/--no-log-json", help="JSON log records on stderr")] = None,
    version: Annotated[bool, typer.Option("--version", callback=_show_version, is_eager=True)] = False,
):
    """Resolve settings from RELMAJ_* variables, .env and flags, then configure logging."""
    updates = {key: value for key, value in {"log_level": log_level, "log_json": log_json}.items() if value is not None}
    config = get_settings().model_copy(update=updates)
    try:
        configure_logging(config.log_level, config.log_json)
    except ValueError as exc:
        raise typer.BadParameter(f"unknown log level '{config.log_level}'", param_hint="--log-level") from exc
    ctx.obj = config


include_router(app, submaj_router)
include_router(app, thermo_router)
include_router(app, entangle_router)
include_router(app, cli_router)
