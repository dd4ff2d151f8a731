"""
Shared command-line plumbing: option types, document loaders and the error-to-exit-code policy.
Every router pulls its run configuration and inputs through these helpers.
"""

# Standard library imports
import functools
import logging
from pathlib import Path
from typing import Annotated, Callable, List, Optional

# Third-party imports
import typer
from pydantic import ValidationError
from rich.console import Console

from relmaj.cli.service.parse import parse_resource, parse_schmidt
from relmaj.core.schema import Weights
from relmaj.entangle.schema import SchmidtVector
from relmaj.errors import InputError, RelmajError
from relmaj.models import Method, OutputFormat
from relmaj.settings import RunConfig, get_settings, parse_grid
from relmaj.thermo.schema import Resource

logger = logging.getLogger(__name__)

error_console = Console(stderr=True)

SourceOption = Annotated[Path, typer.Option("--a", help="Source document (JSON)")]
TargetOption = Annotated[Path, typer.Option("--b", help="Target document (JSON)")]
FormatOption = Annotated[Optional[OutputFormat], typer.Option("--format", help="json or csv")]
OutOption = Annotated[Optional[Path], typer.Option("--out", help="Write the report here instead of stdout")]
MethodOption = Annotated[Method, typer.Option("--method", help="lp or geometric")]
ExactOption = Annotated[bool, typer.Option("--exact", help="Rational arithmetic in the LP solver")]
GridOption = Annotated[Optional[str], typer.Option("--grid", help="z grid as start:stop:count")]


def get_config(ctx: typer.Context) -> RunConfig:
    """The RunConfig installed by the application callback."""
    if isinstance(ctx.obj, RunConfig):
        return ctx.obj
    return get_settings()


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def load_resource(path: Path) -> Resource:
    resource = parse_resource(_read(path))
    if not resource.label:
        resource = resource.model_copy(update={"label": path.stem})
    return resource


def load_schmidt(path: Path) -> SchmidtVector:
    vector = parse_schmidt(_read(path))
    if not vector.label:
        vector = vector.model_copy(update={"label": path.stem})
    return vector


def grid_values(text: Optional[str], config: RunConfig) -> List[float]:
    return parse_grid(text if text is not None else config.grid)


def parse_weights(text: str) -> Weights:
    """Comma separated numbers such as "0.6,0.4"."""
    try:
        return Weights.of(float(part) for part in text.split(","))
    except (ValueError, ValidationError) as exc:
        raise InputError(f"'{text}' is not a comma separated list of nonnegative numbers") from exc


def handle_errors(command: Callable) -> Callable:
    """
    Map library failures to exit code 1 with a message on stderr.

    Click usage errors are raised before the command body runs and keep exit code 2.
    """
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except RelmajError as exc:
            logger.debug("command failed", extra={"error": type(exc).__name__})
            error_console.print(f"error: {exc.detail}", style="bold red", markup=False, highlight=False)
            raise typer.Exit(code=exc.exit_code)
        except ValidationError as exc:
            error_console.print(f"error: {exc.errors()[0]['msg']}", style="bold red", markup=False, highlight=False)
            raise typer.Exit(code=1)

    return wrapper
