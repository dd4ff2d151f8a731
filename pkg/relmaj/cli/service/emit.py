"""
Report emission as JSON documents or CSV tables.
"""

# Standard library imports
from pathlib import Path
from typing import Any, Dict, List, Optional

# Third-party imports
import pandas as pd
import typer
from pydantic import BaseModel

from relmaj.errors import InputError
from relmaj.models import OutputFormat

# Constants
FLOAT_FORMAT = "%.9g"


def to_json(report: BaseModel) -> str:
    return report.model_dump_json(indent=2)


def to_csv(rows: List[Dict[str, Any]]) -> str:
    """Header row plus one line per record, floats at nine significant digits."""
    return pd.DataFrame(rows).to_csv(index=False, float_format=FLOAT_FORMAT)


def records(models: List[BaseModel], **extra: Any) -> List[Dict[str, Any]]:
    """Flat JSON-mode dictionaries of a list of row models."""
    return [{**extra, **model.model_dump(mode="json")} for model in models]


def write_output(text: str, out: Optional[Path] = None) -> None:
    if out is None:
        typer.echo(text.rstrip("\n"))
        return
    try:
        out.write_text(text if text.endswith("\n") else text + "\n")
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc.strerror}") from exc


def emit(report: BaseModel, rows: List[Dict[str, Any]], fmt: OutputFormat, out: Optional[Path] = None) -> None:
    """
    Write a report in the requested format.

    Args:
        report (BaseModel): The full report, used for JSON
        rows (list): Tabular view of the report, used for CSV
        fmt (OutputFormat): json or csv
        out (Path): Destination file; stdout when omitted
    """
    text = to_json(report) if fmt == OutputFormat.json else to_csv(rows)
    write_output(text, out)
