"""
Run configuration for relmaj.
Values come from RELMAJ_* environment variables or a local .env file; the CLI
overrides single fields from its flags. Library functions never read this module's
settings implicitly, they take the tolerance constants below as keyword defaults.
"""

# Standard library imports
from functools import lru_cache
from pathlib import Path
from typing import List, Optional

# Third-party imports
import numpy as np
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from relmaj.errors import InputError
from relmaj.models import OutputFormat

# Constants
TOLERANCE = 1e-9
LP_TOLERANCE = 1e-7
PIVOT_TOLERANCE = 1e-10
MAX_DIMENSION = 4096
MAX_BATTERY = 64
DEFAULT_GRID = "0.25:2:8"
DEFAULT_SEED = 7


class RunConfig(BaseSettings):
    """
    Settings for one CLI run.
    """
    model_config = SettingsConfigDict(env_prefix="RELMAJ_", env_file=".env", extra="ignore")

    tolerance: float = Field(TOLERANCE, gt=0, description="Absolute tolerance for equality checks")
    lp_tolerance: float = Field(LP_TOLERANCE, gt=0, description="LP versus geometry agreement")
    pivot_tolerance: float = Field(PIVOT_TOLERANCE, gt=0, description="Simplex pivot threshold")
    max_dimension: int = Field(MAX_DIMENSION, ge=1, description="Cap on tensor product sizes")
    max_battery: int = Field(MAX_BATTERY, ge=1, description="Largest battery size searched")
    grid: str = Field(DEFAULT_GRID, description="Grid as start:stop:count")
    output_format: OutputFormat = OutputFormat.json
    plot_path: Optional[Path] = None
    seed: int = DEFAULT_SEED
    cases: int = Field(200, ge=1, description="Randomized verification cases")
    log_level: str = "WARNING"
    log_json: bool = True

    @field_validator("grid")
    @classmethod
    def validate_grid(cls, value: str) -> str:
        parse_grid(value)
        return value


def parse_grid(text: str) -> List[float]:
    """
    Expand a start:stop:count grid specification.

    Args:
        text (str): Grid text such as "0.25:2:8"

    Returns:
        list: Evenly spaced positive values
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise InputError(f"grid '{text}' must look like start:stop:count")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise InputError(f"grid '{text}' has a non-numeric part") from exc
    if count < 1 or start <= 0 or stop < start:
        raise InputError(f"grid '{text}' needs 0 < start <= stop and count >= 1")
    return [float(v) for v in np.linspace(start, stop, count)]


@lru_cache(maxsize=1)
def get_settings() -> RunConfig:
    """Load settings once per process."""
    return RunConfig()
