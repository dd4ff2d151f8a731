"""
Pydantic models for Schmidt coefficient vectors and pure-state transformation results.
"""

# Standard library imports
from typing import List, Optional

# Third-party imports
from pydantic import BaseModel, ConfigDict, Field, field_validator

from relmaj.core.schema import Real, Weights
from relmaj.settings import TOLERANCE


class SchmidtVector(BaseModel):
    """
    Normalized Schmidt coefficients (squared amplitudes), in any order.
    """
    model_config = ConfigDict(frozen=True, json_schema_extra={"example": {"coefficients": [0.8, 0.2]}})

    coefficients: Weights
    label: str = ""

    @field_validator("coefficients")
    @classmethod
    def check_normalized(cls, value: Weights) -> Weights:
        if abs(value.total - 1.0) > TOLERANCE:
            raise ValueError(f"Schmidt coefficients must sum to 1, got {value.total:.12g}")
        return value

    @classmethod
    def of(cls, values, label: str = "") -> "SchmidtVector":
        return cls(coefficients=Weights.of(values), label=label)

    @property
    def rank(self) -> int:
        return sum(1 for v in self.coefficients if v > 0)


class BatteryMatch(BaseModel):
    """
    Smallest ratio n_b / n'_b of maximally entangled battery sizes that makes the
    transformation possible.
    """
    model_config = ConfigDict(frozen=True)

    n_b: int = Field(ge=1)
    n_b_prime: int = Field(ge=1)

    @property
    def ratio(self) -> float:
        return self.n_b / self.n_b_prime


class FidelityBounds(BaseModel):
    """
    Lower bounds on the achievable fidelity; None marks a bound whose precondition fails.
    """
    model_config = ConfigDict(frozen=True)

    shift_bound: Real
    entropy_bound: Optional[Real] = None
    cost_bound: Optional[Real] = None
    bhattacharyya: Real
    skipped: List[str] = []


class EntanglementSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    possible: bool
    probability: Real
    cost: Real
    gain: Real
    fidelity: FidelityBounds
    battery: Optional[BatteryMatch] = None
