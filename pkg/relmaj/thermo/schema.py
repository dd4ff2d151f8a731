"""
Pydantic models for thermodynamic resources and the reports computed from them.
"""

# Standard library imports
import math
from typing import Dict, List, Optional, Tuple

# Third-party imports
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from relmaj.core.schema import ExtendedReal, Pair, Real, Weights
from relmaj.models import Relation
from relmaj.settings import TOLERANCE


class Resource(BaseModel):
    """
    A state r together with its Gibbs reference g, both normalized, g strictly positive.
    """
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"r": [1.0, 0.0], "g": [0.5, 0.5], "label": "pure-bit"}},
    )

    r: Weights
    g: Weights
    label: str = ""

    @field_validator("r", "g")
    @classmethod
    def check_normalized(cls, value: Weights) -> Weights:
        if abs(value.total - 1.0) > TOLERANCE:
            raise ValueError(f"entries must sum to 1, got {value.total:.12g}")
        return value

    @field_validator("g")
    @classmethod
    def check_positive(cls, value: Weights) -> Weights:
        if min(value) <= 0:
            raise ValueError("Gibbs weights must be strictly positive")
        return value

    @model_validator(mode="after")
    def check_lengths(self) -> "Resource":
        if len(self.r) != len(self.g):
            raise ValueError(f"r has {len(self.r)} entries but g has {len(self.g)}")
        return self

    @classmethod
    def of(cls, r, g, label: str = "") -> "Resource":
        return cls(r=Weights.of(r), g=Weights.of(g), label=label)

    @classmethod
    def trivial(cls) -> "Resource":
        """The one-level resource ((1), (1))."""
        return cls.of([1.0], [1.0], label="trivial")

    @classmethod
    def pure_bit(cls) -> "Resource":
        """A pure bit against the uniform Gibbs state."""
        return cls.of([1.0, 0.0], [0.5, 0.5], label="pure-bit")

    @property
    def pair(self) -> Pair:
        return Pair(p=self.r, q=self.g)

    @property
    def n(self) -> int:
        return len(self.r)


class BatteryContext(BaseModel):
    """
    Battery held at energy `energy` with partition function `partition`.
    """
    model_config = ConfigDict(frozen=True)

    beta: float = Field(gt=0, description="Inverse temperature")
    energy: float = Field(0.0, description="Battery energy level")
    partition: float = Field(1.0, gt=0, description="Battery partition function")

    @property
    def scale(self) -> float:
        """Factor converting a battery-independent error into the physical one."""
        return math.exp(-self.beta * self.energy) / self.partition


class ZRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    z: Real
    lambda_star: Real
    eps_star: Real
    eta_hat_star: ExtendedReal
    eta: Optional[ExtendedReal] = None


class LambdaRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    lam: Real
    z_star: ExtendedReal


class TransformReport(BaseModel):
    """
    Optimal values for one ordered pair of resources over a z grid and a lambda grid.
    """
    model_config = ConfigDict(frozen=True)

    rows_z: Tuple[ZRow, ...]
    rows_lambda: Tuple[LambdaRow, ...]
    battery: Optional[BatteryContext] = None

    @property
    def lambda_star_at_z(self) -> Dict[float, float]:
        return {row.z: row.lambda_star for row in self.rows_z}

    @property
    def z_star_at_lambda(self) -> Dict[float, ExtendedReal]:
        return {row.lam: row.z_star for row in self.rows_lambda}

    @property
    def eps_star_at_z(self) -> Dict[float, float]:
        return {row.z: row.eps_star for row in self.rows_z}

    @property
    def eta_hat_star_at_z(self) -> Dict[float, ExtendedReal]:
        return {row.z: row.eta_hat_star for row in self.rows_z}


class WorkValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    z_star: Real
    lambda_star: Real
    eta_hat: Real


class WorkCost(BaseModel):
    model_config = ConfigDict(frozen=True)

    z_star: Real
    eps_star: Real
    eta_star: Real


class BoundEntry(BaseModel):
    """
    One inequality lhs (relation) rhs; skipped entries carry the reason instead of values.
    """
    model_config = ConfigDict(frozen=True)

    bound_id: str
    relation: Relation
    lhs: Optional[ExtendedReal] = None
    rhs: Optional[ExtendedReal] = None
    satisfied: Optional[bool] = None
    skipped: bool = False
    reason: str = ""


class BoundsReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: Tuple[BoundEntry, ...]

    @property
    def evaluated(self) -> List[BoundEntry]:
        return [entry for entry in self.entries if not entry.skipped]

    @property
    def violations(self) -> List[BoundEntry]:
        return [entry for entry in self.evaluated if not entry.satisfied]

    def get(self, bound_id: str) -> BoundEntry:
        for entry in self.entries:
            if entry.bound_id == bound_id:
                return entry
        raise KeyError(bound_id)


class WorkRateRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    fixed_level_rate: ExtendedReal
    zero_error_rate: ExtendedReal


class WorkRateTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: Tuple[WorkRateRow, ...]
    level: Real
    limit: ExtendedReal


class ErasureRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    eps_star: Real
    rate: ExtendedReal
    cooling_rate: Optional[ExtendedReal] = None


class ErasureRateTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: Tuple[ErasureRow, ...]
    limit: ExtendedReal


class GibbsCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    residual: Real


class HeraldedCase(BaseModel):
    """
    Probabilities for one random instance: mixed output, heralded with and without a blank bit.
    """
    model_config = ConfigDict(frozen=True)

    index: int
    source: Resource
    target: Resource
    mixture: Real
    heralded_blank: Real
    heralded_plain: Real
    lambda_star: Real


class WorkReport(BaseModel):
    """
    Work value at (z, lambda), work cost at (lambda, z_cost) and phi at z_cost for one resource.
    """
    model_config = ConfigDict(frozen=True)

    label: str = ""
    value: WorkValue
    cost: WorkCost
    phi: Real
