"""
Pydantic models for resource documents and verification summaries.
"""

# Standard library imports
from typing import List, Optional

# Third-party imports
from pydantic import BaseModel, ConfigDict, Field, model_validator


class ResourceSpec(BaseModel):
    """
    A resource document: either p and q directly, or energies, beta and a population
    from which the Gibbs reference is derived.
    """
    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "examples": [
                {"name": "pure-bit", "p": [1, 0], "q": [0.5, 0.5]},
                {"name": "qutrit", "energies": [0, 1, 2], "beta": 0.693147, "population": [0.6, 0.3, 0.1]},
            ]
        },
    )

    name: str = ""
    p: Optional[List[float]] = None
    q: Optional[List[float]] = None
    energies: Optional[List[float]] = None
    beta: Optional[float] = Field(None, gt=0)
    population: Optional[List[float]] = None

    @model_validator(mode="after")
    def check_shape(self) -> "ResourceSpec":
        direct = self.p is not None or self.q is not None
        thermal = self.energies is not None or self.beta is not None or self.population is not None
        if direct == thermal:
            raise ValueError("give either p and q, or energies, beta and population")
        if direct and (self.p is None or self.q is None):
            raise ValueError("both p and q are required")
        if thermal and (self.energies is None or self.beta is None or self.population is None):
            raise ValueError("energies, beta and population are all required")
        return self

    @property
    def is_thermal(self) -> bool:
        return self.energies is not None


class SchmidtSpec(BaseModel):
    model_config = ConfigDict(extra="forbid", json_schema_extra={"example": {"name": "bell", "schmidt": [0.5, 0.5]}})

    name: str = ""
    schmidt: List[float]


class VerifyCheck(BaseModel):
    name: str
    agreements: int = 0
    disagreements: int = 0


class VerifyReport(BaseModel):
    """
    Outcome of the randomized cross-checks of closed forms against the LP oracle.
    """
    seed: int
    cases: int
    checks: List[VerifyCheck]

    @property
    def ok(self) -> bool:
        return all(check.disagreements == 0 for check in self.checks)
