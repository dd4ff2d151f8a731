"""
Pydantic models for (sub)majorization decisions, witnesses and error parameters.
"""

# Standard library imports
from typing import List, Optional, Tuple

# Third-party imports
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from relmaj.core.schema import ExtendedReal, Pair, Real, Weights
from relmaj.models import Method, StochasticClass, Verdict
from relmaj.settings import LP_TOLERANCE


class Witness(BaseModel):
    """
    Nonnegative n' x n matrix certifying a (sub)majorization relation.
    """
    model_config = ConfigDict(frozen=True)

    matrix: Tuple[Tuple[Real, ...], ...]
    stochastic_class: StochasticClass

    @model_validator(mode="after")
    def check_columns(self) -> "Witness":
        values = np.asarray(self.matrix, dtype=float)
        if values.ndim != 2 or values.size == 0:
            raise ValueError("witness matrix must be a nonempty rectangle")
        if np.any(values < -LP_TOLERANCE):
            raise ValueError("witness entries must be nonnegative")
        sums = values.sum(axis=0)
        if self.stochastic_class == StochasticClass.stochastic:
            if np.any(np.abs(sums - 1.0) > LP_TOLERANCE):
                raise ValueError("stochastic witness columns must sum to 1")
        elif np.any(sums > 1.0 + LP_TOLERANCE):
            raise ValueError("substochastic witness columns must sum to at most 1")
        return self

    @classmethod
    def of(cls, matrix: np.ndarray, stochastic_class: StochasticClass) -> "Witness":
        clipped = np.clip(np.asarray(matrix, dtype=float), 0.0, None)
        return cls(matrix=tuple(tuple(float(v) for v in row) for row in clipped), stochastic_class=stochastic_class)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.matrix, dtype=float)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.array.shape


class ApproxParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    epsilon: float = Field(0.0, ge=0, description="Allowed error on the state side")
    eta: float = Field(0.0, ge=0, description="Allowed error on the reference side")


class MajorizationDecision(BaseModel):
    """
    Answer of a (sub)majorization check with the method used and an optional witness.
    """
    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    method: Method
    witness: Optional[Witness] = None

    @property
    def holds(self) -> bool:
        return self.verdict == Verdict.yes


class ChainCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    first: bool
    second: bool
    composed: bool

    @property
    def consistent(self) -> bool:
        """The composed relation holds whenever both links do."""
        return self.composed or not (self.first and self.second)


class ErrorPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    eps_star: Real
    eta_hat_star: ExtendedReal


class BoundarySample(BaseModel):
    model_config = ConfigDict(frozen=True)

    z: Real = Field(gt=0)
    lambda_star: Real = Field(ge=0, le=1)


class FeasibleBoundary(BaseModel):
    """
    Samples (z, lambda*) of the upper boundary of the feasible probability/work region.
    """
    model_config = ConfigDict(frozen=True)

    samples: Tuple[BoundarySample, ...]

    @property
    def zs(self) -> List[float]:
        return [s.z for s in self.samples]

    @property
    def lambdas(self) -> List[float]:
        return [s.lambda_star for s in self.samples]


class DilationResult(BaseModel):
    """
    Strict majorization instance built from a submajorization: (p + 0, q + zq) onto (p' + s', q' + q'/z).
    """
    model_config = ConfigDict(frozen=True)

    source: Pair
    target: Pair
    s_prime: Weights
    z: Real
    witness: Witness


class CheckReport(BaseModel):
    """
    Both decisions for one ordered pair, each with its witness when it holds.
    """
    model_config = ConfigDict(frozen=True)

    majorization: MajorizationDecision
    submajorization: MajorizationDecision
