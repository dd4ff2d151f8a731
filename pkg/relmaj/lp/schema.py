"""
Pydantic models for dense linear programs and their solutions.
Variables are implicitly bounded below by zero.
"""

# Standard library imports
from typing import Any, List, Optional, Tuple, Union

# Third-party imports
import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict, Field, model_validator

from relmaj.models import Relation, Sense, Status

# A solution value: float in floating mode, sympy.Rational in exact mode
Scalar = Union[float, sympy.Rational]


class Constraint(BaseModel):
    model_config = ConfigDict(frozen=True)

    row: Tuple[float, ...]
    relation: Relation
    bound: float


class LinearProgram(BaseModel):
    """
    Dense program: optimize objective . x subject to row . x (relation) bound, x >= 0.
    """
    model_config = ConfigDict(frozen=True)

    sense: Sense = Sense.minimize
    objective: Tuple[float, ...]
    constraints: Tuple[Constraint, ...] = ()
    n_vars: int = Field(ge=1)

    @model_validator(mode="after")
    def check_shapes(self) -> "LinearProgram":
        if len(self.objective) != self.n_vars:
            raise ValueError(f"objective has {len(self.objective)} coefficients for {self.n_vars} variables")
        for index, constraint in enumerate(self.constraints):
            if len(constraint.row) != self.n_vars:
                raise ValueError(f"constraint {index} has {len(constraint.row)} coefficients for {self.n_vars} variables")
        return self

    @classmethod
    def build(cls, sense: Sense, objective, rows: List[Tuple[Any, Relation, float]]) -> "LinearProgram":
        objective = tuple(float(v) for v in objective)
        return cls(
            sense=sense,
            objective=objective,
            constraints=tuple(
                Constraint(row=tuple(float(v) for v in row), relation=relation, bound=float(bound))
                for row, relation, bound in rows
            ),
            n_vars=len(objective),
        )

    @property
    def matrix(self) -> np.ndarray:
        if not self.constraints:
            return np.zeros((0, self.n_vars))
        return np.array([c.row for c in self.constraints], dtype=float)

    @property
    def bounds(self) -> np.ndarray:
        return np.array([c.bound for c in self.constraints], dtype=float)

    @property
    def relations(self) -> List[Relation]:
        return [c.relation for c in self.constraints]


class Solution(BaseModel):
    """
    Result of solve. For maximize programs the dual satisfies bounds . dual = objective.
    On infeasible programs `dual` holds a Farkas certificate.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    status: Status
    primal: Tuple[Any, ...] = ()
    dual: Tuple[Any, ...] = ()
    objective: Optional[Any] = None
    pivots: int = 0


class Decision(BaseModel):
    """
    Feasibility answer: a point when feasible, a dual certificate otherwise.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    feasible: bool
    point: Optional[Tuple[Any, ...]] = None
    certificate: Optional[Tuple[Any, ...]] = None
