"""
Pydantic models for weighted vectors, pairs and testing-region elbows.
Extended reals use the Unbounded sentinel; float infinities never appear in results.
"""

# Standard library imports
import enum
import math
from typing import Annotated, Iterable, Iterator, Tuple, Union

# Third-party imports
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, RootModel, model_validator

from relmaj.settings import TOLERANCE


class Unbounded(str, enum.Enum):
    POSITIVE = "+inf"
    NEGATIVE = "-inf"


# Floats are written with nine significant digits in every report
Real = Annotated[float, PlainSerializer(lambda v: float(f"{v:.9g}"), return_type=float)]
ExtendedReal = Union[Unbounded, Real]
Entry = Annotated[float, Field(ge=0, allow_inf_nan=False)]


def is_finite(value) -> bool:
    """True for ordinary reals, False for the Unbounded sentinels."""
    return not isinstance(value, Unbounded)


class Weights(RootModel[Tuple[Entry, ...]]):
    """
    Nonnegative weight vector of length at least one.
    """
    model_config = ConfigDict(frozen=True)

    root: Annotated[Tuple[Entry, ...], Field(min_length=1)]

    @classmethod
    def of(cls, values: Iterable[float]) -> "Weights":
        return cls(tuple(float(v) for v in values))

    @classmethod
    def ones(cls, n: int) -> "Weights":
        return cls((1.0,) * n)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.root, dtype=float)

    @property
    def total(self) -> float:
        return math.fsum(self.root)

    def __iter__(self) -> Iterator[float]:
        return iter(self.root)

    def __len__(self) -> int:
        return len(self.root)

    def __getitem__(self, index: int) -> float:
        return self.root[index]


class Pair(BaseModel):
    """
    Two weight vectors (p, q) of the same length.
    """
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"p": [0.7, 0.3], "q": [0.5, 0.5]}},
    )

    p: Weights
    q: Weights

    @model_validator(mode="after")
    def check_lengths(self) -> "Pair":
        if len(self.p) != len(self.q):
            raise ValueError(f"p has {len(self.p)} entries but q has {len(self.q)}")
        return self

    @classmethod
    def of(cls, p: Iterable[float], q: Iterable[float]) -> "Pair":
        return cls(p=Weights.of(p), q=Weights.of(q))

    @property
    def n(self) -> int:
        return len(self.p)

    @property
    def p_total(self) -> float:
        return self.p.total

    @property
    def q_total(self) -> float:
        return self.q.total

    def is_normalized(self, tol: float = TOLERANCE) -> bool:
        return abs(self.p_total - 1.0) <= tol and abs(self.q_total - 1.0) <= tol

    def scaled(self, p_factor: float = 1.0, q_factor: float = 1.0) -> "Pair":
        """Return (p_factor * p, q_factor * q)."""
        return Pair.of(self.p.array * p_factor, self.q.array * q_factor)

    def swapped(self) -> "Pair":
        return Pair(p=self.q, q=self.p)


class Elbows(BaseModel):
    """
    Extreme points of the lower boundary of the testing region, in ratio order.
    """
    model_config = ConfigDict(frozen=True)

    points: Tuple[Tuple[float, float], ...]
    permutation: Tuple[int, ...]

    @model_validator(mode="after")
    def check_monotone(self) -> "Elbows":
        previous = (0.0, 0.0)
        for point in self.points:
            if point[0] < previous[0] - TOLERANCE or point[1] < previous[1] - TOLERANCE:
                raise ValueError("elbow coordinates must be nondecreasing")
            previous = point
        return self

    @property
    def xs(self) -> np.ndarray:
        return np.array([point[0] for point in self.points], dtype=float)

    @property
    def ys(self) -> np.ndarray:
        return np.array([point[1] for point in self.points], dtype=float)


class TypeClass(BaseModel):
    """
    One multiset class of an i.i.d. power: entry counts, class size and per-sequence weights.
    """
    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...]
    multiplicity: float = Field(ge=1)
    p_value: float = Field(ge=0)
    q_value: float = Field(ge=0)
