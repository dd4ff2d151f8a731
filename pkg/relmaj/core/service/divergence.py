"""
Distances and divergences between weight vectors (natural-log units).
"""

# Third-party imports
import numpy as np
from scipy.special import entr, rel_entr

from relmaj.core.schema import ExtendedReal, Unbounded, Weights
from relmaj.errors import InputError
from relmaj.settings import TOLERANCE


def _same_length(a: Weights, b: Weights) -> None:
    if len(a) != len(b):
        raise InputError(f"length mismatch: {len(a)} versus {len(b)}")


def variational_distance(a: Weights, b: Weights) -> float:
    """
    Positive-part distance sum_k (a_k - b_k)_+.

    Args:
        a (Weights): First vector
        b (Weights): Second vector of the same length

    Returns:
        float: The largest value of t.(a - b) over tests t in [0,1]^n
    """
    _same_length(a, b)
    return float(np.clip(a.array - b.array, 0.0, None).sum())


def relative_entropy(a: Weights, b: Weights) -> ExtendedReal:
    """
    Relative entropy sum_k a_k ln(a_k / b_k), with 0 ln(0/x) = 0.

    Returns:
        float or Unbounded: Unbounded.POSITIVE when a has mass where b vanishes
    """
    _same_length(a, b)
    value = float(rel_entr(a.array, b.array).sum())
    if np.isinf(value):
        return Unbounded.POSITIVE
    return value


def shannon_entropy(p: Weights, tol: float = TOLERANCE) -> float:
    """Entropy -sum_k p_k ln p_k of a normalized vector."""
    if abs(p.total - 1.0) > tol:
        raise InputError(f"entropy needs a normalized vector, total is {p.total}")
    return float(entr(p.array).sum())


def bhattacharyya(a: Weights, b: Weights) -> float:
    """Bhattacharyya coefficient sum_k sqrt(a_k b_k)."""
    _same_length(a, b)
    return float(np.sqrt(a.array * b.array).sum())
