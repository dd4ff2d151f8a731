"""
Petz recovery of a stochastic map relative to a reference distribution.
"""

# Standard library imports
import logging

# Third-party imports
import numpy as np

from relmaj.core.schema import ExtendedReal, Unbounded, Weights, is_finite
from relmaj.core.service.divergence import relative_entropy
from relmaj.errors import DomainError, InputError
from relmaj.models import StochasticClass
from relmaj.submaj.schema import Witness

logger = logging.getLogger(__name__)


def petz_recovery(channel: Witness, reference: Weights) -> Witness:
    """
    The recovery map v -> q * T^T (v / Tq), which sends Tq back to q.

    Args:
        channel (Witness): Column-stochastic T
        reference (Weights): Strictly positive q

    Returns:
        Witness: The column-stochastic recovery map

    Raises:
        InputError: T is not stochastic, q has a zero entry or the shapes disagree
        DomainError: Tq has a zero entry
    """
    if channel.stochastic_class != StochasticClass.stochastic:
        raise InputError("recovery needs a column-stochastic map")
    matrix, q = channel.array, reference.array
    if matrix.shape[1] != len(q):
        raise InputError(f"map has {matrix.shape[1]} columns but the reference has {len(q)} entries")
    if np.any(q <= 0):
        raise InputError("reference must be strictly positive")
    image = matrix @ q
    if np.any(image <= 0):
        raise DomainError("image of the reference has a zero entry")
    recovery = q[:, None] * matrix.T / image[None, :]
    return Witness.of(recovery, StochasticClass.stochastic)


def recovery_slack(channel: Witness, reference: Weights, state: Weights) -> ExtendedReal:
    """
    D(p, q) - D(Tp, Tq) - D(p, R T p) for the recovery map R; never negative.
    """
    matrix = channel.array
    recovered = petz_recovery(channel, reference).array @ (matrix @ state.array)
    before = relative_entropy(state, reference)
    after = relative_entropy(Weights.of(matrix @ state.array), Weights.of(matrix @ reference.array))
    lost = relative_entropy(state, Weights.of(recovered))
    if not (is_finite(before) and is_finite(after)):
        return Unbounded.POSITIVE
    if not is_finite(lost):
        return Unbounded.NEGATIVE
    slack = before - after - lost
    logger.debug("recovery slack", extra={"slack": slack})
    return slack
