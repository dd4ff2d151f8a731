"""
Rates of i.i.d. transformations, computed on type-class aggregated powers.
"""

# Standard library imports
import logging
import math
from typing import Optional

from relmaj.core.schema import ExtendedReal, Unbounded, Weights, is_finite
from relmaj.core.service.compose import tensor_power
from relmaj.core.service.divergence import relative_entropy
from relmaj.core.service.geometry import beta_at
from relmaj.errors import InputError
from relmaj.settings import MAX_DIMENSION
from relmaj.submaj.service.optimal import z_star
from relmaj.thermo.schema import ErasureRateTable, ErasureRow, Resource, WorkRateRow, WorkRateTable

logger = logging.getLogger(__name__)


def _rate(value: ExtendedReal, copies: int) -> ExtendedReal:
    """-(1/N) ln value over the extended reals."""
    if not is_finite(value):
        return Unbounded.NEGATIVE
    if value <= 0:
        return Unbounded.POSITIVE
    return -math.log(value) / copies


def _difference(first: ExtendedReal, second: ExtendedReal) -> ExtendedReal:
    if not is_finite(first):
        return Unbounded.POSITIVE
    if not is_finite(second):
        return Unbounded.NEGATIVE
    return first - second


def asymptotic_work_rate(
    a: Resource,
    b: Resource,
    n_max: int,
    level: float = 0.5,
    max_dimension: int = MAX_DIMENSION,
) -> WorkRateTable:
    """
    Work rate per copy of a^N -> b^N for N = 1..n_max.

    Each row holds the rate at a fixed testing level, -(1/N) ln(beta_level(r^N, g^N) /
    beta_level(r'^N, g'^N)), which tends to D(r, g) - D(r', g'), and the zero-error rate
    -(1/N) ln z*_1(a^N -> b^N). Only the fixed-level rate carries the relative entropy
    limit; the zero-error rate stays away from it when r has full support.

    Args:
        a (Resource): Source resource
        b (Resource): Target resource
        n_max (int): Largest number of copies
        level (float): Testing level in (0, 1)

    Returns:
        WorkRateTable: Rows in increasing N and the relative entropy limit
    """
    if n_max < 1:
        raise InputError(f"n_max must be positive, got {n_max}")
    if not 0 < level < 1:
        raise InputError(f"level must lie in (0, 1), got {level}")
    rows = []
    for copies in range(1, n_max + 1):
        source = tensor_power(a.pair, copies, max_dimension)
        target = tensor_power(b.pair, copies, max_dimension)
        numerator, denominator = beta_at(source, level), beta_at(target, level)
        if denominator <= 0:
            fixed = Unbounded.NEGATIVE if numerator > 0 else 0.0
        else:
            fixed = _rate(numerator / denominator, copies)
        rows.append(WorkRateRow(
            n=copies,
            fixed_level_rate=fixed,
            zero_error_rate=_rate(z_star(source, target, 1.0), copies),
        ))
        logger.debug("work rate row", extra={"copies": copies, "classes": source.n})
    limit = _difference(relative_entropy(a.r, a.g), relative_entropy(b.r, b.g))
    return WorkRateTable(rows=tuple(rows), level=level, limit=limit)


def erasure_cooling_rates(
    a: Resource,
    n_max: int,
    cooling_gibbs: Optional[Weights] = None,
    max_dimension: int = MAX_DIMENSION,
) -> ErasureRateTable:
    """
    Exponents of the smallest error when turning a^N into a single bit.

    eps*_N = beta_{1/2}(g^N, r^N); with a two-level target Gibbs state g' the cooling
    exponent uses beta_{1 - g'_1}(g^N, r^N) instead. The limit is D(g, r).
    """
    if n_max < 1:
        raise InputError(f"n_max must be positive, got {n_max}")
    if cooling_gibbs is not None and len(cooling_gibbs) != 2:
        raise InputError("cooling target must be a two-level Gibbs state")
    rows = []
    for copies in range(1, n_max + 1):
        swapped = tensor_power(a.pair.swapped(), copies, max_dimension)
        eps = float(beta_at(swapped, 0.5))
        cooling = None
        if cooling_gibbs is not None:
            cooling = _rate(float(beta_at(swapped, 1.0 - cooling_gibbs[0])), copies)
        rows.append(ErasureRow(n=copies, eps_star=eps, rate=_rate(eps, copies), cooling_rate=cooling))
    return ErasureRateTable(rows=tuple(rows), limit=relative_entropy(a.g, a.r))
