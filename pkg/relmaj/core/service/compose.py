"""
Pair composition: direct sums, tensor products and i.i.d. powers.
"""

# Standard library imports
import logging
from math import comb
from typing import Iterator, List, Tuple

# Third-party imports
import numpy as np
from scipy.special import gammaln, xlogy

from relmaj.core.schema import Pair, TypeClass
from relmaj.errors import InputError, ResourceError
from relmaj.settings import MAX_DIMENSION

logger = logging.getLogger(__name__)


def direct_sum(a: Pair, b: Pair) -> Pair:
    """Concatenate two pairs into (p + p', q + q')."""
    return Pair.of(np.concatenate((a.p.array, b.p.array)), np.concatenate((a.q.array, b.q.array)))


def tensor(a: Pair, b: Pair, max_dimension: int = MAX_DIMENSION) -> Pair:
    """
    Componentwise outer product (p x p', q x q'), flattened row-major.

    Raises:
        ResourceError: The product has more than max_dimension entries
    """
    size = a.n * b.n
    if size > max_dimension:
        raise ResourceError(f"tensor product of size {size} exceeds the cap {max_dimension}")
    return Pair.of(np.outer(a.p.array, b.p.array).ravel(), np.outer(a.q.array, b.q.array).ravel())


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _class_logs(pair: Pair, power: int) -> Iterator[Tuple[Tuple[int, ...], float, float, float]]:
    p, q = pair.p.array, pair.q.array
    for counts in _compositions(power, pair.n):
        k = np.asarray(counts, dtype=float)
        log_multiplicity = gammaln(power + 1) - gammaln(k + 1).sum()
        yield counts, float(log_multiplicity), float(xlogy(k, p).sum()), float(xlogy(k, q).sum())


def _check_class_count(pair: Pair, power: int, max_dimension: int) -> None:
    if power < 1:
        raise InputError(f"power must be a positive integer, got {power}")
    count = comb(power + pair.n - 1, pair.n - 1)
    if count > max_dimension:
        raise ResourceError(f"{count} type classes exceed the cap {max_dimension}")


def type_classes(pair: Pair, power: int, max_dimension: int = MAX_DIMENSION) -> List[TypeClass]:
    """
    Multiset classes of the i.i.d. power of a pair.

    Every sequence with the same entry counts carries the same p and q weights, so
    the power is summarized by one class per composition of `power` into n parts.
    Weights are computed in the log domain; a positive count on a zero entry gives 0.

    Args:
        pair (Pair): The single-copy pair
        power (int): Number of copies

    Returns:
        list: TypeClass records, one per composition
    """
    _check_class_count(pair, power, max_dimension)
    classes = [
        TypeClass(
            counts=counts,
            multiplicity=float(np.exp(log_multiplicity)),
            p_value=float(np.exp(log_p)),
            q_value=float(np.exp(log_q)),
        )
        for counts, log_multiplicity, log_p, log_q in _class_logs(pair, power)
    ]
    logger.debug("type classes computed", extra={"power": power, "classes": len(classes)})
    return classes


def tensor_power(pair: Pair, power: int, max_dimension: int = MAX_DIMENSION) -> Pair:
    """
    The i.i.d. power of a pair, aggregated by type class.

    Each class contributes one entry multiplicity * value on both sides; the Lorenz
    curve equals that of the explicit outer product.
    """
    if power == 1:
        return pair
    _check_class_count(pair, power, max_dimension)
    logs = list(_class_logs(pair, power))
    return Pair.of(
        [np.exp(log_multiplicity + log_p) for _, log_multiplicity, log_p, _ in logs],
        [np.exp(log_multiplicity + log_q) for _, log_multiplicity, _, log_q in logs],
    )
