"""
Explicit witnesses built from the boundary curves: the nested-test construction of a
substochastic M with Mp = p', Mq <= q', and the dilation of a submajorization into a
relative majorization on enlarged vectors.
"""

# Standard library imports
import logging

# Third-party imports
import numpy as np

from relmaj.core.schema import Pair, Weights
from relmaj.core.service.geometry import beta_at, knot_xs, optimal_test, ratio_order
from relmaj.errors import DomainError, SolverError
from relmaj.models import Method, StochasticClass
from relmaj.settings import LP_TOLERANCE, TOLERANCE
from relmaj.submaj.schema import DilationResult, Witness
from relmaj.submaj.service.decide import submajorizes

logger = logging.getLogger(__name__)

# Constants
CROSSING_TOLERANCE = 1e-12


def _crossing(a: Pair, start_x: float, start_y: float, slope: float) -> float:
    """First x >= start_x where the line through (start_x, start_y) leaves the region above beta."""
    total = a.p_total
    candidates = [start_x] + [float(x) for x in knot_xs(a) if start_x < x <= total]
    previous = None
    for x in candidates:
        gap = beta_at(a, x) - (start_y + slope * (x - start_x))
        if gap > CROSSING_TOLERANCE:
            if previous is None:
                return start_x
            x0, gap0 = previous
            if gap0 >= 0:
                return x0
            return x0 + (x - x0) * (-gap0) / (gap - gap0)
        previous = (x, gap)
    return total


def witness_from_curves(a: Pair, b: Pair, tol: float = TOLERANCE) -> Witness:
    """
    Build a substochastic M with Mp = p' and Mq <= q' from nested tests.

    Target entries are visited in ratio order. For each one the current test is moved
    toward the optimal test at the point where the target segment, started from the
    value reached so far, crosses the source boundary; rows of M are consecutive test
    differences.

    Raises:
        DomainError: The source does not submajorize the target
        SolverError: The constructed matrix fails verification
    """
    if not submajorizes(a, b, method=Method.geometric, tol=tol).holds:
        raise DomainError("source pair does not submajorize the target pair")

    p, q = a.p.array, a.q.array
    p_target, q_target = b.p.array, b.q.array
    total = a.p_total
    matrix = np.zeros((b.n, a.n))
    test = np.zeros(a.n)
    reached_x, reached_y = 0.0, 0.0
    for j in ratio_order(b):
        step = p_target[j]
        if step <= 0:
            continue
        slope = q_target[j] / step
        next_x = min(reached_x + step, total)
        crossing = min(max(_crossing(a, reached_x, reached_y, slope), next_x), total)
        width = crossing - reached_x
        theta = 1.0 if width <= 0 else min(step / width, 1.0)
        updated = test + theta * (optimal_test(a, crossing).array - test)
        matrix[j, :] = np.clip(updated - test, 0.0, None)
        test = updated
        reached_x, reached_y = float(test @ p), float(test @ q)

    residual_p = np.abs(matrix @ p - p_target).max()
    excess_q = (matrix @ q - q_target).max()
    if residual_p > LP_TOLERANCE or excess_q > LP_TOLERANCE:
        diagnostics = {"residual_p": float(residual_p), "excess_q": float(excess_q)}
        logger.error("curve witness failed verification", extra=diagnostics)
        raise SolverError("constructed witness does not satisfy Mp = p', Mq <= q'", diagnostics)
    return Witness.of(matrix, StochasticClass.substochastic)


def dilate(a: Pair, b: Pair, tol: float = TOLERANCE) -> DilationResult:
    """
    Turn a submajorization into a relative majorization.

    With z = |q'| / |q| the source becomes (p + 0, q + zq) and the target
    (p' + s', q' + q'/z), where s' is proportional to q' and carries the missing
    p-mass. The block witness is [[F, u 1^T / |q'|], [q' v^T / |q'|, (1^T F q) q' 1^T / |q'|^2]]
    with F from witness_from_curves, u = q' - Fq and v = 1 - F^T 1.

    Raises:
        DomainError: The source does not submajorize the target, or a q total is zero
    """
    forward = witness_from_curves(a, b, tol)
    q_total, q_target_total = a.q_total, b.q_total
    if q_total <= 0 or q_target_total <= 0:
        raise DomainError("dilation needs nonzero reference totals on both sides")

    p, q = a.p.array, a.q.array
    q_target = b.q.array
    f = forward.array
    z = q_target_total / q_total
    u = np.clip(q_target - f @ q, 0.0, None)
    v = np.clip(1.0 - f.sum(axis=0), 0.0, None)
    s_prime = q_target * float(v @ p) / q_target_total

    ones = np.ones(a.n)
    top = np.hstack((f, np.outer(u, ones) / q_target_total))
    bottom = np.hstack((
        np.outer(q_target, v) / q_target_total,
        float(f.sum(axis=0) @ q) * np.outer(q_target, ones) / q_target_total ** 2,
    ))
    block = np.vstack((top, bottom))

    source = Pair.of(np.concatenate((p, np.zeros(a.n))), np.concatenate((q, z * q)))
    target = Pair.of(np.concatenate((b.p.array, s_prime)), np.concatenate((q_target, q_target / z)))
    return DilationResult(
        source=source,
        target=target,
        s_prime=Weights.of(s_prime),
        z=z,
        witness=Witness.of(block, StochasticClass.stochastic),
    )
