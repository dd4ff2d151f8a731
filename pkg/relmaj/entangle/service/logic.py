"""
Pure-state entanglement transformations between Schmidt vectors.

A source with coefficients q turns into a target p by local operations exactly when p
majorizes q, which is relative majorization of (p, 1) over (q, 1). The same functions
apply verbatim to squared amplitudes under strictly incoherent operations.
"""

# Standard library imports
import logging
import math
from typing import Optional, Tuple

# Third-party imports
import numpy as np

from relmaj.core.schema import Pair, Weights
from relmaj.core.service.divergence import bhattacharyya as bhattacharyya_coefficient
from relmaj.core.service.divergence import shannon_entropy
from relmaj.core.service.geometry import beta_at, knot_xs
from relmaj.entangle.schema import BatteryMatch, EntanglementSummary, FidelityBounds, SchmidtVector
from relmaj.errors import InputError
from relmaj.lp.service import programs
from relmaj.lp.service.simplex import solve
from relmaj.models import Method, Status
from relmaj.settings import MAX_BATTERY
from relmaj.submaj.service.decide import relatively_majorizes

logger = logging.getLogger(__name__)

# Constants
PARTIAL_SUM_SLACK = 1e-12


def padded(source: SchmidtVector, target: SchmidtVector) -> Tuple[np.ndarray, np.ndarray]:
    """Both vectors sorted nonincreasing and zero-padded to a common length."""
    m = max(len(source.coefficients), len(target.coefficients))
    out = []
    for vector in (source, target):
        values = np.sort(vector.coefficients.array)[::-1]
        out.append(np.concatenate((values, np.zeros(m - len(values)))))
    return out[0], out[1]


def _majorizes(upper: np.ndarray, lower: np.ndarray) -> bool:
    """Sorted partial sums of `upper` dominate those of `lower`."""
    m = max(len(upper), len(lower))
    a = np.concatenate((np.sort(upper)[::-1], np.zeros(m - len(upper))))
    b = np.concatenate((np.sort(lower)[::-1], np.zeros(m - len(lower))))
    return bool(np.all(np.cumsum(a) >= np.cumsum(b) - PARTIAL_SUM_SLACK))


def locc_possible(source: SchmidtVector, target: SchmidtVector, method: Method = Method.geometric) -> bool:
    """
    Whether the source state turns into the target with certainty.

    Args:
        source (SchmidtVector): Coefficients q
        target (SchmidtVector): Coefficients p
        method (Method): geometric compares sorted partial sums, lp solves relative majorization

    Returns:
        bool: True when p majorizes q
    """
    q, p = padded(source, target)
    if method == Method.lp:
        ones = np.ones(len(q))
        return relatively_majorizes(Pair.of(p, ones), Pair.of(q, ones)).holds
    return _majorizes(p, q)


def vidal_probability(source: SchmidtVector, target: SchmidtVector) -> float:
    """Largest success probability: the smallest tail-mass ratio of source over target."""
    q, p = padded(source, target)
    tails_q = np.cumsum(q[::-1])[::-1]
    tails_p = np.cumsum(p[::-1])[::-1]
    best = 1.0
    for tq, tp in zip(tails_q, tails_p):
        if tp > 0:
            best = min(best, tq / tp)
    return float(max(best, 0.0))


def vidal_probability_lp(source: SchmidtVector, target: SchmidtVector, exact: bool = False) -> float:
    q, p = padded(source, target)
    solution = solve(programs.vidal_program(q, p), exact=exact)
    if solution.status != Status.optimal:
        return 0.0
    return float(solution.objective)


def entanglement_cost(source: SchmidtVector, target: SchmidtVector) -> float:
    """
    Smallest z such that the transformation succeeds with the help of a battery
    carrying -ln z units of entanglement: the largest ratio beta_x(p, 1) / beta_x(q, 1).
    """
    q, p = padded(source, target)
    ones = np.ones(len(q))
    target_pair, source_pair = Pair.of(p, ones), Pair.of(q, ones)
    xs = np.concatenate((knot_xs(target_pair), knot_xs(source_pair)))
    best = 0.0
    for x in xs[(xs > 0) & (xs <= 1.0)]:
        best = max(best, float(beta_at(target_pair, float(x))) / float(beta_at(source_pair, float(x))))
    return best


def battery_search(
    source: SchmidtVector,
    target: SchmidtVector,
    max_size: int = MAX_BATTERY,
) -> Optional[BatteryMatch]:
    """
    Integer battery sizes n_b, n'_b <= max_size with target x w_{n'_b} majorizing
    source x w_{n_b} and the smallest ratio n_b / n'_b; w_n is uniform on n levels.
    """
    if max_size < 1:
        raise InputError(f"max_size must be positive, got {max_size}")
    q, p = padded(source, target)

    def works(n_b: int, n_b_prime: int) -> bool:
        return _majorizes(np.repeat(p, n_b_prime) / n_b_prime, np.repeat(q, n_b) / n_b)

    best: Optional[BatteryMatch] = None
    for n_b_prime in range(1, max_size + 1):
        if not works(max_size, n_b_prime):
            continue
        low, high = 1, max_size
        while low < high:
            middle = (low + high) // 2
            if works(middle, n_b_prime):
                high = middle
            else:
                low = middle + 1
        match = BatteryMatch(n_b=low, n_b_prime=n_b_prime)
        if best is None or match.ratio < best.ratio:
            best = match
    logger.debug("battery search done", extra={"found": best is not None, "max_size": max_size})
    return best


def fidelity_bounds(source: SchmidtVector, target: SchmidtVector, z: float) -> FidelityBounds:
    """
    Lower bounds on the fidelity reachable from source toward target with work factor z.

    The entropy bound applies to the reverse direction target -> source and needs the
    target to majorize the source; the cost bound z / z* needs z <= z*. The entropy bound
    is the Pinsker form 1 - sqrt((H(q) - H(p)) / 2) of the entropy gap.
    """
    if z <= 0:
        raise InputError(f"z must be positive, got {z}")
    q, p = padded(source, target)
    shift = 1.0 - max(float(np.max(np.cumsum(q) / z - np.cumsum(p))), 0.0)
    skipped = []

    entropy_bound = None
    if locc_possible(source, target):
        gap = shannon_entropy(Weights.of(q)) - shannon_entropy(Weights.of(p))
        entropy_bound = 1.0 - math.sqrt(max(gap, 0.0) / 2.0)
    else:
        skipped.append("entropy_bound")

    cost_bound = None
    cost = entanglement_cost(source, target)
    if z <= cost:
        cost_bound = z / cost
    else:
        skipped.append("cost_bound")

    return FidelityBounds(
        shift_bound=shift,
        entropy_bound=entropy_bound,
        cost_bound=cost_bound,
        bhattacharyya=bhattacharyya_coefficient(Weights.of(q), Weights.of(p)),
        skipped=skipped,
    )


def summarize(
    source: SchmidtVector,
    target: SchmidtVector,
    z: float = 1.0,
    battery_size: Optional[int] = None,
) -> EntanglementSummary:
    """All single-shot quantities for one transformation; battery_size adds the integer battery search."""
    cost = entanglement_cost(source, target)
    return EntanglementSummary(
        possible=locc_possible(source, target),
        probability=vidal_probability(source, target),
        cost=cost,
        gain=-math.log(cost),
        fidelity=fidelity_bounds(source, target, z),
        battery=battery_search(source, target, battery_size) if battery_size is not None else None,
    )
