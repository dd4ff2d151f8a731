"""
Optimal probabilities, work factors and approximation errors between pairs, in closed
form from the boundary curves and as LP oracles.
"""

# Standard library imports
import logging
from typing import Iterable

# Third-party imports
import numpy as np

from relmaj.core.schema import ExtendedReal, Pair, Unbounded, is_finite
from relmaj.core.service.geometry import alpha_at, beta_at, knot_xs, knot_ys
from relmaj.errors import InputError
from relmaj.lp.service import programs
from relmaj.lp.service.simplex import solve
from relmaj.models import Method, Status
from relmaj.settings import TOLERANCE
from relmaj.submaj.schema import BoundarySample, ErrorPair, FeasibleBoundary, MajorizationDecision
from relmaj.submaj.service.decide import submajorizes

logger = logging.getLogger(__name__)


def _require_normalized(*pairs: Pair, tol: float = TOLERANCE) -> None:
    for pair in pairs:
        if not pair.is_normalized(tol):
            raise InputError(f"pair totals ({pair.p_total:.9g}, {pair.q_total:.9g}) must both be 1")


def optimal_errors(a: Pair, b: Pair, tol: float = TOLERANCE) -> ErrorPair:
    """
    Smallest state-side error with an exact reference, and smallest reference-side error
    with an exact state.

    eps* is the largest horizontal gap alpha_y(p', q') - alpha_y(p, q), eta_hat* the
    largest vertical gap beta_x(p, q) - beta_x(p', q'); both are read off at the elbows
    of the two curves.

    Returns:
        ErrorPair: eps* and eta_hat* (Unbounded when |p| < |p'|)
    """
    ys = np.concatenate(([0.0], knot_ys(a), knot_ys(b)))
    eps = max(max(alpha_at(b, float(y)) - alpha_at(a, float(y)), 0.0) for y in ys)

    limit = b.p_total
    if a.p_total < limit - tol:
        return ErrorPair(eps_star=eps, eta_hat_star=Unbounded.POSITIVE)
    xs = np.concatenate((knot_xs(a), knot_xs(b), [limit]))
    eta = 0.0
    for x in xs[xs <= limit]:
        lhs, rhs = beta_at(a, float(x), tol), beta_at(b, float(x), tol)
        if is_finite(lhs) and is_finite(rhs):
            eta = max(eta, lhs - rhs)
    return ErrorPair(eps_star=eps, eta_hat_star=eta)


def lambda_star(a: Pair, b: Pair, z: float, tol: float = TOLERANCE) -> float:
    """
    Largest lambda with (p, q) submajorizing (lambda p', z q') for normalized pairs.

    Args:
        a (Pair): Source pair
        b (Pair): Target pair
        z (float): Reference scale, positive

    Returns:
        float: lambda* in [0, 1]
    """
    _require_normalized(a, b, tol=tol)
    if z <= 0:
        raise InputError(f"z must be positive, got {z}")
    best = 1.0
    for y in np.concatenate(([0.0], knot_ys(b))):
        denominator = alpha_at(b, float(y))
        if denominator <= tol:
            continue
        best = min(best, alpha_at(a, z * float(y)) / denominator)
    return float(min(max(best, 0.0), 1.0))


def z_star(a: Pair, b: Pair, lam: float, tol: float = TOLERANCE) -> ExtendedReal:
    """
    Smallest z with (p, q) submajorizing (lam p', z q') for normalized pairs.

    Raises:
        InputError: lam outside (0, 1] or non-normalized pairs
    """
    _require_normalized(a, b, tol=tol)
    if not 0 < lam <= 1:
        raise InputError(f"lambda must lie in (0, 1], got {lam}")
    best = 0.0
    for x in knot_xs(b):
        numerator = beta_at(a, lam * float(x), tol)
        denominator = beta_at(b, float(x), tol)
        if denominator <= tol:
            if numerator > tol:
                return Unbounded.POSITIVE
            continue
        best = max(best, numerator / denominator)
    return float(best)


def scaled_submajorizes(
    a: Pair,
    b: Pair,
    lam: float,
    z: float,
    method: Method = Method.geometric,
    tol: float = TOLERANCE,
) -> MajorizationDecision:
    """Whether (p, q) submajorizes (lam p', z q')."""
    return submajorizes(a, b.scaled(lam, z), method=method, tol=tol)


def region_boundary(a: Pair, b: Pair, z_grid: Iterable[float], tol: float = TOLERANCE) -> FeasibleBoundary:
    """Sample lambda*(z) on a grid of positive z values."""
    zs = [float(z) for z in z_grid]
    if not zs:
        raise InputError("z grid must not be empty")
    return FeasibleBoundary(
        samples=tuple(BoundarySample(z=z, lambda_star=lambda_star(a, b, z, tol)) for z in zs)
    )


def beta_lp(pair: Pair, x: float, exact: bool = False) -> ExtendedReal:
    """beta_x(p, q) as the optimum of its test LP."""
    solution = solve(programs.beta_program(pair, x), exact=exact)
    if solution.status == Status.infeasible:
        return Unbounded.POSITIVE
    return solution.objective if exact else float(solution.objective)


def lambda_star_lp(a: Pair, b: Pair, z: float, exact: bool = False):
    """lambda* as the optimum of a single LP with lambda as a variable."""
    solution = solve(programs.lambda_program(a, b, z), exact=exact)
    return solution.objective if exact else float(solution.objective)


def z_star_lp(a: Pair, b: Pair, lam: float, exact: bool = False):
    """z* as the optimum of a single LP with z as a variable."""
    solution = solve(programs.z_program(a, b, lam), exact=exact)
    if solution.status != Status.optimal:
        return Unbounded.POSITIVE
    return solution.objective if exact else float(solution.objective)


def optimal_errors_lp(a: Pair, b: Pair, exact: bool = False) -> ErrorPair:
    """eps* and eta_hat* as LP minima, each with the other error fixed to zero."""
    eps = solve(programs.epsilon_program(a, b), exact=exact)
    eta = solve(programs.eta_program(a, b), exact=exact)
    eta_value = Unbounded.POSITIVE if eta.status != Status.optimal else float(eta.objective)
    logger.debug("error programs solved", extra={"eps_pivots": eps.pivots, "eta_pivots": eta.pivots})
    return ErrorPair(eps_star=float(eps.objective), eta_hat_star=eta_value)
