"""
Decision procedures for relative majorization, submajorization and their approximate form.
Every check has an LP path; submajorization checks also have a geometric path over the elbows.
"""

# Standard library imports
import logging

# Third-party imports
import numpy as np

from relmaj.core.schema import Pair, is_finite
from relmaj.core.service.geometry import beta_at, knot_xs
from relmaj.lp.service import programs
from relmaj.lp.service.simplex import feasible
from relmaj.models import Method, StochasticClass, Verdict
from relmaj.settings import TOLERANCE
from relmaj.submaj.schema import ApproxParams, ChainCheck, MajorizationDecision, Witness

logger = logging.getLogger(__name__)


def _lp_decision(lp, a: Pair, b: Pair, stochastic_class: StochasticClass, exact: bool) -> MajorizationDecision:
    decision = feasible(lp, exact=exact)
    if not decision.feasible:
        return MajorizationDecision(verdict=Verdict.no, method=Method.lp)
    matrix = programs.matrix_block(decision.point, b.n, a.n)
    return MajorizationDecision(
        verdict=Verdict.yes,
        method=Method.lp,
        witness=Witness.of(matrix, stochastic_class),
    )


def relatively_majorizes(a: Pair, b: Pair, tol: float = TOLERANCE, exact: bool = False) -> MajorizationDecision:
    """
    Decide whether a column-stochastic M maps p to p' and q to q'.

    Args:
        a (Pair): Source pair (p, q)
        b (Pair): Target pair (p', q')
        tol (float): Tolerance on the totals

    Returns:
        MajorizationDecision: Verdict with a stochastic witness when it holds
    """
    if abs(a.p_total - b.p_total) > tol or abs(a.q_total - b.q_total) > tol:
        logger.debug("totals differ", extra={"p": a.p_total - b.p_total, "q": a.q_total - b.q_total})
        return MajorizationDecision(verdict=Verdict.no, method=Method.lp)
    return _lp_decision(programs.majorization_program(a, b), a, b, StochasticClass.stochastic, exact)


def _geometric_submajorizes(a: Pair, b: Pair, tol: float) -> bool:
    limit = b.p_total
    if limit > a.p_total + tol:
        return False
    xs = np.concatenate((knot_xs(a), knot_xs(b), [limit]))
    for x in xs[xs <= limit]:
        lhs, rhs = beta_at(a, float(x), tol), beta_at(b, float(x), tol)
        if not is_finite(lhs):
            return False
        if is_finite(rhs) and lhs > rhs + tol:
            return False
    return True


def submajorizes(
    a: Pair,
    b: Pair,
    method: Method = Method.lp,
    tol: float = TOLERANCE,
    exact: bool = False,
) -> MajorizationDecision:
    """
    Decide whether a substochastic M has Mp >= p' and Mq <= q'.

    The geometric method compares the lower boundaries at the elbows of both curves
    and returns no witness.
    """
    if method == Method.geometric:
        return MajorizationDecision(verdict=Verdict.of(_geometric_submajorizes(a, b, tol)), method=method)
    return _lp_decision(programs.submajorization_program(a, b), a, b, StochasticClass.substochastic, exact)


def _geometric_approx(a: Pair, b: Pair, params: ApproxParams, tol: float) -> bool:
    eps, eta = params.epsilon, params.eta
    limit = b.p_total - eps
    if limit <= 0:
        return True
    if limit > a.p_total + tol:
        return False
    xs = np.concatenate((knot_xs(a), knot_xs(b) - eps, [0.0, limit]))
    for x in xs[(xs >= 0) & (xs <= limit)]:
        lhs, rhs = beta_at(a, float(x), tol), beta_at(b, float(x) + eps, tol)
        if not is_finite(lhs):
            return False
        if is_finite(rhs) and lhs > rhs + eta + tol:
            return False
    return True


def approx_submajorizes(
    a: Pair,
    b: Pair,
    params: ApproxParams,
    method: Method = Method.lp,
    tol: float = TOLERANCE,
    exact: bool = False,
) -> MajorizationDecision:
    """
    Decide submajorization up to a total error epsilon on p' and eta on q'.

    The geometric form checks beta_x(p, q) <= beta_{x + epsilon}(p', q') + eta on
    [0, |p'| - epsilon] at the elbows of both curves.
    """
    if method == Method.geometric:
        return MajorizationDecision(verdict=Verdict.of(_geometric_approx(a, b, params, tol)), method=method)
    lp = programs.approx_program(a, b, params.epsilon, params.eta)
    return MajorizationDecision(verdict=Verdict.of(feasible(lp, exact=exact).feasible), method=Method.lp)


def chain_feasible(
    a: Pair,
    b: Pair,
    c: Pair,
    lam: float,
    z: float,
    lam2: float,
    z2: float,
    exact: bool = False,
) -> ChainCheck:
    """
    Composition of scaled submajorizations: a > (lam p_b, z q_b) and b > (lam2 p_c, z2 q_c)
    give a > (lam lam2 p_c, z z2 q_c).
    """
    first = submajorizes(a, b.scaled(lam, z), exact=exact).holds
    second = submajorizes(b, c.scaled(lam2, z2), exact=exact).holds
    composed = submajorizes(a, c.scaled(lam * lam2, z * z2), exact=exact).holds
    return ChainCheck(first=first, second=second, composed=composed)
