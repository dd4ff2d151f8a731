"""
Randomized cross-checks of the closed-form and geometric procedures against the LP oracle.
"""

# Standard library imports
import logging
from typing import Callable, Dict, List, Optional

# Third-party imports
import numpy as np

from relmaj.cli.schema import VerifyCheck, VerifyReport
from relmaj.core.schema import ExtendedReal, Pair, Weights, is_finite
from relmaj.core.service.geometry import beta_at
from relmaj.entangle.schema import SchmidtVector
from relmaj.entangle.service.logic import vidal_probability, vidal_probability_lp
from relmaj.errors import InputError, RelmajError
from relmaj.lp.service import programs
from relmaj.lp.service.simplex import duality_residuals, solve
from relmaj.models import Method, StochasticClass, Status
from relmaj.submaj.schema import ApproxParams, Witness
from relmaj.submaj.service.decide import approx_submajorizes, relatively_majorizes, submajorizes
from relmaj.submaj.service.optimal import (
    beta_lp,
    lambda_star,
    lambda_star_lp,
    optimal_errors,
    optimal_errors_lp,
    z_star,
    z_star_lp,
)
from relmaj.submaj.service.witness import dilate
from relmaj.thermo.service.petz import petz_recovery, recovery_slack

logger = logging.getLogger(__name__)

# Constants
MAX_LEVELS = 6
AGREEMENT_TOLERANCE = 1e-6
RECOVERY_TOLERANCE = 1e-9
CHECKS = [
    "submajorization",
    "dilation",
    "approximate",
    "beta",
    "lambda_star",
    "z_star",
    "eps_star",
    "eta_hat_star",
    "vidal",
    "petz",
    "duality",
]


def random_pair(rng: np.random.Generator, n: int, normalized: bool = False) -> Pair:
    """p from uniform[0, 1), q bounded away from zero, optionally rescaled to unit totals."""
    p, q = rng.uniform(size=n), rng.uniform(0.05, 1.0, size=n)
    if normalized:
        p, q = p / p.sum(), q / q.sum()
    return Pair.of(p, q)


def random_stochastic(rng: np.random.Generator, n_out: int, n_in: int) -> Witness:
    return Witness.of(rng.dirichlet(np.ones(n_out), size=n_in).T, StochasticClass.stochastic)


def random_schmidt(rng: np.random.Generator, n: int) -> SchmidtVector:
    return SchmidtVector.of(rng.dirichlet(np.ones(n)))


def _close(first: ExtendedReal, second: ExtendedReal, tol: float) -> bool:
    if not (is_finite(first) and is_finite(second)):
        return first == second
    return abs(float(first) - float(second)) <= tol * max(1.0, abs(float(first)), abs(float(second)))


def _case_checks(rng: np.random.Generator, tol: float) -> Dict[str, bool]:
    """One seeded case of every check, keyed by check name."""
    results: Dict[str, bool] = {}
    n, n_out = rng.integers(1, MAX_LEVELS + 1, size=2)
    a, b = random_pair(rng, n, normalized=bool(rng.integers(2))), random_pair(rng, n_out)

    by_lp = submajorizes(a, b, method=Method.lp)
    by_curves = submajorizes(a, b, method=Method.geometric)
    results["submajorization"] = by_lp.holds == by_curves.holds
    if by_lp.holds and by_curves.holds:
        try:
            dilation = dilate(a, b)
            results["dilation"] = relatively_majorizes(dilation.source, dilation.target).holds
        except (RelmajError, ValueError):
            results["dilation"] = False

    params = ApproxParams(epsilon=float(rng.uniform(0, b.p_total)), eta=float(rng.uniform(0, b.q_total)))
    results["approximate"] = (
        approx_submajorizes(a, b, params, method=Method.lp).holds
        == approx_submajorizes(a, b, params, method=Method.geometric).holds
    )

    x = float(rng.uniform(0, a.p_total))
    results["beta"] = _close(beta_at(a, x), beta_lp(a, x), tol)

    source, target = random_pair(rng, n, normalized=True), random_pair(rng, n_out, normalized=True)
    z, lam = float(rng.uniform(0.25, 2.0)), float(rng.uniform(0.1, 1.0))
    results["lambda_star"] = _close(lambda_star(source, target, z), lambda_star_lp(source, target, z), tol)
    results["z_star"] = _close(z_star(source, target, lam), z_star_lp(source, target, lam), tol)
    closed, oracle = optimal_errors(source, target), optimal_errors_lp(source, target)
    results["eps_star"] = _close(closed.eps_star, oracle.eps_star, tol)
    results["eta_hat_star"] = _close(closed.eta_hat_star, oracle.eta_hat_star, tol)

    lp = programs.lambda_program(source, target, z)
    solution = solve(lp)
    if solution.status == Status.optimal:
        gap, slack = duality_residuals(lp, solution)
        results["duality"] = gap <= tol and slack <= tol

    m = int(rng.integers(1, MAX_LEVELS + 1))
    first, second = random_schmidt(rng, m), random_schmidt(rng, int(rng.integers(1, MAX_LEVELS + 1)))
    results["vidal"] = _close(vidal_probability(first, second), vidal_probability_lp(first, second), tol)

    channel = random_stochastic(rng, int(n_out), int(n))
    reference = Weights.of(rng.dirichlet(np.ones(n)))
    state = Weights.of(rng.dirichlet(np.ones(n)))
    restored = petz_recovery(channel, reference).array @ (channel.array @ reference.array)
    slack = recovery_slack(channel, reference, state)
    results["petz"] = bool(np.allclose(restored, reference.array, atol=RECOVERY_TOLERANCE)) and (
        not is_finite(slack) or slack >= -RECOVERY_TOLERANCE
    )
    return results


def run_verification(
    seed: int,
    cases: int,
    tol: float = AGREEMENT_TOLERANCE,
    progress: Optional[Callable[[int], None]] = None,
) -> VerifyReport:
    """
    Run `cases` seeded random instances of every cross-check.

    Args:
        seed (int): Seed of the numpy Generator
        cases (int): Number of instances
        tol (float): Relative agreement tolerance for numeric values
        progress (callable): Called with the case index after each case

    Returns:
        VerifyReport: Agreement and disagreement counts per check
    """
    if cases < 1:
        raise InputError(f"cases must be positive, got {cases}")
    rng = np.random.default_rng(seed)
    tally = {name: VerifyCheck(name=name) for name in CHECKS}
    for index in range(cases):
        for name, agreed in _case_checks(rng, tol).items():
            check = tally[name]
            if agreed:
                check.agreements += 1
            else:
                check.disagreements += 1
                logger.warning("verification disagreement", extra={"check": name, "seed": seed, "case": index})
        if progress is not None:
            progress(index)
    checks: List[VerifyCheck] = [tally[name] for name in CHECKS]
    return VerifyReport(seed=seed, cases=cases, checks=checks)
