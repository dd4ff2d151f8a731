"""
Evaluation of the inequalities linking optimal probabilities, work factors and errors.
Entries whose preconditions fail are reported as skipped with a reason.
"""

# Standard library imports
import logging
import math
from typing import List, Optional

from relmaj.core.schema import ExtendedReal, Unbounded, is_finite
from relmaj.core.service.divergence import relative_entropy
from relmaj.core.service.geometry import alpha_at, beta_at
from relmaj.errors import InputError
from relmaj.models import Method, Relation
from relmaj.settings import TOLERANCE
from relmaj.submaj.service.decide import relatively_majorizes, submajorizes
from relmaj.submaj.service.optimal import lambda_star, optimal_errors, scaled_submajorizes, z_star
from relmaj.thermo.schema import BoundEntry, BoundsReport, Resource
from relmaj.thermo.service.work import phi

logger = logging.getLogger(__name__)


def _product(*factors: ExtendedReal) -> Optional[ExtendedReal]:
    """Product over extended reals; None when it is an indeterminate 0 * inf."""
    finite = [f for f in factors if is_finite(f)]
    if len(finite) == len(factors):
        return math.prod(finite)
    if all(f > 0 for f in finite):
        return Unbounded.POSITIVE
    return None


def _holds(lhs: ExtendedReal, rhs: ExtendedReal, relation: Relation, tol: float) -> bool:
    if relation == Relation.le:
        lhs, rhs = rhs, lhs
    if lhs == Unbounded.POSITIVE or rhs == Unbounded.NEGATIVE:
        return True
    if rhs == Unbounded.POSITIVE or lhs == Unbounded.NEGATIVE:
        return False
    return lhs >= rhs - tol


def _skip(bound_id: str, relation: Relation, reason: str) -> BoundEntry:
    logger.info("bound skipped", extra={"bound_id": bound_id, "reason": reason})
    return BoundEntry(bound_id=bound_id, relation=relation, skipped=True, reason=reason)


def _entry(bound_id: str, relation: Relation, lhs, rhs, tol: float) -> BoundEntry:
    if lhs is None or rhs is None:
        return _skip(bound_id, relation, "indeterminate product 0 * inf")
    return BoundEntry(
        bound_id=bound_id,
        relation=relation,
        lhs=lhs,
        rhs=rhs,
        satisfied=_holds(lhs, rhs, relation, tol),
    )


def _inverse(value: ExtendedReal) -> float:
    return 0.0 if not is_finite(value) else 1.0 / value


def fenchel_gap(a: Resource, z: float, z_prime: float) -> float:
    """eps*_z(a -> 1) + eps*_z'(1 -> a) - (1 - z z'); never negative."""
    consume = 1.0 - min(alpha_at(a.pair, z), 1.0)
    return consume + phi(a, z_prime) - (1.0 - z * z_prime)


def bounds_report(
    a: Resource,
    b: Resource,
    lam: float,
    z: float,
    z_prime: float,
    c: Optional[Resource] = None,
    lam2: Optional[float] = None,
    z2: Optional[float] = None,
    tol: float = TOLERANCE,
) -> BoundsReport:
    """
    Evaluate every bound for the ordered pair a -> b.

    The chain-rule bounds use a third resource c (default a) with lam2 (default lam)
    and z2 (default z_prime). Both recovery bounds take the Pinsker form sqrt(D / 2)
    of their divergence gap.

    Args:
        a (Resource): Source R
        b (Resource): Target R'
        lam (float): Probability in (0, 1]
        z (float): Work factor, positive
        z_prime (float): Second work factor, positive

    Returns:
        BoundsReport: One entry per bound, gated ones possibly skipped
    """
    if not 0 < lam <= 1:
        raise InputError(f"lambda must lie in (0, 1], got {lam}")
    if z <= 0 or z_prime <= 0:
        raise InputError("work factors must be positive")
    c = c if c is not None else a
    lam2 = lam if lam2 is None else lam2
    z2 = z_prime if z2 is None else z2
    if not 0 < lam2 <= 1 or z2 <= 0:
        raise InputError("chain parameters must satisfy 0 < lambda2 <= 1 and z2 > 0")

    R, Rp, Rc = a.pair, b.pair, c.pair
    entries: List[BoundEntry] = []

    entries.append(_entry("fenchel", Relation.ge, fenchel_gap(a, z, z_prime), 0.0, tol))

    lam_z = lambda_star(R, Rp, z)
    z_lam = z_star(R, Rp, lam)
    product = _product(lam_z, z_lam)
    if scaled_submajorizes(R, Rp, lam, z, method=Method.geometric, tol=tol).holds:
        entries.append(_entry("product_feasible", Relation.le, product, lam * z, tol))
    else:
        entries.append(_entry("product_infeasible", Relation.ge, product, lam * z, tol))

    z_one = z_star(R, Rp, 1.0)
    if is_finite(z_one) and z > z_one + tol:
        entries.append(_skip("eta_tradeoff", Relation.ge, "z exceeds z*_1(R -> R')"))
    else:
        eta_z = optimal_errors(R, Rp.scaled(1.0, z)).eta_hat_star
        if is_finite(eta_z):
            entries.append(_entry("eta_tradeoff", Relation.ge, _product(1.0 - eta_z, z_one), z, tol))
        else:
            entries.append(_skip("eta_tradeoff", Relation.ge, "eta_hat* is unbounded"))

    entries.append(_entry(
        "chain_work",
        Relation.le,
        z_star(R, Rc, lam * lam2),
        _product(z_lam, z_star(Rp, Rc, lam2)),
        tol,
    ))
    entries.append(_entry(
        "chain_probability",
        Relation.ge,
        lambda_star(R, Rc, z * z2),
        lam_z * lambda_star(Rp, Rc, z2),
        tol,
    ))
    entries.append(_entry("reverse_work", Relation.ge, _product(z_lam, z_star(Rp, R, lam2)), lam * lam2, tol))
    entries.append(_entry("reverse_probability", Relation.le, lam * lambda_star(Rp, R, z), _product(z, z_lam), tol))

    reverse_eta = optimal_errors(Rp, R.scaled(1.0, z)).eta_hat_star
    entries.append(_entry(
        "reverse_eta",
        Relation.ge,
        reverse_eta,
        float(beta_at(R, 1.0)) * (_inverse(z_one) - z),
        tol,
    ))

    if submajorizes(R, Rp.scaled(1.0, z), method=Method.geometric, tol=tol).holds:
        eps_back = optimal_errors(Rp, R.scaled(1.0, 1.0 / z)).eps_star
        gap = relative_entropy(a.r, a.g) - relative_entropy(b.r, b.g) + math.log(z)
        entries.append(_entry("eps_recovery", Relation.le, eps_back, math.sqrt(max(gap, 0.0) / 2.0), tol))
    else:
        entries.append(_skip("eps_recovery", Relation.le, "R does not submajorize (r', z g')"))

    forward_gap = relative_entropy(a.g, a.r)
    backward_gap = relative_entropy(b.g, b.r)
    if not (is_finite(forward_gap) and is_finite(backward_gap)):
        entries.append(_skip("eta_recovery", Relation.le, "reverse relative entropy is unbounded"))
    elif not relatively_majorizes(R, Rp, tol=tol).holds:
        entries.append(_skip("eta_recovery", Relation.le, "R does not majorize R'"))
    else:
        eta_back = optimal_errors(Rp, R).eta_hat_star
        bound = math.sqrt(max(forward_gap - backward_gap, 0.0) / 2.0)
        entries.append(_entry("eta_recovery", Relation.le, eta_back, bound, tol))

    report = BoundsReport(entries=tuple(entries))
    for entry in report.violations:
        logger.warning("bound violated", extra={"bound_id": entry.bound_id})
    return report
