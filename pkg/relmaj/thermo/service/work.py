"""
Work value and work cost of a resource relative to the trivial one-level resource.
"""

# Third-party imports
import numpy as np

from relmaj.core.service.geometry import beta_at
from relmaj.errors import InputError
from relmaj.submaj.service.optimal import lambda_star, z_star
from relmaj.thermo.schema import Resource, WorkCost, WorkReport, WorkValue


def _check_probability(name: str, value: float) -> None:
    if not 0 < value <= 1:
        raise InputError(f"{name} must lie in (0, 1], got {value}")


def work_value(a: Resource, z: float, lam: float) -> WorkValue:
    """
    What a resource is worth when consumed into the trivial resource.

    The reference-side error is clipped at zero: it vanishes once z covers beta_1(r, g).

    Args:
        a (Resource): The resource
        z (float): Work factor in (0, 1]
        lam (float): Success probability in (0, 1]

    Returns:
        WorkValue: z* at probability lam (beta_lam(r, g)), lambda* at work factor z
        (alpha_z(r, g)), and the reference-side error (beta_1(r, g) - z)+
    """
    _check_probability("z", z)
    _check_probability("lambda", lam)
    pair, unit = a.pair, Resource.trivial().pair
    return WorkValue(
        z_star=z_star(pair, unit, lam),
        lambda_star=lambda_star(pair, unit, z),
        eta_hat=max(float(beta_at(pair, 1.0)) - z, 0.0),
    )


def work_cost(a: Resource, lam: float, z: float) -> WorkCost:
    """
    What it costs to create a resource from the trivial one.

    z* = lam * max_k r_k / g_k; with z >= 1 invested, both errors equal phi_z(a).

    Raises:
        InputError: z below 1 or lam outside (0, 1]
    """
    _check_probability("lambda", lam)
    if z < 1:
        raise InputError(f"z must be at least 1 for the error branch, got {z}")
    ratio = float(np.max(a.r.array / a.g.array))
    error = phi(a, z)
    return WorkCost(z_star=lam * ratio, eps_star=error, eta_star=error)


def phi(a: Resource, z: float) -> float:
    """sum_k (r_k - z g_k)+."""
    if z < 0:
        raise InputError(f"z must be nonnegative, got {z}")
    return float(np.clip(a.r.array - z * a.g.array, 0.0, None).sum())


def work_report(a: Resource, z: float, lam: float, z_cost: float = 1.0) -> WorkReport:
    """Work value, work cost and phi of one resource in a single report."""
    return WorkReport(
        label=a.label,
        value=work_value(a, z, lam),
        cost=work_cost(a, lam, z_cost),
        phi=phi(a, z_cost),
    )
