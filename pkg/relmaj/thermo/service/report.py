"""
Optimal probabilities, work factors and errors of one resource transformation over grids.
"""

# Standard library imports
import logging
from typing import Iterable, Optional

from relmaj.core.schema import is_finite
from relmaj.errors import InputError
from relmaj.submaj.service.optimal import lambda_star, optimal_errors, z_star
from relmaj.thermo.schema import BatteryContext, LambdaRow, Resource, TransformReport, ZRow

logger = logging.getLogger(__name__)


def transform_report(
    a: Resource,
    b: Resource,
    z_grid: Iterable[float],
    lambda_grid: Iterable[float],
    battery: Optional[BatteryContext] = None,
) -> TransformReport:
    """
    Tabulate lambda*, eps* and eta_hat* over z, and z* over lambda.

    Args:
        a (Resource): Source resource
        b (Resource): Target resource
        z_grid (list): Positive work factors
        lambda_grid (list): Probabilities in (0, 1]
        battery (BatteryContext): When given, rows also carry the physical eta

    Returns:
        TransformReport: One row per grid point, in grid order
    """
    zs, lams = [float(z) for z in z_grid], [float(v) for v in lambda_grid]
    if not zs or not lams:
        raise InputError("z and lambda grids must not be empty")

    rows_z = []
    for z in zs:
        errors = optimal_errors(a.pair, b.pair.scaled(1.0, z))
        eta = None
        if battery is not None and is_finite(errors.eta_hat_star):
            eta = errors.eta_hat_star * battery.scale
        rows_z.append(ZRow(
            z=z,
            lambda_star=lambda_star(a.pair, b.pair, z),
            eps_star=errors.eps_star,
            eta_hat_star=errors.eta_hat_star,
            eta=eta,
        ))
    rows_lambda = [LambdaRow(lam=lam, z_star=z_star(a.pair, b.pair, lam)) for lam in lams]
    logger.debug("transform report built", extra={"z_points": len(zs), "lambda_points": len(lams)})
    return TransformReport(rows_z=tuple(rows_z), rows_lambda=tuple(rows_lambda), battery=battery)
