"""
Gibbs states and the basic transformation checks between thermodynamic resources.
"""

# Standard library imports
import logging
import math
from typing import Dict, Iterable, Optional, Sequence, Tuple

# Third-party imports
import numpy as np
from scipy.special import softmax

from relmaj.core.schema import ExtendedReal, Unbounded, Weights
from relmaj.errors import InputError
from relmaj.lp.service import programs
from relmaj.lp.service.simplex import feasible
from relmaj.models import Method
from relmaj.settings import TOLERANCE
from relmaj.submaj.schema import MajorizationDecision
from relmaj.submaj.service.decide import relatively_majorizes, submajorizes
from relmaj.thermo.schema import GibbsCheck, Resource

logger = logging.getLogger(__name__)

# Constants
BATTERY_LEVELS = 3


def gibbs(energies: Sequence[float], beta: float) -> Weights:
    """
    Normalized Boltzmann weights exp(-beta E_k) / Z.

    Args:
        energies (list): Energy levels
        beta (float): Inverse temperature, positive

    Returns:
        Weights: The Gibbs distribution
    """
    if len(energies) == 0:
        raise InputError("energies must not be empty")
    if beta <= 0:
        raise InputError(f"beta must be positive, got {beta}")
    return Weights.of(softmax(-beta * np.asarray(energies, dtype=float)))


def can_transform(a: Resource, b: Resource, exact: bool = False) -> MajorizationDecision:
    """Thermal-operation feasibility of a -> b, decided as relative majorization."""
    return relatively_majorizes(a.pair, b.pair, exact=exact)


def work_factor(work: float, beta: float) -> float:
    """z = exp(-beta W); W > 0 is extracted work."""
    if beta <= 0:
        raise InputError(f"beta must be positive, got {beta}")
    return math.exp(-beta * work)


def work_assisted_feasible(
    a: Resource,
    b: Resource,
    work: float,
    beta: float,
    method: Method = Method.geometric,
    tol: float = TOLERANCE,
) -> MajorizationDecision:
    """
    Whether a -> b is possible while extracting work W (or investing -W).

    Equivalent to (r, g) submajorizing (r', z g') with z = exp(-beta W).
    """
    z = work_factor(work, beta)
    return submajorizes(a.pair, b.pair.scaled(1.0, z), method=method, tol=tol)


def battery_gibbs(work: float, beta: float) -> Weights:
    """Gibbs state of a three-level ladder battery with spacing |W|."""
    step = abs(work)
    return gibbs([k * step for k in range(BATTERY_LEVELS)], beta)


def battery_feasible(a: Resource, b: Resource, work: float, beta: float, exact: bool = False) -> bool:
    """
    Relative majorization with an explicit ladder battery.

    Extraction (W >= 0) moves the battery from level 0 to level 1; investment moves it
    from level 1 to level 0.
    """
    start, end = (0, 1) if work >= 0 else (1, 0)
    logger.debug("battery program", extra={"work": work, "start": start, "end": end})
    lp = programs.battery_program(a.pair, b.pair, battery_gibbs(work, beta).array, start, end)
    return feasible(lp, exact=exact).feasible


def legendre_beta(a: Resource, x: float, mu_grid: Optional[Iterable[float]] = None, tol: float = TOLERANCE) -> ExtendedReal:
    """
    beta_x(r, g) through its dual: the largest mu x - sum_k (mu r_k - g_k)+ over mu >= 0.

    The objective is concave and piecewise linear in mu, so its breakpoints g_k / r_k and
    mu = 0 suffice; `mu_grid` adds further points.
    """
    if x > 1.0 + tol:
        return Unbounded.POSITIVE
    r, g = a.r.array, a.g.array
    mus = [0.0] + [float(gk / rk) for rk, gk in zip(r, g) if rk > 0]
    if mu_grid is not None:
        mus += [float(mu) for mu in mu_grid if mu >= 0]
    return max(mu * x - float(np.clip(mu * r - g, 0.0, None).sum()) for mu in mus)


def gibbs_stochastic_check(
    m_hat: Dict[Tuple[int, int, int], float],
    energies_in: Sequence[float],
    energies_out: Sequence[float],
    work_values: Sequence[float],
    beta: float,
    tol: float = TOLERANCE,
) -> GibbsCheck:
    """
    Whether a channel with work outcomes preserves the Boltzmann factors.

    Checks sum_{k, w} exp(beta w) m_hat(j, w | k) exp(-beta E_k) = exp(-beta E'_j) for
    every output level j.

    Args:
        m_hat (dict): Probability of (output j, work index w) given input k, keyed (j, w, k)
        energies_in (list): Input energy levels E_k
        energies_out (list): Output energy levels E'_j
        work_values (list): Work value for each work index
        beta (float): Inverse temperature

    Raises:
        InputError: Keys out of range, negative entries or unnormalized columns
    """
    if beta <= 0:
        raise InputError(f"beta must be positive, got {beta}")
    n_in, n_out, n_work = len(energies_in), len(energies_out), len(work_values)
    channel = np.zeros((n_out, n_work, n_in))
    for key, value in m_hat.items():
        if len(key) != 3:
            raise InputError(f"key {key} must be (output, work index, input)")
        j, w, k = key
        if not (0 <= j < n_out and 0 <= w < n_work and 0 <= k < n_in):
            raise InputError(f"key {key} is out of range")
        if value < 0:
            raise InputError(f"entry {key} is negative")
        channel[j, w, k] = value

    columns = channel.sum(axis=(0, 1))
    if np.any(np.abs(columns - 1.0) > tol):
        raise InputError("every input column must sum to 1 over (output, work)")

    weights_in = np.exp(-beta * np.asarray(energies_in, dtype=float))
    work_weights = np.exp(beta * np.asarray(work_values, dtype=float))
    produced = np.einsum("jwk,w,k->j", channel, work_weights, weights_in)
    expected = np.exp(-beta * np.asarray(energies_out, dtype=float))
    residual = float(np.abs(produced - expected).max())
    return GibbsCheck(holds=residual <= tol, residual=residual)
