"""
Probabilistic transformations with a mixed or a flagged output, and a randomized search
comparing the two.
"""

# Standard library imports
import logging
from typing import List

# Third-party imports
import numpy as np

from relmaj.errors import InputError
from relmaj.lp.service import programs
from relmaj.lp.service.simplex import solve
from relmaj.models import Status
from relmaj.submaj.service.optimal import lambda_star
from relmaj.thermo.schema import HeraldedCase, Resource

logger = logging.getLogger(__name__)


def _objective(lp, exact: bool) -> float:
    solution = solve(lp, exact=exact)
    if solution.status != Status.optimal:
        return 0.0
    return float(solution.objective)


def mixture_probability(a: Resource, b: Resource, exact: bool = False) -> float:
    """Largest lambda with a -> lambda r' + (1 - lambda) s' for some free state s'."""
    return _objective(programs.mixture_program(a.pair, b.pair), exact)


def heralded_probability(a: Resource, b: Resource, blank_bit: bool = True, exact: bool = False) -> float:
    """
    Largest lambda of reaching r' on flag 1 and anything on flag 0.

    With blank_bit the flag starts in a pure state; otherwise it starts at equilibrium.
    """
    return _objective(programs.heralded_program(a.pair, b.pair, blank_bit), exact)


def _random_resource(rng: np.random.Generator, n: int, label: str) -> Resource:
    return Resource.of(rng.dirichlet(np.ones(n)), rng.dirichlet(np.ones(n)), label=label)


def heralded_search(seed: int, cases: int, n: int = 2) -> List[HeraldedCase]:
    """
    Compare mixed and heralded probabilities on random resources of n levels.

    Nothing is asserted; the cases are returned for inspection.
    """
    if cases < 1 or n < 1:
        raise InputError("cases and n must be positive")
    rng = np.random.default_rng(seed)
    results = []
    for index in range(cases):
        source = _random_resource(rng, n, f"source-{index}")
        target = _random_resource(rng, n, f"target-{index}")
        case = HeraldedCase(
            index=index,
            source=source,
            target=target,
            mixture=mixture_probability(source, target),
            heralded_blank=heralded_probability(source, target, blank_bit=True),
            heralded_plain=heralded_probability(source, target, blank_bit=False),
            lambda_star=lambda_star(source.pair, target.pair, 1.0),
        )
        if case.heralded_plain < case.mixture - 1e-6:
            logger.info("equilibrium flag loses probability", extra={"seed": seed, "index": index})
        results.append(case)
    return results
