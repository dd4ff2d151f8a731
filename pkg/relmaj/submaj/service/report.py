"""
Combined majorization and submajorization answers for one ordered pair.
"""

# Standard library imports
import logging

from relmaj.core.schema import Pair
from relmaj.models import Method
from relmaj.settings import TOLERANCE
from relmaj.submaj.schema import CheckReport
from relmaj.submaj.service.decide import relatively_majorizes, submajorizes
from relmaj.submaj.service.witness import witness_from_curves

logger = logging.getLogger(__name__)


def check_report(
    a: Pair,
    b: Pair,
    method: Method = Method.lp,
    tol: float = TOLERANCE,
    exact: bool = False,
) -> CheckReport:
    """
    Decide relative majorization (always by LP) and submajorization (by `method`).

    A positive geometric submajorization answer carries the witness built from the curves.
    """
    majorization = relatively_majorizes(a, b, tol=tol, exact=exact)
    submajorization = submajorizes(a, b, method=method, tol=tol, exact=exact)
    if method == Method.geometric and submajorization.holds:
        submajorization = submajorization.model_copy(update={"witness": witness_from_curves(a, b, tol)})
    logger.debug(
        "pair checked",
        extra={"majorizes": majorization.holds, "submajorizes": submajorization.holds, "method": method.value},
    )
    return CheckReport(majorization=majorization, submajorization=submajorization)
