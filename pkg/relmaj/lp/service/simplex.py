"""
Dense two-phase primal simplex with Bland's rule.

The tableau holds the constraint rows followed by one reduced-cost row whose last
entry is minus the current objective value. Every constraint row owns an identity
column (its slack, or its artificial variable) from which the duals are read off.
Exact mode runs the same pivots over sympy.Rational with zero tolerance.
"""

# Standard library imports
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

# Third-party imports
import numpy as np
import sympy

from relmaj.errors import SolverError
from relmaj.lp.schema import Decision, LinearProgram, Scalar, Solution
from relmaj.models import Relation, Sense, Status
from relmaj.settings import PIVOT_TOLERANCE, TOLERANCE

logger = logging.getLogger(__name__)

# Constants
PIVOT_CAP_FACTOR = 10


@dataclass
class _Tableau:
    table: np.ndarray
    basis: List[int]
    identity_cols: List[int]
    artificial: np.ndarray
    signs: List[int]
    n_vars: int
    pivot_tol: Scalar
    feas_tol: Scalar
    exact: bool
    pivots: int = 0

    @property
    def cap(self) -> int:
        rows, cols = self.table.shape
        return PIVOT_CAP_FACTOR * (rows + cols) ** 2


def _scalar(value, exact: bool) -> Scalar:
    if exact:
        return sympy.Rational(str(value))
    return float(value)


def _build(lp: LinearProgram, exact: bool, pivot_tol: float, feas_tol: float) -> _Tableau:
    """Standard form with nonnegative right-hand sides."""
    matrix, bounds, relations = lp.matrix, lp.bounds, list(lp.relations)
    m, n = matrix.shape
    signs = []
    for i in range(m):
        if bounds[i] < 0:
            matrix[i, :] *= -1
            bounds[i] *= -1
            if relations[i] == Relation.le:
                relations[i] = Relation.ge
            elif relations[i] == Relation.ge:
                relations[i] = Relation.le
            signs.append(-1)
        else:
            signs.append(1)

    n_aux = sum(1 for r in relations if r != Relation.eq)
    n_art = sum(1 for r in relations if r != Relation.le)
    ncols = n + n_aux + n_art
    dtype = object if exact else float
    table = np.zeros((m + 1, ncols + 1), dtype=dtype)
    if exact:
        table[:, :] = sympy.Integer(0)
    one = sympy.Integer(1) if exact else 1.0
    artificial = np.zeros(ncols, dtype=bool)
    basis, identity_cols = [], []
    aux, art = n, n + n_aux
    for i in range(m):
        for j in range(n):
            table[i, j] = _scalar(matrix[i, j], exact)
        table[i, -1] = _scalar(bounds[i], exact)
        if relations[i] == Relation.le:
            table[i, aux] = one
            basis.append(aux)
            identity_cols.append(aux)
            aux += 1
            continue
        if relations[i] == Relation.ge:
            table[i, aux] = -one
            aux += 1
        table[i, art] = one
        artificial[art] = True
        basis.append(art)
        identity_cols.append(art)
        art += 1

    zero = sympy.Integer(0) if exact else 0.0
    return _Tableau(
        table=table,
        basis=basis,
        identity_cols=identity_cols,
        artificial=artificial,
        signs=signs,
        n_vars=n,
        pivot_tol=zero if exact else pivot_tol,
        feas_tol=zero if exact else feas_tol,
        exact=exact,
    )


def _price(tab: _Tableau, cost: np.ndarray) -> None:
    """Write reduced costs of `cost` for the current basis into the last row."""
    table = tab.table
    row = np.concatenate((cost, [cost[0] * 0]))
    for i, col in enumerate(tab.basis):
        if cost[col] != 0:
            row = row - cost[col] * table[i, :]
    table[-1, :] = row


def _pivot(tab: _Tableau, row: int, col: int) -> None:
    table = tab.table
    table[row, :] = table[row, :] / table[row, col]
    for i in range(table.shape[0]):
        if i != row and table[i, col] != 0:
            table[i, :] = table[i, :] - table[i, col] * table[row, :]
    tab.basis[row] = col
    tab.pivots += 1


def _entering(tab: _Tableau, allowed: np.ndarray) -> int:
    reduced = tab.table[-1, :-1]
    for j in range(len(reduced)):
        if allowed[j] and reduced[j] < -tab.pivot_tol:
            return j
    return -1


def _leaving(tab: _Tableau, col: int) -> int:
    table = tab.table
    best, best_ratio = -1, None
    for i in range(table.shape[0] - 1):
        entry = table[i, col]
        if entry <= tab.pivot_tol:
            continue
        ratio = table[i, -1] / entry
        if best_ratio is None or ratio < best_ratio - tab.feas_tol:
            best, best_ratio = i, ratio
        elif ratio <= best_ratio + tab.feas_tol and tab.basis[i] < tab.basis[best]:
            best, best_ratio = i, min(ratio, best_ratio)
    return best


def _iterate(tab: _Tableau, allowed: np.ndarray, phase: int) -> Status:
    while True:
        col = _entering(tab, allowed)
        if col < 0:
            return Status.optimal
        row = _leaving(tab, col)
        if row < 0:
            return Status.unbounded
        if tab.pivots >= tab.cap:
            diagnostics = {"phase": phase, "pivots": tab.pivots, "cap": tab.cap}
            logger.error("simplex pivot cap reached", extra=diagnostics)
            raise SolverError("simplex did not terminate within the pivot cap", diagnostics)
        _pivot(tab, row, col)


def _identity_duals(tab: _Tableau, cost: np.ndarray) -> List[Scalar]:
    reduced = tab.table[-1, :-1]
    return [cost[c] - reduced[c] for c in tab.identity_cols]


def _phase_one(tab: _Tableau) -> Tuple[bool, Optional[List[Scalar]]]:
    """
    Minimize the sum of artificials.

    Returns:
        tuple: (feasible, Farkas certificate in the original row signs when infeasible)
    """
    ncols = tab.table.shape[1] - 1
    cost = np.zeros(ncols, dtype=object if tab.exact else float)
    if tab.exact:
        cost[:] = sympy.Integer(0)
    cost[tab.artificial] = sympy.Integer(1) if tab.exact else 1.0
    _price(tab, cost)
    _iterate(tab, np.ones(ncols, dtype=bool), phase=1)

    residual = -tab.table[-1, -1]
    if residual > tab.feas_tol:
        duals = _identity_duals(tab, cost)
        certificate = [s * y for s, y in zip(tab.signs, duals)]
        logger.debug("phase one infeasible", extra={"residual": float(residual), "pivots": tab.pivots})
        return False, certificate

    for i, col in enumerate(tab.basis):
        if not tab.artificial[col]:
            continue
        for j in range(ncols):
            if not tab.artificial[j] and abs(tab.table[i, j]) > tab.pivot_tol:
                _pivot(tab, i, j)
                break
    return True, None


def _primal(tab: _Tableau) -> List[Scalar]:
    values = [sympy.Integer(0) if tab.exact else 0.0] * tab.n_vars
    for i, col in enumerate(tab.basis):
        if col < tab.n_vars:
            value = tab.table[i, -1]
            values[col] = value if tab.exact else max(float(value), 0.0)
    return values


def solve(
    lp: LinearProgram,
    exact: bool = False,
    pivot_tol: float = PIVOT_TOLERANCE,
    feas_tol: float = TOLERANCE,
) -> Solution:
    """
    Solve a linear program with the two-phase simplex method.

    Args:
        lp (LinearProgram): The program
        exact (bool): Use rational arithmetic

    Returns:
        Solution: Status, primal point, duals and objective value
    """
    tab = _build(lp, exact, pivot_tol, feas_tol)
    feasible, certificate = _phase_one(tab)
    if not feasible:
        return Solution(status=Status.infeasible, dual=tuple(certificate), pivots=tab.pivots)

    ncols = tab.table.shape[1] - 1
    sign = -1 if lp.sense == Sense.maximize else 1
    cost = np.zeros(ncols, dtype=object if exact else float)
    if exact:
        cost[:] = sympy.Integer(0)
    for j, c in enumerate(lp.objective):
        cost[j] = sign * _scalar(c, exact)
    _price(tab, cost)
    status = _iterate(tab, ~tab.artificial, phase=2)
    if status == Status.unbounded:
        logger.debug("phase two unbounded", extra={"pivots": tab.pivots})
        return Solution(status=Status.unbounded, pivots=tab.pivots)

    primal = _primal(tab)
    duals = [sign * s * y for s, y in zip(tab.signs, _identity_duals(tab, cost))]
    objective = sum((_scalar(c, exact) * x for c, x in zip(lp.objective, primal)), sympy.Integer(0) if exact else 0.0)
    if not exact:
        duals = [float(y) for y in duals]
        objective = float(objective)
    logger.debug("simplex optimal", extra={"pivots": tab.pivots, "vars": lp.n_vars})
    return Solution(
        status=Status.optimal,
        primal=tuple(primal),
        dual=tuple(duals),
        objective=objective,
        pivots=tab.pivots,
    )


def feasible(lp: LinearProgram, exact: bool = False, pivot_tol: float = PIVOT_TOLERANCE, feas_tol: float = TOLERANCE) -> Decision:
    """
    Phase one only: a feasible point, or a Farkas certificate of infeasibility.
    """
    tab = _build(lp, exact, pivot_tol, feas_tol)
    is_feasible, certificate = _phase_one(tab)
    if not is_feasible:
        values = certificate if exact else [float(y) for y in certificate]
        return Decision(feasible=False, certificate=tuple(values))
    return Decision(feasible=True, point=tuple(_primal(tab)))


def verify_certificate(lp: LinearProgram, certificate, tol: float = TOLERANCE) -> bool:
    """
    Check a Farkas ray y: y^T A <= 0 columnwise, y^T b > 0, y >= 0 on >= rows and y <= 0 on <= rows.
    """
    y = np.asarray([float(v) for v in certificate])
    if len(y) != len(lp.constraints):
        return False
    for value, relation in zip(y, lp.relations):
        if relation == Relation.ge and value < -tol:
            return False
        if relation == Relation.le and value > tol:
            return False
    return bool(np.all(y @ lp.matrix <= tol) and y @ lp.bounds > tol)


def duality_residuals(lp: LinearProgram, solution: Solution) -> Tuple[float, float]:
    """
    Duality gap |c.x - b.y| and the largest complementary-slackness product.
    """
    x = np.asarray([float(v) for v in solution.primal])
    y = np.asarray([float(v) for v in solution.dual])
    c = np.asarray(lp.objective)
    matrix, bounds = lp.matrix, lp.bounds
    gap = abs(float(c @ x) - float(bounds @ y)) if len(y) else abs(float(c @ x))
    row_slack = np.abs(y * (matrix @ x - bounds)) if len(y) else np.zeros(0)
    reduced = c - (y @ matrix if len(y) else np.zeros_like(c))
    col_slack = np.abs(x * reduced)
    worst = float(max(row_slack.max(initial=0.0), col_slack.max(initial=0.0)))
    return gap, worst
