"""
Builders for the feasibility and optimization programs over pairs.

An unknown n' x n matrix M is flattened row-major: M[i, j] is variable i * n + j.
Extra scalar or slack variables are appended after the matrix block.
"""

# Standard library imports
from typing import List, Tuple

# Third-party imports
import numpy as np

from relmaj.core.schema import Pair
from relmaj.lp.schema import LinearProgram
from relmaj.models import Relation, Sense

Row = Tuple[np.ndarray, Relation, float]


def _product_rows(vector: np.ndarray, n_out: int, n_vars: int) -> List[np.ndarray]:
    """Row i expresses (M vector)_i."""
    n_in = len(vector)
    rows = []
    for i in range(n_out):
        row = np.zeros(n_vars)
        row[i * n_in:(i + 1) * n_in] = vector
        rows.append(row)
    return rows


def _column_rows(n_out: int, n_in: int, n_vars: int) -> List[np.ndarray]:
    """Row j expresses the j-th column sum of M."""
    rows = []
    for j in range(n_in):
        row = np.zeros(n_vars)
        row[j:n_out * n_in:n_in] = 1.0
        rows.append(row)
    return rows


def _zero_objective(n_vars: int) -> np.ndarray:
    return np.zeros(n_vars)


def beta_program(pair: Pair, x: float) -> LinearProgram:
    """minimize t.q subject to t.p >= x and t <= 1."""
    n = pair.n
    rows: List[Row] = [(pair.p.array, Relation.ge, x)]
    for k in range(n):
        unit = np.zeros(n)
        unit[k] = 1.0
        rows.append((unit, Relation.le, 1.0))
    return LinearProgram.build(Sense.minimize, pair.q.array, rows)


def majorization_program(a: Pair, b: Pair) -> LinearProgram:
    """Column-stochastic M with Mp = p' and Mq = q'."""
    n, n_out = a.n, b.n
    n_vars = n * n_out
    rows: List[Row] = []
    rows += [(r, Relation.eq, v) for r, v in zip(_product_rows(a.p.array, n_out, n_vars), b.p.array)]
    rows += [(r, Relation.eq, v) for r, v in zip(_product_rows(a.q.array, n_out, n_vars), b.q.array)]
    rows += [(r, Relation.eq, 1.0) for r in _column_rows(n_out, n, n_vars)]
    return LinearProgram.build(Sense.minimize, _zero_objective(n_vars), rows)


def submajorization_program(a: Pair, b: Pair, equality: bool = False) -> LinearProgram:
    """
    Substochastic M with Mp >= p' (or Mp = p' when equality is set) and Mq <= q'.
    """
    n, n_out = a.n, b.n
    n_vars = n * n_out
    p_relation = Relation.eq if equality else Relation.ge
    rows: List[Row] = []
    rows += [(r, p_relation, v) for r, v in zip(_product_rows(a.p.array, n_out, n_vars), b.p.array)]
    rows += [(r, Relation.le, v) for r, v in zip(_product_rows(a.q.array, n_out, n_vars), b.q.array)]
    rows += [(r, Relation.le, 1.0) for r in _column_rows(n_out, n, n_vars)]
    return LinearProgram.build(Sense.minimize, _zero_objective(n_vars), rows)


def _error_rows(a: Pair, b: Pair, with_eps: bool, with_eta: bool) -> Tuple[List[Row], int, slice, slice]:
    """Rows of Mp + u >= p', Mq - w <= q', column sums <= 1 with optional slacks u, w."""
    n, n_out = a.n, b.n
    block = n * n_out
    n_vars = block + (n_out if with_eps else 0) + (n_out if with_eta else 0)
    eps_slice = slice(block, block + n_out) if with_eps else slice(0, 0)
    eta_start = block + (n_out if with_eps else 0)
    eta_slice = slice(eta_start, eta_start + n_out) if with_eta else slice(0, 0)
    rows: List[Row] = []
    for i, (row, value) in enumerate(zip(_product_rows(a.p.array, n_out, n_vars), b.p.array)):
        if with_eps:
            row[eps_slice.start + i] = 1.0
        rows.append((row, Relation.ge, value))
    for i, (row, value) in enumerate(zip(_product_rows(a.q.array, n_out, n_vars), b.q.array)):
        if with_eta:
            row[eta_slice.start + i] = -1.0
        rows.append((row, Relation.le, value))
    rows += [(r, Relation.le, 1.0) for r in _column_rows(n_out, n, n_vars)]
    return rows, n_vars, eps_slice, eta_slice


def approx_program(a: Pair, b: Pair, epsilon: float, eta: float) -> LinearProgram:
    """Approximate submajorization with total slack at most epsilon on p and eta on q."""
    rows, n_vars, eps_slice, eta_slice = _error_rows(a, b, True, True)
    eps_row = np.zeros(n_vars)
    eps_row[eps_slice] = 1.0
    eta_row = np.zeros(n_vars)
    eta_row[eta_slice] = 1.0
    rows += [(eps_row, Relation.le, epsilon), (eta_row, Relation.le, eta)]
    return LinearProgram.build(Sense.minimize, _zero_objective(n_vars), rows)


def epsilon_program(a: Pair, b: Pair) -> LinearProgram:
    """Minimize the total p-slack with exact q-side."""
    rows, n_vars, eps_slice, _ = _error_rows(a, b, True, False)
    objective = np.zeros(n_vars)
    objective[eps_slice] = 1.0
    return LinearProgram.build(Sense.minimize, objective, rows)


def eta_program(a: Pair, b: Pair) -> LinearProgram:
    """Minimize the total q-slack with exact p-side."""
    rows, n_vars, _, eta_slice = _error_rows(a, b, False, True)
    objective = np.zeros(n_vars)
    objective[eta_slice] = 1.0
    return LinearProgram.build(Sense.minimize, objective, rows)


def lambda_program(a: Pair, b: Pair, z: float) -> LinearProgram:
    """maximize lambda subject to Mp - lambda p' >= 0, Mq <= z q', column sums <= 1, lambda <= 1."""
    n, n_out = a.n, b.n
    n_vars = n * n_out + 1
    rows: List[Row] = []
    for row, value in zip(_product_rows(a.p.array, n_out, n_vars), b.p.array):
        row[-1] = -value
        rows.append((row, Relation.ge, 0.0))
    rows += [(r, Relation.le, z * v) for r, v in zip(_product_rows(a.q.array, n_out, n_vars), b.q.array)]
    rows += [(r, Relation.le, 1.0) for r in _column_rows(n_out, n, n_vars)]
    cap = np.zeros(n_vars)
    cap[-1] = 1.0
    rows.append((cap, Relation.le, 1.0))
    objective = np.zeros(n_vars)
    objective[-1] = 1.0
    return LinearProgram.build(Sense.maximize, objective, rows)


def z_program(a: Pair, b: Pair, lam: float) -> LinearProgram:
    """minimize z subject to Mq - z q' <= 0, Mp >= lam p', column sums <= 1."""
    n, n_out = a.n, b.n
    n_vars = n * n_out + 1
    rows: List[Row] = []
    rows += [(r, Relation.ge, lam * v) for r, v in zip(_product_rows(a.p.array, n_out, n_vars), b.p.array)]
    for row, value in zip(_product_rows(a.q.array, n_out, n_vars), b.q.array):
        row[-1] = -value
        rows.append((row, Relation.le, 0.0))
    rows += [(r, Relation.le, 1.0) for r in _column_rows(n_out, n, n_vars)]
    objective = np.zeros(n_vars)
    objective[-1] = 1.0
    return LinearProgram.build(Sense.minimize, objective, rows)


def vidal_program(source: np.ndarray, target: np.ndarray) -> LinearProgram:
    """
    Largest probability of turning Schmidt vector `source` into `target`.

    With N = lambda * M for doubly stochastic M: maximize lambda subject to
    N 1 >= lambda 1, column sums of N <= lambda, N target <= source, lambda <= 1.
    """
    m = len(source)
    n_vars = m * m + 1
    rows: List[Row] = []
    for i in range(m):
        row = np.zeros(n_vars)
        row[i * m:(i + 1) * m] = 1.0
        row[-1] = -1.0
        rows.append((row, Relation.ge, 0.0))
    for row in _column_rows(m, m, n_vars):
        row[-1] = -1.0
        rows.append((row, Relation.le, 0.0))
    rows += [(r, Relation.le, v) for r, v in zip(_product_rows(target, m, n_vars), source)]
    cap = np.zeros(n_vars)
    cap[-1] = 1.0
    rows.append((cap, Relation.le, 1.0))
    objective = np.zeros(n_vars)
    objective[-1] = 1.0
    return LinearProgram.build(Sense.maximize, objective, rows)


def mixture_program(a: Pair, b: Pair) -> LinearProgram:
    """maximize lambda with (p, q) majorizing (lambda p' + w, q'), w >= 0 and |w| + lambda = 1."""
    n, n_out = a.n, b.n
    block = n * n_out
    n_vars = block + 1 + n_out
    rows: List[Row] = []
    for i, (row, value) in enumerate(zip(_product_rows(a.p.array, n_out, n_vars), b.p.array)):
        row[block] = -value
        row[block + 1 + i] = -1.0
        rows.append((row, Relation.eq, 0.0))
    rows += [(r, Relation.eq, v) for r, v in zip(_product_rows(a.q.array, n_out, n_vars), b.q.array)]
    rows += [(r, Relation.eq, 1.0) for r in _column_rows(n_out, n, n_vars)]
    total = np.zeros(n_vars)
    total[block:] = 1.0
    rows.append((total, Relation.eq, 1.0))
    objective = np.zeros(n_vars)
    objective[block] = 1.0
    return LinearProgram.build(Sense.maximize, objective, rows)


def heralded_program(a: Pair, b: Pair, blank_bit: bool = True) -> LinearProgram:
    """
    maximize lambda with a flag bit of trivial energy on both sides.

    Input (p x f, q x u) where f = (0, 1) with a blank bit and f = u otherwise, u the
    uniform flag distribution; output (s' on flag 0, lambda p' on flag 1) against q' x u.
    Indices are flag-major: (flag, k) maps to flag * n + k.
    """
    n, n_out = a.n, b.n
    flag_in = np.array([0.0, 1.0]) if blank_bit else np.array([0.5, 0.5])
    flag_ref = np.array([0.5, 0.5])
    p_in = np.concatenate([flag_in[f] * a.p.array for f in range(2)])
    q_in = np.concatenate([flag_ref[f] * a.q.array for f in range(2)])
    q_out = np.concatenate([flag_ref[f] * b.q.array for f in range(2)])
    n_in, n_o = 2 * n, 2 * n_out
    block = n_in * n_o
    n_vars = block + 1 + n_out
    rows: List[Row] = []
    for i, row in enumerate(_product_rows(p_in, n_o, n_vars)):
        if i < n_out:
            row[block + 1 + i] = -1.0
        else:
            row[block] = -b.p.array[i - n_out]
        rows.append((row, Relation.eq, 0.0))
    rows += [(r, Relation.eq, v) for r, v in zip(_product_rows(q_in, n_o, n_vars), q_out)]
    rows += [(r, Relation.eq, 1.0) for r in _column_rows(n_o, n_in, n_vars)]
    objective = np.zeros(n_vars)
    objective[block] = 1.0
    return LinearProgram.build(Sense.maximize, objective, rows)


def matrix_block(point, n_out: int, n_in: int) -> np.ndarray:
    """Reshape the leading n_out * n_in variables of a solution into M."""
    values = np.array([float(v) for v in point[:n_out * n_in]])
    return values.reshape(n_out, n_in)


def battery_program(a: Pair, b: Pair, battery_gibbs: np.ndarray, start: int, end: int) -> LinearProgram:
    """
    Relative majorization with an explicit battery: (p x e_start, q x g_B) onto (p' x e_end, q' x g_B).
    """
    levels = len(battery_gibbs)
    start_state, end_state = np.zeros(levels), np.zeros(levels)
    start_state[start] = 1.0
    end_state[end] = 1.0
    source = Pair.of(np.outer(a.p.array, start_state).ravel(), np.outer(a.q.array, battery_gibbs).ravel())
    target = Pair.of(np.outer(b.p.array, end_state).ravel(), np.outer(b.q.array, battery_gibbs).ravel())
    return majorization_program(source, target)
