"""
Testing-region geometry of a pair (p, q).

The lower boundary of {(t.p, t.q) : t in [0,1]^n} is a convex polyline through the
origin and the cumulative sums of (p, q) taken in nonincreasing order of p_k / q_k.
beta_at reads it as a function of the p-coordinate, alpha_at as its inverse.
"""

# Standard library imports
from functools import lru_cache
from typing import List, Tuple

# Third-party imports
import numpy as np

from relmaj.core.schema import Elbows, ExtendedReal, Pair, Unbounded, Weights
from relmaj.settings import TOLERANCE


def ratio_order(pair: Pair) -> np.ndarray:
    """
    Indices sorted by nonincreasing p_k / q_k.

    Entries with q_k = 0 < p_k count as ratio +inf and come first; entries with
    p_k = q_k = 0 are dropped. Ties keep their original index order.
    """
    p, q = pair.p.array, pair.q.array
    kept = np.flatnonzero((p > 0) | (q > 0))
    with np.errstate(divide="ignore"):
        ratios = np.where(q[kept] > 0, p[kept] / np.where(q[kept] > 0, q[kept], 1.0), np.inf)
    return kept[np.argsort(-ratios, kind="stable")]


@lru_cache(maxsize=4096)
def _knots(pair: Pair) -> Tuple[np.ndarray, np.ndarray]:
    order = ratio_order(pair)
    xs = np.concatenate(([0.0], np.cumsum(pair.p.array[order])))
    ys = np.concatenate(([0.0], np.cumsum(pair.q.array[order])))
    xs.setflags(write=False)
    ys.setflags(write=False)
    return xs, ys


def elbows(pair: Pair) -> Elbows:
    """
    Elbow points of the lower boundary.

    Args:
        pair (Pair): The pair (p, q)

    Returns:
        Elbows: Cumulative points in ratio order and the permutation used
    """
    order = ratio_order(pair)
    xs, ys = _knots(pair)
    points = tuple((float(x), float(y)) for x, y in zip(xs[1:], ys[1:]))
    return Elbows(points=points, permutation=tuple(int(k) for k in order))


def knot_xs(pair: Pair) -> np.ndarray:
    """Elbow x-coordinates, without the origin."""
    return _knots(pair)[0][1:]


def knot_ys(pair: Pair) -> np.ndarray:
    """Elbow y-coordinates, without the origin."""
    return _knots(pair)[1][1:]


def beta_at(pair: Pair, x: float, tol: float = TOLERANCE) -> ExtendedReal:
    """
    Smallest t.q over tests with t.p >= x.

    Args:
        pair (Pair): The pair (p, q)
        x (float): Required p-value of the test

    Returns:
        float or Unbounded: 0 for x <= 0, Unbounded.POSITIVE for x beyond |p|
    """
    if x <= 0:
        return 0.0
    xs, ys = _knots(pair)
    if x > xs[-1] + tol:
        return Unbounded.POSITIVE
    x = min(x, xs[-1])
    k = int(np.searchsorted(xs, x, side="left"))
    if k == 0:
        return 0.0
    if k >= len(xs):
        k = len(xs) - 1
    # left search keeps the lowest point of a vertical run
    if xs[k] == xs[k - 1]:
        return float(ys[k - 1])
    return float(ys[k - 1] + (ys[k] - ys[k - 1]) * (x - xs[k - 1]) / (xs[k] - xs[k - 1]))


def alpha_at(pair: Pair, y: float) -> ExtendedReal:
    """
    Largest t.p over tests with t.q <= y.

    Returns:
        float or Unbounded: Unbounded.NEGATIVE for y < 0, |p| for y >= |q|
    """
    if y < 0:
        return Unbounded.NEGATIVE
    xs, ys = _knots(pair)
    k = int(np.searchsorted(ys, y, side="right"))
    if k >= len(ys):
        return float(xs[-1])
    return float(xs[k - 1] + (xs[k] - xs[k - 1]) * (y - ys[k - 1]) / (ys[k] - ys[k - 1]))


def alpha_slope(pair: Pair, y: float) -> float:
    """Slope of the alpha curve on the segment starting at or containing y (0 past |q|)."""
    xs, ys = _knots(pair)
    k = int(np.searchsorted(ys, max(y, 0.0), side="right"))
    if k >= len(ys):
        return 0.0
    return float((xs[k] - xs[k - 1]) / (ys[k] - ys[k - 1]))


def optimal_test(pair: Pair, x: float) -> Weights:
    """
    Greedy test attaining beta_at(pair, x) for x in [0, |p|].

    Entries are filled in ratio order, the last one fractionally, so tests for
    increasing x are nested.
    """
    p = pair.p.array
    test = np.zeros(pair.n)
    remaining = max(x, 0.0)
    for k in ratio_order(pair):
        if remaining <= 0:
            break
        if p[k] == 0:
            continue
        if p[k] <= remaining:
            test[k] = 1.0
            remaining -= p[k]
        else:
            test[k] = remaining / p[k]
            remaining = 0.0
    return Weights.of(test)


def lorenz_points(pair: Pair) -> List[Tuple[float, float]]:
    """Boundary points (x, y) starting at the origin."""
    xs, ys = _knots(pair)
    return [(float(x), float(y)) for x, y in zip(xs, ys)]
