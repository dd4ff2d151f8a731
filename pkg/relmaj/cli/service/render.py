"""
SVG rendering of boundary curves and feasible regions through Jinja2 templates.
The reference coordinate runs along the horizontal axis, the state coordinate upward.
"""

# Standard library imports
from functools import lru_cache
from pathlib import Path
from typing import List, Tuple

# Third-party imports
from jinja2 import Environment, PackageLoader, select_autoescape

from relmaj.core.schema import Pair
from relmaj.core.service.geometry import lorenz_points
from relmaj.errors import InputError
from relmaj.submaj.schema import FeasibleBoundary

# Constants
CANVAS = 1000.0
COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


@lru_cache(maxsize=1)
def _environment() -> Environment:
    return Environment(
        loader=PackageLoader("relmaj.cli", "templates"),
        autoescape=select_autoescape(["svg", "j2"], default=True),
        trim_blocks=True,
    )


def _coordinate(value: float) -> str:
    return format(value, ".6g")


def _point(x: float, y: float, max_x: float, max_y: float) -> Tuple[str, str]:
    """Canvas position of a boundary point (x = state value, y = reference value)."""
    return _coordinate(CANVAS * y / max_y), _coordinate(CANVAS - CANVAS * x / max_x)


def _write(text: str, path: Path) -> Path:
    try:
        path.write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from exc
    return path


def render_lorenz(pairs: List[Tuple[str, Pair]], path: Path) -> Path:
    """
    Draw the lower boundary of each pair as one polyline with elbow markers.

    Args:
        pairs (list): (label, Pair) tuples
        path (Path): Destination SVG file

    Returns:
        Path: The written file

    Raises:
        InputError: Empty list, all-zero pairs or an unwritable path
    """
    if not pairs:
        raise InputError("at least one curve is required")
    max_x = max(pair.p_total for _, pair in pairs)
    max_y = max(pair.q_total for _, pair in pairs)
    if max_x <= 0 or max_y <= 0:
        raise InputError("curves need positive totals to be drawn")

    curves = []
    for index, (label, pair) in enumerate(pairs):
        points = [_point(x, y, max_x, max_y) for x, y in lorenz_points(pair)]
        curves.append({
            "label": label,
            "color": COLORS[index % len(COLORS)],
            "points": " ".join(f"{sx},{sy}" for sx, sy in points),
            "elbows": points[1:],
        })
    text = _environment().get_template("lorenz.svg.j2").render(title="Lorenz curves", curves=curves)
    return _write(text, path)


def render_region(boundary: FeasibleBoundary, path: Path) -> Path:
    """Draw lambda*(z) over the sampled z range; lambda runs from 0 to 1 upward."""
    if not boundary.samples:
        raise InputError("boundary has no samples")
    max_z = max(boundary.zs)
    samples = [_point(lam, z, 1.0, max_z) for z, lam in zip(boundary.zs, boundary.lambdas)]
    text = _environment().get_template("region.svg.j2").render(
        title="Feasible region",
        points=" ".join(f"{sx},{sy}" for sx, sy in samples),
        samples=samples,
    )
    return _write(text, path)
