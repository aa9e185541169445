"""Real-valued 2D primitives backing every hit test in the engine.

Screen convention: +x right, +y down, coordinates in real pixels.  Integer
device pixels are converted at the UI boundary so sub-pixel drag
accumulation never rounds.  Non-finite values are rejected on construction,
and shape boundaries count as inside: a user aiming at a thin strip should
not miss by an epsilon.

Everything here is a pure function over immutable values and is safe to
call from any thread.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError

__all__ = [
    "Point",
    "Delta",
    "segment_distance",
    "disc_contains",
    "polygon_contains",
]

# Absolute slack for the explicit on-edge test in polygon_contains; keeps
# exactly-on-boundary points inside without disturbing interior/exterior
# classification of anything farther away.
_EDGE_EPS = 1e-12


def _require_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValidationError(f"non-finite coordinate: {v!r}")


@dataclass(frozen=True, slots=True)
class Point:
    """A position on screen, in real pixels."""

    x: float
    y: float

    def __post_init__(self) -> None:
        _require_finite(self.x, self.y)

    def __add__(self, d: "Delta") -> "Point":
        if not isinstance(d, Delta):
            return NotImplemented
        return Point(self.x + d.dx, self.y + d.dy)

    def __sub__(self, other: "Point | Delta") -> "Delta | Point":
        if isinstance(other, Point):
            return Delta(self.x - other.x, self.y - other.y)
        if isinstance(other, Delta):
            return Point(self.x - other.dx, self.y - other.dy)
        return NotImplemented


@dataclass(frozen=True, slots=True)
class Delta:
    """A translation vector, in real pixels."""

    dx: float
    dy: float

    def __post_init__(self) -> None:
        _require_finite(self.dx, self.dy)

    def __add__(self, other: "Delta") -> "Delta":
        if not isinstance(other, Delta):
            return NotImplemented
        return Delta(self.dx + other.dx, self.dy + other.dy)

    def __neg__(self) -> "Delta":
        return Delta(-self.dx, -self.dy)


def _segment_distance_xy(px: float, py: float,
                         ax: float, ay: float,
                         bx: float, by: float) -> float:
    # Endpoints ordered canonically so the result is bit-identical under
    # an (a, b) swap.
    if (bx, by) < (ax, ay):
        ax, ay, bx, by = bx, by, ax, ay
    vx = bx - ax
    vy = by - ay
    wx = px - ax
    wy = py - ay
    vv = vx * vx + vy * vy
    if vv == 0.0:
        return math.hypot(wx, wy)
    t = (wx * vx + wy * vy) / vv
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(wx - t * vx, wy - t * vy)


def segment_distance(p: Point, a: Point, b: Point) -> float:
    """Euclidean distance from ``p`` to the closest point of segment ``ab``.

    ``a == b`` degenerates to point distance.  Symmetric in ``a`` and ``b``.
    """
    return _segment_distance_xy(p.x, p.y, a.x, a.y, b.x, b.y)


def disc_contains(center: Point, radius: float, p: Point) -> bool:
    """True iff ``p`` lies within ``radius`` of ``center``, boundary inclusive."""
    if not math.isfinite(radius) or radius < 0.0:
        raise ValidationError(f"disc radius must be finite and >= 0, got {radius!r}")
    return math.hypot(p.x - center.x, p.y - center.y) <= radius


def _polygon_contains_xy(xs: Sequence[float], ys: Sequence[float],
                         px: float, py: float) -> bool:
    n = len(xs)
    # Boundary points are inside by convention.
    for i in range(n):
        j = i - 1
        if _segment_distance_xy(px, py, xs[j], ys[j], xs[i], ys[i]) <= _EDGE_EPS:
            return True
    # Even-odd ray cast toward +x.
    inside = False
    j = n - 1
    for i in range(n):
        yi = ys[i]
        yj = ys[j]
        if (yi > py) != (yj > py):
            xcross = xs[i] + (py - yi) * (xs[j] - xs[i]) / (yj - yi)
            if px < xcross:
                inside = not inside
        j = i
    return inside


def polygon_contains(vertices: Sequence[Point], p: Point) -> bool:
    """Even-odd containment for a simple polygon, boundary inclusive.

    Requires at least three vertices; self-intersecting input is the
    caller's bug (results follow the even-odd rule regardless).
    """
    if len(vertices) < 3:
        raise ValidationError(f"polygon needs >= 3 vertices, got {len(vertices)}")
    return _polygon_contains_xy(
        [v.x for v in vertices], [v.y for v in vertices], p.x, p.y
    )
