"""Sample object families, each implementing the movable-behavior contract
with its characteristic contour.

RectPlot      resizable plot frame; interior reserved for app clicks
ScaleStrip    a scale bar resizable along one axis only
Skyscrapers   3D bar chart, rotated/scaled by dragging axis-end nodes
BallGraph     balls and links; contour mirrors the graph
Tile          arbitrary polygon, movable but never resizable
GroupProxy    one contour for a whole control group, movable only
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .contour import (
    Connection,
    Contour,
    DiscShape,
    Freedom,
    Node,
    Rect,
)
from .errors import ContractViolation, ValidationError
from .geometry import Delta, Point

__all__ = [
    "NODE_RADIUS",
    "CONNECTION_HALFWIDTH",
    "PLOT_MARGIN",
    "PLOT_MIN_SIZE",
    "TILE_EDGE_HALFWIDTH",
    "RectPlot",
    "ScaleStrip",
    "Tower",
    "Skyscrapers",
    "Ball",
    "BallGraph",
    "Tile",
    "GroupProxy",
]

# Comfortable hit targets at desktop DPI; all overridable per instance.
NODE_RADIUS = 5.0
CONNECTION_HALFWIDTH = 3.0
PLOT_MARGIN = 6.0
PLOT_MIN_SIZE = 20.0
TILE_EDGE_HALFWIDTH = 2.0

_EMPTY = DiscShape(0.0)  # shape of empty nodes: no sensitive area at all


def _require_nonneg(**named: float) -> None:
    for name, value in named.items():
        if not math.isfinite(value) or value < 0.0:
            raise ValidationError(f"{name} must be finite and >= 0, got {value!r}")


def _frame_nodes(corners: tuple[Point, Point, Point, Point],
                 freedom: Freedom, shape: DiscShape) -> list[Node]:
    return [Node(i, pos, shape, freedom) for i, pos in enumerate(corners)]


def _frame_connections(halfwidth: float) -> list[Connection]:
    return [Connection(i, (i + 1) % 4, halfwidth) for i in range(4)]


@dataclass
class RectPlot:
    """A plot area with its contour pushed ``margin`` px outward, keeping the
    interior free for application clicks.

    Contour: corner nodes 0..3 (TL, TR, BR, BL; free), mid-edge nodes 4..7
    (top, right, bottom, left; movable only perpendicular to their edge),
    and the four frame edges as connections.
    """

    area: Rect
    margin: float = PLOT_MARGIN
    min_size: float = PLOT_MIN_SIZE
    node_radius: float = NODE_RADIUS
    edge_halfwidth: float = CONNECTION_HALFWIDTH

    def __post_init__(self) -> None:
        _require_nonneg(margin=self.margin, node_radius=self.node_radius,
                        edge_halfwidth=self.edge_halfwidth)
        if not math.isfinite(self.min_size) or self.min_size <= 0.0:
            raise ValidationError(f"min_size must be > 0, got {self.min_size!r}")
        if self.area.width < self.min_size or self.area.height < self.min_size:
            raise ValidationError(
                f"area {self.area.width}x{self.area.height} below min size {self.min_size}"
            )

    def frame(self) -> Rect:
        return self.area.inflated(self.margin)

    def contour(self) -> Contour:
        f = self.frame()
        x0, y0, x1, y1 = f.min.x, f.min.y, f.max.x, f.max.y
        cx = (x0 + x1) / 2.0
        cy = (y0 + y1) / 2.0
        disc = DiscShape(self.node_radius)
        nodes = _frame_nodes(
            (Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)),
            Freedom.FREE, disc,
        )
        nodes += [
            Node(4, Point(cx, y0), disc, Freedom.VERTICAL_ONLY),
            Node(5, Point(x1, cy), disc, Freedom.HORIZONTAL_ONLY),
            Node(6, Point(cx, y1), disc, Freedom.VERTICAL_ONLY),
            Node(7, Point(x0, cy), disc, Freedom.HORIZONTAL_ONLY),
        ]
        return Contour(nodes, _frame_connections(self.edge_halfwidth))

    def on_translate(self, d: Delta) -> None:
        self.area = self.area.translated(d)

    def on_node_move(self, node_id: int, target: Point) -> Point:
        current = self.contour().nodes[node_id].position
        if target == current:
            return current
        x0, y0 = self.area.min.x, self.area.min.y
        x1, y1 = self.area.max.x, self.area.max.y
        m = self.margin
        # Map the dragged frame node back onto area sides; opposite sides stay.
        if node_id in (0, 3, 7):
            x0 = min(target.x + m, self.area.max.x - self.min_size)
        if node_id in (1, 2, 5):
            x1 = max(target.x - m, self.area.min.x + self.min_size)
        if node_id in (0, 1, 4):
            y0 = min(target.y + m, self.area.max.y - self.min_size)
        if node_id in (2, 3, 6):
            y1 = max(target.y - m, self.area.min.y + self.min_size)
        self.area = Rect(Point(x0, y0), Point(x1, y1))
        return self.contour().nodes[node_id].position


@dataclass
class ScaleStrip:
    """A horizontal scale bar: both end nodes move horizontally only, so the
    object resizes along x and never along y."""

    x0: float
    x1: float
    y: float
    halfheight: float = CONNECTION_HALFWIDTH
    node_radius: float = NODE_RADIUS

    def __post_init__(self) -> None:
        _require_nonneg(halfheight=self.halfheight, node_radius=self.node_radius)

    def contour(self) -> Contour:
        disc = DiscShape(self.node_radius)
        nodes = [
            Node(0, Point(self.x0, self.y), disc, Freedom.HORIZONTAL_ONLY),
            Node(1, Point(self.x1, self.y), disc, Freedom.HORIZONTAL_ONLY),
        ]
        return Contour(nodes, [Connection(0, 1, self.halfheight)])

    def on_translate(self, d: Delta) -> None:
        self.x0 += d.dx
        self.x1 += d.dx
        self.y += d.dy

    def on_node_move(self, node_id: int, target: Point) -> Point:
        current = self.contour().nodes[node_id].position
        if target == current:
            return current
        if node_id == 0:
            self.x0 = target.x
        else:
            self.x1 = target.x
        return self.contour().nodes[node_id].position


@dataclass
class Tower:
    """One bar of a skyscrapers plot: world footprint center plus height."""

    x: float
    y: float
    height: float

    def __post_init__(self) -> None:
        if self.height < 0.0:
            raise ValidationError(f"tower height must be >= 0, got {self.height!r}")


@dataclass
class Skyscrapers:
    """3D bar chart drawn with an orthographic projection.

    Screen position of world (x, y, z), with azimuth ``theta`` and
    elevation ``phi``:

        u = origin.x + scale * (x*cos(theta) - y*sin(theta))
        v = origin.y - scale * ((x*sin(theta) + y*cos(theta))*sin(phi) + z*cos(phi))

    Contour: node 0 at the world origin (dragging it moves the whole plot),
    nodes 1..3 at the X/Y/Z axis ends.  Dragging an axis end about node 0
    decomposes into an angle delta (added to theta, or to phi for the Z end,
    clamped to [0, pi/2]) and a radial ratio (multiplied into scale).  The
    narrow strips around the axes are the connections, so the plot interior
    stays free for application clicks.
    """

    origin: Point
    theta: float = 0.6
    phi: float = 0.35
    scale: float = 20.0
    axis_len: float = 10.0
    towers: list[Tower] = field(default_factory=list)
    strip_halfwidth: float = CONNECTION_HALFWIDTH
    node_radius: float = NODE_RADIUS

    BAR_HALF = 0.4  # half side of a tower's square base, world units
    _EPS = 1e-9  # guards the polar decomposition when a node crosses node 0

    def __post_init__(self) -> None:
        if self.scale <= 0.0:
            raise ValidationError(f"scale must be > 0, got {self.scale!r}")
        if self.axis_len <= 0.0:
            raise ValidationError(f"axis_len must be > 0, got {self.axis_len!r}")
        if not 0.0 <= self.phi <= math.pi / 2.0:
            raise ValidationError(f"phi must lie in [0, pi/2], got {self.phi!r}")
        _require_nonneg(strip_halfwidth=self.strip_halfwidth, node_radius=self.node_radius)

    def project(self, x: float, y: float, z: float) -> Point:
        ct = math.cos(self.theta)
        st = math.sin(self.theta)
        u = self.origin.x + self.scale * (x * ct - y * st)
        v = self.origin.y - self.scale * (
            (x * st + y * ct) * math.sin(self.phi) + z * math.cos(self.phi)
        )
        return Point(u, v)

    def _axis_ends(self) -> tuple[Point, Point, Point, Point]:
        length = self.axis_len
        return (
            self.project(0.0, 0.0, 0.0),
            self.project(length, 0.0, 0.0),
            self.project(0.0, length, 0.0),
            self.project(0.0, 0.0, length),
        )

    def contour(self) -> Contour:
        disc = DiscShape(self.node_radius)
        nodes = [
            Node(i, pos, disc, Freedom.FREE) for i, pos in enumerate(self._axis_ends())
        ]
        connections = [Connection(0, i, self.strip_halfwidth) for i in (1, 2, 3)]
        return Contour(nodes, connections)

    def on_translate(self, d: Delta) -> None:
        self.origin = self.origin + d

    def on_node_move(self, node_id: int, target: Point) -> Point:
        if node_id == 0:
            self.origin = target
            return target
        old = self._axis_ends()[node_id]
        if target == old:
            return old
        r_old = math.hypot(old.x - self.origin.x, old.y - self.origin.y)
        r_new = math.hypot(target.x - self.origin.x, target.y - self.origin.y)
        # A drag across (or onto) node 0 carries no usable direction; ignore it.
        if r_old > self._EPS and r_new > self._EPS:
            a_old = math.atan2(old.y - self.origin.y, old.x - self.origin.x)
            a_new = math.atan2(target.y - self.origin.y, target.x - self.origin.x)
            da = math.remainder(a_new - a_old, math.tau)
            if node_id == 3:
                self.phi = min(max(self.phi + da, 0.0), math.pi / 2.0)
            else:
                self.theta += da
            self.scale *= r_new / r_old
        return self._axis_ends()[node_id]

    def paint_order(self) -> list[int]:
        """Tower indices back to front: descending viewer depth, ties by index."""
        st = math.sin(self.theta)
        ct = math.cos(self.theta)
        return sorted(
            range(len(self.towers)),
            key=lambda i: (-(self.towers[i].x * st + self.towers[i].y * ct), i),
        )


@dataclass
class Ball:
    x: float
    y: float
    radius: float

    def __post_init__(self) -> None:
        if self.radius < 0.0:
            raise ValidationError(f"ball radius must be >= 0, got {self.radius!r}")


@dataclass
class BallGraph:
    """Balls in space with links between them; any number of either.

    The contour mirrors the graph: one free node per ball (disc of the
    ball's radius) and one connection per link.
    """

    balls: list[Ball] = field(default_factory=list)
    links: list[tuple[int, int]] = field(default_factory=list)
    link_halfwidth: float = CONNECTION_HALFWIDTH

    def __post_init__(self) -> None:
        _require_nonneg(link_halfwidth=self.link_halfwidth)
        self.links = [self._checked_link(a, b) for a, b in self.links]

    def _checked_link(self, a: int, b: int) -> tuple[int, int]:
        n = len(self.balls)
        if not (0 <= a < n and 0 <= b < n):
            raise ValidationError(f"link ({a}, {b}) references a missing ball")
        if a == b:
            raise ValidationError(f"link must join two distinct balls, got {a} twice")
        return (a, b)

    def add_ball(self, center: Point, radius: float) -> int:
        self.balls.append(Ball(center.x, center.y, radius))
        return len(self.balls) - 1

    def remove_ball(self, index: int) -> None:
        """Drop a ball and every link incident to it; higher indices shift down."""
        if not 0 <= index < len(self.balls):
            raise ValidationError(f"no ball at index {index}")
        del self.balls[index]
        self.links = [
            (a - (a > index), b - (b > index))
            for a, b in self.links
            if a != index and b != index
        ]

    def contour(self) -> Contour:
        nodes = [
            Node(i, Point(ball.x, ball.y), DiscShape(ball.radius), Freedom.FREE)
            for i, ball in enumerate(self.balls)
        ]
        connections = [Connection(a, b, self.link_halfwidth) for a, b in self.links]
        return Contour(nodes, connections)

    def on_translate(self, d: Delta) -> None:
        for ball in self.balls:
            ball.x += d.dx
            ball.y += d.dy

    def on_node_move(self, node_id: int, target: Point) -> Point:
        if not 0 <= node_id < len(self.balls):
            raise ValidationError(f"no ball at index {node_id}")
        ball = self.balls[node_id]
        ball.x = target.x
        ball.y = target.y
        return target


def _polygon_area2(vertices: list[Point]) -> float:
    area2 = 0.0
    j = len(vertices) - 1
    for i, v in enumerate(vertices):
        w = vertices[j]
        area2 += w.x * v.y - v.x * w.y
        j = i
    return area2


@dataclass
class Tile:
    """A game tile: empty nodes at the vertices with connections along the
    edges, so the whole polygon moves but never reshapes.  The interior is
    insensitive, staying available for game-specific clicks."""

    vertices: list[Point]
    edge_halfwidth: float = TILE_EDGE_HALFWIDTH

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ValidationError(f"tile needs >= 3 vertices, got {len(self.vertices)}")
        if _polygon_area2(self.vertices) == 0.0:
            raise ValidationError("tile polygon is degenerate (zero area)")
        _require_nonneg(edge_halfwidth=self.edge_halfwidth)

    def contour(self) -> Contour:
        n = len(self.vertices)
        nodes = [Node(i, v, _EMPTY, Freedom.NONE) for i, v in enumerate(self.vertices)]
        connections = [Connection(i, (i + 1) % n, self.edge_halfwidth) for i in range(n)]
        return Contour(nodes, connections)

    def on_translate(self, d: Delta) -> None:
        self.vertices = [v + d for v in self.vertices]

    def on_node_move(self, node_id: int, target: Point) -> Point:
        raise ContractViolation("tile nodes are empty; tiles move but never resize")


@dataclass
class GroupProxy:
    """One contour for a whole control group: empty corner nodes and four
    edge connections, so the group moves as a unit and never resizes.
    ``payload`` is an opaque id a UI can use to move its real controls."""

    x: float
    y: float
    width: float
    height: float
    payload: str = ""
    edge_halfwidth: float = CONNECTION_HALFWIDTH

    def __post_init__(self) -> None:
        if self.width < 0.0 or self.height < 0.0:
            raise ValidationError(
                f"group extent must be >= 0, got {self.width!r} x {self.height!r}"
            )
        _require_nonneg(edge_halfwidth=self.edge_halfwidth)

    def rect(self) -> Rect:
        return Rect(Point(self.x, self.y), Point(self.x + self.width, self.y + self.height))

    def contour(self) -> Contour:
        r = self.rect()
        corners = (
            Point(r.min.x, r.min.y),
            Point(r.max.x, r.min.y),
            Point(r.max.x, r.max.y),
            Point(r.min.x, r.max.y),
        )
        nodes = [Node(i, pos, _EMPTY, Freedom.NONE) for i, pos in enumerate(corners)]
        return Contour(nodes, _frame_connections(self.edge_halfwidth))

    def on_translate(self, d: Delta) -> None:
        self.x += d.dx
        self.y += d.dy

    def on_node_move(self, node_id: int, target: Point) -> Point:
        raise ContractViolation("group proxy nodes are empty; groups move but never resize")
