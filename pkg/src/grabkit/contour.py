"""The contour data model: the sensitive skeleton attached to an object.

A contour is an ordered list of nodes plus connections between them.
Nodes are individually draggable handles that reshape the object;
connections are strips that grab the whole object.  A node with freedom
``NONE`` is *empty*: it anchors connections but is never hit-testable or
individually movable, which is how movable-but-not-resizable objects are
built.  Contours need not follow the object's visible outline at all.

All types here are immutable values; operations are pure and safe to
share read-only across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from .errors import ContractViolation, ValidationError
from .geometry import Delta, Point, _polygon_contains_xy, _segment_distance_xy

__all__ = [
    "Freedom",
    "Hint",
    "DiscShape",
    "BoxShape",
    "PolygonShape",
    "NodeShape",
    "Rect",
    "Node",
    "Connection",
    "Contour",
    "NodeHit",
    "ConnectionHit",
    "ContourHit",
    "hit_test",
    "translate",
    "constrain_node",
    "cursor_hint",
]


class Freedom(Enum):
    """Per-node movement constraint."""

    FREE = "free"
    HORIZONTAL_ONLY = "horizontal_only"
    VERTICAL_ONLY = "vertical_only"
    NONE = "none"  # empty node: anchors connections, never movable or hittable


class Hint(Enum):
    """What hovering a contour region would let the pointer do."""

    RECONFIGURE = "reconfigure"
    MOVE_OBJECT = "move_object"
    NONE = "none"


@dataclass(frozen=True, slots=True)
class DiscShape:
    radius: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.radius) or self.radius < 0.0:
            raise ValidationError(f"disc radius must be finite and >= 0, got {self.radius!r}")


@dataclass(frozen=True, slots=True)
class BoxShape:
    """Axis-aligned box, extents measured from the node position."""

    halfwidth: float
    halfheight: float

    def __post_init__(self) -> None:
        for v in (self.halfwidth, self.halfheight):
            if not math.isfinite(v) or v < 0.0:
                raise ValidationError(f"box half-extent must be finite and >= 0, got {v!r}")


@dataclass(frozen=True, slots=True)
class PolygonShape:
    """Simple polygon given as vertex offsets from the node position."""

    vertices: tuple[Point, ...]

    def __init__(self, vertices: Sequence[Point]):
        if len(vertices) < 3:
            raise ValidationError(f"polygon shape needs >= 3 vertices, got {len(vertices)}")
        object.__setattr__(self, "vertices", tuple(vertices))


NodeShape = Union[DiscShape, BoxShape, PolygonShape]


@dataclass(frozen=True, slots=True)
class Rect:
    """Axis-aligned rectangle with min <= max componentwise."""

    min: Point
    max: Point

    def __post_init__(self) -> None:
        if self.min.x > self.max.x or self.min.y > self.max.y:
            raise ValidationError(f"rect min must not exceed max: {self.min} / {self.max}")

    @property
    def width(self) -> float:
        return self.max.x - self.min.x

    @property
    def height(self) -> float:
        return self.max.y - self.min.y

    def contains(self, p: Point) -> bool:
        return self.min.x <= p.x <= self.max.x and self.min.y <= p.y <= self.max.y

    def clamp(self, p: Point) -> Point:
        return Point(
            min(max(p.x, self.min.x), self.max.x),
            min(max(p.y, self.min.y), self.max.y),
        )

    def translated(self, d: Delta) -> "Rect":
        return Rect(self.min + d, self.max + d)

    def inflated(self, amount: float) -> "Rect":
        grow = Delta(amount, amount)
        return Rect(self.min - grow, self.max + grow)


@dataclass(frozen=True, slots=True)
class Node:
    """One handle of a contour.  ``id`` equals the node's list index."""

    id: int
    position: Point
    shape: NodeShape
    freedom: Freedom
    clip: Rect | None = None

    def __post_init__(self) -> None:
        if self.clip is not None and not self.clip.contains(self.position):
            raise ValidationError(
                f"node {self.id} position {self.position} outside clip {self.clip}"
            )


@dataclass(frozen=True, slots=True)
class Connection:
    """A sensitive strip between two nodes; grabbing it moves the whole object."""

    node_a: int
    node_b: int
    halfwidth: float

    def __post_init__(self) -> None:
        if self.node_a == self.node_b:
            raise ValidationError(f"connection endpoints must differ, got {self.node_a} twice")
        if not math.isfinite(self.halfwidth) or self.halfwidth < 0.0:
            raise ValidationError(
                f"connection halfwidth must be finite and >= 0, got {self.halfwidth!r}"
            )


@dataclass(frozen=True, slots=True)
class Contour:
    nodes: tuple[Node, ...]
    connections: tuple[Connection, ...]

    def __init__(self, nodes: Sequence[Node], connections: Sequence[Connection] = ()):
        nodes = tuple(nodes)
        connections = tuple(connections)
        for i, node in enumerate(nodes):
            if node.id != i:
                raise ValidationError(f"node id {node.id} at index {i}: ids must equal indices")
        for conn in connections:
            for endpoint in (conn.node_a, conn.node_b):
                if not 0 <= endpoint < len(nodes):
                    raise ValidationError(f"connection references missing node {endpoint}")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "connections", connections)


@dataclass(frozen=True, slots=True)
class NodeHit:
    node_id: int


@dataclass(frozen=True, slots=True)
class ConnectionHit:
    index: int


ContourHit = Union[NodeHit, ConnectionHit, None]


def _shape_hits(shape: NodeShape, pos: Point, px: float, py: float) -> bool:
    if type(shape) is DiscShape:
        return math.hypot(px - pos.x, py - pos.y) <= shape.radius
    if type(shape) is BoxShape:
        return abs(px - pos.x) <= shape.halfwidth and abs(py - pos.y) <= shape.halfheight
    xs = [pos.x + v.x for v in shape.vertices]
    ys = [pos.y + v.y for v in shape.vertices]
    return _polygon_contains_xy(xs, ys, px, py)


def hit_test(contour: Contour, p: Point) -> ContourHit:
    """Find what ``p`` touches: nodes first (ascending id, empty nodes skipped),
    then connection strips (ascending index), else ``None``.

    Independent of any visibility flag: an invisible contour still grabs.
    """
    px = p.x
    py = p.y
    nodes = contour.nodes
    for node in nodes:
        if node.freedom is Freedom.NONE:
            continue
        if _shape_hits(node.shape, node.position, px, py):
            return NodeHit(node.id)
    for index, conn in enumerate(contour.connections):
        a = nodes[conn.node_a].position
        b = nodes[conn.node_b].position
        if _segment_distance_xy(px, py, a.x, a.y, b.x, b.y) <= conn.halfwidth:
            return ConnectionHit(index)
    return None


def translate(contour: Contour, d: Delta) -> Contour:
    """Shift every node position (and clip rect) by ``d``; shapes unchanged."""
    moved = [
        Node(
            node.id,
            node.position + d,
            node.shape,
            node.freedom,
            None if node.clip is None else node.clip.translated(d),
        )
        for node in contour.nodes
    ]
    return Contour(moved, contour.connections)


def constrain_node(node: Node, proposed: Point) -> Point:
    """Apply the node's freedom axis, then clamp into its clip rect.

    Never valid for empty nodes; they are not individually movable.
    """
    if node.freedom is Freedom.NONE:
        raise ContractViolation(f"node {node.id} is empty (freedom=none) and cannot move")
    if node.freedom is Freedom.HORIZONTAL_ONLY:
        proposed = Point(proposed.x, node.position.y)
    elif node.freedom is Freedom.VERTICAL_ONLY:
        proposed = Point(node.position.x, proposed.y)
    if node.clip is not None:
        proposed = node.clip.clamp(proposed)
    return proposed


def cursor_hint(hit: ContourHit) -> Hint:
    """Node hits mean the object can be reshaped, connection hits mean moved."""
    if isinstance(hit, NodeHit):
        return Hint.RECONFIGURE
    if isinstance(hit, ConnectionHit):
        return Hint.MOVE_OBJECT
    return Hint.NONE
