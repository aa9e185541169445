"""Deterministic persistence and replay.

Three text artifacts, all canonical so byte comparison is meaningful:

* scene documents: JSON with sorted keys and 9-significant-digit numbers
  (full float fidelity is traded for cross-platform byte stability);
* event scripts: one pointer/scene event per line, ``#`` comments allowed;
* SVG snapshots: fixed attribute order, 3-decimal coordinates.
"""

from __future__ import annotations

import copy
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

from .contour import BoxShape, DiscShape, Freedom, PolygonShape, Rect
from .errors import SceneParseError, ScriptParseError, UnknownObjectType, ValidationError
from .geometry import Point
from .mover import Hinted, Idle, MovableBehavior, Mover, NodeMoved, Translated
from .shapes import (
    Ball,
    BallGraph,
    GroupProxy,
    RectPlot,
    ScaleStrip,
    Skyscrapers,
    Tile,
    Tower,
)

__all__ = [
    "Scene",
    "SceneObject",
    "PointerDown",
    "PointerMove",
    "PointerUp",
    "AddObject",
    "RemoveObject",
    "ToggleContours",
    "Event",
    "save_scene",
    "load_scene",
    "parse_script",
    "format_script",
    "apply_script",
    "apply_event",
    "scene_to_mover",
    "mover_to_scene",
    "build_object",
    "object_payload",
    "render_svg",
    "fmt9",
]

SCENE_VERSION = 1


def fmt9(x: float) -> str:
    """Canonical number rendering: 9 significant digits, no negative zero."""
    if not math.isfinite(x):
        raise ValidationError(f"cannot serialize non-finite number {x!r}")
    return f"{x + 0.0:.9g}"


def _fmt3(x: float) -> str:
    return f"{x + 0.0:.3f}"


# --- scene model -------------------------------------------------------------


@dataclass
class SceneObject:
    object_id: int
    shape: MovableBehavior


@dataclass
class Scene:
    """Everything the engine persists: objects bottom-to-top, the contour
    visibility flag, and the id watermark (ids are never reused)."""

    objects: list[SceneObject] = field(default_factory=list)
    contours_visible: bool = False
    next_id: int = 0


def scene_to_mover(scene: Scene, raise_on_catch: bool = True) -> Mover:
    mover = Mover(raise_on_catch=raise_on_catch)
    for so in scene.objects:
        mover.add(so.shape, obj_id=so.object_id)
    mover.ensure_next_id(scene.next_id)
    mover.set_contours_visible(scene.contours_visible)
    return mover


def mover_to_scene(mover: Mover) -> Scene:
    objects = [SceneObject(oid, mover.get(oid)) for oid in mover.ids()]
    return Scene(objects, mover.contours_visible, mover.next_id)


# --- object payloads ---------------------------------------------------------


def _num(params: dict, key: str, ctx: str, default: float | None = None) -> float:
    if key not in params:
        if default is None:
            raise SceneParseError(f"{ctx}: missing required parameter '{key}'")
        return default
    v = params[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SceneParseError(f"{ctx}: parameter '{key}' must be a number, got {v!r}")
    return float(v)


def _rows(params: dict, key: str, ctx: str, arity: int,
          required: bool = False) -> list[list[float]]:
    if key not in params:
        if required:
            raise SceneParseError(f"{ctx}: missing required parameter '{key}'")
        return []
    rows = params[key]
    if not isinstance(rows, list):
        raise SceneParseError(f"{ctx}: parameter '{key}' must be an array")
    out = []
    for row in rows:
        if (not isinstance(row, list) or len(row) != arity
                or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in row)):
            raise SceneParseError(f"{ctx}: '{key}' entries must be arrays of {arity} numbers")
        out.append([float(v) for v in row])
    return out


def _check_keys(params: dict, allowed: set[str], ctx: str) -> None:
    unknown = sorted(set(params) - allowed)
    if unknown:
        raise SceneParseError(f"{ctx}: unknown parameter(s) {', '.join(unknown)}")


def _build_rect_plot(params: dict, ctx: str) -> RectPlot:
    _check_keys(params, {"x0", "y0", "x1", "y1", "margin", "min_size",
                         "node_radius", "edge_halfwidth"}, ctx)
    area = Rect(
        Point(_num(params, "x0", ctx), _num(params, "y0", ctx)),
        Point(_num(params, "x1", ctx), _num(params, "y1", ctx)),
    )
    return RectPlot(
        area,
        margin=_num(params, "margin", ctx, 6.0),
        min_size=_num(params, "min_size", ctx, 20.0),
        node_radius=_num(params, "node_radius", ctx, 5.0),
        edge_halfwidth=_num(params, "edge_halfwidth", ctx, 3.0),
    )


def _dump_rect_plot(obj: RectPlot) -> dict:
    return {
        "x0": obj.area.min.x, "y0": obj.area.min.y,
        "x1": obj.area.max.x, "y1": obj.area.max.y,
        "margin": obj.margin, "min_size": obj.min_size,
        "node_radius": obj.node_radius, "edge_halfwidth": obj.edge_halfwidth,
    }


def _build_scale_strip(params: dict, ctx: str) -> ScaleStrip:
    _check_keys(params, {"x0", "x1", "y", "halfheight", "node_radius"}, ctx)
    return ScaleStrip(
        x0=_num(params, "x0", ctx),
        x1=_num(params, "x1", ctx),
        y=_num(params, "y", ctx),
        halfheight=_num(params, "halfheight", ctx, 3.0),
        node_radius=_num(params, "node_radius", ctx, 5.0),
    )


def _dump_scale_strip(obj: ScaleStrip) -> dict:
    return {"x0": obj.x0, "x1": obj.x1, "y": obj.y,
            "halfheight": obj.halfheight, "node_radius": obj.node_radius}


def _build_skyscrapers(params: dict, ctx: str) -> Skyscrapers:
    _check_keys(params, {"origin_x", "origin_y", "theta", "phi", "scale",
                         "axis_len", "towers", "strip_halfwidth", "node_radius"}, ctx)
    towers = [Tower(x, y, h) for x, y, h in _rows(params, "towers", ctx, 3)]
    return Skyscrapers(
        Point(_num(params, "origin_x", ctx), _num(params, "origin_y", ctx)),
        theta=_num(params, "theta", ctx, 0.6),
        phi=_num(params, "phi", ctx, 0.35),
        scale=_num(params, "scale", ctx, 20.0),
        axis_len=_num(params, "axis_len", ctx, 10.0),
        towers=towers,
        strip_halfwidth=_num(params, "strip_halfwidth", ctx, 3.0),
        node_radius=_num(params, "node_radius", ctx, 5.0),
    )


def _dump_skyscrapers(obj: Skyscrapers) -> dict:
    return {
        "origin_x": obj.origin.x, "origin_y": obj.origin.y,
        "theta": obj.theta, "phi": obj.phi, "scale": obj.scale,
        "axis_len": obj.axis_len,
        "towers": [[t.x, t.y, t.height] for t in obj.towers],
        "strip_halfwidth": obj.strip_halfwidth, "node_radius": obj.node_radius,
    }


def _build_ball_graph(params: dict, ctx: str) -> BallGraph:
    _check_keys(params, {"balls", "links", "link_halfwidth"}, ctx)
    balls = [Ball(x, y, r) for x, y, r in _rows(params, "balls", ctx, 3)]
    links = []
    for a, b in _rows(params, "links", ctx, 2):
        if a != int(a) or b != int(b):
            raise SceneParseError(f"{ctx}: link endpoints must be integers")
        links.append((int(a), int(b)))
    return BallGraph(balls, links, link_halfwidth=_num(params, "link_halfwidth", ctx, 3.0))


def _dump_ball_graph(obj: BallGraph) -> dict:
    return {
        "balls": [[b.x, b.y, b.radius] for b in obj.balls],
        "links": [[a, b] for a, b in obj.links],
        "link_halfwidth": obj.link_halfwidth,
    }


def _build_tile(params: dict, ctx: str) -> Tile:
    _check_keys(params, {"vertices", "edge_halfwidth"}, ctx)
    vertices = [Point(x, y) for x, y in _rows(params, "vertices", ctx, 2, required=True)]
    return Tile(vertices, edge_halfwidth=_num(params, "edge_halfwidth", ctx, 2.0))


def _dump_tile(obj: Tile) -> dict:
    return {"vertices": [[v.x, v.y] for v in obj.vertices],
            "edge_halfwidth": obj.edge_halfwidth}


def _build_group_proxy(params: dict, ctx: str) -> GroupProxy:
    _check_keys(params, {"x", "y", "width", "height", "payload", "edge_halfwidth"}, ctx)
    payload = params.get("payload", "")
    if not isinstance(payload, str):
        raise SceneParseError(f"{ctx}: 'payload' must be a string")
    return GroupProxy(
        x=_num(params, "x", ctx), y=_num(params, "y", ctx),
        width=_num(params, "width", ctx), height=_num(params, "height", ctx),
        payload=payload,
        edge_halfwidth=_num(params, "edge_halfwidth", ctx, 3.0),
    )


def _dump_group_proxy(obj: GroupProxy) -> dict:
    return {"x": obj.x, "y": obj.y, "width": obj.width, "height": obj.height,
            "payload": obj.payload, "edge_halfwidth": obj.edge_halfwidth}


_BUILDERS: dict[str, Callable[[dict, str], MovableBehavior]] = {
    "rect_plot": _build_rect_plot,
    "scale_strip": _build_scale_strip,
    "skyscrapers": _build_skyscrapers,
    "ball_graph": _build_ball_graph,
    "tile": _build_tile,
    "group_proxy": _build_group_proxy,
}

_DUMPERS: dict[type, tuple[str, Callable]] = {
    RectPlot: ("rect_plot", _dump_rect_plot),
    ScaleStrip: ("scale_strip", _dump_scale_strip),
    Skyscrapers: ("skyscrapers", _dump_skyscrapers),
    BallGraph: ("ball_graph", _dump_ball_graph),
    Tile: ("tile", _dump_tile),
    GroupProxy: ("group_proxy", _dump_group_proxy),
}


def build_object(type_tag: str, params: dict, ctx: str = "object") -> MovableBehavior:
    """Construct a shape from its tagged payload; unknown tags are a distinct error."""
    builder = _BUILDERS.get(type_tag)
    if builder is None:
        raise UnknownObjectType(f"{ctx}: unknown object type '{type_tag}'")
    try:
        return builder(params, ctx)
    except ValidationError as err:
        raise SceneParseError(f"{ctx}: {err}") from err


def object_payload(shape: MovableBehavior) -> tuple[str, dict]:
    tag, dumper = _DUMPERS[type(shape)]
    return tag, dumper(shape)


# --- canonical scene document ------------------------------------------------


def _emit(value, indent: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return fmt9(value)
    if isinstance(value, str):
        return json.dumps(value)
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_emit(value[k], indent + 1)}"
                 for k in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            return "[" + ", ".join(_emit(v, indent) for v in value) + "]"
        items = [f"{inner}{_emit(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise ValidationError(f"cannot serialize value of type {type(value).__name__}")


def save_scene(scene: Scene) -> str:
    """Canonical text form: sorted keys, 9-significant-digit numbers.

    Saving the result of ``load_scene`` reproduces the input byte for byte.
    """
    objects = []
    for so in scene.objects:
        tag, params = object_payload(so.shape)
        objects.append({"id": so.object_id, "type": tag, "params": params})
    doc = {
        "version": SCENE_VERSION,
        "contours_visible": scene.contours_visible,
        "next_id": scene.next_id,
        "objects": objects,
    }
    return _emit(doc, 0) + "\n"


def load_scene(text: str) -> Scene:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SceneParseError(err.msg, line=err.lineno, column=err.colno) from err
    if not isinstance(doc, dict):
        raise SceneParseError("scene document must be a JSON object")
    _check_keys(doc, {"version", "contours_visible", "next_id", "objects"}, "scene")
    if doc.get("version") != SCENE_VERSION:
        raise SceneParseError(f"unsupported scene version {doc.get('version')!r}")
    visible = doc.get("contours_visible", False)
    if not isinstance(visible, bool):
        raise SceneParseError("'contours_visible' must be a boolean")
    entries = doc.get("objects", [])
    if not isinstance(entries, list):
        raise SceneParseError("'objects' must be an array")
    objects: list[SceneObject] = []
    seen: set[int] = set()
    for entry in entries:
        if not isinstance(entry, dict):
            raise SceneParseError("each object entry must be a JSON object")
        _check_keys(entry, {"id", "type", "params"}, "object entry")
        oid = entry.get("id")
        if isinstance(oid, bool) or not isinstance(oid, int):
            raise SceneParseError(f"object id must be an integer, got {oid!r}")
        if oid in seen:
            raise SceneParseError(f"duplicate object id {oid}")
        seen.add(oid)
        tag = entry.get("type")
        if not isinstance(tag, str):
            raise SceneParseError(f"object {oid}: 'type' must be a string")
        params = entry.get("params", {})
        if not isinstance(params, dict):
            raise SceneParseError(f"object {oid}: 'params' must be an object")
        objects.append(SceneObject(oid, build_object(tag, params, ctx=f"object {oid}")))
    next_id = doc.get("next_id", (max(seen) + 1) if seen else 0)
    if isinstance(next_id, bool) or not isinstance(next_id, int) or next_id < 0:
        raise SceneParseError(f"'next_id' must be a non-negative integer, got {next_id!r}")
    if seen and next_id <= max(seen):
        raise SceneParseError(f"'next_id' ({next_id}) must exceed every object id")
    return Scene(objects, visible, next_id)


# --- event scripts -----------------------------------------------------------


@dataclass(frozen=True)
class PointerDown:
    x: float
    y: float


@dataclass(frozen=True)
class PointerMove:
    x: float
    y: float


@dataclass(frozen=True)
class PointerUp:
    pass


@dataclass(frozen=True)
class AddObject:
    type_tag: str
    params: dict


@dataclass(frozen=True)
class RemoveObject:
    object_id: int


@dataclass(frozen=True)
class ToggleContours:
    pass


Event = Union[PointerDown, PointerMove, PointerUp, AddObject, RemoveObject, ToggleContours]


def _script_float(token: str, lineno: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ScriptParseError(f"bad number {token!r}", lineno) from None
    if not math.isfinite(value):
        raise ScriptParseError(f"coordinates must be finite, got {token!r}", lineno)
    return value


def parse_script(text: str) -> list[Event]:
    """One event per line; ``#``-comments and blank lines are skipped.

    ``add`` payloads are validated eagerly so replay itself cannot fail.
    """
    events: list[Event] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword in ("down", "move"):
            parts = rest.split()
            if len(parts) != 2:
                raise ScriptParseError(f"'{keyword}' takes exactly 2 coordinates", lineno)
            x, y = (_script_float(tok, lineno) for tok in parts)
            events.append(PointerDown(x, y) if keyword == "down" else PointerMove(x, y))
        elif keyword in ("up", "toggle_contours"):
            if rest:
                raise ScriptParseError(f"'{keyword}' takes no arguments", lineno)
            events.append(PointerUp() if keyword == "up" else ToggleContours())
        elif keyword == "remove":
            parts = rest.split()
            if len(parts) != 1:
                raise ScriptParseError("'remove' takes exactly 1 object id", lineno)
            try:
                object_id = int(parts[0])
            except ValueError:
                raise ScriptParseError(f"bad object id {parts[0]!r}", lineno) from None
            events.append(RemoveObject(object_id))
        elif keyword == "add":
            try:
                payload = json.loads(rest)
            except json.JSONDecodeError as err:
                raise ScriptParseError(f"bad object document: {err.msg}", lineno) from err
            if not isinstance(payload, dict):
                raise ScriptParseError("'add' payload must be a JSON object", lineno)
            unknown = sorted(set(payload) - {"type", "params"})
            if unknown:
                raise ScriptParseError(f"unknown payload key(s) {', '.join(unknown)}", lineno)
            tag = payload.get("type")
            if not isinstance(tag, str):
                raise ScriptParseError("'add' payload needs a string 'type'", lineno)
            params = payload.get("params", {})
            if not isinstance(params, dict):
                raise ScriptParseError("'add' params must be an object", lineno)
            try:
                build_object(tag, params, ctx=f"add payload")
            except SceneParseError as err:
                raise ScriptParseError(str(err), lineno) from err
            events.append(AddObject(tag, params))
        else:
            raise ScriptParseError(f"unknown event '{keyword}'", lineno)
    return events


def format_script(events: Iterable[Event]) -> str:
    """Inverse of parse_script, in canonical number form."""
    lines = []
    for ev in events:
        if isinstance(ev, PointerDown):
            lines.append(f"down {fmt9(ev.x)} {fmt9(ev.y)}")
        elif isinstance(ev, PointerMove):
            lines.append(f"move {fmt9(ev.x)} {fmt9(ev.y)}")
        elif isinstance(ev, PointerUp):
            lines.append("up")
        elif isinstance(ev, AddObject):
            payload = {"type": ev.type_tag, "params": ev.params}
            lines.append("add " + json.dumps(payload, sort_keys=True))
        elif isinstance(ev, RemoveObject):
            lines.append(f"remove {ev.object_id}")
        elif isinstance(ev, ToggleContours):
            lines.append("toggle_contours")
        else:
            raise ValidationError(f"unknown event {ev!r}")
    return "\n".join(lines) + ("\n" if lines else "")


def apply_event(mover: Mover, event: Event) -> str:
    """Feed one event to the engine; returns the canonical log line."""
    if isinstance(event, PointerDown):
        oid = mover.catch(Point(event.x, event.y))
        return f"catch {oid if oid is not None else 'none'}"
    if isinstance(event, PointerMove):
        outcome = mover.move_to(Point(event.x, event.y))
        if isinstance(outcome, Translated):
            return (f"translate {outcome.object_id} "
                    f"{fmt9(outcome.delta.dx)} {fmt9(outcome.delta.dy)}")
        if isinstance(outcome, NodeMoved):
            return (f"node {outcome.object_id} {outcome.node_id} "
                    f"{fmt9(outcome.old.x)} {fmt9(outcome.old.y)} -> "
                    f"{fmt9(outcome.new.x)} {fmt9(outcome.new.y)}")
        if isinstance(outcome, Hinted):
            return f"hint {outcome.hint.value}"
        return "idle"
    if isinstance(event, PointerUp):
        oid = mover.release()
        return f"release {oid if oid is not None else 'none'}"
    if isinstance(event, AddObject):
        shape = build_object(event.type_tag, event.params, ctx="add payload")
        oid = mover.add(shape)
        return f"add {oid} {event.type_tag}"
    if isinstance(event, RemoveObject):
        ok = mover.remove(event.object_id)
        return f"remove {event.object_id} {'ok' if ok else 'missing'}"
    if isinstance(event, ToggleContours):
        mover.set_contours_visible(not mover.contours_visible)
        return f"contours {'on' if mover.contours_visible else 'off'}"
    raise ValidationError(f"unknown event {event!r}")


def apply_script(scene: Scene, events: Iterable[Event]) -> tuple[Scene, list[str]]:
    """Replay events deterministically on a copy of ``scene``.

    down/move/up map to catch/move_to/release; add/remove/toggle map to
    their registry operations.  The log holds one canonical line per event;
    events that hit nothing are recorded, never errors.
    """
    mover = scene_to_mover(copy.deepcopy(scene))
    log = [apply_event(mover, ev) for ev in events]
    return mover_to_scene(mover), log


# --- SVG snapshots -----------------------------------------------------------

_PLOT_FILL = "#fdfdf6"
_PLOT_STROKE = "#44443c"
_STRIP_FILL = "#efe9c8"
_STRIP_STROKE = "#8a8252"
_AXIS_STROKE = "#3c4566"
_SIDE_X_FILL = "#9aa7c7"
_SIDE_Y_FILL = "#b5c0da"
_TOP_FILL = "#dbe3f4"
_LINK_STROKE = "#7a7a7a"
_BALL_FILL = "#d08a45"
_BALL_STROKE = "#5e3a16"
_TILE_FILL = "#c9a06a"
_TILE_STROKE = "#6b4e2a"
_GROUP_FILL = "#e9e9f0"
_GROUP_STROKE = "#6a6a7a"
_CONTOUR_STROKE = "#cc3344"


def _points_attr(points: Iterable[Point]) -> str:
    return " ".join(f"{_fmt3(p.x)},{_fmt3(p.y)}" for p in points)


def _line(a: Point, b: Point, stroke: str, width: float = 1.0) -> str:
    return (f'<line x1="{_fmt3(a.x)}" y1="{_fmt3(a.y)}" x2="{_fmt3(b.x)}" '
            f'y2="{_fmt3(b.y)}" stroke="{stroke}" stroke-width="{_fmt3(width)}"/>')


def _rect(r: Rect, fill: str, stroke: str, extra: str = "") -> str:
    return (f'<rect x="{_fmt3(r.min.x)}" y="{_fmt3(r.min.y)}" '
            f'width="{_fmt3(r.width)}" height="{_fmt3(r.height)}" '
            f'fill="{fill}" stroke="{stroke}"{extra}/>')


def _polygon(points: Iterable[Point], fill: str, stroke: str) -> str:
    return f'<polygon points="{_points_attr(points)}" fill="{fill}" stroke="{stroke}"/>'


def _render_skyscrapers(s: Skyscrapers, out: list[str]) -> None:
    o, ex, ey, ez = s._axis_ends()
    out.append(_line(o, ex, _AXIS_STROKE))
    out.append(_line(o, ey, _AXIS_STROKE))
    out.append(_line(o, ez, _AXIS_STROKE))
    st = math.sin(s.theta)
    ct = math.cos(s.theta)
    b = s.BAR_HALF
    for i in s.paint_order():
        t = s.towers[i]
        x0, x1 = t.x - b, t.x + b
        y0, y1 = t.y - b, t.y + b
        h = t.height
        # Vertical faces whose outward normal points toward the viewer.
        if st > 0.0:
            out.append(_polygon(
                [s.project(x0, y0, 0), s.project(x0, y1, 0),
                 s.project(x0, y1, h), s.project(x0, y0, h)],
                _SIDE_X_FILL, _AXIS_STROKE))
        elif st < 0.0:
            out.append(_polygon(
                [s.project(x1, y0, 0), s.project(x1, y1, 0),
                 s.project(x1, y1, h), s.project(x1, y0, h)],
                _SIDE_X_FILL, _AXIS_STROKE))
        if ct > 0.0:
            out.append(_polygon(
                [s.project(x0, y0, 0), s.project(x1, y0, 0),
                 s.project(x1, y0, h), s.project(x0, y0, h)],
                _SIDE_Y_FILL, _AXIS_STROKE))
        elif ct < 0.0:
            out.append(_polygon(
                [s.project(x0, y1, 0), s.project(x1, y1, 0),
                 s.project(x1, y1, h), s.project(x0, y1, h)],
                _SIDE_Y_FILL, _AXIS_STROKE))
        if math.sin(s.phi) > 0.0:
            out.append(_polygon(
                [s.project(x0, y0, h), s.project(x1, y0, h),
                 s.project(x1, y1, h), s.project(x0, y1, h)],
                _TOP_FILL, _AXIS_STROKE))


def _render_body(so: SceneObject, out: list[str]) -> None:
    shape = so.shape
    tag, _ = _DUMPERS[type(shape)]
    out.append(f'<g id="obj-{so.object_id}" class="{tag}">')
    if isinstance(shape, RectPlot):
        out.append(_rect(shape.area, _PLOT_FILL, _PLOT_STROKE))
    elif isinstance(shape, ScaleStrip):
        x0, x1 = min(shape.x0, shape.x1), max(shape.x0, shape.x1)
        strip = Rect(Point(x0, shape.y - shape.halfheight),
                     Point(x1, shape.y + shape.halfheight))
        out.append(_rect(strip, _STRIP_FILL, _STRIP_STROKE))
    elif isinstance(shape, Skyscrapers):
        _render_skyscrapers(shape, out)
    elif isinstance(shape, BallGraph):
        for a, b in shape.links:
            pa, pb = shape.balls[a], shape.balls[b]
            out.append(_line(Point(pa.x, pa.y), Point(pb.x, pb.y), _LINK_STROKE))
        for ball in shape.balls:
            out.append(f'<circle cx="{_fmt3(ball.x)}" cy="{_fmt3(ball.y)}" '
                       f'r="{_fmt3(ball.radius)}" fill="{_BALL_FILL}" '
                       f'stroke="{_BALL_STROKE}"/>')
    elif isinstance(shape, Tile):
        out.append(_polygon(shape.vertices, _TILE_FILL, _TILE_STROKE))
    elif isinstance(shape, GroupProxy):
        out.append(_rect(shape.rect(), _GROUP_FILL, _GROUP_STROKE,
                         extra=' stroke-dasharray="4 2"'))
    out.append("</g>")


def _render_contour(so: SceneObject, out: list[str]) -> None:
    contour = so.shape.contour()
    out.append(f'<g id="contour-{so.object_id}" class="contour">')
    for conn in contour.connections:
        a = contour.nodes[conn.node_a].position
        b = contour.nodes[conn.node_b].position
        out.append(_line(a, b, _CONTOUR_STROKE))
    for node in contour.nodes:
        if node.freedom is Freedom.NONE:
            continue  # empty nodes have no sensitive area to show
        pos = node.position
        sh = node.shape
        if isinstance(sh, DiscShape):
            out.append(f'<circle cx="{_fmt3(pos.x)}" cy="{_fmt3(pos.y)}" '
                       f'r="{_fmt3(sh.radius)}" fill="none" '
                       f'stroke="{_CONTOUR_STROKE}"/>')
        elif isinstance(sh, BoxShape):
            box = Rect(Point(pos.x - sh.halfwidth, pos.y - sh.halfheight),
                       Point(pos.x + sh.halfwidth, pos.y + sh.halfheight))
            out.append(_rect(box, "none", _CONTOUR_STROKE))
        else:
            out.append(_polygon([Point(pos.x + v.x, pos.y + v.y) for v in sh.vertices],
                                "none", _CONTOUR_STROKE))
    out.append("</g>")


def render_svg(scene: Scene, width: int = 960, height: int = 640) -> str:
    """Deterministic SVG: objects in painter order, contour overlays appended
    after the bodies when the scene's visibility flag is on."""
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
    ]
    for so in scene.objects:
        _render_body(so, out)
    if scene.contours_visible:
        for so in scene.objects:
            _render_contour(so, out)
    out.append("</svg>")
    return "\n".join(out) + "\n"
