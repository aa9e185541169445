"""Contour-based direct manipulation for 2D scenes.

Any rendered object becomes movable and resizable by attaching a contour:
nodes (individually draggable handles) plus connections (strips that grab
the whole object).  A single mover holds every object and the one active
grab, driven by catch / move_to / release.  Scenes, event scripts, and SVG
snapshots all have canonical text forms so replays are byte-reproducible.
"""

from .contour import (
    BoxShape,
    Connection,
    ConnectionHit,
    Contour,
    ContourHit,
    DiscShape,
    Freedom,
    Hint,
    Node,
    NodeHit,
    NodeShape,
    PolygonShape,
    Rect,
    constrain_node,
    cursor_hint,
    hit_test,
    translate,
)
from .errors import (
    ContractViolation,
    EngineError,
    SceneParseError,
    ScriptParseError,
    UnknownObjectType,
    ValidationError,
)
from .geometry import Delta, Point, disc_contains, polygon_contains, segment_distance
from .mover import (
    GrabState,
    Hinted,
    Idle,
    MovableBehavior,
    MoveOutcome,
    Mover,
    NodeMoved,
    Translated,
)
from .sample import sample_scene
from .scene_io import (
    AddObject,
    Event,
    PointerDown,
    PointerMove,
    PointerUp,
    RemoveObject,
    Scene,
    SceneObject,
    ToggleContours,
    apply_event,
    apply_script,
    build_object,
    format_script,
    load_scene,
    mover_to_scene,
    object_payload,
    parse_script,
    render_svg,
    save_scene,
    scene_to_mover,
)
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

__version__ = "0.1.0"
