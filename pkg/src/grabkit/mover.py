"""The engine: a z-ordered registry of movable objects plus the single
active grab, driven by the three pointer operations catch / move_to /
release.

The mover is a single-threaded state machine.  It may be handed between
threads but never accessed concurrently; every outcome it returns is a
plain value that is safe to send anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Union

from .contour import (
    ConnectionHit,
    Contour,
    Hint,
    NodeHit,
    constrain_node,
    cursor_hint,
    hit_test,
)
from .errors import ValidationError
from .geometry import Delta, Point

__all__ = [
    "MovableBehavior",
    "GrabState",
    "Translated",
    "NodeMoved",
    "Hinted",
    "Idle",
    "MoveOutcome",
    "Mover",
]


class MovableBehavior(Protocol):
    """Role contract implemented by every scene object.

    ``on_translate`` must shift the object so its contour equals the old
    contour translated by ``d``.  ``on_node_move`` receives an already
    freedom/clip-constrained target, may adjust or refuse it, must rebuild
    the contour, and must return exactly the moved node's new position.
    """

    def contour(self) -> Contour: ...

    def on_translate(self, d: Delta) -> None: ...

    def on_node_move(self, node_id: int, target: Point) -> Point: ...


@dataclass(slots=True)
class GrabState:
    """What the mover currently holds.

    ``grab_point`` and ``anchor`` are fixed at catch time; ``anchor`` is the
    grabbed node's position for node hits and the pointer itself for
    connection hits, so the grab offset (``grab_point - anchor``) is zero
    for connections.  Keeping the offset fixed prevents the object from
    jumping under the pointer on the first move.
    """

    object_id: int
    hit: NodeHit | ConnectionHit
    grab_point: Point
    anchor: Point
    last_point: Point

    @property
    def offset(self) -> Delta:
        return self.grab_point - self.anchor


@dataclass(frozen=True, slots=True)
class Translated:
    object_id: int
    delta: Delta


@dataclass(frozen=True, slots=True)
class NodeMoved:
    object_id: int
    node_id: int
    old: Point
    new: Point


@dataclass(frozen=True, slots=True)
class Hinted:
    hint: Hint


@dataclass(frozen=True, slots=True)
class Idle:
    pass


MoveOutcome = Union[Translated, NodeMoved, Hinted, Idle]


class Mover:
    """Registry of movable objects; z-order is a list of ids, bottom to top.

    Ids are never reused within a mover's lifetime.  ``raise_on_catch``
    (default) lifts a caught object to the top of the z-order, matching
    window-manager convention for overlapping content.
    """

    def __init__(self, raise_on_catch: bool = True):
        self._objects: dict[int, MovableBehavior] = {}
        self._order: list[int] = []
        self._next_id = 0
        self._grab: GrabState | None = None
        self._contours_visible = False
        self._raise_on_catch = raise_on_catch

    # --- registry ---------------------------------------------------------

    def add(self, obj: MovableBehavior, obj_id: int | None = None) -> int:
        """Place ``obj`` on top of the z-order and return its id.

        Explicit ids exist for scene loaders; they must not collide.
        """
        if obj_id is None:
            obj_id = self._next_id
        elif obj_id in self._objects:
            raise ValidationError(f"object id {obj_id} already present")
        self._next_id = max(self._next_id, obj_id + 1)
        self._objects[obj_id] = obj
        self._order.append(obj_id)
        return obj_id

    def remove(self, obj_id: int) -> bool:
        """Drop an object; cancels the grab first if it is the grabbed one."""
        if obj_id not in self._objects:
            return False
        if self._grab is not None and self._grab.object_id == obj_id:
            self._grab = None
        del self._objects[obj_id]
        self._order.remove(obj_id)
        return True

    def get(self, obj_id: int) -> MovableBehavior:
        return self._objects[obj_id]

    def ids(self) -> tuple[int, ...]:
        """Current z-order, bottom to top (painter order)."""
        return tuple(self._order)

    def __contains__(self, obj_id: int) -> bool:
        return obj_id in self._objects

    def __len__(self) -> int:
        return len(self._order)

    @property
    def next_id(self) -> int:
        return self._next_id

    def ensure_next_id(self, value: int) -> None:
        """Raise the id watermark (used when restoring a saved scene)."""
        self._next_id = max(self._next_id, value)

    def raise_object(self, obj_id: int) -> bool:
        """Move an object up one z slot; False if unknown or already topmost."""
        if obj_id not in self._objects:
            return False
        i = self._order.index(obj_id)
        if i == len(self._order) - 1:
            return False
        self._order[i], self._order[i + 1] = self._order[i + 1], self._order[i]
        return True

    def lower_object(self, obj_id: int) -> bool:
        if obj_id not in self._objects:
            return False
        i = self._order.index(obj_id)
        if i == 0:
            return False
        self._order[i], self._order[i - 1] = self._order[i - 1], self._order[i]
        return True

    # --- contour visibility -------------------------------------------------

    @property
    def contours_visible(self) -> bool:
        return self._contours_visible

    def set_contours_visible(self, flag: bool) -> None:
        """Rendering-only flag; hit testing and grabbing ignore it."""
        self._contours_visible = bool(flag)

    # --- the three pointer operations ---------------------------------------

    @property
    def grabbed(self) -> int | None:
        return None if self._grab is None else self._grab.object_id

    @property
    def grab(self) -> GrabState | None:
        return self._grab

    def catch(self, p: Point) -> int | None:
        """Grab the topmost object sensitive at ``p``; None if nothing is.

        A catch while something is already held is a no-op returning the
        current grab (pointer protocols can emit duplicate downs).
        """
        if self._grab is not None:
            return self._grab.object_id
        for obj_id in reversed(self._order):
            obj = self._objects[obj_id]
            hit = hit_test(obj.contour(), p)
            if hit is None:
                continue
            if isinstance(hit, NodeHit):
                anchor = obj.contour().nodes[hit.node_id].position
            else:
                anchor = p
            self._grab = GrabState(obj_id, hit, grab_point=p, anchor=anchor, last_point=p)
            if self._raise_on_catch:
                self._order.remove(obj_id)
                self._order.append(obj_id)
            return obj_id
        return None

    def move_to(self, p: Point) -> MoveOutcome:
        """Drag the grabbed object, or report what hovering at ``p`` offers.

        Connection grabs translate by the increment from the last pointer
        position, so object-side reactions can never accumulate error from
        recomputed absolute anchors.  Node grabs track the pointer minus the
        grab offset, constrained by the node's freedom and clip, and then
        filtered through the object (which may adjust the point further).
        """
        g = self._grab
        if g is None:
            for obj_id in reversed(self._order):
                hit = hit_test(self._objects[obj_id].contour(), p)
                if hit is not None:
                    return Hinted(cursor_hint(hit))
            return Idle()
        obj = self._objects[g.object_id]
        if isinstance(g.hit, ConnectionHit):
            d = p - g.last_point
            obj.on_translate(d)
            g.last_point = p
            return Translated(g.object_id, d)
        node = obj.contour().nodes[g.hit.node_id]
        old = node.position
        proposed = g.anchor + (p - g.grab_point)
        accepted = obj.on_node_move(node.id, constrain_node(node, proposed))
        g.last_point = p
        return NodeMoved(g.object_id, node.id, old, accepted)

    def release(self) -> int | None:
        """End the grab; returns the id that was held, None otherwise.  Idempotent."""
        if self._grab is None:
            return None
        obj_id = self._grab.object_id
        self._grab = None
        return obj_id
