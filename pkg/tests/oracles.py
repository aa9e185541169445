"""Independent brute-force evaluators used as oracles by the test suite.

Everything here is coded against the documented contracts only, in a
deliberately different style from the engine (winding numbers instead of
even-odd ray casts, cross-product distances instead of clamped projections,
numpy batches instead of scalar loops), so the two sides cannot share bugs.
"""

from __future__ import annotations

import math

import numpy as np

from grabkit.contour import BoxShape, Contour, DiscShape, Freedom, PolygonShape

NONE = -1
CONN_BASE = 1_000_000


def encode_engine_hit(hit) -> int:
    """Map the engine's hit result onto the oracle's integer encoding."""
    from grabkit.contour import ConnectionHit, NodeHit

    if hit is None:
        return NONE
    if isinstance(hit, NodeHit):
        return hit.node_id
    if isinstance(hit, ConnectionHit):
        return CONN_BASE + hit.index
    raise AssertionError(f"unexpected hit {hit!r}")


# --- scalar primitives --------------------------------------------------------


def seg_distance(px, py, ax, ay, bx, by) -> float:
    """Point-to-segment distance via the three-case dot/cross formulation."""
    vx, vy = bx - ax, by - ay
    wx, wy = px - ax, py - ay
    l2 = vx * vx + vy * vy
    if l2 == 0.0:
        return math.sqrt(wx * wx + wy * wy)
    t = (wx * vx + wy * vy) / l2
    if t <= 0.0:
        return math.sqrt(wx * wx + wy * wy)
    if t >= 1.0:
        ux, uy = px - bx, py - by
        return math.sqrt(ux * ux + uy * uy)
    return abs(vx * wy - vy * wx) / math.sqrt(l2)


def winding_contains(xs, ys, px, py) -> bool:
    """Winding-number point-in-polygon (nonzero rule).

    Agrees with the even-odd rule on simple polygons except exactly on the
    boundary, which callers exclude.
    """
    wn = 0
    n = len(xs)
    for i in range(n):
        x1, y1 = xs[i], ys[i]
        x2, y2 = xs[(i + 1) % n], ys[(i + 1) % n]
        if y1 <= py:
            if y2 > py and (x2 - x1) * (py - y1) - (px - x1) * (y2 - y1) > 0:
                wn += 1
        elif y2 <= py and (x2 - x1) * (py - y1) - (px - x1) * (y2 - y1) < 0:
            wn -= 1
    return wn != 0


def polygon_edge_distance(xs, ys, px, py) -> float:
    n = len(xs)
    return min(
        seg_distance(px, py, xs[i], ys[i], xs[(i + 1) % n], ys[(i + 1) % n])
        for i in range(n)
    )


# --- batched contour evaluation -------------------------------------------------


def _seg_distance_batch(px, py, ax, ay, bx, by):
    vx, vy = bx - ax, by - ay
    wx, wy = px - ax, py - ay
    l2 = vx * vx + vy * vy
    if l2 == 0.0:
        return np.hypot(wx, wy)
    t = (wx * vx + wy * vy) / l2
    d_perp = np.abs(vx * wy - vy * wx) / math.sqrt(l2)
    d_a = np.hypot(wx, wy)
    d_b = np.hypot(px - bx, py - by)
    return np.where(t <= 0.0, d_a, np.where(t >= 1.0, d_b, d_perp))


def _winding_batch(xs, ys, px, py):
    wn = np.zeros(px.shape, dtype=np.int64)
    n = len(xs)
    for i in range(n):
        x1, y1 = xs[i], ys[i]
        x2, y2 = xs[(i + 1) % n], ys[(i + 1) % n]
        left = (x2 - x1) * (py - y1) - (px - x1) * (y2 - y1)
        if y1 <= y2:
            wn += ((y1 <= py) & (y2 > py) & (left > 0)).astype(np.int64)
        else:
            wn -= ((y2 <= py) & (y1 > py) & (left < 0)).astype(np.int64)
    return wn != 0


def _node_mask(node, px, py):
    cx, cy = node.position.x, node.position.y
    shape = node.shape
    if isinstance(shape, DiscShape):
        return (px - cx) ** 2 + (py - cy) ** 2 <= shape.radius ** 2
    if isinstance(shape, BoxShape):
        return (np.abs(px - cx) <= shape.halfwidth) & (np.abs(py - cy) <= shape.halfheight)
    xs = [cx + v.x for v in shape.vertices]
    ys = [cy + v.y for v in shape.vertices]
    return _winding_batch(xs, ys, px, py)


def contour_hits_batch(contour: Contour, pts: np.ndarray) -> np.ndarray:
    """Evaluate every node shape and connection strip independently and apply
    the documented priority: nodes by ascending id (empty nodes never hit),
    then connections by ascending index."""
    px = pts[:, 0]
    py = pts[:, 1]
    result = np.full(px.shape, NONE, dtype=np.int64)
    unset = np.ones(px.shape, dtype=bool)
    for node in contour.nodes:
        if node.freedom is Freedom.NONE:
            continue
        mask = _node_mask(node, px, py)
        result[unset & mask] = node.id
        unset &= ~mask
    for index, conn in enumerate(contour.connections):
        a = contour.nodes[conn.node_a].position
        b = contour.nodes[conn.node_b].position
        mask = _seg_distance_batch(px, py, a.x, a.y, b.x, b.y) <= conn.halfwidth
        result[unset & mask] = CONN_BASE + index
        unset &= ~mask
    return result


def contour_hit(contour: Contour, x: float, y: float) -> int:
    """Scalar counterpart of contour_hits_batch."""
    return int(contour_hits_batch(contour, np.array([[x, y]], dtype=np.float64))[0])


def near_any_boundary(contour: Contour, x: float, y: float, eps: float = 1e-9) -> bool:
    """True if (x, y) is within eps of any node-shape boundary or strip edge;
    such points are float-ambiguous and excluded from oracle comparisons."""
    for node in contour.nodes:
        if node.freedom is Freedom.NONE:
            continue
        cx, cy = node.position.x, node.position.y
        shape = node.shape
        if isinstance(shape, DiscShape):
            if abs(math.hypot(x - cx, y - cy) - shape.radius) <= eps:
                return True
        elif isinstance(shape, BoxShape):
            sd = max(abs(x - cx) - shape.halfwidth, abs(y - cy) - shape.halfheight)
            if abs(sd) <= eps:
                return True
        else:
            xs = [cx + v.x for v in shape.vertices]
            ys = [cy + v.y for v in shape.vertices]
            if polygon_edge_distance(xs, ys, x, y) <= eps:
                return True
    for conn in contour.connections:
        a = contour.nodes[conn.node_a].position
        b = contour.nodes[conn.node_b].position
        if abs(seg_distance(x, y, a.x, a.y, b.x, b.y) - conn.halfwidth) <= eps:
            return True
    return False


# --- projection and depth order ---------------------------------------------------


def project(ox, oy, theta, phi, scale, x, y, z):
    """Orthographic projection evaluated through a rotation matrix."""
    rot = np.array([[np.cos(theta), -np.sin(theta)],
                    [np.sin(theta), np.cos(theta)]])
    xr, yr = rot @ np.array([x, y], dtype=np.float64)
    return (ox + scale * xr, oy - scale * (yr * np.sin(phi) + z * np.cos(phi)))


def depth_order(footprints, theta):
    """Back-to-front indices: descending x*sin(theta) + y*cos(theta), ties by index."""
    depths = [x * math.sin(theta) + y * math.cos(theta) for x, y in footprints]
    return sorted(range(len(depths)), key=lambda i: (-depths[i], i))
