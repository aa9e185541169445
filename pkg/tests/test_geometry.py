import math
import random

import pytest
from hypothesis import given, strategies as st

from grabkit import Delta, Point, ValidationError, disc_contains, polygon_contains, segment_distance

from gen import star_polygon
from oracles import polygon_edge_distance, winding_contains

# Dyadic coordinates (multiples of 1/32, bounded) make float sums exact, so
# invariants stated as exact equalities can be asserted as such.
dyadic = st.integers(min_value=-(2 ** 20), max_value=2 ** 20).map(lambda n: n / 32.0)
finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


def test_segment_distance_endpoint():
    assert segment_distance(Point(0, 0), Point(0, 0), Point(10, 0)) == 0.0


def test_segment_distance_perpendicular_foot():
    assert segment_distance(Point(5, 3), Point(0, 0), Point(10, 0)) == 3.0


def test_segment_distance_beyond_endpoint():
    assert segment_distance(Point(-4, 3), Point(0, 0), Point(10, 0)) == 5.0


@given(px=finite, py=finite, ax=finite, ay=finite, bx=finite, by=finite)
def test_segment_distance_symmetric(px, py, ax, ay, bx, by):
    p, a, b = Point(px, py), Point(ax, ay), Point(bx, by)
    assert segment_distance(p, a, b) == segment_distance(p, b, a)


@given(px=finite, py=finite, ax=finite, ay=finite)
def test_segment_distance_degenerate_is_point_distance(px, py, ax, ay):
    p, a = Point(px, py), Point(ax, ay)
    assert segment_distance(p, a, a) == math.hypot(px - ax, py - ay)


def test_non_finite_rejected():
    with pytest.raises(ValidationError):
        Point(float("nan"), 0.0)
    with pytest.raises(ValidationError):
        Point(0.0, float("inf"))
    with pytest.raises(ValidationError):
        Delta(float("-inf"), 0.0)


def test_disc_contains_boundary_inclusive():
    assert disc_contains(Point(0, 0), 5.0, Point(3, 4)) is True


def test_disc_contains_outside():
    assert disc_contains(Point(0, 0), 5.0, Point(4, 4)) is False


def test_disc_contains_degenerate():
    assert disc_contains(Point(0, 0), 0.0, Point(0, 0)) is True


def test_disc_negative_radius_rejected():
    with pytest.raises(ValidationError):
        disc_contains(Point(0, 0), -1.0, Point(0, 0))


@given(cx=finite, cy=finite, r=st.floats(min_value=0, max_value=1e6), px=finite, py=finite)
def test_disc_matches_degenerate_segment(cx, cy, r, px, py):
    c, p = Point(cx, cy), Point(px, py)
    assert disc_contains(c, r, p) == (segment_distance(p, c, c) <= r)


UNIT_SQUARE = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]


def test_polygon_contains_interior():
    assert polygon_contains(UNIT_SQUARE, Point(0.5, 0.5)) is True


def test_polygon_contains_exterior():
    assert polygon_contains(UNIT_SQUARE, Point(1.5, 0.5)) is False


def test_polygon_contains_boundary_inclusive():
    assert polygon_contains(UNIT_SQUARE, Point(1.0, 0.5)) is True


def test_polygon_too_few_vertices():
    with pytest.raises(ValidationError):
        polygon_contains([Point(0, 0), Point(1, 0)], Point(0, 0))


def _convex_polygon(rng, cx, cy, r, n):
    angles = sorted(rng.uniform(0, math.tau) for _ in range(n))
    return [Point(cx + r * math.cos(a), cy + r * math.sin(a)) for a in angles]


def test_polygon_agrees_with_winding_oracle_on_grid():
    # 200x200 sample grid over each polygon's neighborhood; the two rules may
    # only disagree within 1e-9 of an edge, and on >= 99.9% of non-boundary
    # points they must agree.
    rng = random.Random(20240817)
    polygons = []
    for _ in range(4):
        polygons.append(_convex_polygon(rng, rng.uniform(-5, 5), rng.uniform(-5, 5),
                                        rng.uniform(2, 8), rng.randint(3, 8)))
    for _ in range(4):
        polygons.append(star_polygon(rng, rng.uniform(-5, 5), rng.uniform(-5, 5),
                                     1.0, 9.0, 5, 9))
    for poly in polygons:
        xs = [v.x for v in poly]
        ys = [v.y for v in poly]
        lo_x, hi_x = min(xs) - 1.0, max(xs) + 1.0
        lo_y, hi_y = min(ys) - 1.0, max(ys) + 1.0
        total = 0
        agreed = 0
        for i in range(200):
            px = lo_x + (hi_x - lo_x) * i / 199.0
            for j in range(200):
                py = lo_y + (hi_y - lo_y) * j / 199.0
                if polygon_edge_distance(xs, ys, px, py) <= 1e-9:
                    continue  # boundary sample: excluded
                total += 1
                if polygon_contains(poly, Point(px, py)) == winding_contains(xs, ys, px, py):
                    agreed += 1
        assert agreed / total >= 0.999, f"agreement {agreed}/{total}"
        assert total > 35000  # the grid is genuinely sampled


@given(data=st.data())
def test_point_delta_arithmetic_roundtrip(data):
    px, py, dx, dy = (data.draw(dyadic) for _ in range(4))
    p = Point(px, py)
    d = Delta(dx, dy)
    assert (p + d) - d == p
    assert (p + d) - p == d
