"""A ready-made scene with one object of every family, used by the demo UI
and handy for trying the CLI."""

from __future__ import annotations

from .contour import Rect
from .geometry import Point
from .scene_io import Scene, SceneObject
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

__all__ = ["sample_scene"]


def sample_scene() -> Scene:
    plot_a = RectPlot(Rect(Point(60.0, 60.0), Point(330.0, 250.0)))
    plot_b = RectPlot(Rect(Point(240.0, 180.0), Point(470.0, 360.0)))
    scale = ScaleStrip(90.0, 320.0, 300.0)
    towers = [
        Tower(0.5 + i, 0.5 + j, 1.0 + ((3 * i + 5 * j) % 7))
        for i in range(4)
        for j in range(4)
    ]
    sky = Skyscrapers(Point(660.0, 420.0), theta=0.6, phi=0.35, scale=26.0,
                      axis_len=6.0, towers=towers)
    balls = BallGraph(
        balls=[Ball(560.0, 120.0, 14.0), Ball(660.0, 80.0, 10.0),
               Ball(730.0, 150.0, 12.0), Ball(640.0, 190.0, 9.0)],
        links=[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
    )
    tile = Tile([Point(120.0, 420.0), Point(200.0, 400.0), Point(230.0, 470.0),
                 Point(170.0, 520.0), Point(100.0, 490.0)])
    panel = GroupProxy(780.0, 60.0, 150.0, 180.0, payload="object-panel")
    objects = [plot_a, plot_b, scale, sky, balls, tile, panel]
    return Scene(
        objects=[SceneObject(i, obj) for i, obj in enumerate(objects)],
        contours_visible=False,
        next_id=len(objects),
    )
