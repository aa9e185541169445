"""Deterministic replay command.

Loads a scene, optionally applies an event script, and writes the final
scene document and/or SVG snapshot.  Diagnostics go to stderr and data
only to files, so shells can compose the outputs.

Exit codes: 0 success, 2 bad arguments, 3 scene/script parse error,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import SceneParseError, ScriptParseError
from .scene_io import (
    apply_event,
    load_scene,
    mover_to_scene,
    parse_script,
    render_svg,
    save_scene,
    scene_to_mover,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grabkit-replay",
        description="Replay a pointer-event script against a scene, deterministically.",
    )
    parser.add_argument("--scene", required=True, metavar="PATH",
                        help="scene document to load")
    parser.add_argument("--script", metavar="PATH",
                        help="event script to apply")
    parser.add_argument("--out", metavar="PATH",
                        help="write the final scene document here")
    parser.add_argument("--svg", metavar="PATH",
                        help="write the final SVG snapshot here")
    parser.add_argument("--snapshot-every", type=int, default=0, metavar="N",
                        help="with N > 0, write frame_NNNNNN.svg next to --svg "
                             "after every N events (default: final only)")
    return parser


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.snapshot_every < 0:
        parser.error("--snapshot-every must be >= 0")
    if args.snapshot_every > 0 and not args.svg:
        parser.error("--snapshot-every requires --svg (frames go to its directory)")

    try:
        scene_text = _read(args.scene)
    except OSError as err:
        print(f"error: cannot read scene {args.scene}: {err}", file=sys.stderr)
        return EXIT_IO
    try:
        scene = load_scene(scene_text)
    except SceneParseError as err:
        print(f"error: {args.scene}: {err}", file=sys.stderr)
        return EXIT_PARSE

    events = []
    if args.script:
        try:
            script_text = _read(args.script)
        except OSError as err:
            print(f"error: cannot read script {args.script}: {err}", file=sys.stderr)
            return EXIT_IO
        try:
            events = parse_script(script_text)
        except ScriptParseError as err:
            print(f"error: {args.script}: {err}", file=sys.stderr)
            return EXIT_PARSE

    mover = scene_to_mover(scene)
    frame_dir = Path(args.svg).parent if args.svg else None
    frame = 0
    try:
        for index, event in enumerate(events, start=1):
            apply_event(mover, event)
            if args.snapshot_every and index % args.snapshot_every == 0:
                frame += 1
                _write(frame_dir / f"frame_{frame:06d}.svg",
                       render_svg(mover_to_scene(mover)))
        final = mover_to_scene(mover)
        if args.out:
            _write(Path(args.out), save_scene(final))
        if args.svg:
            _write(Path(args.svg), render_svg(final))
    except OSError as err:
        print(f"error: cannot write output: {err}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
