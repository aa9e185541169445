"""HTTP bridge embedding the engine for the browser demo.

The browser holds no geometry: pointer events arrive as script lines,
every repaint re-fetches the engine-rendered SVG, and scenes travel in
their canonical text form.  The reply to each event carries the canonical
log line plus the cursor the UI should show.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from grabkit import (
    GroupProxy,
    Hint,
    SceneParseError,
    ScriptParseError,
    apply_event,
    load_scene,
    mover_to_scene,
    object_payload,
    parse_script,
    render_svg,
    sample_scene,
    save_scene,
    scene_to_mover,
)
from grabkit.contour import NodeHit

FRONTEND_DIR = Path(__file__).resolve().parent.parent


class Session:
    """One live engine instance plus the server-side event log."""

    def __init__(self):
        self.mover = scene_to_mover(sample_scene())
        self.log: list[str] = []

    def reset(self, scene_text: str) -> None:
        self.mover = scene_to_mover(load_scene(scene_text))
        self.log = []

    def scene_text(self) -> str:
        return save_scene(mover_to_scene(self.mover))

    def svg(self) -> str:
        return render_svg(mover_to_scene(self.mover))

    def apply_line(self, line: str) -> tuple[str, str]:
        events = parse_script(line)
        if len(events) != 1:
            raise ScriptParseError("expected exactly one event", 1)
        log_line = apply_event(self.mover, events[0])
        self.log.append(log_line)
        return log_line, self.cursor(log_line)

    def cursor(self, last_log_line: str) -> str:
        grab = self.mover.grab
        if grab is not None:
            return "resize" if isinstance(grab.hit, NodeHit) else "move"
        if last_log_line == f"hint {Hint.RECONFIGURE.value}":
            return "resize"
        if last_log_line == f"hint {Hint.MOVE_OBJECT.value}":
            return "move"
        return "default"

    def objects(self) -> dict:
        entries = []
        for oid in self.mover.ids():
            shape = self.mover.get(oid)
            tag, _ = object_payload(shape)
            entry = {"id": oid, "type": tag}
            if isinstance(shape, GroupProxy):
                entry["rect"] = {"x": shape.x, "y": shape.y,
                                 "width": shape.width, "height": shape.height}
                entry["payload"] = shape.payload
            entries.append(entry)
        return {"objects": entries, "contours_visible": self.mover.contours_visible}


class OrderRequest(BaseModel):
    id: int
    op: str  # "raise" | "lower"


def create_app(session: Session | None = None) -> FastAPI:
    app = FastAPI(title="grabkit demo bridge")
    state = session or Session()

    @app.get("/api/scene")
    def get_scene() -> PlainTextResponse:
        return PlainTextResponse(state.scene_text())

    @app.put("/api/scene")
    async def put_scene(request: Request):
        text = (await request.body()).decode("utf-8")
        try:
            state.reset(text)
        except SceneParseError as err:
            return JSONResponse({"error": str(err)}, status_code=400)
        return JSONResponse({"ok": True})

    @app.post("/api/event")
    async def post_event(request: Request):
        line = (await request.body()).decode("utf-8")
        try:
            log_line, cursor = state.apply_line(line)
        except ScriptParseError as err:
            return JSONResponse({"error": str(err)}, status_code=400)
        return JSONResponse({"log": log_line, "cursor": cursor})

    @app.get("/api/svg")
    def get_svg() -> Response:
        return Response(state.svg(), media_type="image/svg+xml")

    @app.get("/api/log")
    def get_log() -> PlainTextResponse:
        text = "\n".join(state.log)
        return PlainTextResponse(text + "\n" if text else "")

    @app.get("/api/objects")
    def get_objects() -> JSONResponse:
        return JSONResponse(state.objects())

    @app.post("/api/order")
    def post_order(req: OrderRequest) -> JSONResponse:
        if req.op == "raise":
            ok = state.mover.raise_object(req.id)
        elif req.op == "lower":
            ok = state.mover.lower_object(req.id)
        else:
            return JSONResponse({"error": f"unknown op {req.op!r}"}, status_code=400)
        return JSONResponse({"ok": ok})

    app.mount("/", StaticFiles(directory=FRONTEND_DIR, html=True), name="static")
    return app


def main() -> None:  # pragma: no cover - manual entry point
    import uvicorn

    uvicorn.run(create_app(), host="127.0.0.1", port=8000)


if __name__ == "__main__":  # pragma: no cover
    main()
