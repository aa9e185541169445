// Wire types and formatting for the engine bridge.  Pointer and panel
// actions travel as engine script lines; replies carry the canonical log
// line plus the cursor the UI should show.  No geometry lives here.

export type Cursor = "default" | "move" | "resize";

export interface EventReply {
  log: string;
  cursor: Cursor;
}

export interface ObjectEntry {
  id: number;
  type: string;
  rect?: { x: number; y: number; width: number; height: number };
  payload?: string;
}

export interface ObjectsReply {
  objects: ObjectEntry[];
  contours_visible: boolean;
}

const CURSOR_CSS: Record<Cursor, string> = {
  default: "default",
  move: "move",
  resize: "nwse-resize",
};

export function cursorToCss(cursor: Cursor): string {
  return CURSOR_CSS[cursor] ?? "default";
}

function coord(value: number): string {
  if (!Number.isFinite(value)) {
    throw new Error(`non-finite coordinate: ${value}`);
  }
  // Shortest round-trip decimal; the engine parses it back to the same double.
  return String(value);
}

export function pointerLine(kind: "down" | "move" | "up", x = 0, y = 0): string {
  if (kind === "up") {
    return "up";
  }
  return `${kind} ${coord(x)} ${coord(y)}`;
}

export function addLine(type: string, params: unknown): string {
  return `add ${JSON.stringify({ type, params })}`;
}

export function removeLine(id: number): string {
  if (!Number.isInteger(id) || id < 0) {
    throw new Error(`bad object id: ${id}`);
  }
  return `remove ${id}`;
}

export const TOGGLE_LINE = "toggle_contours";
