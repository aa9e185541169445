// Browser demo: a live scene where every object can be grabbed, moved,
// resized, added, deleted and reordered.  The engine owns all geometry;
// this file only forwards pointer events, repaints from engine-rendered
// SVG, and mirrors engine state into the panel.

import { EngineClient } from "./client.js";
import { DEFAULT_PAYLOADS, OBJECT_TYPES } from "./defaults.js";
import {
  addLine,
  cursorToCss,
  pointerLine,
  removeLine,
  TOGGLE_LINE,
  type ObjectEntry,
} from "./protocol.js";
import { SessionRecorder } from "./recorder.js";

const PANEL_PAYLOAD = "object-panel";
const PANEL_INSET = 10; // keeps the proxy's edge strips reachable for drags

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function download(name: string, text: string, type = "text/plain"): void {
  const url = URL.createObjectURL(new Blob([text], { type }));
  const a = document.createElement("a");
  a.href = url;
  a.download = name;
  a.click();
  URL.revokeObjectURL(url);
}

class App {
  private client = new EngineClient();
  private recorder = new SessionRecorder();
  private chain: Promise<void> = Promise.resolve();
  private dragging = false;
  private selected: number | null = null;
  private viewUrl: string | null = null;

  private stage = el<HTMLDivElement>("stage");
  private view = el<HTMLImageElement>("view");
  private panel = el<HTMLDivElement>("panel");
  private list = el<HTMLSelectElement>("object-list");
  private status = el<HTMLDivElement>("status");
  private typePicker = el<HTMLSelectElement>("add-type");

  async start(): Promise<void> {
    for (const type of OBJECT_TYPES) {
      const option = document.createElement("option");
      option.value = type;
      option.textContent = type;
      this.typePicker.appendChild(option);
    }
    this.bindPointer();
    this.bindControls();
    this.recorder.start(await this.client.getScene());
    await this.repaint();
  }

  /** Serialize engine calls so pointer-event order is always preserved. */
  private enqueue(work: () => Promise<void>): void {
    this.chain = this.chain.then(work).catch((err) => {
      this.status.textContent = String(err);
    });
  }

  private sendLine(line: string): void {
    this.enqueue(async () => {
      this.recorder.record(line);
      const reply = await this.client.sendEvent(line);
      this.stage.style.cursor = cursorToCss(reply.cursor);
      this.status.textContent = reply.log;
      await this.repaint();
    });
  }

  private bindPointer(): void {
    const coords = (ev: PointerEvent): [number, number] => {
      const box = this.view.getBoundingClientRect();
      return [ev.clientX - box.left, ev.clientY - box.top];
    };
    this.view.addEventListener("pointerdown", (ev) => {
      ev.preventDefault();
      this.view.setPointerCapture(ev.pointerId);
      this.dragging = true;
      const [x, y] = coords(ev);
      this.sendLine(pointerLine("down", x, y));
    });
    this.view.addEventListener("pointermove", (ev) => {
      const [x, y] = coords(ev);
      this.sendLine(pointerLine("move", x, y));
    });
    this.view.addEventListener("pointerup", (ev) => {
      if (this.dragging) {
        this.view.releasePointerCapture(ev.pointerId);
        this.dragging = false;
      }
      this.sendLine(pointerLine("up"));
    });
  }

  private bindControls(): void {
    el<HTMLButtonElement>("toggle-contours").addEventListener("click", () => {
      this.sendLine(TOGGLE_LINE);
    });
    el<HTMLButtonElement>("add-object").addEventListener("click", () => {
      const type = this.typePicker.value;
      this.sendLine(addLine(type, DEFAULT_PAYLOADS[type]));
    });
    el<HTMLButtonElement>("delete-object").addEventListener("click", () => {
      if (this.selected !== null) {
        this.sendLine(removeLine(this.selected));
        this.selected = null;
      }
    });
    el<HTMLButtonElement>("raise-object").addEventListener("click", () => {
      this.reorder("raise");
    });
    el<HTMLButtonElement>("lower-object").addEventListener("click", () => {
      this.reorder("lower");
    });
    this.list.addEventListener("change", () => {
      this.selected = this.list.value === "" ? null : Number(this.list.value);
    });
    el<HTMLButtonElement>("save-scene").addEventListener("click", () => {
      this.enqueue(async () => {
        download("scene.json", await this.client.getScene(), "application/json");
      });
    });
    el<HTMLButtonElement>("export-session").addEventListener("click", () => {
      download("session_start.json", this.recorder.scene(), "application/json");
      download("session.txt", this.recorder.script());
    });
    const fileInput = el<HTMLInputElement>("load-scene");
    fileInput.addEventListener("change", () => {
      const file = fileInput.files?.[0];
      if (!file) {
        return;
      }
      this.enqueue(async () => {
        const text = await file.text();
        await this.client.putScene(text);
        this.recorder.start(text);
        this.selected = null;
        await this.repaint();
      });
    });
  }

  private reorder(op: "raise" | "lower"): void {
    if (this.selected === null) {
      return;
    }
    const id = this.selected;
    this.enqueue(async () => {
      await this.client.reorder(id, op);
      // Z-reorder has no script form: rebase the recording on the new scene.
      this.recorder.start(await this.client.getScene());
      await this.repaint();
    });
  }

  private async repaint(): Promise<void> {
    const svg = await this.client.getSvg();
    const url = URL.createObjectURL(new Blob([svg], { type: "image/svg+xml" }));
    await new Promise<void>((resolve, reject) => {
      this.view.onload = () => resolve();
      this.view.onerror = () => reject(new Error("svg render failed"));
      this.view.src = url;
    });
    if (this.viewUrl) {
      URL.revokeObjectURL(this.viewUrl);
    }
    this.viewUrl = url;
    await this.refreshPanel();
  }

  private async refreshPanel(): Promise<void> {
    const reply = await this.client.getObjects();
    const topDown = [...reply.objects].reverse();
    this.list.innerHTML = "";
    for (const obj of topDown) {
      const option = document.createElement("option");
      option.value = String(obj.id);
      option.textContent = `#${obj.id} ${obj.type}`;
      option.selected = obj.id === this.selected;
      this.list.appendChild(option);
    }
    el<HTMLButtonElement>("toggle-contours").textContent =
      reply.contours_visible ? "contours: on" : "contours: off";
    this.placePanel(reply.objects);
  }

  /** The panel rides its GroupProxy: the engine moves it, the DOM follows. */
  private placePanel(objects: ObjectEntry[]): void {
    const proxy = objects.find(
      (o) => o.type === "group_proxy" && o.payload === PANEL_PAYLOAD,
    );
    if (!proxy || !proxy.rect) {
      return;
    }
    const { x, y, width, height } = proxy.rect;
    this.panel.style.left = `${x + PANEL_INSET}px`;
    this.panel.style.top = `${y + PANEL_INSET}px`;
    this.panel.style.width = `${width - 2 * PANEL_INSET}px`;
    this.panel.style.height = `${height - 2 * PANEL_INSET}px`;
  }
}

new App().start().catch((err) => {
  document.body.textContent = `failed to start: ${err}`;
});
