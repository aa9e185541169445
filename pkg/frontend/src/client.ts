// Thin fetch wrapper around the engine bridge endpoints.

import type { EventReply, ObjectsReply } from "./protocol.js";

export class EngineClient {
  constructor(private base = "") {}

  private async text(path: string): Promise<string> {
    const res = await fetch(this.base + path);
    if (!res.ok) {
      throw new Error(`${path}: HTTP ${res.status}`);
    }
    return res.text();
  }

  getScene(): Promise<string> {
    return this.text("/api/scene");
  }

  getSvg(): Promise<string> {
    return this.text("/api/svg");
  }

  getLog(): Promise<string> {
    return this.text("/api/log");
  }

  async putScene(sceneText: string): Promise<void> {
    const res = await fetch(this.base + "/api/scene", { method: "PUT", body: sceneText });
    if (!res.ok) {
      throw new Error(`scene rejected: ${await res.text()}`);
    }
  }

  async sendEvent(line: string): Promise<EventReply> {
    const res = await fetch(this.base + "/api/event", { method: "POST", body: line });
    if (!res.ok) {
      throw new Error(`event rejected: ${await res.text()}`);
    }
    return res.json();
  }

  async getObjects(): Promise<ObjectsReply> {
    const res = await fetch(this.base + "/api/objects");
    return res.json();
  }

  async reorder(id: number, op: "raise" | "lower"): Promise<boolean> {
    const res = await fetch(this.base + "/api/order", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ id, op }),
    });
    if (!res.ok) {
      return false;
    }
    return (await res.json()).ok === true;
  }
}
