// Session recorder: keeps the starting scene plus every event line sent to
// the engine, so a live session exports as a replayable (scene, script) pair.

export class SessionRecorder {
  private startScene = "";
  private lines: string[] = [];

  /** Begin (or rebase) a session at the given scene; drops recorded lines. */
  start(sceneText: string): void {
    this.startScene = sceneText;
    this.lines = [];
  }

  record(line: string): void {
    this.lines.push(line);
  }

  get count(): number {
    return this.lines.length;
  }

  /** The scene the script must be replayed against. */
  scene(): string {
    return this.startScene;
  }

  /** Script text in the engine's line format (trailing newline when non-empty). */
  script(): string {
    return this.lines.length ? this.lines.join("\n") + "\n" : "";
  }
}
