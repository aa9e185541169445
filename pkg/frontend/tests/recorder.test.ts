import { describe, expect, it } from "vitest";

import { SessionRecorder } from "../src/recorder.js";

describe("SessionRecorder", () => {
  it("captures the starting scene and the event lines in order", () => {
    const rec = new SessionRecorder();
    rec.start('{"version": 1}\n');
    rec.record("down 5 5");
    rec.record("move 9 8");
    rec.record("up");
    expect(rec.scene()).toBe('{"version": 1}\n');
    expect(rec.script()).toBe("down 5 5\nmove 9 8\nup\n");
    expect(rec.count).toBe(3);
  });

  it("is empty before anything is recorded", () => {
    const rec = new SessionRecorder();
    expect(rec.script()).toBe("");
    expect(rec.count).toBe(0);
  });

  it("rebasing on a new scene drops the previous lines", () => {
    const rec = new SessionRecorder();
    rec.start("scene-a");
    rec.record("down 1 1");
    rec.start("scene-b");
    expect(rec.scene()).toBe("scene-b");
    expect(rec.script()).toBe("");
    rec.record("up");
    expect(rec.script()).toBe("up\n");
  });
});
