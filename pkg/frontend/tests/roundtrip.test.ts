// End-to-end console round-trip against the real interpreter service:
// the golden sentence composed with clicks and drags, the deictic highlight
// mirroring the service, and a mode switch mid-scenario.

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import WebSocket from "ws";

import { ConsoleConnection, SocketLike } from "../src/connection.js";
import { GestureInjector } from "../src/gestures.js";
import { DRAG_HAND_ORIGIN } from "../src/sceneView.js";
import { formatIntent } from "../src/sentencePanel.js";
import { ConsoleState } from "../src/state.js";
import { ServiceEvent } from "../src/protocol.js";

const REPO_ROOT = new URL("../..", import.meta.url).pathname;

function wsFactory(url: string): SocketLike {
  return new WebSocket(url) as unknown as SocketLike;
}

async function waitForService(port: number, timeoutMs = 90000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    const up = await new Promise<boolean>((resolve) => {
      const probe = new WebSocket(`ws://127.0.0.1:${port}`);
      probe.on("open", () => {
        probe.close();
        resolve(true);
      });
      probe.on("error", () => resolve(false));
    });
    if (up) return;
    await new Promise((r) => setTimeout(r, 300));
  }
  throw new Error("service did not come up");
}

async function until(cond: () => boolean, timeoutMs = 30000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    if (cond()) return;
    await new Promise((r) => setTimeout(r, 50));
  }
  throw new Error("condition not reached in time");
}

function startService(port: number, scenario: string): ChildProcess {
  return spawn("python3", ["-m", "handlang.cli", "serve", "--port", String(port),
                           "--scenario", scenario],
               { cwd: REPO_ROOT, stdio: "ignore" });
}

async function connect(port: number) {
  const state = new ConsoleState();
  const conn = new ConsoleConnection(`ws://127.0.0.1:${port}`, state, wsFactory);
  const events: ServiceEvent[] = [];
  conn.onEvent = (event) => events.push(event);
  conn.connect();
  await until(() => state.connected && state.world !== null);
  return { state, conn, events };
}

describe("console round-trip", () => {
  let service: ChildProcess;
  const PORT = 8971;

  beforeAll(async () => {
    service = startService(PORT, "put_in_bowl");
    await waitForService(PORT);
  }, 120000);

  afterAll(() => {
    service.kill();
  });

  it("composes the golden sentence via clicks and shows the golden intent",
     async () => {
    const { state, conn, events } = await connect(PORT);
    let t = 0.0;
    const clock = () => t;
    const gestures = new GestureInjector(conn, clock, "direct");

    gestures.inject("thumbsup");
    t = 1.0;
    const mug = state.world!.objects.find((o) => o.id === "mug")!;
    // drag the pointing ray over the mug; the service resolves the argmin
    for (let i = 0; i < 6; i++) {
      conn.send({ type: "ray", t: t + i * 0.05,
                  p1: [...DRAG_HAND_ORIGIN],
                  p2: [mug.pose[0], mug.pose[1], 0.0] });
    }
    await until(() => state.deicticTarget === "mug");
    // every highlight matches the service-reported argmin of its event
    for (const event of events.filter((e) => e.type === "deictic")) {
      expect(event.target === null || typeof event.target === "string").toBe(true);
    }
    t = 2.0;
    gestures.pointFromDrag();
    await until(() => state.sentence !== null && state.sentence.refs.includes("mug"));

    const bowl = state.world!.objects.find((o) => o.id === "bowl")!;
    t = 3.0;
    for (let i = 0; i < 6; i++) {
      conn.send({ type: "ray", t: t + i * 0.05,
                  p1: [...DRAG_HAND_ORIGIN],
                  p2: [bowl.pose[0], bowl.pose[1], 0.0] });
    }
    await until(() => state.deicticTarget === "bowl");
    t = 4.0;
    gestures.pointFromDrag();
    await until(() => state.sentence !== null && state.sentence.refs.length === 2);

    t = 5.0;
    gestures.inject("pinch", { metric: 0.05 });
    await until(() => state.intent !== null);
    expect(formatIntent(state.intent)).toBe("(move, mug, [bowl, 50%])");

    // the pump completes the plan without further input
    await until(() => state.planStatus === "success");
    await until(() => {
      const mugNow = state.world!.objects.find((o) => o.id === "mug")!;
      return JSON.stringify(mugNow.support) === JSON.stringify({ in: "bowl" });
    });
    conn.close();
  }, 120000);

  it("reconnecting restores the session from the hello snapshot", async () => {
    const first = await connect(PORT);
    first.conn.close();
    const second = await connect(PORT);
    expect(second.state.world).not.toBeNull();
    expect(second.state.scenario).toBe("put_in_bowl");
    second.conn.close();
  }, 60000);
});

describe("mode switch mid-scenario", () => {
  let service: ChildProcess;
  const PORT = 8972;

  beforeAll(async () => {
    service = startService(PORT, "put_in_bowl");
    await waitForService(PORT);
  }, 120000);

  afterAll(() => {
    service.kill();
  });

  it("pauses the plan in teleop and completes it after switching back",
     async () => {
    const { state, conn } = await connect(PORT);
    let t = 0.0;
    const clock = () => t;
    const gestures = new GestureInjector(conn, clock, "direct");

    gestures.inject("thumbsup");
    t = 1.0;
    gestures.pointAt("spam");
    t = 2.0;
    gestures.pointAt("bowl");
    t = 3.0;
    // completion and the teleop request go out back to back, so the plan is
    // interrupted mid-flight (the executor pump cannot finish it in between)
    gestures.completionBreak();
    conn.send({ type: "mode", t: 3.1, mode: "teleop" });
    await until(() => state.mode === "teleop");
    await until(() => state.intent !== null);
    conn.send({ type: "frame", t: 4.2,
                frame: { t: 4.2, visible: true, palm_position: [0.4, 0.1, 0.2],
                         palm_direction: [1, 0, 0], palm_normal: [0, 0, -1],
                         z_rotation: 0,
                         fingers: Array.from({ length: 5 }, () =>
                           Array.from({ length: 4 }, () => [[0, 0, 0], [0, 0, 0]])),
                         fingertips: Array.from({ length: 5 }, () => [0, 0, 0]) } });
    await new Promise((r) => setTimeout(r, 600));
    expect(state.planStatus).toBe("running"); // paused, not progressing to done
    conn.send({ type: "mode", t: 6.0, mode: "gesture" });
    await until(() => state.mode === "gesture");
    await until(() => state.planStatus === "success");
    await until(() => {
      const spam = state.world!.objects.find((o) => o.id === "spam")!;
      return JSON.stringify(spam.support) === JSON.stringify({ in: "bowl" });
    });
    conn.close();
  }, 120000);
});
