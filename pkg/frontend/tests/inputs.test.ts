import { describe, expect, it } from "vitest";

import { ACK_TIMEOUT_MS, ConsoleConnection, SocketLike } from "../src/connection.js";
import { GestureInjector } from "../src/gestures.js";
import { ConsoleState } from "../src/state.js";
import { TeleopInput, TELEOP_MIN_RATE_HZ } from "../src/teleop.js";

class StubSocket implements SocketLike {
  sent: string[] = [];
  onopen: ((ev?: unknown) => void) | null = null;
  onmessage: ((ev: { data: unknown }) => void) | null = null;
  onclose: ((ev?: unknown) => void) | null = null;
  onerror: ((ev?: unknown) => void) | null = null;
  send(data: string): void {
    this.sent.push(data);
  }
  close(): void {
    this.onclose?.();
  }
}

function makeConnection(nowRef: { ms: number }) {
  const state = new ConsoleState();
  const socket = new StubSocket();
  const conn = new ConsoleConnection("ws://test", state, () => socket, () => nowRef.ms);
  conn.connect();
  socket.onopen?.();
  return { state, socket, conn };
}

function serviceEvent(type: string, t: number, extra: Record<string, unknown> = {}) {
  return JSON.stringify({ schema: "event/v1", type, t, ...extra });
}

describe("acknowledgement tracking", () => {
  it("resolves a mode request on mode_ack", () => {
    const now = { ms: 0 };
    const { socket, conn, state } = makeConnection(now);
    conn.send({ type: "mode", t: 0, mode: "teleop" });
    expect(conn.pendingCount).toBe(1);
    socket.onmessage?.({ data: serviceEvent("mode_ack", 0.1, { mode: "teleop" }) });
    expect(conn.pendingCount).toBe(0);
    expect(state.mode).toBe("teleop");
  });

  it("turns silence into an explicit local error", () => {
    const now = { ms: 0 };
    const { conn, state } = makeConnection(now);
    conn.send({ type: "gesture", t: 0, label: "grab" });
    now.ms += ACK_TIMEOUT_MS + 1;
    conn.checkAckTimeouts();
    expect(conn.pendingCount).toBe(0);
    expect(state.errors.some((e) => e.includes("gesture grab"))).toBe(true);
  });

  it("sending while disconnected is an explicit error, not a silent drop", () => {
    const state = new ConsoleState();
    const conn = new ConsoleConnection("ws://test", state, () => new StubSocket(),
                                       () => 0);
    const sent = conn.send({ type: "episode_break", t: 0 });
    expect(sent).toBe(false);
    expect(state.errors.length).toBe(1);
  });

  it("schema mismatch trips the incompatibility screen", () => {
    const now = { ms: 0 };
    const { socket, state } = makeConnection(now);
    socket.onmessage?.({ data: JSON.stringify({ schema: "event/v2", type: "probs", t: 0 }) });
    expect(state.schemaOk).toBe(false);
    expect(state.schemaError).toContain("event/v2");
  });
});

describe("teleop input", () => {
  it("is ignored with a banner until the mode is acknowledged", () => {
    const now = { ms: 0 };
    const { socket, conn } = makeConnection(now);
    const teleop = new TeleopInput(conn, () => now.ms / 1000);
    const rejections: string[] = [];
    teleop.onRejected = (reason) => rejections.push(reason);
    expect(teleop.pointerMove(0.3, 0.0, 0.2)).toBeNull();
    expect(rejections.length).toBe(1);
    expect(socket.sent.length).toBe(0);
  });

  it("streams frames at ten hertz or faster while engaged", () => {
    const now = { ms: 0 };
    const { socket, conn } = makeConnection(now);
    socket.onmessage?.({ data: serviceEvent("mode_ack", 0, { mode: "teleop" }) });
    const teleop = new TeleopInput(conn, () => now.ms / 1000);
    teleop.pointerMove(0.3, 0.0, 0.2);
    // hold still for one second, pumping the keepalive timer
    for (let i = 0; i < 20; i++) {
      now.ms += 50;
      teleop.keepalive();
    }
    const frames = socket.sent
      .map((s) => JSON.parse(s))
      .filter((m) => m.type === "frame");
    expect(frames.length).toBeGreaterThanOrEqual(TELEOP_MIN_RATE_HZ);
    const dts = frames.slice(1).map((f, i) => f.t - frames[i].t);
    for (const dt of dts) {
      expect(dt).toBeLessThanOrEqual(1 / TELEOP_MIN_RATE_HZ + 1e-9);
    }
  });

  it("wheel adjusts the z-rotation carried by frames", () => {
    const now = { ms: 0 };
    const { socket, conn } = makeConnection(now);
    socket.onmessage?.({ data: serviceEvent("mode_ack", 0, { mode: "teleop" }) });
    const teleop = new TeleopInput(conn, () => now.ms / 1000);
    teleop.wheel(0.5);
    teleop.pointerMove(0.3, 0.0, 0.2);
    const frame = JSON.parse(socket.sent[0]);
    expect(frame.frame.z_rotation).toBeCloseTo(0.5);
  });
});

describe("gesture injection", () => {
  it("direct mode sends one gesture event", () => {
    const now = { ms: 1500 };
    const { socket, conn } = makeConnection(now);
    const injector = new GestureInjector(conn, () => now.ms / 1000, "direct");
    injector.inject("thumbsup");
    expect(socket.sent.length).toBe(1);
    const msg = JSON.parse(socket.sent[0]);
    expect(msg).toMatchObject({ type: "gesture", label: "thumbsup", t: 1.5 });
  });

  it("frames mode sends a canned burst with an out-of-view tail", () => {
    const now = { ms: 0 };
    const { socket, conn } = makeConnection(now);
    const injector = new GestureInjector(conn, () => now.ms / 1000, "frames");
    const sent = injector.inject("grab");
    expect(sent.length).toBeGreaterThan(20);
    const parsed = socket.sent.map((s) => JSON.parse(s));
    expect(parsed.every((m) => m.type === "frame")).toBe(true);
    const ts = parsed.map((m) => m.t);
    for (let i = 1; i < ts.length; i++) {
      expect(ts[i]).toBeGreaterThan(ts[i - 1]);
    }
    expect(parsed[parsed.length - 1].frame.visible).toBe(false);
    expect(parsed[0].frame.visible).toBe(true);
  });

  it("metric pinches ride on direct events even in frames mode", () => {
    const now = { ms: 0 };
    const { socket, conn } = makeConnection(now);
    const injector = new GestureInjector(conn, () => now.ms / 1000, "frames");
    injector.inject("pinch", { metric: 0.05 });
    const msg = JSON.parse(socket.sent[0]);
    expect(msg).toMatchObject({ type: "gesture", label: "pinch", metric: 0.05 });
  });
});
