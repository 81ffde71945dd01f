import { describe, expect, it } from "vitest";

import { parseEvent } from "../src/protocol.js";
import { ConsoleState } from "../src/state.js";
import { formatIntent, formatSentence, renderSentencePanel } from "../src/sentencePanel.js";
import { renderPlanView } from "../src/planView.js";

function ev(type: string, t: number, extra: Record<string, unknown> = {}) {
  return { schema: "event/v1", type, t, ...extra };
}

describe("protocol", () => {
  it("accepts well-formed events", () => {
    const parsed = parseEvent(JSON.stringify(ev("probs", 1.0, { static: {}, dynamic: {} })));
    expect(parsed.ok).toBe(true);
  });

  it("flags schema mismatches distinctly", () => {
    const parsed = parseEvent(JSON.stringify({ schema: "event/v999", type: "probs", t: 0 }));
    expect(parsed.ok).toBe(false);
    if (!parsed.ok) expect(parsed.schemaMismatch).toBe(true);
  });

  it("rejects non-JSON without marking incompatibility", () => {
    const parsed = parseEvent("{nope");
    expect(parsed.ok).toBe(false);
    if (!parsed.ok) expect(parsed.schemaMismatch).toBe(false);
  });
});

describe("console state reducer", () => {
  it("mode changes only on service acknowledgement", () => {
    const state = new ConsoleState();
    expect(state.mode).toBe("gesture");
    state.apply(ev("probs", 0.1, { static: {}, dynamic: {} }) as never);
    expect(state.mode).toBe("gesture");
    state.apply(ev("mode_ack", 0.2, { mode: "teleop" }) as never);
    expect(state.mode).toBe("teleop");
  });

  it("deictic highlight mirrors the service argmin only", () => {
    const state = new ConsoleState();
    state.apply(ev("deictic", 0.3, { target: "can", probabilities: { can: 0.9 } }) as never);
    expect(state.deicticTarget).toBe("can");
    state.apply(ev("deictic", 0.4, { target: null, probabilities: {} }) as never);
    expect(state.deicticTarget).toBeNull();
  });

  it("hello restores the world snapshot on reconnect", () => {
    const state = new ConsoleState();
    const world = { schema: "scene/v1", table_height: 0, workspace: [0, 1, -1, 1],
                    gripper: { pose: [0, 0, 0, 0], holding: null }, objects: [] };
    state.apply(ev("hello", 5.0, { scenario: "swap", mode: "gesture", world }) as never);
    expect(state.connected).toBe(true);
    expect(state.world).not.toBeNull();
    expect(state.scenario).toBe("swap");
  });

  it("accumulates overflow counters", () => {
    const state = new ConsoleState();
    state.apply(ev("overflow", 1.0, { dropped: 3 }) as never);
    state.apply(ev("overflow", 2.0, { dropped: 4 }) as never);
    expect(state.overflowDropped).toBe(7);
  });

  it("caps the probability history", () => {
    const state = new ConsoleState();
    for (let i = 0; i < 700; i++) {
      state.apply(ev("probs", i * 0.1, { static: { grab: 0.1 }, dynamic: {} }) as never);
    }
    expect(state.probs.length).toBeLessThanOrEqual(600);
  });

  it("tracks plan lifecycle", () => {
    const state = new ConsoleState();
    state.apply(ev("plan", 1.0, { action: "pick", outline: "tree" }) as never);
    state.apply(ev("step", 1.1, { primitive: "approach(can)", ok: true }) as never);
    state.apply(ev("plan_done", 1.5, { action: "pick", status: "success" }) as never);
    expect(state.planStatus).toBe("success");
    const text = renderPlanView(state);
    expect(text).toContain("approach(can)");
    expect(text).toContain("success");
  });
});

describe("sentence panel", () => {
  it("formats the golden intent exactly", () => {
    const state = new ConsoleState();
    state.apply(ev("intent", 4.0, {
      action: "move", target_object: "mug", ap: ["bowl", 50.0],
    }) as never);
    expect(formatIntent(state.intent)).toBe("(move, mug, [bowl, 50%])");
  });

  it("formats angles for pour and rotate", () => {
    const state = new ConsoleState();
    state.apply(ev("intent", 4.0, {
      action: "pour", target_object: "can", ap: ["bowl", 60.0],
    }) as never);
    expect(formatIntent(state.intent)).toBe("(pour, can, [bowl, 60°])");
  });

  it("shows the sentence in progress", () => {
    const state = new ConsoleState();
    state.apply(ev("sentence", 2.0, {
      state: "in_progress", action_label: "thumbsup", refs: ["mug"], metrics: [],
    }) as never);
    expect(formatSentence(state.sentence)).toBe("(thumbsup, [mug], []) …");
    expect(renderSentencePanel(state)).toContain("(no intent)");
  });

  it("mentions clarification prompts", () => {
    const state = new ConsoleState();
    state.apply(ev("clarification", 2.0, { candidates: [["open", 0.5]] }) as never);
    expect(renderSentencePanel(state)).toContain("demonstrate the action again");
  });
});
