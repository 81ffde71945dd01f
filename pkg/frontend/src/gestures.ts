// Gesture injection: buttons send either direct gesture events or a canned
// hand-frame burst from the synthetic generator, per configuration. Pointer
// drags became rays in sceneView; the release sends the point gesture whose
// target the service resolves from its own ray votes.

import { CANNED_BURSTS, FrameRecord } from "./cannedBursts.js";
import { ConsoleConnection } from "./connection.js";
import { InboundMessage } from "./protocol.js";

export type InjectionMode = "direct" | "frames";

export const ACTION_GESTURES = [
  "grab", "pinch", "two", "three", "four", "five", "thumbsup",
  "swipe_up", "swipe_down", "swipe_left", "swipe_right",
] as const;

export class GestureInjector {
  mode: InjectionMode;
  private conn: ConsoleConnection;
  private clock: () => number; // session seconds

  constructor(conn: ConsoleConnection, clock: () => number,
              mode: InjectionMode = "direct") {
    this.conn = conn;
    this.clock = clock;
    this.mode = mode;
  }

  /** One action-gesture click; returns the messages sent. */
  inject(label: string, opts: { metric?: number } = {}): InboundMessage[] {
    const t = this.clock();
    if (this.mode === "frames" && label in CANNED_BURSTS && opts.metric === undefined) {
      return this.sendBurst(label, t);
    }
    const message: InboundMessage = { type: "gesture", t, label };
    if (opts.metric !== undefined) {
      (message as { metric?: number }).metric = opts.metric;
    }
    this.conn.send(message);
    return [message];
  }

  pointAt(target: string | null, tablePoint?: number[]): InboundMessage {
    const message: InboundMessage = { type: "gesture", t: this.clock(), label: "point" };
    if (target !== null) {
      (message as { target?: string }).target = target;
    } else if (tablePoint !== undefined) {
      (message as { table_point?: number[] }).table_point = tablePoint;
    }
    this.conn.send(message);
    return message;
  }

  /** Point gesture with no explicit target: the service uses its ray votes. */
  pointFromDrag(): InboundMessage {
    const message: InboundMessage = { type: "gesture", t: this.clock(), label: "point" };
    this.conn.send(message);
    return message;
  }

  completionBreak(): InboundMessage {
    const message: InboundMessage = { type: "episode_break", t: this.clock() };
    this.conn.send(message);
    return message;
  }

  private sendBurst(label: string, t0: number): InboundMessage[] {
    const burst = CANNED_BURSTS[label];
    const sent: InboundMessage[] = [];
    let lastT = t0;
    for (const record of burst) {
      const frame: FrameRecord = { ...record, t: t0 + record.t };
      lastT = frame.t;
      const message: InboundMessage = { type: "frame", t: frame.t,
                                        frame: frame as unknown as Record<string, unknown> };
      this.conn.send(message);
      sent.push(message);
    }
    // out-of-view tail so the episode closes promptly
    for (let i = 1; i <= 8; i++) {
      const t = lastT + i * (1 / 30);
      const message: InboundMessage = { type: "frame", t,
                                        frame: { t, visible: false } };
      this.conn.send(message);
      sent.push(message);
    }
    return sent;
  }
}
