// Teleoperation input: pointer position maps onto the palm position, the
// wheel onto z-rotation. Frames go out at 10 Hz or faster while engaged, and
// only once the service has acknowledged teleop mode.

import { ConsoleConnection } from "./connection.js";
import { InboundMessage } from "./protocol.js";

export const TELEOP_MIN_RATE_HZ = 10;

const ZERO_BONES: number[][][][] = Array.from({ length: 5 }, () =>
  Array.from({ length: 4 }, () => [[0, 0, 0], [0, 0, 0]]));
const ZERO_TIPS: number[][] = Array.from({ length: 5 }, () => [0, 0, 0]);

export function teleopFrameRecord(t: number, palm: number[], zRotation: number):
    Record<string, unknown> {
  return {
    t,
    visible: true,
    palm_position: palm,
    palm_direction: [1, 0, 0],
    palm_normal: [0, 0, -1],
    z_rotation: zRotation,
    fingers: ZERO_BONES,
    fingertips: ZERO_TIPS,
  };
}

export class TeleopInput {
  private conn: ConsoleConnection;
  private clock: () => number;       // session seconds
  private lastSentAt = -Infinity;    // session seconds
  private palm: number[] | null = null;
  zRotation = 0;
  engaged = false;
  onRejected: ((reason: string) => void) | null = null;

  constructor(conn: ConsoleConnection, clock: () => number) {
    this.conn = conn;
    this.clock = clock;
  }

  /** Pointer motion in world coordinates (the scene view converts). */
  pointerMove(x: number, y: number, z: number): InboundMessage | null {
    if (this.conn.state.mode !== "teleop") {
      this.onRejected?.("teleop input ignored: mode not acknowledged");
      return null;
    }
    this.engaged = true;
    this.palm = [x, y, z];
    const now = this.clock();
    if (now - this.lastSentAt < 1 / (2 * TELEOP_MIN_RATE_HZ) - 1e-9) {
      return null; // throttle bursts; keepalive() maintains the floor rate
    }
    return this.sendFrame(now);
  }

  wheel(deltaRadians: number): void {
    this.zRotation += deltaRadians;
  }

  /** Call on a timer: repeats the last palm target to hold >= 10 Hz. */
  keepalive(): InboundMessage | null {
    if (!this.engaged || this.palm === null || this.conn.state.mode !== "teleop") {
      return null;
    }
    const now = this.clock();
    if (now - this.lastSentAt < 1 / TELEOP_MIN_RATE_HZ - 1e-9) {
      return null;
    }
    return this.sendFrame(now);
  }

  release(): void {
    this.engaged = false;
  }

  grip(action: "grasp" | "release"): InboundMessage | null {
    if (this.conn.state.mode !== "teleop") {
      this.onRejected?.("teleop input ignored: mode not acknowledged");
      return null;
    }
    const message: InboundMessage = { type: "grip", t: this.clock(), action };
    this.conn.send(message);
    return message;
  }

  private sendFrame(now: number): InboundMessage {
    const message: InboundMessage = {
      type: "frame",
      t: now,
      frame: teleopFrameRecord(now, this.palm as number[], this.zRotation),
    };
    this.conn.send(message);
    this.lastSentAt = now;
    return message;
  }
}
