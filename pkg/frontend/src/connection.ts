// WebSocket client with acknowledgement tracking: every user action either
// produces a matching service event or surfaces as a local error.

import { InboundMessage, parseEvent, serializeMessage, ServiceEvent } from "./protocol.js";
import { ConsoleState } from "./state.js";

export interface SocketLike {
  send(data: string): void;
  close(): void;
  onopen: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onerror: ((ev?: unknown) => void) | null;
}

export type SocketFactory = (url: string) => SocketLike;

interface PendingAck {
  kind: string;
  sentAt: number; // ms on the local clock
  note: string;
}

//: which service events acknowledge which inbound message kinds
const ACK_RULES: Record<string, string[]> = {
  mode: ["mode_ack"],
  gesture: ["episode_close", "error", "clarification"],
  episode_break: ["episode_close", "sentence", "error"],
  ray: ["deictic", "error"],
  grip: ["step", "error"],
  frame: ["probs", "teleop", "error"],
};

export const ACK_TIMEOUT_MS = 2000;

export class ConsoleConnection {
  readonly state: ConsoleState;
  private socket: SocketLike | null = null;
  private pending: PendingAck[] = [];
  private url: string;
  private factory: SocketFactory;
  private now: () => number;
  onEvent: ((event: ServiceEvent) => void) | null = null;

  constructor(url: string, state: ConsoleState, factory?: SocketFactory,
              now?: () => number) {
    this.url = url;
    this.state = state;
    this.factory = factory ?? ((u) => new WebSocket(u) as unknown as SocketLike);
    this.now = now ?? (() => Date.now());
  }

  connect(): void {
    const socket = this.factory(this.url);
    this.socket = socket;
    socket.onopen = () => {
      this.state.connected = true;
    };
    socket.onmessage = (ev) => {
      this.receive(String(ev.data));
    };
    socket.onclose = () => {
      this.state.connected = false;
    };
    socket.onerror = () => {
      this.state.pushError("connection error");
    };
  }

  close(): void {
    this.socket?.close();
    this.socket = null;
    this.state.connected = false;
  }

  receive(raw: string): void {
    const parsed = parseEvent(raw);
    if (!parsed.ok) {
      if (parsed.schemaMismatch) {
        this.state.markSchemaMismatch(parsed.error);
      } else {
        this.state.pushError(parsed.error);
      }
      return;
    }
    this.resolveAcks(parsed.event);
    this.state.apply(parsed.event);
    this.onEvent?.(parsed.event);
  }

  send(message: InboundMessage): boolean {
    if (this.socket === null || !this.state.connected) {
      this.state.pushError(`not connected: ${message.type} queued nowhere`);
      return false;
    }
    this.socket.send(serializeMessage(message));
    this.pending.push({
      kind: message.type,
      sentAt: this.now(),
      note: message.type === "gesture" ? `gesture ${(message as { label: string }).label}`
        : message.type,
    });
    return true;
  }

  private resolveAcks(event: ServiceEvent): void {
    this.pending = this.pending.filter((p) => {
      const acks = ACK_RULES[p.kind] ?? [];
      return !acks.includes(event.type);
    });
  }

  /** Call periodically: unacknowledged actions become explicit local errors. */
  checkAckTimeouts(): void {
    const now = this.now();
    const expired = this.pending.filter((p) => now - p.sentAt > ACK_TIMEOUT_MS);
    if (expired.length === 0) return;
    this.pending = this.pending.filter((p) => now - p.sentAt <= ACK_TIMEOUT_MS);
    for (const p of expired) {
      this.state.pushError(`no service response to ${p.note}`);
    }
  }

  get pendingCount(): number {
    return this.pending.length;
  }
}
