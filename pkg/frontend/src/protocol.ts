// Message schema shared with the interpreter service. The console speaks this
// schema and nothing else; any other version shows the incompatibility screen.

export const EVENT_SCHEMA = "event/v1";

export interface SceneObject {
  id: string;
  class: string;
  pose: number[]; // x, y, z, yaw
  support: "table" | { on: string } | { in: string } | null;
  ghost?: boolean;
  fill?: { level: number; kind: string | null };
  open_fraction?: number;
}

export interface SceneDoc {
  schema: string;
  table_height: number;
  workspace: number[]; // xmin, xmax, ymin, ymax
  gripper: { pose: number[]; holding: string | null };
  objects: SceneObject[];
}

export interface ServiceEvent {
  schema: string;
  type: string;
  t: number;
  [key: string]: unknown;
}

export interface EpisodeEventRecord {
  label: string;
  channel: string;
  start: number;
  end: number;
  peak: number;
  payload: Record<string, unknown>;
}

export type InboundMessage =
  | { type: "frame"; t: number; frame: Record<string, unknown> }
  | { type: "gesture"; t: number; label: string; duration?: number; target?: string;
      table_point?: number[]; metric?: number }
  | { type: "ray"; t: number; p1: number[]; p2: number[] }
  | { type: "episode_break"; t: number }
  | { type: "grip"; t: number; action: "grasp" | "release" }
  | { type: "mode"; t: number; mode: "gesture" | "teleop" };

export type ParseResult =
  | { ok: true; event: ServiceEvent }
  | { ok: false; error: string; schemaMismatch: boolean };

export function parseEvent(raw: string): ParseResult {
  let data: unknown;
  try {
    data = JSON.parse(raw);
  } catch (err) {
    return { ok: false, error: `not JSON: ${(err as Error).message}`, schemaMismatch: false };
  }
  if (typeof data !== "object" || data === null) {
    return { ok: false, error: "event is not an object", schemaMismatch: false };
  }
  const event = data as ServiceEvent;
  if (event.schema !== EVENT_SCHEMA) {
    return {
      ok: false,
      error: `schema ${String(event.schema)} != ${EVENT_SCHEMA}`,
      schemaMismatch: true,
    };
  }
  if (typeof event.type !== "string" || typeof event.t !== "number") {
    return { ok: false, error: "event missing type/t", schemaMismatch: false };
  }
  return { ok: true, event };
}

export function serializeMessage(message: InboundMessage): string {
  return JSON.stringify(message);
}
