// Console session state: a reducer over service events. All robot-side facts
// (mode, world, deictic target, plan progress) come exclusively from the
// service; the console never derives them locally.

import { EpisodeEventRecord, SceneDoc, ServiceEvent } from "./protocol.js";

export interface ProbSample {
  t: number;
  static: Record<string, number>;
  dynamic: Record<string, number>;
}

export interface ActivationBar {
  label: string;
  channel: string;
  start: number;
  end: number;
}

export interface SentenceView {
  state: "in_progress" | "complete";
  actionLabel: string;
  refs: unknown[];
  metrics: number[];
}

export interface IntentView {
  action: string;
  targetObject: string | null;
  ap: unknown[];
}

export interface StepView {
  t: number;
  primitive: string;
  ok: boolean;
}

const PROB_HISTORY_CAP = 600; // one minute at 10 Hz
const STEP_CAP = 200;

export class ConsoleState {
  connected = false;
  schemaOk = true;
  schemaError: string | null = null;
  mode: "gesture" | "teleop" = "gesture"; // acknowledged mode only
  interpreterMode = "high_level_gesture";
  scenario: string | null = null;
  world: SceneDoc | null = null;
  probs: ProbSample[] = [];
  activations: ActivationBar[] = [];
  episodeOpenT: number | null = null;
  deicticTarget: string | null = null;
  deicticProbs: Record<string, number> = {};
  tablePoint: number[] | null = null;
  sentence: SentenceView | null = null;
  intent: IntentView | null = null;
  clarification: unknown[] | null = null;
  planAction: string | null = null;
  planOutline: string | null = null;
  planStatus: "running" | "success" | "failure" | null = null;
  planReason: string | null = null;
  steps: StepView[] = [];
  overflowDropped = 0;
  errors: string[] = [];
  lastEventT = 0;

  apply(event: ServiceEvent): void {
    this.lastEventT = Math.max(this.lastEventT, event.t);
    switch (event.type) {
      case "hello": {
        this.connected = true;
        this.scenario = (event.scenario as string) ?? this.scenario;
        this.mode = (event.mode as "gesture" | "teleop") ?? this.mode;
        this.interpreterMode = (event.interpreter_mode as string) ?? this.interpreterMode;
        this.world = (event.world as SceneDoc) ?? this.world;
        break;
      }
      case "probs": {
        this.probs.push({
          t: event.t,
          static: event.static as Record<string, number>,
          dynamic: event.dynamic as Record<string, number>,
        });
        if (this.probs.length > PROB_HISTORY_CAP) this.probs.shift();
        break;
      }
      case "deictic": {
        this.deicticTarget = (event.target as string | null) ?? null;
        this.deicticProbs = (event.probabilities as Record<string, number>) ?? {};
        this.tablePoint = (event.table_point as number[] | null) ?? null;
        break;
      }
      case "episode_open": {
        this.episodeOpenT = event.t;
        break;
      }
      case "episode_close": {
        this.episodeOpenT = null;
        const events = (event.events as EpisodeEventRecord[]) ?? [];
        for (const ev of events) {
          this.activations.push({
            label: ev.label, channel: ev.channel, start: ev.start, end: ev.end,
          });
        }
        if (this.activations.length > 100) {
          this.activations.splice(0, this.activations.length - 100);
        }
        break;
      }
      case "sentence": {
        this.sentence = {
          state: event.state as "in_progress" | "complete",
          actionLabel: event.action_label as string,
          refs: (event.refs as unknown[]) ?? [],
          metrics: (event.metrics as number[]) ?? [],
        };
        if (this.sentence.state === "in_progress") this.intent = null;
        break;
      }
      case "intent": {
        this.intent = {
          action: event.action as string,
          targetObject: (event.target_object as string | null) ?? null,
          ap: (event.ap as unknown[]) ?? [],
        };
        this.clarification = null;
        break;
      }
      case "clarification": {
        this.clarification = (event.candidates as unknown[]) ?? [];
        break;
      }
      case "plan": {
        this.planAction = event.action as string;
        this.planOutline = event.outline as string;
        this.planStatus = "running";
        this.planReason = null;
        break;
      }
      case "step": {
        this.steps.push({ t: event.t, primitive: event.primitive as string,
                          ok: Boolean(event.ok) });
        if (this.steps.length > STEP_CAP) this.steps.shift();
        break;
      }
      case "world": {
        this.world = event.snapshot as SceneDoc;
        break;
      }
      case "plan_done": {
        this.planStatus = (event.status as "success" | "failure") ?? null;
        this.planReason = (event.reason as string | null) ?? null;
        break;
      }
      case "mode_ack": {
        this.mode = event.mode as "gesture" | "teleop";
        break;
      }
      case "teleop": {
        // gripper target echo; the world snapshot remains authoritative
        break;
      }
      case "selected": {
        break;
      }
      case "overflow": {
        this.overflowDropped += (event.dropped as number) ?? 0;
        break;
      }
      case "error": {
        this.pushError(String(event.message));
        break;
      }
      default:
        break;
    }
  }

  markSchemaMismatch(detail: string): void {
    this.schemaOk = false;
    this.schemaError = detail;
  }

  pushError(message: string): void {
    this.errors.push(message);
    if (this.errors.length > 50) this.errors.shift();
  }
}
