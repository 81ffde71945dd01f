// Sentence and intent panel: textual view of the sentence in progress and
// the resolved intent tuple.

import { ConsoleState, IntentView, SentenceView } from "./state.js";

function formatRef(ref: unknown): string {
  if (Array.isArray(ref) && ref[0] === "point") {
    return `@(${(ref[1] as number).toFixed(2)}, ${(ref[2] as number).toFixed(2)})`;
  }
  return String(ref);
}

function formatNumber(value: number): string {
  return Number.isInteger(value) ? String(value) : value.toFixed(0);
}

export function formatSentence(sentence: SentenceView | null): string {
  if (sentence === null) {
    return "(no sentence)";
  }
  const refs = sentence.refs.map(formatRef).join(", ");
  const metrics = sentence.metrics.map((m) => `${formatNumber(m)}%`).join(", ");
  const mark = sentence.state === "complete" ? "" : " …";
  return `(${sentence.actionLabel}, [${refs}], [${metrics}])${mark}`;
}

export function formatIntent(intent: IntentView | null): string {
  if (intent === null) {
    return "(no intent)";
  }
  // the pinch metric is a speed for the move/put family, an angle for
  // rotate/pour (the interpreter's metric binding)
  const suffix = intent.action === "rotate" || intent.action === "pour" ? "°" : "%";
  const ap = intent.ap.map((value) =>
    typeof value === "number" ? `${formatNumber(value)}${suffix}` : formatRef(value));
  const target = intent.targetObject ?? "-";
  if (ap.length === 0) {
    return `(${intent.action}, ${target})`;
  }
  return `(${intent.action}, ${target}, [${ap.join(", ")}])`;
}

export function renderSentencePanel(state: ConsoleState): string {
  const lines = [
    `sentence: ${formatSentence(state.sentence)}`,
    `intent:   ${formatIntent(state.intent)}`,
  ];
  if (state.clarification !== null) {
    lines.push("clarification needed: please demonstrate the action again");
  }
  return lines.join("\n");
}
