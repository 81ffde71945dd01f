// Plan panel: the behavior-tree outline with live tick status plus the
// primitive-action log.

import { ConsoleState } from "./state.js";

export function renderPlanView(state: ConsoleState): string {
  const lines: string[] = [];
  if (state.planAction === null) {
    lines.push("(no plan)");
  } else {
    const status = state.planStatus ?? "idle";
    const reason = state.planReason ? ` (${state.planReason})` : "";
    lines.push(`plan for ${state.planAction}: ${status}${reason}`);
    if (state.planOutline !== null) {
      lines.push(state.planOutline);
    }
  }
  if (state.steps.length > 0) {
    lines.push("steps:");
    for (const step of state.steps.slice(-12)) {
      lines.push(`  ${step.ok ? "+" : "x"} ${step.primitive}`);
    }
  }
  return lines.join("\n");
}
