// Probability timeline and activation bars (the gesture-detection feedback
// plot: per-label likelihood curves on top, activation spans underneath).

import { Canvas2D } from "./sceneView.js";
import { ActivationBar, ProbSample } from "./state.js";

const STATIC_COLORS: Record<string, string> = {
  grab: "#f7768e", pinch: "#ff9e64", point: "#e0af68", two: "#9ece6a",
  three: "#73daca", four: "#7dcfff", five: "#7aa2f7", thumbsup: "#bb9af7",
};
const DYNAMIC_COLORS: Record<string, string> = {
  swipe_up: "#9ece6a", swipe_down: "#f7768e", swipe_left: "#7aa2f7",
  swipe_right: "#e0af68", no_gesture: "#565f89",
};

export interface TimelineLayout {
  width: number;
  height: number;
  window: number; // seconds of history shown
}

export function renderTimeline(ctx: Canvas2D, probs: ProbSample[],
                               activations: ActivationBar[],
                               layout: TimelineLayout): void {
  const { width, height, window } = layout;
  ctx.clearRect(0, 0, width, height);
  if (probs.length === 0) {
    ctx.font = "12px sans-serif";
    ctx.fillStyle = "#565f89";
    ctx.fillText("waiting for detections…", 12, height / 2);
    return;
  }
  const tEnd = probs[probs.length - 1].t;
  const tStart = tEnd - window;
  const chartH = height * 0.62;
  const barsTop = chartH + 8;
  const toX = (t: number) => ((t - tStart) / window) * width;
  const toY = (p: number) => chartH - p * (chartH - 8);

  const channels: Array<["static" | "dynamic", Record<string, string>]> = [
    ["static", STATIC_COLORS], ["dynamic", DYNAMIC_COLORS]];
  for (const [channel, colors] of channels) {
    const labels = Object.keys(probs[probs.length - 1][channel]);
    for (const label of labels) {
      ctx.strokeStyle = colors[label] ?? "#c0caf5";
      ctx.lineWidth = channel === "static" ? 1.6 : 1.2;
      ctx.beginPath();
      let started = false;
      for (const sample of probs) {
        if (sample.t < tStart) continue;
        const p = sample[channel][label] ?? 0;
        const x = toX(sample.t);
        const y = toY(p);
        if (!started) {
          ctx.moveTo(x, y);
          started = true;
        } else {
          ctx.lineTo(x, y);
        }
      }
      ctx.stroke();
    }
  }
  // threshold line
  ctx.setLineDash([3, 3]);
  ctx.strokeStyle = "#3b4261";
  ctx.beginPath();
  ctx.moveTo(0, toY(0.9));
  ctx.lineTo(width, toY(0.9));
  ctx.stroke();
  ctx.setLineDash([]);

  const lanes: Record<string, number> = { static: 0, deictic: 1, dynamic: 2 };
  const laneH = (height - barsTop) / 3;
  for (const bar of activations) {
    if (bar.end < tStart) continue;
    const lane = lanes[bar.channel] ?? 0;
    const y = barsTop + lane * laneH;
    const colors = bar.channel === "dynamic" ? DYNAMIC_COLORS : STATIC_COLORS;
    ctx.fillStyle = colors[bar.label] ?? "#c0caf5";
    ctx.beginPath();
    ctx.rect(Math.max(0, toX(bar.start)), y,
             Math.max(2, toX(bar.end) - Math.max(0, toX(bar.start))), laneH - 3);
    ctx.fill();
    ctx.font = "10px sans-serif";
    ctx.fillText(bar.label, Math.max(2, toX(bar.start)) + 2, y + laneH - 6);
  }
}
