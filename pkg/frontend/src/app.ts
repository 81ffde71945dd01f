// Browser entry point: wires the connection, state, inputs and panels.

import { ConsoleConnection } from "./connection.js";
import { ACTION_GESTURES, GestureInjector, InjectionMode } from "./gestures.js";
import { renderPlanView } from "./planView.js";
import { dragRay, makeTransform, renderScene, SceneOverlay, Canvas2D } from "./sceneView.js";
import { renderSentencePanel } from "./sentencePanel.js";
import { ConsoleState } from "./state.js";
import { TeleopInput } from "./teleop.js";
import { renderTimeline } from "./timeline.js";

const state = new ConsoleState();
const url = new URLSearchParams(location.search).get("ws") ?? "ws://127.0.0.1:8765";
const conn = new ConsoleConnection(url, state);

// the session clock: seconds since the page loaded (message timestamps)
const epoch = performance.now();
const clock = () => (performance.now() - epoch) / 1000;

const injectionMode =
  (new URLSearchParams(location.search).get("inject") as InjectionMode) ?? "direct";
const gestures = new GestureInjector(conn, clock, injectionMode);
const teleop = new TeleopInput(conn, clock);

const sceneCanvas = document.getElementById("scene") as HTMLCanvasElement;
const timelineCanvas = document.getElementById("timeline") as HTMLCanvasElement;
const sentenceEl = document.getElementById("sentence") as HTMLPreElement;
const planEl = document.getElementById("plan") as HTMLPreElement;
const bannerEl = document.getElementById("banner") as HTMLDivElement;
const modeEl = document.getElementById("mode") as HTMLSpanElement;
const buttonsEl = document.getElementById("buttons") as HTMLDivElement;
const incompatibleEl = document.getElementById("incompatible") as HTMLDivElement;

const overlay: SceneOverlay = { highlight: null, ray: null, tablePoint: null };
let dragging = false;

function banner(text: string): void {
  bannerEl.textContent = text;
  bannerEl.style.opacity = "1";
  setTimeout(() => { bannerEl.style.opacity = "0"; }, 2500);
}

teleop.onRejected = banner;

for (const label of ACTION_GESTURES) {
  const button = document.createElement("button");
  button.textContent = label.replace("_", " ");
  button.onclick = () => gestures.inject(label);
  buttonsEl.appendChild(button);
}
const pinchButton = document.createElement("button");
pinchButton.textContent = "pinch 5 cm (metric)";
pinchButton.onclick = () => gestures.inject("pinch", { metric: 0.05 });
buttonsEl.appendChild(pinchButton);
const breakButton = document.createElement("button");
breakButton.textContent = "done (empty episode)";
breakButton.onclick = () => gestures.completionBreak();
buttonsEl.appendChild(breakButton);

(document.getElementById("mode-gesture") as HTMLButtonElement).onclick = () =>
  conn.send({ type: "mode", t: clock(), mode: "gesture" });
(document.getElementById("mode-teleop") as HTMLButtonElement).onclick = () =>
  conn.send({ type: "mode", t: clock(), mode: "teleop" });
(document.getElementById("grip-grasp") as HTMLButtonElement).onclick = () =>
  teleop.grip("grasp");
(document.getElementById("grip-release") as HTMLButtonElement).onclick = () =>
  teleop.grip("release");

sceneCanvas.addEventListener("pointerdown", (ev) => {
  dragging = true;
  pointerToService(ev);
});
sceneCanvas.addEventListener("pointermove", (ev) => {
  if (dragging) pointerToService(ev);
});
sceneCanvas.addEventListener("pointerup", () => {
  if (!dragging) return;
  dragging = false;
  if (state.mode === "gesture") {
    gestures.pointFromDrag();
  } else {
    teleop.release();
  }
  overlay.ray = null;
});
sceneCanvas.addEventListener("wheel", (ev) => {
  if (state.mode === "teleop") {
    teleop.wheel(ev.deltaY * 0.002);
    ev.preventDefault();
  }
});

let lastRaySent = 0;
function pointerToService(ev: PointerEvent): void {
  if (state.world === null) return;
  const rect = sceneCanvas.getBoundingClientRect();
  const px = ev.clientX - rect.left;
  const py = ev.clientY - rect.top;
  const tf = makeTransform(state.world, sceneCanvas.width, sceneCanvas.height);
  const [wx, wy] = tf.toWorld(px, py);
  if (state.mode === "teleop") {
    teleop.pointerMove(wx, wy, state.world.table_height + 0.15);
    return;
  }
  const ray = dragRay(state.world, tf, px, py);
  overlay.ray = { from: [ray.p1[0], ray.p1[1]], to: [ray.p2[0], ray.p2[1]] };
  const now = clock();
  if (now - lastRaySent >= 0.05) {
    lastRaySent = now;
    conn.send({ type: "ray", t: now, p1: ray.p1, p2: ray.p2 });
  }
}

function redraw(): void {
  incompatibleEl.style.display = state.schemaOk ? "none" : "block";
  if (!state.schemaOk) {
    incompatibleEl.textContent =
      `incompatible service schema: ${state.schemaError ?? "unknown"}`;
    return;
  }
  modeEl.textContent = `${state.mode}${state.connected ? "" : " (disconnected)"}`;
  overlay.highlight = state.deicticTarget;
  overlay.tablePoint = state.tablePoint;
  if (state.world !== null) {
    const ctx = sceneCanvas.getContext("2d") as unknown as Canvas2D;
    renderScene(ctx, state.world, overlay, sceneCanvas.width, sceneCanvas.height);
  }
  const tctx = timelineCanvas.getContext("2d") as unknown as Canvas2D;
  renderTimeline(tctx, state.probs, state.activations,
                 { width: timelineCanvas.width, height: timelineCanvas.height, window: 20 });
  sentenceEl.textContent = renderSentencePanel(state);
  planEl.textContent = renderPlanView(state);
  if (state.errors.length > 0) {
    banner(state.errors[state.errors.length - 1]);
    state.errors.length = 0;
  }
}

setInterval(() => {
  teleop.keepalive();
  conn.checkAckTimeouts();
  redraw();
}, 50);

conn.connect();
setInterval(() => {
  if (!state.connected && state.schemaOk) {
    conn.connect(); // the hello event restores the session from its snapshot
  }
}, 2000);
