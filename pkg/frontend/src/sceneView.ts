// Top-down 2D scene renderer with the deictic ray and service-side highlight.
// Coordinate transform: world x grows to the right, world y grows upward on
// screen; the canvas covers the workspace rectangle with a margin.

import { SceneDoc, SceneObject } from "./protocol.js";

export interface Canvas2D {
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  rect(x: number, y: number, w: number, h: number): void;
  stroke(): void;
  fill(): void;
  fillText(text: string, x: number, y: number): void;
  setLineDash(dash: number[]): void;
  strokeStyle: string;
  fillStyle: string;
  lineWidth: number;
  font: string;
}

export interface ViewTransform {
  toScreen(x: number, y: number): [number, number];
  toWorld(px: number, py: number): [number, number];
  scale: number;
}

const MARGIN = 24;

export function makeTransform(world: SceneDoc, width: number, height: number): ViewTransform {
  const [xmin, xmax, ymin, ymax] = world.workspace;
  const sx = (width - 2 * MARGIN) / (xmax - xmin);
  const sy = (height - 2 * MARGIN) / (ymax - ymin);
  const scale = Math.min(sx, sy);
  return {
    scale,
    toScreen(x: number, y: number): [number, number] {
      return [MARGIN + (x - xmin) * scale, height - MARGIN - (y - ymin) * scale];
    },
    toWorld(px: number, py: number): [number, number] {
      return [xmin + (px - MARGIN) / scale, ymin + (height - MARGIN - py) / scale];
    },
  };
}

const CLASS_COLORS: Record<string, string> = {
  bowl: "#7aa2f7",
  drawer: "#b4846c",
  mug: "#9ece6a",
  can: "#e0af68",
  spam: "#f7768e",
  cube: "#c0caf5",
};

export interface SceneOverlay {
  highlight: string | null;          // service-reported deictic argmin
  ray: { from: [number, number]; to: [number, number] } | null;
  tablePoint: number[] | null;
}

function objectRadius(obj: SceneObject, scale: number): number {
  const base = obj.class === "bowl" ? 0.06 : obj.class === "drawer" ? 0.08 : 0.035;
  return base * scale;
}

export function renderScene(ctx: Canvas2D, world: SceneDoc, overlay: SceneOverlay,
                            width: number, height: number): void {
  const tf = makeTransform(world, width, height);
  ctx.clearRect(0, 0, width, height);
  // workspace boundary
  const [x0, y0] = tf.toScreen(world.workspace[0], world.workspace[2]);
  const [x1, y1] = tf.toScreen(world.workspace[1], world.workspace[3]);
  ctx.setLineDash([]);
  ctx.strokeStyle = "#3b4261";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.rect(Math.min(x0, x1), Math.min(y0, y1), Math.abs(x1 - x0), Math.abs(y1 - y0));
  ctx.stroke();

  for (const obj of world.objects) {
    const [px, py] = tf.toScreen(obj.pose[0], obj.pose[1]);
    const r = objectRadius(obj, tf.scale);
    ctx.setLineDash(obj.ghost ? [4, 4] : []);
    ctx.strokeStyle = CLASS_COLORS[obj.class] ?? "#c0caf5";
    ctx.fillStyle = CLASS_COLORS[obj.class] ?? "#c0caf5";
    ctx.lineWidth = 2;
    if (obj.class === "drawer") {
      const open = obj.open_fraction ?? 0;
      ctx.beginPath();
      ctx.rect(px - r, py - r * 0.6, 2 * r, r * 1.2);
      ctx.stroke();
      ctx.beginPath();
      ctx.rect(px - r, py - r * 0.6 - open * r * 0.8, 2 * r, r * 0.3);
      ctx.stroke();
    } else {
      ctx.beginPath();
      ctx.arc(px, py, r, 0, 2 * Math.PI);
      obj.class === "bowl" ? ctx.stroke() : ctx.fill();
    }
    ctx.font = "11px sans-serif";
    ctx.fillStyle = "#a9b1d6";
    ctx.fillText(obj.id, px + r + 3, py + 3);
    if (overlay.highlight === obj.id) {
      ctx.setLineDash([]);
      ctx.strokeStyle = "#ff9e64";
      ctx.lineWidth = 3;
      ctx.beginPath();
      ctx.arc(px, py, r + 5, 0, 2 * Math.PI);
      ctx.stroke();
    }
  }

  // gripper crosshair
  const g = world.gripper.pose;
  const [gx, gy] = tf.toScreen(g[0], g[1]);
  ctx.setLineDash([]);
  ctx.strokeStyle = world.gripper.holding ? "#ff9e64" : "#7dcfff";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(gx - 8, gy);
  ctx.lineTo(gx + 8, gy);
  ctx.moveTo(gx, gy - 8);
  ctx.lineTo(gx, gy + 8);
  ctx.stroke();
  if (world.gripper.holding) {
    ctx.font = "11px sans-serif";
    ctx.fillStyle = "#ff9e64";
    ctx.fillText(`holding ${world.gripper.holding}`, gx + 10, gy - 8);
  }

  if (overlay.ray !== null) {
    const [ax, ay] = tf.toScreen(overlay.ray.from[0], overlay.ray.from[1]);
    const [bx, by] = tf.toScreen(overlay.ray.to[0], overlay.ray.to[1]);
    ctx.setLineDash([6, 4]);
    ctx.strokeStyle = "#bb9af7";
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    ctx.moveTo(ax, ay);
    ctx.lineTo(bx, by);
    ctx.stroke();
    ctx.setLineDash([]);
  }
  if (overlay.tablePoint !== null) {
    const [tx, ty] = tf.toScreen(overlay.tablePoint[0], overlay.tablePoint[1]);
    ctx.strokeStyle = "#bb9af7";
    ctx.beginPath();
    ctx.arc(tx, ty, 4, 0, 2 * Math.PI);
    ctx.stroke();
  }
}

/** The virtual hand hovering above the table that pointer drags aim from. */
export const DRAG_HAND_ORIGIN: [number, number, number] = [-0.05, 0.0, 0.55];

/** Build the 3D pointing ray for a pointer position over the scene. */
export function dragRay(world: SceneDoc, tf: ViewTransform, px: number, py: number):
    { p1: number[]; p2: number[] } {
  const [wx, wy] = tf.toWorld(px, py);
  return {
    p1: [...DRAG_HAND_ORIGIN],
    p2: [wx, wy, world.table_height],
  };
}
