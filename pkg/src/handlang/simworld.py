"""Symbolic tabletop world: objects, supports, containers, gripper, teleop.

Physics is relational (supports, containment, fill levels), not dynamic:
every primitive has a deterministic symbolic effect, which keeps all
scenarios oracle-checkable.
"""

from __future__ import annotations

import copy
import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .handstream import HandFrame

SCENE_SCHEMA = "scene/v1"

CONTAINER_CLASSES = ("bowl", "drawer")

ON_TABLE = ("table",)

#: gripper hover offset above a grasp target (m)
APPROACH_OFFSET = 0.02
#: gripper z after lift, above the table (m)
LIFT_HEIGHT = 0.30
#: resting half-height of a generic object (m)
OBJECT_RISE = 0.03
#: stacked object center-to-center spacing (m)
STACK_RISE = 0.06
#: contained objects sit slightly proud of their container's center
CONTENT_RISE = 0.01
#: release destination snap radius in xy (m)
SNAP_RADIUS = 0.05
#: drawers must be at least this open to take or give objects
DRAWER_OPEN_MIN = 0.9

PRIMITIVE_KINDS = ("approach", "grasp", "lift", "move_to", "release",
                   "open_drawer", "close_drawer", "tilt")


class WorldError(ValueError):
    """Scene/world invariant violation, with path-level diagnostics."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


class InfeasibleActionError(RuntimeError):
    """apply() called for a primitive that feasible() rejects (caller bug)."""


@dataclass
class ObjectState:
    oid: str
    cls: str
    pose: np.ndarray                      # (4,) x, y, z, yaw
    support: tuple | None = ON_TABLE      # ("table",) | ("on", oid) | ("in", oid) | None when held
    ghost: bool = False
    fill_level: float = 0.0
    fill_kind: str | None = None
    open_fraction: float | None = None    # drawers only

    @property
    def is_container(self) -> bool:
        return self.cls in CONTAINER_CLASSES

    @property
    def is_drawer(self) -> bool:
        return self.cls == "drawer"


@dataclass
class GripperState:
    pose: np.ndarray                      # (4,) x, y, z, z-rotation
    holding: str | None = None


@dataclass
class WorldState:
    objects: dict[str, ObjectState]
    gripper: GripperState
    table_height: float = 0.0
    workspace: tuple[float, float, float, float] = (-0.1, 0.9, -0.6, 0.6)
    grid_step: float = 0.1
    ghost_counter: int = 0

    def clone(self) -> "WorldState":
        return copy.deepcopy(self)

    # -- relational helpers --------------------------------------------------

    def object_on(self, oid: str) -> str | None:
        """Id of the object directly stacked on oid, if any."""
        for other in self.objects.values():
            if other.support == ("on", oid):
                return other.oid
        return None

    def stack_above(self, oid: str) -> list[str]:
        """Objects stacked above oid, bottom-up."""
        chain = []
        current = self.object_on(oid)
        while current is not None:
            chain.append(current)
            current = self.object_on(current)
        return chain

    def contents(self, cid: str) -> list[str]:
        return sorted(o.oid for o in self.objects.values() if o.support == ("in", cid))

    def containing_drawer(self, oid: str) -> ObjectState | None:
        obj = self.objects.get(oid)
        if obj is not None and obj.support and obj.support[0] == "in":
            container = self.objects.get(obj.support[1])
            if container is not None and container.is_drawer:
                return container
        return None

    def in_workspace(self, x: float, y: float) -> bool:
        xmin, xmax, ymin, ymax = self.workspace
        return xmin <= x <= xmax and ymin <= y <= ymax

    def validate(self) -> None:
        """Raise WorldError when any relational invariant fails."""
        problems = []
        for oid, obj in self.objects.items():
            path = f"objects.{oid}"
            if obj.support is None and self.gripper.holding != oid:
                problems.append(f"{path}.support: unsupported but not held")
            if obj.support is not None:
                kind = obj.support[0]
                if kind not in ("table", "on", "in"):
                    problems.append(f"{path}.support: unknown kind {kind!r}")
                elif kind in ("on", "in"):
                    target = obj.support[1]
                    if target not in self.objects:
                        problems.append(f"{path}.support: unknown target {target!r}")
                    elif target == oid:
                        problems.append(f"{path}.support: self-support")
                    elif kind == "in" and not self.objects[target].is_container:
                        problems.append(f"{path}.support: {target!r} is not a container")
            if obj.is_drawer:
                if obj.open_fraction is None or not 0.0 <= obj.open_fraction <= 1.0:
                    problems.append(f"{path}.open_fraction: must be in [0, 1]")
            if obj.fill_level < 0.0:
                problems.append(f"{path}.fill_level: negative")
        held = self.gripper.holding
        if held is not None:
            if held not in self.objects:
                problems.append(f"gripper.holding: unknown object {held!r}")
            elif self.objects[held].support is not None:
                problems.append(f"gripper.holding: {held!r} still has a support relation")
        # stack cycles, and at most one object directly on any support
        directly_on: dict[str, list[str]] = {}
        for oid, obj in self.objects.items():
            if obj.support and obj.support[0] == "on":
                directly_on.setdefault(obj.support[1], []).append(oid)
        for base, tops in directly_on.items():
            if len(tops) > 1:
                problems.append(f"objects.{base}: multiple objects stacked directly on it {sorted(tops)}")
        for oid in self.objects:
            seen = {oid}
            current = self.objects[oid]
            while current.support and current.support[0] in ("on", "in"):
                nxt = current.support[1]
                if nxt in seen:
                    problems.append(f"objects.{oid}.support: cycle through {nxt!r}")
                    break
                seen.add(nxt)
                current = self.objects.get(nxt)
                if current is None:
                    break
        if problems:
            raise WorldError(sorted(set(problems)))

    # -- serialization --------------------------------------------------------

    def to_doc(self) -> dict:
        return {
            "schema": SCENE_SCHEMA,
            "table_height": self.table_height,
            "workspace": list(self.workspace),
            "grid_step": self.grid_step,
            "gripper": {"pose": self.gripper.pose.tolist(), "holding": self.gripper.holding},
            "objects": [
                {
                    "id": o.oid,
                    "class": o.cls,
                    "pose": o.pose.tolist(),
                    "support": _support_to_doc(o.support),
                    **({"ghost": True} if o.ghost else {}),
                    **({"fill": {"level": o.fill_level, "kind": o.fill_kind}} if o.fill_level else {}),
                    **({"open_fraction": o.open_fraction} if o.is_drawer else {}),
                }
                for o in self.objects.values()
            ],
        }


def _support_to_doc(support: tuple | None):
    if support is None:
        return None
    if support == ON_TABLE:
        return "table"
    return {support[0]: support[1]}


def _support_from_doc(raw, path: str, problems: list[str]) -> tuple | None:
    if raw is None:
        return None
    if raw == "table":
        return ON_TABLE
    if isinstance(raw, dict) and len(raw) == 1:
        kind, target = next(iter(raw.items()))
        if kind in ("on", "in"):
            return (kind, target)
    problems.append(f"{path}: malformed support {raw!r}")
    return ON_TABLE


def load_scene(doc: dict | str) -> WorldState:
    """Validated WorldState from a scene document (dict or path)."""
    if isinstance(doc, str):
        with open(doc, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    problems: list[str] = []
    if doc.get("schema") != SCENE_SCHEMA:
        raise WorldError([f"schema: expected {SCENE_SCHEMA!r}, got {doc.get('schema')!r}"])
    workspace = tuple(doc.get("workspace", (-0.1, 0.9, -0.6, 0.6)))
    table_height = float(doc.get("table_height", 0.0))
    gripper_doc = doc.get("gripper", {})
    gripper = GripperState(
        pose=np.asarray(gripper_doc.get("pose", [0.4, 0.0, table_height + LIFT_HEIGHT, 0.0]), dtype=float),
        holding=gripper_doc.get("holding"),
    )
    objects: dict[str, ObjectState] = {}
    for i, odoc in enumerate(doc.get("objects", [])):
        path = f"objects[{i}]"
        oid = odoc.get("id")
        if not oid:
            problems.append(f"{path}.id: missing")
            continue
        if oid in objects:
            problems.append(f"{path}.id: duplicate {oid!r}")
            continue
        cls = odoc.get("class", "object")
        pose = np.asarray(odoc.get("pose", [0, 0, 0, 0]), dtype=float)
        if pose.shape != (4,):
            problems.append(f"objects.{oid}.pose: must be [x, y, z, yaw]")
            pose = np.zeros(4)
        support = _support_from_doc(odoc.get("support", "table"), f"objects.{oid}.support", problems)
        fill = odoc.get("fill", {})
        obj = ObjectState(
            oid=oid, cls=cls, pose=pose, support=support,
            ghost=bool(odoc.get("ghost", False)),
            fill_level=float(fill.get("level", 0.0)),
            fill_kind=fill.get("kind"),
            open_fraction=float(odoc.get("open_fraction", 0.0)) if cls == "drawer" else None,
        )
        objects[oid] = obj
        xmin, xmax, ymin, ymax = workspace
        if not (xmin <= pose[0] <= xmax and ymin <= pose[1] <= ymax):
            problems.append(f"objects.{oid}.pose: outside the workspace")
    world = WorldState(objects=objects, gripper=gripper, table_height=table_height,
                       workspace=workspace, grid_step=float(doc.get("grid_step", 0.1)))
    if problems:
        raise WorldError(problems)
    try:
        world.validate()
    except WorldError as exc:
        raise WorldError(exc.problems) from None
    return world


# --- primitives --------------------------------------------------------------

@dataclass(frozen=True)
class Primitive:
    kind: str
    target: str | None = None
    point: tuple | None = None   # (x, y) or (x, y, z) for move_to
    yaw: float | None = None

    def __str__(self) -> str:
        parts = [self.target] if self.target else []
        if self.point is not None:
            parts.append("(" + ", ".join(f"{v:.3f}" for v in self.point) + ")")
        if self.yaw is not None:
            parts.append(f"yaw={self.yaw:.3f}")
        return f"{self.kind}({', '.join(parts)})"


def _gripper_at(world: WorldState, xy, z: float | None = None, tol: float = 1e-4) -> bool:
    g = world.gripper.pose
    if abs(g[0] - xy[0]) > tol or abs(g[1] - xy[1]) > tol:
        return False
    return z is None or abs(g[2] - z) <= tol


def release_destination(world: WorldState, exclude: str | None = None):
    """What lies under the gripper: ("in", container) | ("on", object) | ("table", (x, y)).

    Nearest object within the snap radius wins; containers shadow the objects
    they contain.
    """
    gx, gy = float(world.gripper.pose[0]), float(world.gripper.pose[1])
    candidates = []
    for obj in world.objects.values():
        if obj.oid == exclude or obj.support is None:
            continue
        d = math.hypot(obj.pose[0] - gx, obj.pose[1] - gy)
        if d <= SNAP_RADIUS:
            # nearest first; within a stack (same xy) the top wins
            candidates.append((round(d, 9), -float(obj.pose[2]), obj.oid, obj))
    if not candidates:
        return ("table", (gx, gy))
    obj = min(candidates)[3]
    if obj.is_container:
        return ("in", obj.oid)
    # releasing onto a contained/stacked object lands in/on its base container
    if obj.support and obj.support[0] == "in":
        return ("in", obj.support[1])
    return ("on", obj.oid)


def feasible(world: WorldState, prim: Primitive) -> tuple[bool, str | None]:
    """Symbolic feasibility with a short reason when rejected."""
    kind = prim.kind
    if kind not in PRIMITIVE_KINDS:
        return False, f"unknown-primitive({kind})"
    if kind == "approach":
        obj = world.objects.get(prim.target)
        if obj is None:
            return False, f"missing-object({prim.target})"
        drawer = world.containing_drawer(prim.target)
        if drawer is not None and drawer.open_fraction < DRAWER_OPEN_MIN:
            return False, "drawer-closed"
        return True, None
    if kind == "grasp":
        obj = world.objects.get(prim.target)
        if obj is None:
            return False, f"missing-object({prim.target})"
        if world.gripper.holding is not None:
            return False, "gripper-full"
        top = world.object_on(prim.target)
        if top is not None:
            return False, f"occluded-by({top})"
        drawer = world.containing_drawer(prim.target)
        if drawer is not None and drawer.open_fraction < DRAWER_OPEN_MIN:
            return False, "drawer-closed"
        if not _gripper_at(world, obj.pose[:2], float(obj.pose[2]) + APPROACH_OFFSET):
            return False, "not-approached"
        return True, None
    if kind == "lift":
        if world.gripper.holding is None:
            return False, "empty-gripper"
        return True, None
    if kind == "move_to":
        if prim.target is not None:
            if prim.target not in world.objects:
                return False, f"missing-object({prim.target})"
            return True, None
        if prim.point is not None:
            if not world.in_workspace(prim.point[0], prim.point[1]):
                return False, "out-of-workspace"
            return True, None
        if prim.yaw is not None:
            return True, None
        return False, "move_to-needs-target"
    if kind == "release":
        held = world.gripper.holding
        if held is None:
            return False, "empty-gripper"
        dest = release_destination(world, exclude=held)
        if dest[0] == "in":
            container = world.objects[dest[1]]
            if container.is_drawer and container.open_fraction < DRAWER_OPEN_MIN:
                return False, "drawer-closed"
            occupants = [c for c in world.contents(dest[1]) if c != held]
            if container.cls == "bowl" and occupants:
                return False, f"occupied({dest[1]})"
        if dest[0] == "on":
            top = world.object_on(dest[1])
            if top is not None:
                return False, f"occluded-by({top})"
        return True, None
    if kind in ("open_drawer", "close_drawer"):
        obj = world.objects.get(prim.target)
        if obj is None:
            return False, f"missing-object({prim.target})"
        if not obj.is_drawer:
            return False, f"not-a-drawer({prim.target})"
        if world.gripper.holding is not None:
            return False, "gripper-full"
        return True, None
    if kind == "tilt":
        held = world.gripper.holding
        if held is None:
            return False, "empty-gripper"
        if world.objects[held].fill_level <= 0.0:
            return False, "nothing-to-pour"
        target = world.objects.get(prim.target)
        if target is None:
            return False, f"missing-object({prim.target})"
        if not target.is_container:
            return False, f"not-a-container({prim.target})"
        if target.is_drawer and target.open_fraction < DRAWER_OPEN_MIN:
            return False, "drawer-closed"
        if abs(world.gripper.pose[0] - target.pose[0]) > SNAP_RADIUS or \
                abs(world.gripper.pose[1] - target.pose[1]) > SNAP_RADIUS:
            return False, "not-above-target"
        return True, None
    return False, f"unknown-primitive({kind})"


def _sync_held(world: WorldState) -> None:
    held = world.gripper.holding
    if held is not None:
        obj = world.objects[held]
        obj.pose[0] = world.gripper.pose[0]
        obj.pose[1] = world.gripper.pose[1]
        obj.pose[2] = world.gripper.pose[2] - APPROACH_OFFSET
        obj.pose[3] = world.gripper.pose[3]


def apply(world: WorldState, prim: Primitive, *, rng: np.random.Generator | None = None,
          failure_prob: float = 0.0) -> tuple[WorldState, bool]:
    """Deterministic symbolic effect of a feasible primitive.

    With a configured failure probability the world is returned unchanged and
    the success flag is False. Applying an infeasible primitive is a caller
    contract violation and raises.
    """
    ok, reason = feasible(world, prim)
    if not ok:
        raise InfeasibleActionError(f"apply({prim}): {reason}")
    if failure_prob > 0.0 and rng is not None and rng.random() < failure_prob:
        return world, False
    new = world.clone()
    kind = prim.kind
    if kind == "approach":
        obj = new.objects[prim.target]
        new.gripper.pose[0] = obj.pose[0]
        new.gripper.pose[1] = obj.pose[1]
        new.gripper.pose[2] = obj.pose[2] + APPROACH_OFFSET
    elif kind == "grasp":
        obj = new.objects[prim.target]
        obj.support = None
        new.gripper.holding = prim.target
    elif kind == "lift":
        new.gripper.pose[2] = new.table_height + LIFT_HEIGHT
        _sync_held(new)
    elif kind == "move_to":
        if prim.target is not None:
            target = new.objects[prim.target]
            new.gripper.pose[0] = target.pose[0]
            new.gripper.pose[1] = target.pose[1]
        elif prim.point is not None:
            new.gripper.pose[0] = prim.point[0]
            new.gripper.pose[1] = prim.point[1]
            if len(prim.point) > 2:
                new.gripper.pose[2] = prim.point[2]
        if prim.yaw is not None:
            new.gripper.pose[3] = prim.yaw
        _sync_held(new)
    elif kind == "release":
        held = new.gripper.holding
        obj = new.objects[held]
        dest = release_destination(new, exclude=held)
        if dest[0] == "in":
            container = new.objects[dest[1]]
            obj.support = ("in", dest[1])
            obj.pose[0], obj.pose[1] = container.pose[0], container.pose[1]
            obj.pose[2] = container.pose[2] + CONTENT_RISE
        elif dest[0] == "on":
            base = new.objects[dest[1]]
            obj.support = ("on", dest[1])
            obj.pose[0], obj.pose[1] = base.pose[0], base.pose[1]
            obj.pose[2] = base.pose[2] + STACK_RISE
        else:
            obj.support = ON_TABLE
            obj.pose[0], obj.pose[1] = dest[1]
            obj.pose[2] = new.table_height + OBJECT_RISE
        new.gripper.holding = None
    elif kind == "open_drawer":
        new.objects[prim.target].open_fraction = 1.0
    elif kind == "close_drawer":
        new.objects[prim.target].open_fraction = 0.0
    elif kind == "tilt":
        held = new.objects[new.gripper.holding]
        target = new.objects[prim.target]
        target.fill_level += held.fill_level
        if target.fill_kind is None:
            target.fill_kind = held.fill_kind
        elif held.fill_kind is not None and held.fill_kind != target.fill_kind:
            target.fill_kind = "mixed"
        held.fill_level = 0.0
    return new, True


def free_slot(world: WorldState, near: Sequence[float] | None = None,
              clearance: float = 0.07) -> tuple[float, float]:
    """Nearest unoccupied grid cell (deterministic tie-break by coordinates)."""
    xmin, xmax, ymin, ymax = world.workspace
    step = world.grid_step
    if near is None:
        near = ((xmin + xmax) / 2.0, (ymin + ymax) / 2.0)
    occupied = [(float(o.pose[0]), float(o.pose[1])) for o in world.objects.values()
                if o.support is not None]
    candidates = []
    nx = int(round((xmax - xmin) / step)) + 1
    ny = int(round((ymax - ymin) / step)) + 1
    for i in range(nx):
        for j in range(ny):
            x = round(xmin + i * step, 9)
            y = round(ymin + j * step, 9)
            if not world.in_workspace(x, y):
                continue
            if all(math.hypot(x - ox, y - oy) > clearance for ox, oy in occupied):
                candidates.append((math.hypot(x - near[0], y - near[1]), x, y))
    if not candidates:
        raise WorldError(["workspace: no free slot available"])
    _, x, y = min(candidates)
    return (x, y)


# --- perturbations -----------------------------------------------------------

@dataclass(frozen=True)
class Perturbation:
    kind: str   # move_object | ghost_object | drop_object | misdetect_pose
    params: dict = field(default_factory=dict)


def perturb(world: WorldState, perturbation: Perturbation,
            rng: np.random.Generator | None = None) -> WorldState:
    """Scene fault injection; the only way the object count ever changes."""
    new = world.clone()
    kind = perturbation.kind
    params = perturbation.params
    if kind == "ghost_object":
        cls = params.get("class", "mug")
        if "pose" in params:
            pose = np.asarray(params["pose"], dtype=float)
        else:
            slot = free_slot(new, near=params.get("near"))
            pose = np.array([slot[0], slot[1], new.table_height + OBJECT_RISE, 0.0])
        new.ghost_counter += 1
        oid = params.get("id", f"ghost_{cls}_{new.ghost_counter}")
        new.objects[oid] = ObjectState(oid=oid, cls=cls, pose=pose, support=ON_TABLE, ghost=True)
        return new
    oid = params.get("id")
    if oid not in new.objects:
        raise ValueError(f"perturbation references unknown object {oid!r}")
    if kind == "drop_object":
        for other in new.objects.values():
            if other.support and other.support[0] in ("on", "in") and other.support[1] == oid:
                other.support = ON_TABLE
                other.pose[2] = new.table_height + OBJECT_RISE
        if new.gripper.holding == oid:
            new.gripper.holding = None
        del new.objects[oid]
        return new
    if kind == "move_object":
        obj = new.objects[oid]
        target = np.asarray(params["pose"], dtype=float)
        if new.gripper.holding == oid:
            new.gripper.holding = None
        for other in new.objects.values():
            if other.support == ("on", oid):
                other.support = ON_TABLE
        obj.pose = target.copy() if target.shape == (4,) else np.array(
            [target[0], target[1], new.table_height + OBJECT_RISE, 0.0])
        if "support" in params:
            obj.support = params["support"]
        else:
            obj.support = ON_TABLE
        return new
    if kind == "misdetect_pose":
        obj = new.objects[oid]
        delta = np.asarray(params.get("delta", [0, 0, 0, 0]), dtype=float)
        obj.pose = obj.pose + (np.concatenate([delta, [0.0] * (4 - len(delta))]) if len(delta) < 4 else delta)
        return new
    raise ValueError(f"unknown perturbation kind {kind!r}")


# --- direct teleoperation ------------------------------------------------------

@dataclass(frozen=True)
class TeleopMap:
    """Affine palm-to-gripper mapping with a workspace clamp and speed limit."""

    scale: float = 1.0
    offset: tuple[float, float, float] = (0.0, 0.0, 0.0)
    max_speed: float = 0.5            # m/s end-effector limit
    z_range: tuple[float, float] = (0.02, 0.5)  # above the table


class TeleopController:
    """Rate-limited gripper target from a palm stream (>= 10 Hz input).

    Invisible frames hold the last target. Position updates are clamped to
    the workspace and limited to max_speed * dt per step; z-rotation maps
    straight through.
    """

    def __init__(self, world: WorldState, mapping: TeleopMap | None = None):
        self.mapping = mapping or TeleopMap()
        self.workspace = world.workspace
        self.table_height = world.table_height
        self.last_target: np.ndarray = world.gripper.pose.copy()
        self.last_time: float | None = None

    def step(self, frame: HandFrame) -> np.ndarray:
        """New gripper target pose (x, y, z, z-rotation) for one input frame."""
        if not frame.visible:
            self.last_time = frame.timestamp
            return self.last_target.copy()
        m = self.mapping
        raw = np.asarray(frame.palm_position, dtype=float) * m.scale + np.asarray(m.offset)
        xmin, xmax, ymin, ymax = self.workspace
        goal = np.array([
            min(max(raw[0], xmin), xmax),
            min(max(raw[1], ymin), ymax),
            min(max(raw[2], self.table_height + m.z_range[0]), self.table_height + m.z_range[1]),
        ])
        dt = 0.0 if self.last_time is None else max(0.0, frame.timestamp - self.last_time)
        step_vec = goal - self.last_target[:3]
        dist = float(np.linalg.norm(step_vec))
        limit = m.max_speed * dt if self.last_time is not None else dist
        if dist > limit > 0.0:
            step_vec = step_vec * (limit / dist)
        elif dist > 0.0 and limit == 0.0 and self.last_time is not None:
            step_vec = np.zeros(3)
        target = np.empty(4)
        target[:3] = self.last_target[:3] + step_vec
        target[3] = frame.z_rotation if frame.z_rotation is not None else self.last_target[3]
        self.last_target = target.copy()
        self.last_time = frame.timestamp
        return target
