"""Behavior-tree plan generation and reactive execution.

Plans are re-derived from the live world on every tick (stale steps cannot
execute), and preconditions are repaired automatically: stacks get unstacked,
closed drawers opened, occupied bowls vacated, a full gripper parked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from .config import PipelineConfig
from .sentence import Intent
from .simworld import (DRAWER_OPEN_MIN, LIFT_HEIGHT, APPROACH_OFFSET, Primitive, WorldState,
                       apply, feasible, free_slot)

POSITION_TOL = 0.02
YAW_TOL = 0.02
#: per-task primitive bound used while simulating plans for resolution
TASK_SIM_BUDGET = 24


class InfeasibleIntentError(RuntimeError):
    """The intent cannot be planned in this world (missing objects etc.)."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


@dataclass(frozen=True)
class Task:
    """High-level plan step; decomposes statelessly into primitives."""

    kind: str                      # pick | unstack | place | put | pour | open | close | rotate | move_gripper
    obj: str | None = None
    dest: str | None = None
    point: tuple | None = None
    yaw: float | None = None

    def __str__(self) -> str:
        parts = [p for p in (self.obj, self.dest) if p]
        if self.point is not None:
            parts.append("(" + ", ".join(f"{v:.2f}" for v in self.point) + ")")
        if self.yaw is not None:
            parts.append(f"yaw={self.yaw:.2f}")
        return f"{self.kind}({', '.join(parts)})"


# --- task completion and decomposition -----------------------------------------

def _near(a, b, tol: float = POSITION_TOL) -> bool:
    return abs(float(a[0]) - float(b[0])) <= tol and abs(float(a[1]) - float(b[1])) <= tol


def task_complete(task: Task, world: WorldState) -> bool:
    k = task.kind
    if k == "pick":
        return world.gripper.holding == task.obj and \
            world.gripper.pose[2] >= world.table_height + LIFT_HEIGHT - POSITION_TOL
    if k in ("unstack", "place"):
        obj = world.objects.get(task.obj)
        if obj is None or obj.support != ("table",):
            return False
        return task.point is None or _near(obj.pose, task.point)
    if k == "put":
        obj = world.objects.get(task.obj)
        if obj is None:
            return False
        if task.dest is not None:
            dest = world.objects.get(task.dest)
            if dest is None:
                return False
            if dest.is_container:
                return obj.support == ("in", task.dest)
            return obj.support == ("on", task.dest)
        return obj.support == ("table",) and _near(obj.pose, task.point)
    if k == "pour":
        obj = world.objects.get(task.obj)
        dest = world.objects.get(task.dest)
        return obj is not None and dest is not None and \
            obj.fill_level == 0.0 and dest.fill_level > 0.0
    if k == "open":
        d = world.objects.get(task.obj)
        return d is not None and (d.open_fraction or 0.0) >= DRAWER_OPEN_MIN
    if k == "close":
        d = world.objects.get(task.obj)
        return d is not None and (d.open_fraction or 0.0) <= 0.1
    if k == "rotate":
        obj = world.objects.get(task.obj)
        if obj is None:
            return False
        delta = (float(obj.pose[3]) - task.yaw) % (2.0 * math.pi)
        return min(delta, 2.0 * math.pi - delta) <= YAW_TOL
    if k == "move_gripper":
        g = world.gripper.pose
        return all(abs(float(g[i]) - task.point[i]) <= POSITION_TOL for i in range(len(task.point)))
    raise ValueError(f"unknown task kind {task.kind!r}")


def _require(world: WorldState, oid: str | None, what: str = "object") -> None:
    if oid is not None and oid not in world.objects:
        raise InfeasibleIntentError(f"missing-{what}({oid})")


def _prereqs(task: Task, world: WorldState) -> list[Task]:
    """Immediate prerequisite tasks for one task against one world state."""
    k = task.kind
    pre: list[Task] = []
    held = world.gripper.holding

    def park_held():
        if world.gripper.holding is not None:
            pre.append(Task("place", obj=world.gripper.holding))

    if k in ("pick", "unstack"):
        _require(world, task.obj)
        if held == task.obj:
            return []
        drawer = world.containing_drawer(task.obj)
        if held is not None:
            park_held()
        if drawer is not None and drawer.open_fraction < DRAWER_OPEN_MIN:
            pre.append(Task("open", obj=drawer.oid))
        for above in reversed(world.stack_above(task.obj)):  # top-down
            pre.append(Task("unstack", obj=above))
        return pre
    if k == "place":
        _require(world, task.obj)
        if held != task.obj:
            pre.append(Task("pick", obj=task.obj))
        return pre
    if k in ("put", "pour"):
        _require(world, task.obj)
        if task.dest is not None:
            _require(world, task.dest, "destination")
            dest = world.objects[task.dest]
            if dest.is_drawer and dest.open_fraction < DRAWER_OPEN_MIN:
                pre.append(Task("open", obj=task.dest))
            if k == "put" and dest.cls == "bowl":
                for occupant in world.contents(task.dest):
                    if occupant != task.obj:
                        pre.append(Task("pick", obj=occupant))
                        pre.append(Task("place", obj=occupant))
            if k == "put" and not dest.is_container:
                for above in reversed(world.stack_above(task.dest)):
                    if above != task.obj:
                        pre.append(Task("unstack", obj=above))
        if held != task.obj:
            pre.append(Task("pick", obj=task.obj))
        return pre
    if k in ("open", "close"):
        _require(world, task.obj, "drawer")
        if not world.objects[task.obj].is_drawer:
            raise InfeasibleIntentError(f"not-a-drawer({task.obj})")
        park_held()
        return pre
    if k == "rotate":
        _require(world, task.obj)
        if held != task.obj:
            pre.append(Task("pick", obj=task.obj))
        return pre
    if k == "move_gripper":
        return []
    raise ValueError(f"unknown task kind {task.kind!r}")


def next_primitive(task: Task, world: WorldState) -> Primitive | None:
    """Next atomic primitive advancing an incomplete task, derived statelessly."""
    k = task.kind
    held = world.gripper.holding
    if k == "pick":
        if held == task.obj:
            return Primitive("lift")
        obj = world.objects[task.obj]
        grasp_pose = (float(obj.pose[0]), float(obj.pose[1]), float(obj.pose[2]) + APPROACH_OFFSET)
        g = world.gripper.pose
        at_obj = all(abs(float(g[i]) - grasp_pose[i]) <= 1e-4 for i in range(3))
        if at_obj and held is None:
            return Primitive("grasp", target=task.obj)
        return Primitive("approach", target=task.obj)
    if k in ("unstack", "place"):
        if held != task.obj:
            return next_primitive(Task("pick", obj=task.obj), world)
        point = task.point or free_slot(world, near=world.gripper.pose[:2])
        if _near(world.gripper.pose, point, tol=1e-4):
            return Primitive("release")
        return Primitive("move_to", point=(float(point[0]), float(point[1])))
    if k == "put":
        if held != task.obj:
            return next_primitive(Task("pick", obj=task.obj), world)
        if task.dest is not None:
            dest = world.objects[task.dest]
            if _near(world.gripper.pose, dest.pose, tol=1e-4):
                return Primitive("release")
            return Primitive("move_to", target=task.dest)
        if _near(world.gripper.pose, task.point, tol=1e-4):
            return Primitive("release")
        return Primitive("move_to", point=(float(task.point[0]), float(task.point[1])))
    if k == "pour":
        if held != task.obj:
            return next_primitive(Task("pick", obj=task.obj), world)
        dest = world.objects[task.dest]
        if _near(world.gripper.pose, dest.pose, tol=1e-4):
            return Primitive("tilt", target=task.dest)
        return Primitive("move_to", target=task.dest)
    if k == "open":
        return Primitive("open_drawer", target=task.obj)
    if k == "close":
        return Primitive("close_drawer", target=task.obj)
    if k == "rotate":
        if held != task.obj:
            return next_primitive(Task("pick", obj=task.obj), world)
        return Primitive("move_to", yaw=task.yaw)
    if k == "move_gripper":
        return Primitive("move_to", point=tuple(float(v) for v in task.point))
    raise ValueError(f"unknown task kind {task.kind!r}")


def _simulate_task(task: Task, world: WorldState) -> WorldState:
    for _ in range(TASK_SIM_BUDGET):
        if task_complete(task, world):
            return world
        prim = next_primitive(task, world)
        ok, reason = feasible(world, prim)
        if not ok:
            raise InfeasibleIntentError(f"{task}: {prim} infeasible ({reason})")
        world, _ = apply(world, prim)
    raise InfeasibleIntentError(f"{task}: no progress after {TASK_SIM_BUDGET} primitives")


def resolve_preconditions(goal: Task, world: WorldState) -> list[Task]:
    """Ordered task plan (prerequisites recursively closed) ending with the goal.

    Each prerequisite is resolved against the world state produced by
    simulating the plan so far, so ordering constraints (free the gripper
    before opening a drawer, unstack top-down) come out automatically.
    """
    plan: list[Task] = []
    sim = world

    def push(task: Task, depth: int) -> None:
        nonlocal sim
        if depth > 16:
            raise InfeasibleIntentError(f"{task}: precondition recursion too deep")
        if task_complete(task, sim):
            return
        for pre in _prereqs(task, sim):
            push(pre, depth + 1)
        if task_complete(task, sim):
            return
        plan.append(task)
        sim = _simulate_task(task, sim)

    push(goal, 0)
    return plan


def resolve_plan(goals: Sequence[Task], world: WorldState) -> list[Task]:
    """resolve_preconditions over a task sequence, threading the simulated world."""
    plan: list[Task] = []
    sim = world
    for goal in goals:
        sub = resolve_preconditions(goal, sim)
        plan.extend(sub)
        for task in sub:
            sim = _simulate_task(task, sim)
    return plan


# --- intents -> goals and root tasks ----------------------------------------------

def ensure_anchors(intent: Intent, world: WorldState, config: PipelineConfig) -> None:
    """Fill goal anchors once per intent so re-execution is idempotent."""
    if intent.anchors is not None:
        return
    anchors: dict = {}
    if intent.action == "move_cartesian":
        anchors["gripper_target"] = tuple(float(v) for v in world.gripper.pose[:3])
    elif intent.action == "swap":
        a, b = intent.target_object, intent.locations[0]
        _require(world, a)
        _require(world, b if isinstance(b, str) else None)
        anchors = {
            "pose_a": tuple(float(v) for v in world.objects[a].pose[:2]),
            "pose_b": tuple(float(v) for v in world.objects[b].pose[:2]),
            "support_a": world.objects[a].support,
            "support_b": world.objects[b].support,
        }
    elif intent.action == "rotate":
        _require(world, intent.target_object)
        angle = next((v for k, v in intent.metrics if k == "angle"), config.default_rotate_angle)
        obj = world.objects[intent.target_object]
        anchors = {
            "target_yaw": (float(obj.pose[3]) + math.radians(angle)) % (2.0 * math.pi),
            "origin_xy": tuple(float(v) for v in obj.pose[:2]),
            "was_held": world.gripper.holding == intent.target_object,
        }
    elif intent.action == "place":
        anchors["object"] = intent.target_object or world.gripper.holding
    intent.anchors = anchors


def goal_satisfied(intent: Intent, world: WorldState,
                   config: PipelineConfig | None = None) -> bool:
    a = intent.action
    anchors = intent.anchors or {}
    if a == "pick":
        return task_complete(Task("pick", obj=intent.target_object), world)
    if a == "place":
        obj = world.objects.get(anchors.get("object") or intent.target_object)
        return obj is not None and obj.support == ("table",)
    if a in ("put", "move"):
        obj = world.objects.get(intent.target_object)
        if obj is None:
            return False
        dest = intent.locations[0] if intent.locations else None
        if isinstance(dest, str):
            d = world.objects.get(dest)
            if d is None:
                return False
            if obj.support != (("in", dest) if d.is_container else ("on", dest)):
                return False
            if d.is_drawer and config is not None and config.close_drawer_after_insert:
                return (d.open_fraction or 0.0) <= 0.1
            return True
        if dest is not None:
            return obj.support == ("table",) and _near(obj.pose, dest)
        return False
    if a == "pour":
        obj = world.objects.get(intent.target_object)
        dest = world.objects.get(intent.locations[0]) if intent.locations else None
        return obj is not None and dest is not None and \
            obj.fill_level == 0.0 and dest.fill_level > 0.0
    if a == "open":
        d = world.objects.get(intent.target_object)
        return d is not None and (d.open_fraction or 0.0) >= DRAWER_OPEN_MIN
    if a == "close":
        d = world.objects.get(intent.target_object)
        return d is not None and (d.open_fraction or 0.0) <= 0.1
    if a == "swap":
        oa = world.objects.get(intent.target_object)
        ob = world.objects.get(intent.locations[0]) if intent.locations else None
        if oa is None or ob is None or not anchors:
            return False
        return _near(oa.pose, anchors["pose_b"]) and _near(ob.pose, anchors["pose_a"])
    if a == "rotate":
        obj = world.objects.get(intent.target_object)
        if obj is None or not anchors:
            return False
        delta = (float(obj.pose[3]) - anchors["target_yaw"]) % (2.0 * math.pi)
        if min(delta, 2.0 * math.pi - delta) > YAW_TOL:
            return False
        if anchors.get("was_held"):
            return True
        return obj.support == ("table",) and _near(obj.pose, anchors["origin_xy"])
    if a == "move_cartesian":
        target = anchors.get("gripper_target")
        return target is not None and all(
            abs(float(world.gripper.pose[i]) - target[i]) <= POSITION_TOL for i in range(3))
    raise InfeasibleIntentError(f"unknown action {a!r}")


def root_tasks(intent: Intent, world: WorldState,
               config: PipelineConfig | None = None) -> list[Task]:
    """Top-level tasks realizing the intent (before precondition resolution)."""
    a = intent.action
    anchors = intent.anchors or {}
    if a == "pick":
        _require(world, intent.target_object)
        return [Task("pick", obj=intent.target_object)]
    if a == "place":
        obj = anchors.get("object") or intent.target_object or world.gripper.holding
        if obj is None:
            raise InfeasibleIntentError("place: nothing held and no object given")
        return [Task("place", obj=obj)]
    if a in ("put", "move"):
        if not intent.locations:
            raise InfeasibleIntentError(f"{a}: no target location")
        dest = intent.locations[0]
        if isinstance(dest, str):
            tasks = [Task("put", obj=intent.target_object, dest=dest)]
            d = world.objects.get(dest)
            if d is not None and d.is_drawer and config is not None \
                    and config.close_drawer_after_insert:
                tasks.append(Task("close", obj=dest))
            return tasks
        return [Task("put", obj=intent.target_object, point=(float(dest[0]), float(dest[1])))]
    if a == "pour":
        if not intent.locations or not isinstance(intent.locations[0], str):
            raise InfeasibleIntentError("pour: no target container")
        return [Task("pour", obj=intent.target_object, dest=intent.locations[0])]
    if a == "open":
        return [Task("open", obj=intent.target_object)]
    if a == "close":
        return [Task("close", obj=intent.target_object)]
    if a == "swap":
        b = intent.locations[0]
        temp = anchors.get("temp")
        if temp is None:
            # frozen on first planning pass: recomputing it after the object
            # is in the gripper would collapse the slot onto pose_a
            temp = free_slot(world, near=anchors.get("pose_a"))
            anchors["temp"] = temp
        return [
            Task("put", obj=intent.target_object, point=temp),
            Task("put", obj=b, point=anchors["pose_a"]),
            Task("put", obj=intent.target_object, point=anchors["pose_b"]),
        ]
    if a == "rotate":
        _require(world, intent.target_object)
        tasks = [Task("rotate", obj=intent.target_object, yaw=anchors["target_yaw"])]
        if not anchors.get("was_held"):
            tasks.append(Task("put", obj=intent.target_object, point=anchors["origin_xy"]))
        return tasks
    if a == "move_cartesian":
        return [Task("move_gripper", point=anchors["gripper_target"])]
    raise InfeasibleIntentError(f"unknown action {a!r}")


# --- behavior tree -----------------------------------------------------------------

@dataclass
class BTNode:
    kind: str                    # sequence | fallback | condition | action
    label: str
    children: list["BTNode"] = field(default_factory=list)
    status: str | None = None    # success | failure | running (set by tick)


@dataclass
class BehaviorTree:
    intent: Intent
    config: PipelineConfig
    root: BTNode | None = None
    #: indexes of root tasks that completed once (sequence-with-memory:
    #: multi-phase intents like swap regress earlier phases while resolving
    #: later ones, so prefix completion is latched rather than re-derived)
    root_memory: set = field(default_factory=set)


@dataclass(frozen=True)
class TickResult:
    status: str                      # success | failure | running
    primitive: Primitive | None = None
    reason: str | None = None
    tasks: tuple[Task, ...] = ()


def build_tree(intent: Intent, world: WorldState,
               config: PipelineConfig | None = None) -> BehaviorTree:
    """Build the tree for the current world (it is rebuilt on every tick)."""
    config = config or PipelineConfig()
    ensure_anchors(intent, world, config)
    tree = BehaviorTree(intent=intent, config=config)
    _refresh(tree, world)
    return tree


def _refresh(tree: BehaviorTree, world: WorldState) -> TickResult:
    intent = tree.intent
    goal = BTNode("condition", f"goal: {intent.action} satisfied")
    plan_seq = BTNode("sequence", "plan")
    root = BTNode("fallback", f"intent: {intent.action}", [goal, plan_seq])
    tree.root = root
    if goal_satisfied(intent, world, tree.config):
        goal.status = "success"
        root.status = "success"
        return TickResult(status="success")
    goal.status = "failure"
    try:
        roots = root_tasks(intent, world, tree.config)
        remaining = []
        for idx, rt in enumerate(roots):
            if idx in tree.root_memory:
                continue
            if not remaining and task_complete(rt, world):
                tree.root_memory.add(idx)
                continue
            remaining.append(rt)
        plan = resolve_plan(remaining, world)
    except InfeasibleIntentError as exc:
        plan_seq.status = "failure"
        root.status = "failure"
        plan_seq.children.append(BTNode("condition", f"infeasible: {exc.reason}", status="failure"))
        return TickResult(status="failure", reason=exc.reason)
    primitive = None
    for task in plan:
        done = task_complete(task, world)
        task_node = BTNode("fallback", str(task), [
            BTNode("condition", f"done: {task}", status="success" if done else "failure"),
        ])
        if not done and primitive is None:
            primitive = next_primitive(task, world)
            task_node.children.append(BTNode("action", str(primitive), status="running"))
            task_node.status = "running"
        elif done:
            task_node.status = "success"
        plan_seq.children.append(task_node)
    if primitive is None:
        if tree.root_memory:
            # latched phases may have been undone by a perturbation: forget
            # them once and replan from scratch
            tree.root_memory.clear()
            return _refresh(tree, world)
        root.status = "failure"
        return TickResult(status="failure", reason="no-progress", tasks=tuple(plan))
    plan_seq.status = "running"
    root.status = "running"
    return TickResult(status="running", primitive=primitive, tasks=tuple(plan))


def tick(tree: BehaviorTree, world: WorldState) -> TickResult:
    """Re-evaluate the whole tree against the current world; at most one primitive."""
    return _refresh(tree, world)


def render_tree(node: BTNode, indent: int = 0) -> str:
    """Indented outline of a tree (the CLI `explain` output)."""
    mark = {"success": "+", "failure": "-", "running": ">", None: " "}[node.status]
    lines = [f"{'  ' * indent}[{mark}] {node.kind}: {node.label}"]
    for child in node.children:
        lines.append(render_tree(child, indent + 1))
    return "\n".join(lines)


# --- execution ------------------------------------------------------------------------

@dataclass
class TraceStep:
    primitive: Primitive
    ok: bool
    pre: WorldState
    post: WorldState


@dataclass
class ActionTrace:
    status: str                      # success | failure
    reason: str | None
    steps: list[TraceStep]
    ticks: int
    final_world: WorldState

    @property
    def primitives(self) -> list[Primitive]:
        return [s.primitive for s in self.steps]


Executor = Callable[[WorldState, Primitive], tuple[WorldState, bool]]


def execute(intent: Intent, world: WorldState, executor: Executor | None = None, *,
            config: PipelineConfig | None = None, budget: int | None = None,
            between_ticks: Callable[[WorldState, int], WorldState] | None = None,
            on_step: Callable[[TraceStep, TickResult], None] | None = None) -> ActionTrace:
    """Tick-execute loop until the goal holds, a failure is explained, or the
    tick budget runs out (reason "livelock").

    `between_ticks` may perturb the world between ticks; a primitive that the
    perturbed world rejects is skipped (never executed) and the next tick
    replans.
    """
    config = config or PipelineConfig()
    budget = budget if budget is not None else config.tick_budget
    ensure_anchors(intent, world, config)
    tree = BehaviorTree(intent=intent, config=config)
    executor = executor or (lambda w, p: apply(w, p))
    steps: list[TraceStep] = []
    for tick_i in range(budget):
        if between_ticks is not None:
            world = between_ticks(world, tick_i)
        result = tick(tree, world)
        if result.status == "success":
            return ActionTrace("success", None, steps, tick_i + 1, world)
        if result.status == "failure":
            return ActionTrace("failure", result.reason, steps, tick_i + 1, world)
        prim = result.primitive
        ok, reason = feasible(world, prim)
        if not ok:
            # perturbed out from under us; replan next tick
            continue
        pre = world
        world, applied = executor(world, prim)
        step = TraceStep(primitive=prim, ok=applied, pre=pre, post=world)
        steps.append(step)
        if on_step is not None:
            on_step(step, result)
    return ActionTrace("failure", "livelock", steps, budget, world)
