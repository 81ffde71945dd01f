"""Scenario catalog: tabletop tasks of increasing sentence complexity.

Each scenario bundles a scene, a goal predicate, the expected sentence/intent
shape, and scripted operator sessions for the three assistance modes
(teleoperation, low-level gestures, high-level gesture sentences).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .config import PipelineConfig
from .handstream import frame_to_record
from .simworld import APPROACH_OFFSET, WorldState, load_scene
from .synth import invisible_frames, pose_burst

EVAL_SCENARIOS = ("put_in_bowl", "swap", "occupied_bowl")


def standard_scene(*, holding=None, drawer_open=0.0, can_in_bowl=False,
                   fills=("can",)) -> dict:
    objects = [
        {"id": "mug", "class": "mug", "pose": [0.2, 0.3, 0.03, 0.0], "support": "table"},
        {"id": "bowl", "class": "bowl", "pose": [0.6, -0.3, 0.03, 0.0], "support": "table"},
        {"id": "can", "class": "can", "pose": [0.3, -0.1, 0.03, 0.0],
         "support": {"in": "bowl"} if can_in_bowl else "table"},
        {"id": "spam", "class": "spam", "pose": [0.5, 0.2, 0.03, 0.0], "support": "table"},
        {"id": "drawer", "class": "drawer", "pose": [0.8, 0.4, 0.05, 0.0], "support": "table",
         "open_fraction": drawer_open},
    ]
    for obj in objects:
        if obj["id"] in fills:
            obj["fill"] = {"level": 1.0, "kind": "stuff"}
        if can_in_bowl and obj["id"] == "can":
            obj["pose"] = [0.6, -0.3, 0.04, 0.0]
        if holding == obj["id"]:
            obj["support"] = None
            obj["pose"] = [0.4, 0.0, 0.28, 0.0]
    return {
        "schema": "scene/v1", "table_height": 0.0, "workspace": [-0.1, 0.9, -0.6, 0.6],
        "grid_step": 0.1,
        "gripper": {"pose": [0.4, 0.0, 0.3, 0.0], "holding": holding},
        "objects": objects,
    }


def grid_scene(n: int = 3, spacing: float = 0.2) -> dict:
    objects = []
    for k in range(n * n):
        objects.append({
            "id": f"obj{k}", "class": "cube",
            "pose": [0.2 + spacing * (k // n), -spacing + spacing * (k % n), 0.03, 0.0],
            "support": "table"})
    return {"schema": "scene/v1", "table_height": 0.0, "workspace": [-0.2, 1.0, -0.7, 0.7],
            "gripper": {"pose": [0.4, 0.0, 0.3, 0.0], "holding": None}, "objects": objects}


# -- session message builders ---------------------------------------------------

def g(t: float, label: str, *, target=None, table_point=None, metric=None,
      duration: float = 0.6) -> dict:
    msg = {"type": "gesture", "t": t, "label": label, "duration": duration}
    if target is not None:
        msg["target"] = target
    if table_point is not None:
        msg["table_point"] = list(table_point)
    if metric is not None:
        msg["metric"] = metric
    return msg


def brk(t: float) -> dict:
    return {"type": "episode_break", "t": t}


def frame_messages(frames) -> list[dict]:
    return [{"type": "frame", "t": f.timestamp, "frame": frame_to_record(f)} for f in frames]


def golden_eq3_session(world: WorldState, *, rate: float = 90.0) -> list[dict]:
    """The thumbsup sentence demonstrated with raw hand frames.

    thumbsup, point at the mug, point at the bowl, pinch at 5 cm; bursts are
    separated by out-of-view gaps longer than the visibility debounce.
    """
    hand_origin = (0.25, 0.0, 0.45)
    mug = tuple(world.objects["mug"].pose[:3])
    bowl = tuple(world.objects["bowl"].pose[:3])
    frames = []
    t = 0.0
    frames += pose_burst("thumbsup", t0=t, duration=0.9, rate=rate, origin=hand_origin, seed=1)
    t += 0.9
    frames += invisible_frames(t, 0.4, rate=rate)
    t += 0.4
    frames += pose_burst("point", t0=t, duration=0.9, rate=rate, origin=hand_origin,
                         aim=mug, seed=2)
    t += 0.9
    frames += invisible_frames(t, 0.4, rate=rate)
    t += 0.4
    frames += pose_burst("point", t0=t, duration=0.9, rate=rate, origin=hand_origin,
                         aim=bowl, seed=3)
    t += 0.9
    frames += invisible_frames(t, 0.4, rate=rate)
    t += 0.4
    frames += pose_burst("pinch", t0=t, duration=0.9, rate=rate, origin=hand_origin,
                         pinch_gap=0.05, seed=4)
    t += 0.9
    frames += invisible_frames(t, 0.4, rate=rate)
    return frame_messages(frames)


def fig4_session(*, rate: float = 90.0) -> list[dict]:
    """One episode: point, then grab, then a downward swipe (all in view).

    The holds sit at the swipe template's start so the episode stays inside
    one detection corridor, and a short dwell after the swipe keeps the hand
    visible while the last detection windows cover the full motion.
    """
    from .synth import swipe_frames

    origin = (0.35, 0.0, 0.20)
    frames = []
    frames += pose_burst("point", t0=0.0, duration=0.7, rate=rate, origin=origin,
                         aim=(0.3, -0.1, 0.03), seed=5)
    frames += pose_burst("grab", t0=0.7, duration=0.7, rate=rate, origin=origin, seed=6)
    frames += swipe_frames("swipe_down", t0=1.4, duration=0.8, rate=rate,
                           start=origin, extent=0.4)
    frames += pose_burst("neutral", t0=2.2, duration=0.5, rate=rate,
                         origin=(0.35, 0.0, -0.20), seed=7)
    frames += invisible_frames(2.7, 0.4, rate=rate)
    return frame_messages(frames)


def teleop_session(scene: dict, legs: list, *, t0: float = 0.0, rate: float = 10.0,
                   max_speed: float = 0.5, carry_z: float = 0.25) -> list[dict]:
    """Waypoint stream mirroring the rate-limited teleop controller.

    legs: ("move", (x, y, z)) | ("grasp", oid) | ("release",). Each move
    dwells until the rate-limited target converges exactly.
    """
    world = load_scene(scene)
    pos = world.gripper.pose[:3].copy()
    msgs: list[dict] = []
    t = t0
    dt = 1.0 / rate

    def frame_msg(ts, p):
        return {"type": "frame", "t": ts, "frame": {
            "t": ts, "visible": True, "palm_position": list(map(float, p)),
            "palm_direction": [1.0, 0.0, 0.0], "palm_normal": [0.0, 0.0, -1.0],
            "z_rotation": 0.0,
            "fingers": np.zeros((5, 4, 2, 3)).tolist(),
            "fingertips": np.zeros((5, 3)).tolist()}}

    for leg in legs:
        if leg[0] == "move":
            goal = np.asarray(leg[1], dtype=float)
            while True:
                delta = goal - pos
                dist = float(np.linalg.norm(delta))
                if dist <= 1e-12:
                    break
                step = delta if dist <= max_speed * dt else delta * (max_speed * dt / dist)
                pos = pos + step
                t += dt
                msgs.append(frame_msg(t, goal))
        elif leg[0] == "grasp":
            oid = leg[1]
            obj = world.objects[oid]
            t += dt
            msgs.append({"type": "grip", "t": t, "action": "grasp"})
            pos = np.array([obj.pose[0], obj.pose[1], obj.pose[2] + APPROACH_OFFSET])
        elif leg[0] == "release":
            t += dt
            msgs.append({"type": "grip", "t": t, "action": "release"})
        else:
            raise ValueError(f"unknown teleop leg {leg[0]!r}")
    return msgs


def _move_legs(scene: dict, oid: str, dest_xy, *, carry_z: float = 0.25) -> list:
    world = load_scene(scene)
    obj = world.objects[oid].pose
    return [
        ("move", (obj[0], obj[1], obj[2] + APPROACH_OFFSET)),
        ("grasp", oid),
        ("move", (obj[0], obj[1], carry_z)),
        ("move", (dest_xy[0], dest_xy[1], carry_z)),
        ("release",),
    ]


# -- low-level gesture sessions ------------------------------------------------

def ll_pick_and_place(t0: float, oid: str, dest, *, dest_is_point=False) -> list[dict]:
    msgs = [
        g(t0 + 0.0, "point", target=oid),
        g(t0 + 1.0, "grab"),
        g(t0 + 2.0, "swipe_up"),
    ]
    if dest_is_point:
        msgs.append(g(t0 + 3.0, "point", table_point=dest))
    else:
        msgs.append(g(t0 + 3.0, "point", target=dest))
    msgs += [g(t0 + 4.0, "thumbsup"), g(t0 + 5.0, "pinch")]
    return msgs


# -- the catalog ------------------------------------------------------------------

@dataclass(frozen=True)
class Scenario:
    sid: str
    description: str
    scene: dict
    goal: Callable[[WorldState], bool]
    goal_desc: str
    sessions: dict[str, Callable[[], list[dict]]]
    config_overrides: dict = field(default_factory=dict)
    expected_sentence: tuple | None = None   # (action_label, refs, mapped metrics)
    expected_intent: tuple | None = None     # (action, target_object, ap)
    expected_sc: int | None = None
    category: str = "catalog"


def _obj_in(world, oid, cid):
    obj = world.objects.get(oid)
    return obj is not None and obj.support == ("in", cid)


def _obj_on(world, oid, base):
    obj = world.objects.get(oid)
    return obj is not None and obj.support == ("on", base)


def _near(pose, xy, tol=0.02):
    return abs(float(pose[0]) - xy[0]) <= tol and abs(float(pose[1]) - xy[1]) <= tol


def catalog() -> dict[str, Scenario]:
    scenarios: dict[str, Scenario] = {}

    def add(s: Scenario):
        scenarios[s.sid] = s

    # --- S_c = 0 -------------------------------------------------------------
    add(Scenario(
        sid="rotate_held", category="sc0",
        description="rotate the held object by the default angle",
        scene=standard_scene(holding="spam"),
        config_overrides={"gesture_actions": {"two": "rotate"}},
        goal=lambda w: w.gripper.holding == "spam" and
        abs(((w.objects["spam"].pose[3] - math.radians(90.0)) + math.pi) % (2 * math.pi) - math.pi) < 0.05,
        goal_desc="held spam rotated by 90 degrees",
        expected_sentence=("two", (), ()),
        expected_intent=("rotate", "spam", (90.0,)),
        expected_sc=0,
        sessions={"high_level_gesture": lambda: [g(0.0, "two"), brk(1.5)]},
    ))
    add(Scenario(
        sid="place_held", category="sc0",
        description="set the held object down",
        scene=standard_scene(holding="spam"),
        goal=lambda w: w.objects["spam"].support == ("table",) and w.gripper.holding is None,
        goal_desc="spam resting on the table",
        expected_sentence=("pinch", (), ()),
        expected_intent=("place", "spam", ()),
        expected_sc=0,
        sessions={"high_level_gesture": lambda: [g(0.0, "pinch")]},
    ))
    add(Scenario(
        sid="move_step", category="sc0",
        description="one cartesian step right",
        scene=standard_scene(),
        goal=lambda w: _near(w.gripper.pose, (0.4, -0.1), tol=0.03),
        goal_desc="gripper stepped 0.1 m to the right",
        expected_sentence=("swipe_right", (), ()),
        expected_intent=("move_cartesian", None, ()),
        expected_sc=0,
        sessions={"high_level_gesture": lambda: [g(0.0, "swipe_right")]},
    ))

    # --- S_c = 1 --------------------------------------------------------------
    add(Scenario(
        sid="pick_can", category="sc1",
        description="pick the can",
        scene=standard_scene(),
        goal=lambda w: w.gripper.holding == "can",
        goal_desc="can in the gripper",
        expected_sentence=("grab", ("can",), ()),
        expected_intent=("pick", "can", ()),
        expected_sc=1,
        sessions={"high_level_gesture": lambda: [g(0.0, "grab"), g(1.0, "point", target="can")]},
    ))
    add(Scenario(
        sid="open_drawer", category="sc1",
        description="open the drawer",
        scene=standard_scene(),
        goal=lambda w: (w.objects["drawer"].open_fraction or 0) >= 0.9,
        goal_desc="drawer open",
        expected_sentence=("two", ("drawer",), ()),
        expected_intent=("open", "drawer", ()),
        expected_sc=1,
        sessions={"high_level_gesture": lambda: [g(0.0, "two"), g(1.0, "point", target="drawer")]},
    ))
    add(Scenario(
        sid="close_drawer", category="sc1",
        description="close the drawer",
        scene=standard_scene(drawer_open=1.0),
        goal=lambda w: (w.objects["drawer"].open_fraction or 0) <= 0.1,
        goal_desc="drawer closed",
        expected_sentence=("three", ("drawer",), ()),
        expected_intent=("close", "drawer", ()),
        expected_sc=1,
        sessions={"high_level_gesture": lambda: [g(0.0, "three"), g(1.0, "point", target="drawer")]},
    ))
    add(Scenario(
        sid="pour_held", category="sc1",
        description="pour the held can into the bowl",
        scene=standard_scene(holding="can"),
        goal=lambda w: w.objects["bowl"].fill_level > 0 and w.objects["can"].fill_level == 0,
        goal_desc="bowl filled from the can",
        expected_sentence=("four", ("bowl",), ()),
        expected_intent=("pour", "can", ("bowl", 90.0)),
        expected_sc=1,
        sessions={"high_level_gesture": lambda: [g(0.0, "four"), g(1.0, "point", target="bowl"),
                                                 brk(2.0)]},
    ))
    add(Scenario(
        sid="put_held", category="sc1",
        description="put the held spam into the bowl",
        scene=standard_scene(holding="spam"),
        goal=lambda w: _obj_in(w, "spam", "bowl"),
        goal_desc="spam inside the bowl",
        expected_sentence=("thumbsup", ("bowl",), ()),
        expected_intent=("put", "spam", ("bowl",)),
        expected_sc=1,
        sessions={"high_level_gesture": lambda: [g(0.0, "thumbsup"), g(1.0, "point", target="bowl"),
                                                 brk(2.0)]},
    ))

    # --- S_c = 2 ---------------------------------------------------------------
    add(Scenario(
        sid="pour_two", category="sc2",
        description="pour the spam tin into the bowl",
        scene=standard_scene(fills=("can", "spam")),
        goal=lambda w: w.objects["bowl"].fill_level > 0 and w.objects["spam"].fill_level == 0,
        goal_desc="bowl filled from the spam tin",
        expected_sentence=("four", ("spam", "bowl"), ()),
        expected_intent=("pour", "spam", ("bowl", 90.0)),
        expected_sc=2,
        sessions={"high_level_gesture": lambda: [g(0.0, "four"), g(1.0, "point", target="spam"),
                                                 g(2.0, "point", target="bowl"), brk(3.0)]},
    ))
    add(Scenario(
        sid="put_drawer", category="sc2",
        description="put the spam into the (open) drawer",
        scene=standard_scene(drawer_open=1.0),
        goal=lambda w: _obj_in(w, "spam", "drawer"),
        goal_desc="spam inside the drawer",
        expected_sentence=("thumbsup", ("spam", "drawer"), ()),
        expected_intent=("put", "spam", ("drawer",)),
        expected_sc=2,
        sessions={"high_level_gesture": lambda: [g(0.0, "thumbsup"), g(1.0, "point", target="spam"),
                                                 g(2.0, "point", target="drawer"), brk(3.0)]},
    ))
    add(Scenario(
        sid="rotate_angle", category="sc2",
        description="rotate the spam by a pinch-specified 180 degrees",
        scene=standard_scene(),
        config_overrides={"gesture_actions": {"two": "rotate"}},
        goal=lambda w: abs(((w.objects["spam"].pose[3] - math.pi) + math.pi) % (2 * math.pi) - math.pi) < 0.05
        and w.objects["spam"].support == ("table",),
        goal_desc="spam rotated half a turn and set back down",
        expected_sentence=("two", ("spam",), (180.0,)),
        expected_intent=("rotate", "spam", (180.0,)),
        expected_sc=2,
        sessions={"high_level_gesture": lambda: [g(0.0, "two"), g(1.0, "point", target="spam"),
                                                 g(2.0, "pinch", metric=0.10)]},
    ))

    # --- S_c = 3 -----------------------------------------------------------------
    add(Scenario(
        sid="pour_angle", category="sc3",
        description="pour the can into the bowl at 60 degrees",
        scene=standard_scene(),
        goal=lambda w: w.objects["bowl"].fill_level > 0 and w.objects["can"].fill_level == 0,
        goal_desc="bowl filled from the can",
        expected_sentence=("four", ("can", "bowl"), (60.0,)),
        expected_intent=("pour", "can", ("bowl", 60.0)),
        expected_sc=3,
        sessions={"high_level_gesture": lambda: [g(0.0, "four"), g(1.0, "point", target="can"),
                                                 g(2.0, "point", target="bowl"),
                                                 g(3.0, "pinch", metric=1.0 / 30.0)]},
    ))
    add(Scenario(
        sid="golden_eq3", category="sc3",
        description="move the mug to the bowl at half speed (raw hand frames)",
        scene=standard_scene(),
        goal=lambda w: _obj_in(w, "mug", "bowl"),
        goal_desc="mug inside the bowl",
        expected_sentence=("thumbsup", ("mug", "bowl"), (50.0,)),
        expected_intent=("move", "mug", ("bowl", 50.0)),
        expected_sc=3,
        sessions={"high_level_gesture": lambda: golden_eq3_session(load_scene(standard_scene()))},
    ))

    # --- multistep ------------------------------------------------------------------
    add(Scenario(
        sid="stack_three", category="multistep",
        description="stack spam on the can, then the mug on the spam",
        scene=standard_scene(),
        goal=lambda w: _obj_on(w, "spam", "can") and _obj_on(w, "mug", "spam"),
        goal_desc="three-object tower",
        sessions={"high_level_gesture": lambda: [
            g(0.0, "thumbsup"), g(1.0, "point", target="spam"), g(2.0, "point", target="can"), brk(3.0),
            g(4.0, "thumbsup"), g(5.0, "point", target="mug"), g(6.0, "point", target="spam"), brk(7.0),
        ]},
    ))
    add(Scenario(
        sid="tidy_three", category="multistep",
        description="put three objects into the (initially closed) drawer",
        scene=standard_scene(),
        goal=lambda w: all(_obj_in(w, o, "drawer") for o in ("mug", "can", "spam")),
        goal_desc="mug, can and spam all inside the drawer",
        sessions={"high_level_gesture": lambda: [
            g(0.0, "thumbsup"), g(1.0, "point", target="mug"), g(2.0, "point", target="drawer"), brk(3.0),
            g(4.0, "thumbsup"), g(5.0, "point", target="can"), g(6.0, "point", target="drawer"), brk(7.0),
            g(8.0, "thumbsup"), g(9.0, "point", target="spam"), g(10.0, "point", target="drawer"), brk(11.0),
        ]},
    ))
    add(Scenario(
        sid="pour_two_into_bowl", category="multistep",
        description="pour two filled objects into the bowl",
        scene=standard_scene(fills=("can", "spam")),
        goal=lambda w: w.objects["bowl"].fill_level >= 2.0 - 1e-9
        and w.objects["can"].fill_level == 0 and w.objects["spam"].fill_level == 0,
        goal_desc="both fills transferred to the bowl",
        sessions={"high_level_gesture": lambda: [
            g(0.0, "four"), g(1.0, "point", target="can"), g(2.0, "point", target="bowl"), brk(3.0),
            g(4.0, "four"), g(5.0, "point", target="spam"), g(6.0, "point", target="bowl"), brk(7.0),
        ]},
    ))

    # --- infeasible-task repairs -------------------------------------------------------
    add(Scenario(
        sid="closed_drawer", category="infeasible",
        description="put the spam into a closed drawer (repairs by opening it)",
        scene=standard_scene(),
        goal=lambda w: _obj_in(w, "spam", "drawer"),
        goal_desc="spam inside the drawer",
        expected_sentence=("thumbsup", ("spam", "drawer"), ()),
        expected_intent=("put", "spam", ("drawer",)),
        expected_sc=2,
        sessions={"high_level_gesture": lambda: [
            g(0.0, "thumbsup"), g(1.0, "point", target="spam"),
            g(2.0, "point", target="drawer"), brk(3.0)]},
    ))

    # --- the three evaluated scenarios (all modes scripted) -----------------------------
    put_scene = standard_scene()
    add(Scenario(
        sid="put_in_bowl", category="evaluated",
        description="put an object into the bowl",
        scene=put_scene,
        goal=lambda w: _obj_in(w, "spam", "bowl"),
        goal_desc="spam inside the bowl",
        expected_sentence=("thumbsup", ("spam", "bowl"), ()),
        expected_intent=("move", "spam", ("bowl",)),
        expected_sc=2,
        sessions={
            "high_level_gesture": lambda: [
                g(0.0, "thumbsup"), g(1.0, "point", target="spam"),
                g(2.0, "point", target="bowl"), brk(3.0)],
            "low_level_gesture": lambda: ll_pick_and_place(0.0, "spam", "bowl"),
            "teleop": lambda: teleop_session(put_scene, _move_legs(put_scene, "spam", (0.6, -0.3))),
        },
    ))
    swap_scene = standard_scene()
    add(Scenario(
        sid="swap", category="evaluated",
        description="swap the can and the bowl",
        scene=swap_scene,
        goal=lambda w: _near(w.objects["can"].pose, (0.6, -0.3)) and
        _near(w.objects["bowl"].pose, (0.3, -0.1)),
        goal_desc="can and bowl positions exchanged",
        expected_sentence=("five", ("can", "bowl"), ()),
        expected_intent=("swap", "can", ("bowl",)),
        expected_sc=2,
        sessions={
            "high_level_gesture": lambda: [
                g(0.0, "five"), g(1.0, "point", target="can"), g(2.0, "point", target="bowl")],
            "low_level_gesture": lambda: (
                ll_pick_and_place(0.0, "can", (0.3, 0.4), dest_is_point=True)
                + ll_pick_and_place(6.0, "bowl", (0.3, -0.1), dest_is_point=True)
                + ll_pick_and_place(12.0, "can", (0.6, -0.3), dest_is_point=True)),
            "teleop": lambda: teleop_session(swap_scene, (
                _move_legs(swap_scene, "can", (0.3, 0.4))
                + _move_legs(swap_scene, "bowl", (0.3, -0.1))
                + [("move", (0.3, 0.4, 0.05)), ("grasp", "can"),
                   ("move", (0.3, 0.4, 0.25)), ("move", (0.6, -0.3, 0.25)), ("release",)])),
        },
    ))
    occ_scene = standard_scene(can_in_bowl=True)
    add(Scenario(
        sid="occupied_bowl", category="evaluated",
        description="move the spam into an already occupied bowl",
        scene=occ_scene,
        goal=lambda w: _obj_in(w, "spam", "bowl") and w.objects["can"].support == ("table",),
        goal_desc="spam in the bowl, previous occupant relocated",
        expected_sentence=("thumbsup", ("spam", "bowl"), ()),
        expected_intent=("move", "spam", ("bowl",)),
        expected_sc=2,
        sessions={
            "high_level_gesture": lambda: [
                g(0.0, "thumbsup"), g(1.0, "point", target="spam"),
                g(2.0, "point", target="bowl"), brk(3.0)],
            "low_level_gesture": lambda: (
                ll_pick_and_place(0.0, "can", (0.2, -0.5), dest_is_point=True)
                + ll_pick_and_place(6.0, "spam", "bowl")),
            "teleop": lambda: teleop_session(occ_scene, (
                _move_legs(occ_scene, "can", (0.2, -0.5))
                + _move_legs(occ_scene, "spam", (0.6, -0.3)))),
        },
    ))
    return scenarios
