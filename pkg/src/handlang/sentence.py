"""Gesture sentences: slot specs, metric extraction, assembly, intent estimation.

A sentence is (action gesture, deictic references, metric parameters); the
resolved intent is (target action, target object, auxiliary parameters) with
context rules for the move/put family and for actions on a held object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from statistics import median
from typing import Sequence

import numpy as np

from .config import PipelineConfig
from .episode import EpisodeSummary

ACTIONS = ("move_cartesian", "rotate", "place", "pick", "put", "pour",
           "open", "close", "swap", "move")

#: swipe label -> unit cartesian step direction (x forward, y left, z up)
SWIPE_STEPS = {
    "swipe_up": (0.0, 0.0, 1.0),
    "swipe_down": (0.0, 0.0, -1.0),
    "swipe_left": (0.0, 1.0, 0.0),
    "swipe_right": (0.0, -1.0, 0.0),
}


class UnknownActionError(ValueError):
    pass


class IncompleteSentenceError(ValueError):
    """Completion signalled with required slots still unfilled."""

    def __init__(self, action: str, missing: list[str]):
        self.action = action
        self.missing = missing
        super().__init__(f"incomplete sentence for {action!r}: missing {', '.join(missing)}")


class ClarificationNeeded(RuntimeError):
    """Intent distribution too flat; the UI should ask for a re-demonstration."""

    def __init__(self, candidates: list[tuple[str, float]]):
        self.candidates = candidates
        top = ", ".join(f"{a} ({p:.2f})" for a, p in candidates[:2])
        super().__init__(f"ambiguous intent: {top}")


@dataclass(frozen=True)
class MetricSlot:
    name: str          # speed | angle
    default: float | None


@dataclass(frozen=True)
class ActionSlotSpec:
    action: str
    object_slots: int
    location_slots: int
    metric_slots: tuple[MetricSlot, ...] = ()

    @property
    def ref_slots(self) -> int:
        return self.object_slots + self.location_slots


def required_slots(action: str, *, holding: bool = False,
                   config: PipelineConfig | None = None) -> ActionSlotSpec:
    """Slot spec for an action; put/pour/move/rotate shrink when holding."""
    config = config or PipelineConfig()
    angle = MetricSlot("angle", config.default_rotate_angle)
    speed = MetricSlot("speed", 100.0)
    if action == "move_cartesian":
        return ActionSlotSpec(action, 0, 0)
    if action == "place":
        return ActionSlotSpec(action, 0, 0)
    if action == "rotate":
        return ActionSlotSpec(action, 0 if holding else 1, 0, (angle,))
    if action == "pick":
        return ActionSlotSpec(action, 1, 0)
    if action in ("put", "move", "move_put"):
        return ActionSlotSpec(action, 0 if holding else 1, 1, (speed,))
    if action == "pour":
        return ActionSlotSpec(action, 0 if holding else 1, 1, (angle,))
    if action == "open":
        return ActionSlotSpec(action, 1, 0)
    if action == "close":
        return ActionSlotSpec(action, 1, 0)
    if action == "swap":
        return ActionSlotSpec(action, 2, 0)
    raise UnknownActionError(f"unknown action {action!r}")


@dataclass(frozen=True)
class MetricParameter:
    kind: str       # pinch_distance | hands_distance | point_angle
    raw: float      # meters or radians
    mapped: float   # %, degrees, or meters per the kind/action binding


@dataclass(frozen=True)
class GestureSentence:
    """(action gesture, ordered deictic references, ordered metric parameters)."""

    action_label: str
    refs: tuple = ()          # object ids or ("point", x, y) table locations
    metrics: tuple[MetricParameter, ...] = ()


@dataclass
class Intent:
    """(target action, target object, auxiliary parameters)."""

    action: str
    target_object: str | None
    locations: tuple = ()                      # ids or (x, y) points
    metrics: tuple[tuple[str, float], ...] = ()  # (name, value)
    anchors: dict | None = None                # goal anchors, frozen per intent

    @property
    def ap(self) -> tuple:
        """Auxiliary parameters in (locations..., metric values...) order."""
        return tuple(self.locations) + tuple(v for _, v in self.metrics)


def complexity(sentence: GestureSentence) -> int:
    """Filled non-action slots: S_c = len(refs) + len(metrics)."""
    return len(sentence.refs) + len(sentence.metrics)


def intent_complexity(intent: Intent) -> int:
    return (1 if intent.target_object is not None else 0) + len(intent.ap)


# --- metric gestures ----------------------------------------------------------

def metric_value(kind: str, frames, frames_b=None, *,
                 config: PipelineConfig | None = None) -> MetricParameter:
    """Continuous gesture value over a frame window (median of samples).

    pinch_distance: thumb-to-index tip distance mapped 0-10 cm -> 0-100 %.
    point_angle: signed palm-direction angle about vertical, in degrees.
    hands_distance: inter-palm distance in meters (needs the second hand).
    """
    config = config or PipelineConfig()
    visible = [f for f in frames if f.visible]
    if not visible:
        raise ValueError("metric gestures need visible frames")
    if kind == "pinch_distance":
        samples = [float(np.linalg.norm(f.fingertips[0] - f.fingertips[1])) for f in visible]
        raw = median(samples)
        return MetricParameter(kind, raw, map_metric(raw, "speed", config))
    if kind == "point_angle":
        samples = [math.atan2(float(f.palm_direction[1]), float(f.palm_direction[0]))
                   for f in visible]
        raw = median(samples)
        return MetricParameter(kind, raw, math.degrees(raw))
    if kind == "hands_distance":
        if frames_b is None:
            raise ValueError("hands_distance requires the second hand's frames")
        other = [f for f in frames_b if f.visible]
        if not other:
            raise ValueError("metric gestures need visible frames")
        n = min(len(visible), len(other))
        samples = [float(np.linalg.norm(visible[i].palm_position - other[i].palm_position))
                   for i in range(n)]
        raw = median(samples)
        return MetricParameter(kind, raw, raw)
    raise ValueError(f"unknown metric kind {kind!r}")


def map_metric(raw: float, slot_name: str, config: PipelineConfig) -> float:
    """Linear pinch-distance map, clamped at the range bounds."""
    if slot_name == "speed":
        lo, hi = config.metric_speed_range
        return 100.0 * min(1.0, max(0.0, (raw - lo) / (hi - lo)))
    if slot_name == "angle":
        lo, hi = config.metric_angle_range
        return 180.0 * min(1.0, max(0.0, (raw - lo) / (hi - lo)))
    raise ValueError(f"unknown metric slot {slot_name!r}")


# --- assembly -------------------------------------------------------------------

def resolve_gesture_action(label: str, config: PipelineConfig) -> str | None:
    if label not in config.gesture_actions:
        raise UnknownActionError(f"gesture {label!r} has no action mapping")
    return config.gesture_actions[label]


#: actions whose held-object short form may still be overridden by pointing
#: at an explicit target (the full two-reference form stays available)
FLEX_HELD_ACTIONS = ("put", "pour", "move", "move_put", "rotate")


@dataclass
class AssemblyState:
    sentence: GestureSentence | None = None
    spec: ActionSlotSpec | None = None
    holding_at_start: bool = False
    complete: bool = False
    max_refs: int = 0

    @property
    def in_progress(self) -> bool:
        return self.sentence is not None and not self.complete

    def missing(self) -> list[str]:
        assert self.sentence is not None and self.spec is not None
        missing = []
        have = len(self.sentence.refs)
        for i in range(self.spec.object_slots):
            if have <= i:
                missing.append(f"object[{i}]")
        for j in range(self.spec.location_slots):
            if have <= self.spec.object_slots + j:
                missing.append(f"location[{j}]")
        return missing


class SentenceAssembler:
    """Single-writer state machine turning episode summaries into sentences.

    The first episode's action candidate opens the sentence; later episodes
    fill deictic references and metric slots in slot order. An empty episode
    is the completion signal. Completed sentences are collected in order.
    """

    def __init__(self, config: PipelineConfig | None = None):
        self.config = config or PipelineConfig()
        self.state = AssemblyState()
        self.completed: list[GestureSentence] = []

    def _open(self, label: str, world) -> None:
        action = resolve_gesture_action(label, self.config)
        if action is None:
            return
        holding = world is not None and world.gripper.holding is not None
        spec = required_slots(action, holding=holding, config=self.config)
        max_refs = spec.ref_slots
        if holding and action in FLEX_HELD_ACTIONS:
            max_refs = required_slots(action, holding=False, config=self.config).ref_slots
        self.state = AssemblyState(
            sentence=GestureSentence(action_label=label),
            spec=spec,
            holding_at_start=holding,
            max_refs=max_refs,
        )
        if self._slots_filled():
            self._complete()

    def _slots_filled(self) -> bool:
        s, spec = self.state.sentence, self.state.spec
        return len(s.refs) >= spec.ref_slots and len(s.metrics) >= len(spec.metric_slots)

    def _complete(self) -> None:
        self.state.complete = True
        self.completed.append(self.state.sentence)

    def feed(self, summary: EpisodeSummary, world=None) -> GestureSentence | None:
        """Consume one episode; returns a sentence when one completes."""
        before = len(self.completed)
        events = summary.events
        if not self.state.in_progress:
            if summary.action_candidate is not None:
                self._open(summary.action_candidate.label, world)
        else:
            if not events:
                # completion signal
                missing = self.state.missing()
                if missing:
                    action = self.state.spec.action
                    self.state = AssemblyState()
                    raise IncompleteSentenceError(action, missing)
                self._complete()
            else:
                self._fill(summary, world)
        if len(self.completed) > before:
            return self.completed[-1]
        return None

    def _fill(self, summary: EpisodeSummary, world) -> None:
        state = self.state
        sentence = state.sentence
        for event in summary.events:
            if state.complete:
                break
            target = event.payload.get("target")
            point = event.payload.get("table_point")
            if event.channel == "deictic" and (target is not None or point is not None):
                if len(sentence.refs) < state.max_refs:
                    if target is not None and (world is None or target in world.objects):
                        ref = target
                    elif point is not None:
                        ref = ("point", float(point[0]), float(point[1]))
                    else:
                        continue
                    sentence = replace(sentence, refs=sentence.refs + (ref,))
                continue
            samples = event.payload.get("metric_samples")
            if samples and len(sentence.refs) >= state.spec.ref_slots and \
                    len(sentence.metrics) < len(state.spec.metric_slots):
                slot = state.spec.metric_slots[len(sentence.metrics)]
                raw = median(samples)
                metric = MetricParameter("pinch_distance", raw,
                                         map_metric(raw, slot.name, self.config))
                sentence = replace(sentence, metrics=sentence.metrics + (metric,))
        state.sentence = sentence
        if self._slots_filled():
            self._complete()


def assemble(summaries: Sequence[EpisodeSummary], world,
             config: PipelineConfig | None = None) -> GestureSentence:
    """Batch assembly of one sentence; end of input acts as completion."""
    assembler = SentenceAssembler(config)
    if not summaries or summaries[0].action_candidate is None:
        raise ValueError("first episode must contain an action candidate")
    for summary in summaries:
        result = assembler.feed(summary, world)
        if result is not None:
            return result
    state = assembler.state
    if state.in_progress:
        missing = state.missing()
        if missing:
            raise IncompleteSentenceError(state.spec.action, missing)
        assembler._complete()
        return assembler.completed[-1]
    raise ValueError("no sentence assembled")


# --- intent estimation ------------------------------------------------------------

def scene_features(world) -> np.ndarray:
    """Context features for the intent classifier."""
    holding = 1.0 if world.gripper.holding is not None else 0.0
    drawer_open = 0.0
    for obj in world.objects.values():
        if obj.is_drawer and (obj.open_fraction or 0.0) > 0.5:
            drawer_open = 1.0
    return np.array([holding, drawer_open, float(len(world.objects))])


def _resolve_family(action: str, sentence: GestureSentence, world) -> str:
    """Context rules for the move/put family (drawer destinations are puts)."""
    if action != "move_put":
        return action
    if world is not None and world.gripper.holding is not None:
        return "put"
    dest = sentence.refs[-1] if sentence.refs else None
    if isinstance(dest, str) and world is not None:
        obj = world.objects.get(dest)
        if obj is not None and obj.is_drawer:
            return "put"
    return "move"


def action_distribution(sentence: GestureSentence, world, config: PipelineConfig,
                        model=None, probs=None) -> dict[str, float]:
    """Probability over actions; rule mode is a delta at the mapped action."""
    if config.intent_mode == "model" and model is not None:
        from .intent_model import predict_action_distribution
        gesture_probs = None
        if probs is not None:
            gesture_probs = {**probs.static, **probs.dynamic}
        return predict_action_distribution(model, sentence, world, gesture_probs)
    action = _resolve_family(resolve_gesture_action(sentence.action_label, config),
                             sentence, world)
    return {a: (1.0 if a == action else 0.0) for a in ACTIONS}


def estimate_intent(sentence: GestureSentence, probs, world,
                    config: PipelineConfig | None = None, model=None) -> Intent:
    """Resolve a sentence to an intent against the scene.

    Raises ClarificationNeeded when the top-two action gap is below the
    configured ambiguity threshold (only reachable in model mode).
    """
    config = config or PipelineConfig()
    dist = action_distribution(sentence, world, config, model, probs)
    ranked = sorted(dist.items(), key=lambda kv: (-kv[1], ACTIONS.index(kv[0])))
    if len(ranked) > 1 and ranked[0][1] - ranked[1][1] < config.ambiguity_gap:
        raise ClarificationNeeded(ranked)
    action = ranked[0][0]
    if action == "move":
        # drawer destinations are insertions regardless of which mode chose
        dest = sentence.refs[-1] if sentence.refs else None
        if isinstance(dest, str) and world is not None:
            d = world.objects.get(dest)
            if d is not None and d.is_drawer:
                action = "put"
    holding = world.gripper.holding if world is not None else None
    spec = required_slots(action, holding=holding is not None, config=config)
    refs = list(sentence.refs)
    if holding is not None and action in FLEX_HELD_ACTIONS and len(refs) > spec.ref_slots:
        # the user pointed at an explicit target despite holding something:
        # fall back to the full two-reference form
        spec = required_slots(action, holding=False, config=config)

    objects = refs[: spec.object_slots]
    locations = tuple(refs[spec.object_slots: spec.object_slots + spec.location_slots])
    # every reference after the single target object is auxiliary (swap's
    # second object rides in ap)
    locations = tuple(objects[1:]) + locations
    if spec.object_slots > 0 and objects:
        target = objects[0]
    elif action in ("put", "pour", "rotate", "place", "move") and holding is not None:
        target = holding
    else:
        target = None

    metrics: list[tuple[str, float]] = []
    for i, slot in enumerate(spec.metric_slots):
        if i < len(sentence.metrics):
            metrics.append((slot.name, sentence.metrics[i].mapped))
        elif slot.default is not None and action in ("rotate", "pour"):
            metrics.append((slot.name, slot.default))

    anchors = None
    if action == "move_cartesian" and world is not None:
        step = np.asarray(SWIPE_STEPS.get(sentence.action_label, (0, 0, 0)), dtype=float)
        target_pose = world.gripper.pose[:3] + config.cartesian_step * step
        anchors = {"gripper_target": tuple(float(v) for v in target_pose)}
    if action == "swap" and world is not None and len(objects) >= 1 and locations:
        a, b = objects[0], locations[0]
        if isinstance(b, str) and a in world.objects and b in world.objects:
            anchors = {
                "pose_a": tuple(float(v) for v in world.objects[a].pose[:2]),
                "pose_b": tuple(float(v) for v in world.objects[b].pose[:2]),
                "support_a": world.objects[a].support,
                "support_b": world.objects[b].support,
            }
    if action == "rotate" and world is not None and target in world.objects:
        angle = next((v for k, v in metrics if k == "angle"), config.default_rotate_angle)
        base_yaw = float(world.objects[target].pose[3])
        anchors = {
            "target_yaw": (base_yaw + math.radians(angle)) % (2.0 * math.pi),
            "origin_xy": tuple(float(v) for v in world.objects[target].pose[:2]),
            "was_held": holding == target,
        }

    return Intent(action=action, target_object=target, locations=locations,
                  metrics=tuple(metrics), anchors=anchors)
