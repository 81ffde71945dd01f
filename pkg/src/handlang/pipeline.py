"""The end-to-end interpreter pipeline.

Consumes timestamped inbound messages (hand frames, synthetic gesture events,
teleop frames, gripper and mode commands), runs both detection channels at
10 Hz over the 20 Hz resampled stream, segments episodes, assembles
sentences, estimates intents and reactively executes them on the world.
All timing derives from message timestamps, so a session replays
byte-identically under a fixed seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable

import numpy as np

from . import behavior, simworld
from .classify import (NO_GESTURE, DynamicTemplates, GestureSet, StaticModel, StaticRules,
                       classify_dynamic, classify_static, classify_static_deterministic,
                       dynamic_probabilities)
from .config import PipelineConfig
from .deictic import object_distances, ray_from_hand, table_point, target_object
from .episode import Episode, activations, episode_summary
from .handstream import HandFrame, parse_frame, static_features, trajectory_window
from .intent_model import IntentModel, train_intent_model
from .sentence import (ClarificationNeeded, GestureSentence, IncompleteSentenceError,
                       SentenceAssembler, estimate_intent)
from .simworld import Primitive, TeleopController, TeleopMap, apply, feasible
from .synth import default_templates, static_dataset

EVENT_SCHEMA = "event/v1"

#: messages that count as operator interactions
INTERACTION_TYPES = ("frame", "gesture", "episode_break", "grip", "mode")


def jsonable(value):
    """Recursively convert numpy/tuples so events serialize deterministically."""
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, float):
        return round(value, 9)
    return value


@dataclass
class PipelineModels:
    gesture_set: GestureSet
    static_model: StaticModel | None
    static_rules: StaticRules
    templates: DynamicTemplates
    intent_model: IntentModel | None = None


@lru_cache(maxsize=4)
def default_models(seed: int = 0, *, n_per_class: int = 120,
                   with_intent_model: bool = False) -> PipelineModels:
    """Train the bundled models once per process (deterministic per seed)."""
    from .classify import train_static

    gesture_set = GestureSet()
    x, y = static_dataset(gesture_set.static_labels, n_per_class, noise=0.004, seed=seed)
    model = train_static(x, y, gesture_set, seed=seed)
    return PipelineModels(
        gesture_set=gesture_set,
        static_model=model,
        static_rules=StaticRules(),
        templates=DynamicTemplates(templates=default_templates()),
        intent_model=train_intent_model(gesture_set, seed=seed) if with_intent_model else None,
    )


@dataclass
class _ExecutionState:
    intent: object
    tree: behavior.BehaviorTree
    last_t: float
    budget_left: int


class GesturePipeline:
    """Single-operator interpreter session over one world."""

    def __init__(self, world: simworld.WorldState, config: PipelineConfig | None = None,
                 models: PipelineModels | None = None, *, seed: int = 0,
                 mode: str = "high_level_gesture",
                 emit: Callable[[dict], None] | None = None):
        self.world = world.clone()
        self.config = config or PipelineConfig()
        self.models = models or default_models()
        self.interpreter_mode = mode        # high_level_gesture | low_level_gesture | teleop
        self.control_mode = "teleop" if mode == "teleop" else "gesture"
        self.rng = np.random.default_rng(seed)
        self.seed = seed
        self.events: list[dict] = []
        self._emit_cb = emit
        self.assembler = SentenceAssembler(self.config)
        self.teleop = TeleopController(self.world, TeleopMap(
            scale=self.config.teleop_scale, offset=self.config.teleop_offset,
            max_speed=self.config.teleop_max_speed))
        self.interaction_events = 0
        self.total_input_events = 0
        self.tick_count = 0
        self.failures: list[str] = []
        self.intents: list = []
        self.sentences: list[GestureSentence] = []
        # streaming state
        self._raw_prev: HandFrame | None = None
        self._grid_t: float | None = None
        self._frames20: list[HandFrame] = []
        self._next_detect_t: float | None = None
        # episode machine
        self._run_start: float | None = None
        self._ep_open_t: float | None = None
        self._last_visible_t: float | None = None
        self._static_tl: list = []
        self._dynamic_tl: list = []
        self._payloads: list = []
        # low-level command target
        self._selected = None
        self._last_motion_t = -math.inf
        # recent pointer-ray resolutions, consumed by the next point gesture
        self._ray_votes: list[dict] = []
        self._execution: _ExecutionState | None = None
        self._last_t = 0.0

    # -- outbound ------------------------------------------------------------

    def emit(self, etype: str, t: float, **data) -> dict:
        event = {"schema": EVENT_SCHEMA, "type": etype, "t": round(float(t), 6)}
        event.update(jsonable(data))
        self.events.append(event)
        if self._emit_cb is not None:
            self._emit_cb(event)
        return event

    # -- inbound -------------------------------------------------------------

    def handle(self, message: dict) -> None:
        t = float(message.get("t", self._last_t))
        mtype = message.get("type")
        self.total_input_events += 1
        if mtype in INTERACTION_TYPES:
            self.interaction_events += 1
        self._advance_execution(t)
        self._last_t = max(self._last_t, t)
        if mtype == "frame":
            frame = message["frame"]
            if isinstance(frame, dict):
                frame = parse_frame(frame)
            self._on_frame(frame)
        elif mtype == "gesture":
            self._on_synthetic_gesture(message, t)
        elif mtype == "ray":
            self._on_ray(message, t)
        elif mtype == "episode_break":
            self._consume_episode(Episode(start=t, end=t, events=(), reason="hand_lost"), t)
        elif mtype == "mode":
            self._on_mode(message, t)
        elif mtype == "grip":
            self._on_grip(message, t)
        elif mtype == "perturb":
            p = simworld.Perturbation(kind=message["kind"], params=message.get("params", {}))
            self.world = simworld.perturb(self.world, p, rng=self.rng)
            self.emit("world", t, snapshot=self.world.to_doc(), cause="perturbation")
        else:
            self.emit("error", t, message=f"unknown message type {mtype!r}")

    def _on_ray(self, message: dict, t: float) -> None:
        """Pointer-driven deictic ray from the console: resolve and remember."""
        from .deictic import Ray

        try:
            ray = Ray(p1=np.asarray(message["p1"], dtype=float),
                      p2=np.asarray(message["p2"], dtype=float))
        except (KeyError, ValueError) as exc:
            self.emit("error", t, message=f"bad ray: {exc}")
            return
        dists = object_distances(ray, self.world, sigma=self.config.deictic_sigma,
                                 cutoff=self.config.deictic_cutoff)
        target = target_object(dists)
        hit = table_point(ray, self.world)
        self._ray_votes.append({"target": target,
                                "table_point": None if hit is None else
                                (float(hit[0]), float(hit[1]))})
        if len(self._ray_votes) > 32:
            self._ray_votes.pop(0)
        self.emit("deictic", t, target=target,
                  table_point=None if hit is None else [float(hit[0]), float(hit[1])],
                  probabilities=dists.probabilities)

    def _resolve_ray_votes(self) -> dict:
        """Majority object over the recent drag; table point as the fallback."""
        from .episode import majority_target

        votes = self._ray_votes[-12:]
        self._ray_votes = []
        payload: dict = {}
        target = majority_target([v["target"] for v in votes if v["target"] is not None])
        if target is not None:
            payload["target"] = target
        else:
            points = [v["table_point"] for v in votes if v["table_point"] is not None]
            if points:
                payload["table_point"] = points[len(points) // 2]
        return payload

    def _on_synthetic_gesture(self, message: dict, t: float) -> None:
        """Fabricate a one-event episode (UI buttons, scripted sessions)."""
        from .episode import GestureEvent

        label = message.get("label")
        duration = float(message.get("duration", 0.6))
        payload: dict = {}
        channel = "static"
        if label == "point":
            channel = "deictic"
            if message.get("target") is not None:
                payload["target"] = message["target"]
            if message.get("table_point") is not None:
                payload["table_point"] = tuple(message["table_point"])
            if not payload:
                payload = self._resolve_ray_votes()
        elif label in self.models.gesture_set.dynamic_labels:
            channel = "dynamic"
        if message.get("metric") is not None:
            payload["metric_samples"] = [float(message["metric"])] * 5
        event = GestureEvent(label=label, channel=channel, start=t, end=t + duration,
                             peak_probability=float(message.get("probability", 0.97)),
                             payload=payload)
        episode = Episode(start=t, end=t + duration, events=(event,), reason="hand_lost")
        self._consume_episode(episode, t + duration)

    def advance(self, dt: float) -> None:
        """Advance pending execution by dt seconds of session time.

        The live service pumps this on a wall-clock timer so plans progress
        while the operator is idle; replay never calls it (messages and
        flush() drive everything there, deterministically).
        """
        if self._execution is None:
            return
        target = max(self._last_t, self._execution.last_t) + dt
        self._advance_execution(target)
        self._last_t = max(self._last_t, target)

    def flush(self, end_t: float | None = None) -> None:
        """End of session: close any open episode and run execution to rest."""
        t = end_t if end_t is not None else self._last_t
        if self._ep_open_t is not None and self._last_visible_t is not None:
            self._close_episode(self._last_visible_t, "hand_lost")
        while self._execution is not None:
            self._execution.last_t += 1.0 / self.config.stream_rate
            self._last_t = max(self._last_t, self._execution.last_t)
            self._execution_tick(self._execution.last_t)

    # -- control modes ---------------------------------------------------------

    def _on_mode(self, message: dict, t: float) -> None:
        mode = message.get("mode")
        if mode not in ("gesture", "teleop"):
            self.emit("error", t, message=f"unknown mode {mode!r}")
            return
        self.control_mode = mode
        if mode == "teleop":
            self.teleop.last_target = self.world.gripper.pose.copy()
            self.teleop.last_time = t
        self.emit("mode_ack", t, mode=mode,
                  paused_plan=self._execution is not None and mode == "teleop")

    def _on_grip(self, message: dict, t: float) -> None:
        action = message.get("action")
        if action == "grasp":
            target = self._nearest_graspable()
            if target is None:
                self.emit("error", t, message="grip: no graspable object under the gripper")
                return
            for prim in (Primitive("approach", target=target), Primitive("grasp", target=target)):
                ok, reason = feasible(self.world, prim)
                if not ok:
                    self.emit("error", t, message=f"grip: {prim} infeasible ({reason})")
                    return
                self.world, _ = apply(self.world, prim)
            self.emit("step", t, primitive=str(Primitive("grasp", target=target)), ok=True)
        elif action == "release":
            prim = Primitive("release")
            ok, reason = feasible(self.world, prim)
            if not ok:
                self.emit("error", t, message=f"grip: release infeasible ({reason})")
                return
            self.world, _ = apply(self.world, prim)
            self.emit("step", t, primitive="release()", ok=True)
        else:
            self.emit("error", t, message=f"unknown grip action {action!r}")
            return
        self.emit("world", t, snapshot=self.world.to_doc())

    def _nearest_graspable(self) -> str | None:
        g = self.world.gripper.pose
        best = None
        for obj in self.world.objects.values():
            if obj.support is None:
                continue
            d = math.hypot(obj.pose[0] - g[0], obj.pose[1] - g[1])
            if d <= simworld.SNAP_RADIUS and self.world.object_on(obj.oid) is None:
                # nearest wins; at the same spot the higher object (stack top,
                # container contents) is the one under the fingers
                key = (round(d, 9), -float(obj.pose[2]), obj.oid)
                if best is None or key < best[0]:
                    best = (key, obj.oid)
        return best[1] if best else None

    # -- frame path -------------------------------------------------------------

    def _on_frame(self, frame: HandFrame) -> None:
        if self.control_mode == "teleop":
            target = self.teleop.step(frame)
            self.world.gripper.pose = target.copy()
            simworld._sync_held(self.world)
            self.emit("teleop", frame.timestamp, target=target.tolist())
            return
        if self._grid_t is None:
            self._grid_t = frame.timestamp
        period = 1.0 / self.config.stream_rate
        while frame.timestamp >= self._grid_t - 1e-9:
            prev = self._raw_prev
            if prev is not None and abs(prev.timestamp - self._grid_t) <= abs(frame.timestamp - self._grid_t):
                chosen = prev
            else:
                chosen = frame
            self._push_resampled(replace(chosen, timestamp=self._grid_t))
            self._grid_t += period
        self._raw_prev = frame

    def _push_resampled(self, frame: HandFrame) -> None:
        self._frames20.append(frame)
        horizon = self.config.dynamic_window + 1.0
        while self._frames20 and self._frames20[0].timestamp < frame.timestamp - horizon:
            self._frames20.pop(0)
        self._episode_machine(frame)
        if self._next_detect_t is None:
            self._next_detect_t = frame.timestamp
        detect_period = 1.0 / self.config.detection_rate
        while frame.timestamp >= self._next_detect_t - 1e-9:
            self._detect(self._next_detect_t)
            self._next_detect_t += detect_period

    def _episode_machine(self, frame: HandFrame) -> None:
        t = frame.timestamp
        debounce = self.config.visibility_debounce
        if frame.visible:
            if self._last_visible_t is not None and t - self._last_visible_t > debounce:
                # gap too long: close or abandon the run
                if self._ep_open_t is not None:
                    self._close_episode(self._last_visible_t, "hand_lost")
                self._run_start = None
            if self._run_start is None:
                self._run_start = t
                self._reset_timelines()
            if self._ep_open_t is None and t - self._run_start > debounce:
                self._ep_open_t = self._run_start
                self.emit("episode_open", self._run_start)
            if self._ep_open_t is not None and t - self._ep_open_t > self.config.episode_timeout:
                self._close_episode(self._ep_open_t + self.config.episode_timeout, "timeout")
                self._run_start = t
                self._ep_open_t = t
                self._reset_timelines()
                self.emit("episode_open", t)
            self._last_visible_t = t
        else:
            if self._ep_open_t is not None and self._last_visible_t is not None \
                    and t - self._last_visible_t > debounce:
                self._close_episode(self._last_visible_t, "hand_lost")
                self._run_start = None
            if self._ep_open_t is None and self._last_visible_t is not None \
                    and t - self._last_visible_t > debounce:
                self._run_start = None

    def _reset_timelines(self) -> None:
        self._static_tl = []
        self._dynamic_tl = []
        self._payloads = []

    def _palm_speed(self, t: float) -> float:
        recent = [f for f in self._frames20 if f.visible and f.timestamp <= t + 1e-9]
        if len(recent) < 2:
            return 0.0
        a, b = recent[-2], recent[-1]
        dt = b.timestamp - a.timestamp
        if dt <= 0 or dt > 0.11:  # frames spanning an invisibility gap: re-entry, not motion
            return 0.0
        return float(np.linalg.norm(b.palm_position - a.palm_position)) / dt

    def _detect(self, t: float) -> None:
        frame = self._frames20[-1]
        gs = self.models.gesture_set
        static_probs = {l: 1.0 / len(gs.static_labels) for l in gs.static_labels}
        payload: dict = {}
        visible = frame.visible and abs(frame.timestamp - t) <= 0.1
        if visible and self._palm_speed(t) > self.config.static_speed_gate:
            self._last_motion_t = t
        # static gestures are held poses: mute the channel while the palm
        # moves and briefly after it stops
        static_armed = t - self._last_motion_t >= self.config.static_motion_holdoff
        if visible and static_armed:
            fv = static_features(frame)
            if self.config.static_mode == "rules" or self.models.static_model is None:
                label = classify_static_deterministic(self.models.static_rules, fv,
                                                      gs.static_labels)
                static_probs = {l: (1.0 if l == label else 0.0) for l in gs.static_labels}
            else:
                probs = classify_static(self.models.static_model, fv)
                static_probs = {l: float(p) for l, p in zip(self.models.static_model.labels, probs)}
        dynamic_probs = {l: (1.0 if l == NO_GESTURE else 0.0) for l in gs.dynamic_labels}
        traj = trajectory_window(self._frames20, self.config.dynamic_window, t,
                                 rate=self.config.stream_rate)
        if len(traj) >= 4:
            _, dists = classify_dynamic(self.models.templates, traj,
                                        cutoff=self.config.no_gesture_cutoff)
            dynamic_probs = dynamic_probabilities(dists, cutoff=self.config.no_gesture_cutoff,
                                                  temperature=self.config.dynamic_temperature)
        if visible:
            payload["metric"] = float(np.linalg.norm(frame.fingertips[0] - frame.fingertips[1]))
            best_static = max(static_probs, key=static_probs.get)
            if best_static == "point":
                ray = ray_from_hand(frame, self.config.deictic_mode)
                dists = object_distances(ray, self.world, sigma=self.config.deictic_sigma,
                                         cutoff=self.config.deictic_cutoff)
                payload["target"] = target_object(dists)
                hit = table_point(ray, self.world)
                if hit is not None:
                    payload["table_point"] = (float(hit[0]), float(hit[1]))
                self.emit("deictic", t, target=payload.get("target"),
                          table_point=payload.get("table_point"),
                          probabilities=dists.probabilities)
        self._static_tl.append((t, static_probs))
        self._dynamic_tl.append((t, dynamic_probs))
        self._payloads.append(payload)
        self.emit("probs", t, static=static_probs, dynamic=dynamic_probs)

    def _close_episode(self, end_t: float, reason: str) -> None:
        start_t = self._ep_open_t
        self._ep_open_t = None
        if start_t is None:
            return
        in_window = [i for i, (ts, _) in enumerate(self._static_tl) if ts <= end_t + 1e-9]
        static_tl = [self._static_tl[i] for i in in_window]
        payloads = [self._payloads[i] for i in in_window]
        dynamic_tl = [s for s in self._dynamic_tl if s[0] <= end_t + 1e-9]
        events = activations(static_tl, channel="static",
                             threshold=self.config.activation_threshold,
                             min_duration=self.config.min_event_duration,
                             period=1.0 / self.config.detection_rate, payloads=payloads)
        events = [replace(e, channel="deictic") if e.label == "point" else e for e in events]
        dyn = activations(dynamic_tl, channel="dynamic",
                          threshold=self.config.activation_threshold,
                          min_duration=self.config.min_event_duration,
                          period=1.0 / self.config.detection_rate)
        events += [e for e in dyn if e.label != NO_GESTURE]
        events.sort(key=lambda e: (e.start, e.label))
        episode = Episode(start=start_t, end=end_t, events=tuple(events), reason=reason)
        self._consume_episode(episode, end_t)

    # -- episode consumption ---------------------------------------------------

    def _action_labels(self) -> tuple[str, ...]:
        return tuple(l for l, a in self.config.gesture_actions.items() if a is not None)

    def _consume_episode(self, episode: Episode, t: float) -> None:
        summary = episode_summary(episode, action_labels=self._action_labels(),
                                  policy=self.config.action_candidate_policy)
        self.emit("episode_close", t, start=episode.start, end=episode.end,
                  reason=episode.reason,
                  events=[{"label": e.label, "channel": e.channel, "start": e.start,
                           "end": e.end, "peak": e.peak_probability,
                           "payload": e.payload} for e in summary.events],
                  action_candidate=(summary.action_candidate.label
                                    if summary.action_candidate else None))
        if self.interpreter_mode == "low_level_gesture":
            self._low_level_command(summary, t)
            return
        try:
            sentence = self.assembler.feed(summary, self.world)
        except IncompleteSentenceError as exc:
            self.emit("error", t, message=str(exc), missing=exc.missing)
            return
        state = self.assembler.state
        if state.sentence is not None and not state.complete:
            self.emit("sentence", t, state="in_progress",
                      action_label=state.sentence.action_label,
                      refs=list(state.sentence.refs),
                      metrics=[m.mapped for m in state.sentence.metrics])
        if sentence is None:
            return
        self.sentences.append(sentence)
        self.emit("sentence", t, state="complete", action_label=sentence.action_label,
                  refs=list(sentence.refs), metrics=[m.mapped for m in sentence.metrics])
        try:
            intent = estimate_intent(sentence, None, self.world, self.config,
                                     self.models.intent_model)
        except ClarificationNeeded as exc:
            self.emit("clarification", t, candidates=exc.candidates[:3])
            return
        self.intents.append(intent)
        self.emit("intent", t, action=intent.action, target_object=intent.target_object,
                  ap=list(intent.ap))
        tree = behavior.build_tree(intent, self.world, self.config)
        self.emit("plan", t, action=intent.action, outline=behavior.render_tree(tree.root))
        self._execution = _ExecutionState(intent=intent, tree=tree, last_t=t,
                                          budget_left=self.config.tick_budget)

    def _low_level_command(self, summary, t: float) -> None:
        """Each episode is one micro-command in low-level mode."""
        for event in summary.events:
            if event.channel == "deictic":
                target = event.payload.get("target")
                point = event.payload.get("table_point")
                self._selected = target if target is not None else (
                    ("point",) + tuple(point) if point is not None else self._selected)
                self.emit("selected", t, target=self._selected)
        candidate = summary.action_candidate
        if candidate is None:
            return
        label = candidate.label
        prims: list[Primitive] = []
        if label == "grab" and isinstance(self._selected, str):
            prims = [Primitive("approach", target=self._selected),
                     Primitive("grasp", target=self._selected)]
        elif label == "pinch":
            prims = [Primitive("release")]
        elif label in ("two", "three") and isinstance(self._selected, str):
            kind = "open_drawer" if label == "two" else "close_drawer"
            prims = [Primitive(kind, target=self._selected)]
        elif label == "four" and isinstance(self._selected, str):
            prims = [Primitive("tilt", target=self._selected)]
        elif label == "thumbsup" and self._selected is not None:
            if isinstance(self._selected, str):
                prims = [Primitive("move_to", target=self._selected)]
            else:
                prims = [Primitive("move_to", point=self._selected[1:])]
        elif label.startswith("swipe"):
            from .sentence import SWIPE_STEPS
            step = np.asarray(SWIPE_STEPS[label]) * self.config.cartesian_step
            target = self.world.gripper.pose[:3] + step
            prims = [Primitive("move_to", point=tuple(float(v) for v in target))]
        for prim in prims:
            ok, reason = feasible(self.world, prim)
            if not ok:
                self.emit("error", t, message=f"low-level {prim}: {reason}")
                return
            self.world, _ = apply(self.world, prim)
            self.tick_count += 1
            self.emit("step", t, primitive=str(prim), ok=True)
        if prims:
            self.emit("world", t, snapshot=self.world.to_doc())

    # -- execution loop ----------------------------------------------------------

    def _advance_execution(self, to_t: float) -> None:
        if self.control_mode == "teleop":
            return
        period = 1.0 / self.config.stream_rate
        while self._execution is not None and self._execution.last_t + period <= to_t + 1e-9:
            self._execution.last_t += period
            self._execution_tick(self._execution.last_t)

    def _execution_tick(self, t: float) -> None:
        ex = self._execution
        result = behavior.tick(ex.tree, self.world)
        self.tick_count += 1
        if result.status != "running":
            self.emit("plan_done", t, action=ex.intent.action, status=result.status,
                      reason=result.reason)
            self.emit("world", t, snapshot=self.world.to_doc())
            if result.status == "failure":
                self.failures.append(result.reason or "failure")
            self._execution = None
            return
        ex.budget_left -= 1
        if ex.budget_left <= 0:
            self.emit("plan_done", t, action=ex.intent.action, status="failure",
                      reason="livelock")
            self.failures.append("livelock")
            self._execution = None
            return
        prim = result.primitive
        ok, reason = feasible(self.world, prim)
        if not ok:
            # the world changed under us; replan on the next tick
            return
        self.world, applied = apply(self.world, prim, rng=self.rng,
                                    failure_prob=self.config.primitive_failure_prob)
        self.emit("step", t, primitive=str(prim), ok=applied)
        if applied:
            self.emit("world", t, snapshot=self.world.to_doc())
