"""Runtime configuration: thresholds, gesture-action table, metric maps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

#: which action each gesture commands; None marks deictic-only gestures and
#: "move_put" the context-resolved move/put family
DEFAULT_GESTURE_ACTIONS = {
    "grab": "pick",
    "pinch": "place",
    "point": None,
    "two": "open",
    "three": "close",
    "four": "pour",
    "five": "swap",
    "thumbsup": "move_put",
    "swipe_up": "move_cartesian",
    "swipe_down": "move_cartesian",
    "swipe_left": "move_cartesian",
    "swipe_right": "move_cartesian",
}


@dataclass(frozen=True)
class PipelineConfig:
    source_rate: float = 90.0
    stream_rate: float = 20.0           # frame rate after resampling
    detection_rate: float = 10.0
    dynamic_window: float = 1.0         # seconds of trajectory per detection
    activation_threshold: float = 0.9
    min_event_duration: float = 0.3
    episode_timeout: float = 3.0
    visibility_debounce: float = 0.15
    action_candidate_policy: str = "last"     # last | peak
    deictic_mode: str = "palm"                # palm | finger
    deictic_sigma: float = 0.05
    deictic_cutoff: float = 0.30
    no_gesture_cutoff: float = 0.08
    dynamic_temperature: float = 0.02
    ambiguity_gap: float = 0.1
    intent_mode: str = "rules"                # rules | model
    static_mode: str = "model"                # model | rules
    static_speed_gate: float = 0.25           # m/s; faster palms mute the static channel
    static_motion_holdoff: float = 0.25       # s of stillness before statics re-arm
    metric_speed_range: tuple[float, float] = (0.0, 0.10)   # m of pinch -> 0..100 %
    metric_angle_range: tuple[float, float] = (0.0, 0.10)   # m of pinch -> 0..180 deg
    cartesian_step: float = 0.1               # m per move_cartesian swipe
    default_rotate_angle: float = 90.0        # degrees
    close_drawer_after_insert: bool = False
    primitive_failure_prob: float = 0.0
    tick_budget: int = 200
    teleop_scale: float = 1.0
    teleop_offset: tuple[float, float, float] = (0.0, 0.0, 0.0)
    teleop_max_speed: float = 0.5
    gesture_actions: dict = field(default_factory=lambda: dict(DEFAULT_GESTURE_ACTIONS))

    def with_overrides(self, **kwargs) -> "PipelineConfig":
        if "gesture_actions" in kwargs:
            merged = dict(DEFAULT_GESTURE_ACTIONS)
            merged.update(kwargs["gesture_actions"])
            kwargs = dict(kwargs, gesture_actions=merged)
        return replace(self, **kwargs)

    def to_doc(self) -> dict:
        doc = {k: getattr(self, k) for k in self.__dataclass_fields__}
        for key in ("metric_speed_range", "metric_angle_range", "teleop_offset"):
            doc[key] = list(doc[key])
        doc["schema"] = "config/v1"
        return doc

    @classmethod
    def from_doc(cls, doc: dict) -> "PipelineConfig":
        doc = {k: v for k, v in doc.items() if k != "schema"}
        for key in ("metric_speed_range", "metric_angle_range", "teleop_offset"):
            if key in doc:
                doc[key] = tuple(doc[key])
        base = {k: v for k, v in doc.items() if k in cls.__dataclass_fields__}
        cfg = cls(**{k: v for k, v in base.items() if k != "gesture_actions"})
        if "gesture_actions" in base:
            cfg = cfg.with_overrides(gesture_actions=base["gesture_actions"])
        return cfg


def load_config(path: str | None) -> PipelineConfig:
    if path is None:
        return PipelineConfig()
    with open(path, "r", encoding="utf-8") as fh:
        return PipelineConfig.from_doc(json.load(fh))


def save_config(config: PipelineConfig, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(config.to_doc(), fh, indent=2, sort_keys=True)
