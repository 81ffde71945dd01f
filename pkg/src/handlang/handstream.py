"""Hand-skeleton frame streams: parsing, validation, resampling and featurization."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

STREAM_SCHEMA = "handstream/v1"
FEATURE_LAYOUT_TAG = "v1"
FINGER_NAMES = ("thumb", "index", "middle", "ring", "pinky")

#: adjacent finger pairs used for inter-finger angles; the bone-2 block drops
#: the thumb-index pair (layout v1 has exactly 57 entries).
ADJACENT_PAIRS_B1 = ((0, 1), (1, 2), (2, 3), (3, 4))
ADJACENT_PAIRS_B2 = ((1, 2), (2, 3), (3, 4))


class ParseError(ValueError):
    """Malformed hand-frame record."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class StreamError(ValueError):
    """Stream-level violation (e.g. non-monotonic timestamps)."""


@dataclass(frozen=True, eq=False)
class HandFrame:
    """One time-stamped hand-skeleton observation.

    Invisible frames carry no skeleton: every geometric field is None.
    Positions are meters, timestamps seconds, angles radians.
    """

    timestamp: float
    visible: bool
    palm_position: np.ndarray | None = None      # (3,)
    palm_direction: np.ndarray | None = None     # unit (3,)
    palm_normal: np.ndarray | None = None        # unit (3,)
    z_rotation: float | None = None              # hand rotation about the vertical axis
    fingers: np.ndarray | None = None            # (5, 4, 2, 3) bone start/end per finger
    fingertips: np.ndarray | None = None         # (5, 3)

    def validate(self, *, unit_tol: float = 1e-6, chain_tol: float = 1e-9) -> None:
        """Raise ValueError if skeleton invariants do not hold."""
        if not self.visible:
            return
        for name in ("palm_position", "palm_direction", "palm_normal", "fingers", "fingertips"):
            if getattr(self, name) is None:
                raise ValueError(f"visible frame missing {name}")
        for name in ("palm_direction", "palm_normal"):
            vec = getattr(self, name)
            if abs(float(np.linalg.norm(vec)) - 1.0) > unit_tol:
                raise ValueError(f"{name} is not unit length")
        if self.fingers.shape != (5, 4, 2, 3):
            raise ValueError(f"fingers shape {self.fingers.shape}, expected (5, 4, 2, 3)")
        gaps = np.linalg.norm(self.fingers[:, 1:, 0, :] - self.fingers[:, :-1, 1, :], axis=-1)
        if float(gaps.max(initial=0.0)) > chain_tol:
            raise ValueError("bone chain disconnected: bone k end != bone k+1 start")


@dataclass(frozen=True)
class FeatureVector:
    """57 static hand features (15 pairwise distances + 42 joint angles)."""

    values: np.ndarray
    layout_tag: str = FEATURE_LAYOUT_TAG

    def __post_init__(self):
        if self.values.shape != (57,):
            raise ValueError(f"feature vector has {self.values.shape} entries, expected (57,)")


@dataclass(frozen=True)
class Trajectory:
    """Ordered palm-center positions sampled at a fixed rate."""

    points: np.ndarray  # (N, 3)
    rate: float

    def __post_init__(self):
        if self.points.ndim != 2 or (len(self.points) and self.points.shape[1] != 3):
            raise ValueError("trajectory points must be (N, 3)")

    def __len__(self) -> int:
        return len(self.points)


def derive_z_rotation(palm_direction: np.ndarray) -> float:
    """Angle of the palm direction projected onto the horizontal plane."""
    return math.atan2(float(palm_direction[1]), float(palm_direction[0]))


def _vec3(record: dict, key: str, line: int | None) -> np.ndarray:
    value = record.get(key)
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise ParseError(f"field '{key}' must be a 3-vector", line)
    try:
        return np.asarray(value, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"field '{key}' is not numeric: {exc}", line) from None


def parse_frame(record: dict, line: int | None = None) -> HandFrame:
    """Build a HandFrame from one structured record.

    Invisible records need only a timestamp; visible ones need the full
    skeleton. Fingertips default to the distal bone ends, z_rotation to the
    horizontal palm-direction angle.
    """
    if not isinstance(record, dict):
        raise ParseError("record is not an object", line)
    if "t" not in record:
        raise ParseError("record missing timestamp 't'", line)
    try:
        timestamp = float(record["t"])
    except (TypeError, ValueError):
        raise ParseError("timestamp 't' is not a number", line) from None
    visible = bool(record.get("visible", True))
    if not visible:
        return HandFrame(timestamp=timestamp, visible=False)

    palm_position = _vec3(record, "palm_position", line)
    palm_direction = _vec3(record, "palm_direction", line)
    palm_normal = _vec3(record, "palm_normal", line)
    raw_fingers = record.get("fingers")
    try:
        fingers = np.asarray(raw_fingers, dtype=float)
    except (TypeError, ValueError):
        raise ParseError("field 'fingers' is not numeric", line) from None
    if fingers.shape != (5, 4, 2, 3):
        raise ParseError("field 'fingers' must be 5 fingers x 4 bones x start/end x 3", line)
    if "fingertips" in record:
        fingertips = np.asarray(record["fingertips"], dtype=float)
        if fingertips.shape != (5, 3):
            raise ParseError("field 'fingertips' must be 5 x 3", line)
    else:
        fingertips = fingers[:, 3, 1, :].copy()
    z_rotation = float(record["z_rotation"]) if "z_rotation" in record else derive_z_rotation(palm_direction)
    frame = HandFrame(
        timestamp=timestamp,
        visible=True,
        palm_position=palm_position,
        palm_direction=palm_direction,
        palm_normal=palm_normal,
        z_rotation=z_rotation,
        fingers=fingers,
        fingertips=fingertips,
    )
    try:
        frame.validate()
    except ValueError as exc:
        raise ParseError(str(exc), line) from None
    return frame


def frame_to_record(frame: HandFrame) -> dict:
    """Inverse of parse_frame (used by stream writers and the event channel)."""
    if not frame.visible:
        return {"t": frame.timestamp, "visible": False}
    return {
        "t": frame.timestamp,
        "visible": True,
        "palm_position": frame.palm_position.tolist(),
        "palm_direction": frame.palm_direction.tolist(),
        "palm_normal": frame.palm_normal.tolist(),
        "z_rotation": frame.z_rotation,
        "fingers": frame.fingers.tolist(),
        "fingertips": frame.fingertips.tolist(),
    }


def read_stream(lines: Iterable[str]) -> list[HandFrame]:
    """Read a line-delimited frame stream (header line first, one frame per line)."""
    frames: list[HandFrame] = []
    last_t = None
    header_seen = False
    for lineno, raw in enumerate(lines, start=1):
        raw = raw.strip()
        if not raw:
            continue
        try:
            record = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid record: {exc.msg}", lineno) from None
        if not header_seen:
            if not isinstance(record, dict) or record.get("schema") != STREAM_SCHEMA:
                raise ParseError(f"missing schema header (expected schema={STREAM_SCHEMA!r})", lineno)
            header_seen = True
            continue
        frame = parse_frame(record, line=lineno)
        if last_t is not None and frame.timestamp <= last_t:
            raise StreamError(f"line {lineno}: timestamp {frame.timestamp} not increasing (last {last_t})")
        last_t = frame.timestamp
        frames.append(frame)
    if not header_seen:
        raise ParseError("empty stream: schema header required", None)
    return frames


def read_stream_file(path) -> list[HandFrame]:
    with open(path, "r", encoding="utf-8") as fh:
        return read_stream(fh)


def write_stream_file(path, frames: Sequence[HandFrame]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps({"schema": STREAM_SCHEMA}) + "\n")
        for frame in frames:
            fh.write(json.dumps(frame_to_record(frame)) + "\n")


def resample(frames: Sequence[HandFrame], target_rate: float = 20.0) -> list[HandFrame]:
    """Downsample a stream onto a uniform target-rate grid.

    Each output frame is the nearest-in-time input frame (no interpolation;
    ties resolve to the earlier frame) with its timestamp snapped to the grid.
    Idempotent: resampling an already-gridded stream is the identity.
    """
    if not frames:
        return []
    t0 = frames[0].timestamp
    span = frames[-1].timestamp - t0
    count = int(math.floor(span * target_rate + 1e-9)) + 1
    source_t = np.array([f.timestamp for f in frames])
    out = []
    for k in range(count):
        grid_t = t0 + k / target_rate  # k/rate, not k*(1/rate): exact on-grid match
        i = int(np.argmin(np.abs(source_t - grid_t)))
        out.append(replace(frames[i], timestamp=grid_t))
    return out


def _angle(u: np.ndarray, v: np.ndarray) -> float:
    """Angle between two vectors in [0, pi].

    atan2(|u x v|, u.v) rather than acos: stable near collinearity, where
    acos loses ~1e-8 and would break the rigid-motion invariance tolerance.
    """
    if float(np.dot(u, u)) < 1e-24 or float(np.dot(v, v)) < 1e-24:
        return 0.0
    c = np.cross(u, v)
    return float(math.atan2(math.sqrt(float(np.dot(c, c))), float(np.dot(u, v))))


def feature_names(layout_tag: str = FEATURE_LAYOUT_TAG) -> list[str]:
    """Human-readable name per feature index, pinned per layout tag."""
    if layout_tag != FEATURE_LAYOUT_TAG:
        raise ValueError(f"unknown layout tag {layout_tag!r}")
    points = list(FINGER_NAMES) + ["palm"]
    names = [f"dist:{points[i]}-{points[j]}" for i, j in combinations(range(6), 2)]
    for f in FINGER_NAMES:
        names += [f"angle:{f}:bone{k}-bone{k + 1}" for k in range(3)]
    names += [f"angle:{f}:bone1-palm_dir" for f in FINGER_NAMES]
    names += [f"angle:{f}:bone1-palm_normal" for f in FINGER_NAMES]
    names += [f"angle:{FINGER_NAMES[i]}-{FINGER_NAMES[j]}:bone1" for i, j in ADJACENT_PAIRS_B1]
    names += [f"angle:{f}:bone2-palm_dir" for f in FINGER_NAMES]
    names += [f"angle:{f}:bone2-palm_normal" for f in FINGER_NAMES]
    names += [f"angle:{FINGER_NAMES[i]}-{FINGER_NAMES[j]}:bone2" for i, j in ADJACENT_PAIRS_B2]
    assert len(names) == 57
    return names


def static_features(frame: HandFrame) -> FeatureVector:
    """Extract the 57 static features from a visible frame (layout v1).

    0-14: pairwise distances among the 5 fingertips and the palm center, in
    (thumb, index, middle, ring, pinky, palm) combination order. 15-56: joint
    angles between bone direction vectors and the palm axes.
    """
    if not frame.visible:
        raise ValueError("static features require a visible frame")
    points = np.vstack([frame.fingertips, frame.palm_position])  # (6, 3)
    dists = [float(np.linalg.norm(points[i] - points[j])) for i, j in combinations(range(6), 2)]

    bone_dirs = frame.fingers[:, :, 1, :] - frame.fingers[:, :, 0, :]  # (5, 4, 3)
    angles: list[float] = []
    for f in range(5):
        for k in range(3):
            angles.append(_angle(bone_dirs[f, k], bone_dirs[f, k + 1]))
    for axis in (frame.palm_direction, frame.palm_normal):
        for f in range(5):
            angles.append(_angle(bone_dirs[f, 1], axis))
    for i, j in ADJACENT_PAIRS_B1:
        angles.append(_angle(bone_dirs[i, 1], bone_dirs[j, 1]))
    for axis in (frame.palm_direction, frame.palm_normal):
        for f in range(5):
            angles.append(_angle(bone_dirs[f, 2], axis))
    for i, j in ADJACENT_PAIRS_B2:
        angles.append(_angle(bone_dirs[i, 2], bone_dirs[j, 2]))

    values = np.array(dists + angles, dtype=float)
    return FeatureVector(values=values)


def trajectory_window(frames: Sequence[HandFrame], window: float, now: float,
                      rate: float = 20.0) -> Trajectory:
    """Palm-center points of visible frames with timestamps in (now - window, now]."""
    pts = [f.palm_position for f in frames
           if f.visible and now - window < f.timestamp <= now]
    if not pts:
        return Trajectory(points=np.zeros((0, 3)), rate=rate)
    return Trajectory(points=np.vstack(pts), rate=rate)
