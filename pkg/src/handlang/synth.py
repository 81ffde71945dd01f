"""Synthetic right-hand pose and swipe generators.

The recorded sensor datasets behind the original gesture vocabulary are not
redistributable, so every classifier in this package trains and benchmarks on
poses produced here: a parametric right-hand skeleton (per-finger curl model)
and a parametric swipe generator with time warp and Gaussian noise.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .handstream import HandFrame, Trajectory, derive_z_rotation

FINGER_BASES = np.array([
    [0.005, 0.042, -0.004],    # thumb
    [0.000, 0.025, 0.000],     # index
    [0.000, 0.008, 0.000],     # middle
    [0.000, -0.009, 0.000],    # ring
    [0.000, -0.027, 0.000],    # pinky
])

FINGER_BASE_DIRS = np.array([
    [0.55, 0.83, 0.0],
    [1.0, 0.05, 0.0],
    [1.0, 0.0, 0.0],
    [1.0, -0.04, 0.0],
    [1.0, -0.09, 0.0],
])

BONE_LENGTHS = np.array([
    [0.030, 0.036, 0.024, 0.020],  # thumb
    [0.055, 0.040, 0.024, 0.018],  # index
    [0.052, 0.044, 0.027, 0.019],  # middle
    [0.048, 0.040, 0.025, 0.018],  # ring
    [0.045, 0.031, 0.019, 0.016],  # pinky
])

#: cumulative curl (rad) per bone at curl=1.0; the metacarpal never rotates
CURL_MAX = np.array([0.0, 0.9, 0.9, 0.7])

#: the thumb's trapeziometacarpal joint does move, so its metacarpal
#: participates in opposition
THUMB_CURL_MAX = np.array([0.5, 0.9, 0.9, 0.7])

#: thumb opposition: at full curl the thumb sweeps toward this direction
#: (forward, across the palm, downward) instead of folding like a finger
THUMB_OPPOSED_DIR = np.array([0.78, -0.12, -0.61])

#: per-finger curl in [0, 1] for each static gesture
STATIC_POSES = {
    "grab": (0.80, 0.88, 0.88, 0.88, 0.88),
    "pinch": (0.55, 0.70, 0.10, 0.10, 0.10),
    "point": (0.85, 0.03, 0.85, 0.85, 0.85),
    "two": (0.90, 0.03, 0.03, 0.85, 0.85),
    "three": (0.90, 0.03, 0.03, 0.03, 0.85),
    "four": (0.90, 0.03, 0.03, 0.03, 0.04),
    "five": (0.06, 0.03, 0.03, 0.03, 0.04),
    "thumbsup": (0.04, 0.88, 0.88, 0.88, 0.88),
    # deliberately ambiguous half-curl; keeps the static channel quiet while swiping
    "neutral": (0.5, 0.45, 0.45, 0.45, 0.45),
}

SWIPE_DIRECTIONS = {
    "swipe_up": np.array([0.0, 0.0, 1.0]),
    "swipe_down": np.array([0.0, 0.0, -1.0]),
    "swipe_left": np.array([0.0, 1.0, 0.0]),
    "swipe_right": np.array([0.0, -1.0, 0.0]),
}

CANONICAL_PALM_DIRECTION = np.array([1.0, 0.0, 0.0])
CANONICAL_PALM_NORMAL = np.array([0.0, 0.0, -1.0])


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def _rot_about(axis: np.ndarray, angle: float) -> np.ndarray:
    """Rodrigues rotation matrix about a unit axis."""
    x, y, z = axis
    c, s = math.cos(angle), math.sin(angle)
    cc = 1.0 - c
    return np.array([
        [c + x * x * cc, x * y * cc - z * s, x * z * cc + y * s],
        [y * x * cc + z * s, c + y * y * cc, y * z * cc - x * s],
        [z * x * cc - y * s, z * y * cc + x * s, c + z * z * cc],
    ])


def _rot_between(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minimal rotation taking unit vector a onto unit vector b."""
    c = float(np.dot(a, b))
    if c > 1.0 - 1e-12:
        return np.eye(3)
    if c < -1.0 + 1e-12:
        # pick any axis orthogonal to a
        helper = np.array([0.0, 1.0, 0.0]) if abs(a[0]) > 0.9 else np.array([1.0, 0.0, 0.0])
        axis = _unit(np.cross(a, helper))
        return _rot_about(axis, math.pi)
    axis = _unit(np.cross(a, b))
    return _rot_about(axis, math.acos(max(-1.0, min(1.0, c))))


def _slerp(a: np.ndarray, b: np.ndarray, t: float) -> np.ndarray:
    """Spherical interpolation between unit vectors, t clamped to [0, 1]."""
    t = min(1.0, max(0.0, t))
    omega = math.acos(max(-1.0, min(1.0, float(np.dot(a, b)))))
    if omega < 1e-9:
        return a
    return (math.sin((1.0 - t) * omega) * a + math.sin(t * omega) * b) / math.sin(omega)


def hand_joints(curls: Sequence[float]) -> np.ndarray:
    """Joint positions (5 fingers x 5 joints x 3) in the canonical palm frame.

    Canonical frame: palm center at the origin, palm direction +x,
    palm normal -z (palm facing down), fingers extending forward. Fingers fold
    toward the palm; the thumb opposes (sweeps across toward the index side).
    """
    joints = np.zeros((5, 5, 3))
    for f in range(5):
        d0 = _unit(FINGER_BASE_DIRS[f])
        lateral = _unit(np.cross(d0, CANONICAL_PALM_NORMAL))
        opposed = _unit(THUMB_OPPOSED_DIR)
        omega = math.acos(max(-1.0, min(1.0, float(np.dot(d0, opposed)))))
        pos = FINGER_BASES[f].copy()
        joints[f, 0] = pos
        for k in range(4):
            if f == 0:
                phi = float(curls[f]) * float(THUMB_CURL_MAX[: k + 1].sum())
                direction = _slerp(d0, opposed, phi / omega)
            else:
                phi = float(curls[f]) * float(CURL_MAX[: k + 1].sum())
                direction = _rot_about(lateral, phi) @ d0
            pos = pos + BONE_LENGTHS[f, k] * direction
            joints[f, k + 1] = pos
    return joints


def _frame_from_joints(joints: np.ndarray, *, timestamp: float, origin: np.ndarray,
                       rotation: np.ndarray, palm_direction: np.ndarray,
                       palm_normal: np.ndarray) -> HandFrame:
    placed = joints @ rotation.T + origin
    fingers = np.stack([placed[:, :4, :], placed[:, 1:, :]], axis=2)  # (5, 4, 2, 3)
    return HandFrame(
        timestamp=timestamp,
        visible=True,
        palm_position=np.asarray(origin, dtype=float),
        palm_direction=palm_direction,
        palm_normal=palm_normal,
        z_rotation=derive_z_rotation(palm_direction),
        fingers=fingers,
        fingertips=placed[:, 4, :].copy(),
    )


#: the pinch closes along the 1-D curl path (thumb=s, index=0.65*s), on which
#: the tip gap is monotone decreasing over s in [0.05, 1.08]
_PINCH_PATH_RATIO = 0.65


@lru_cache(maxsize=1)
def _pinch_gap_table() -> tuple[np.ndarray, np.ndarray]:
    scales = np.linspace(0.05, 1.08, 512)
    gaps = np.empty_like(scales)
    for i, s in enumerate(scales):
        joints = hand_joints((s, _PINCH_PATH_RATIO * s, 0.10, 0.10, 0.10))
        gaps[i] = np.linalg.norm(joints[0, 4] - joints[1, 4])
    return scales, gaps


def solve_pinch_curl(gap: float) -> tuple[float, float]:
    """Thumb/index curls whose pose puts the two tips `gap` apart.

    Inverts the monotone gap table along the pinch curl path; achievable
    range on this skeleton is about [0.018, 0.118] m (clamped outside).
    """
    scales, gaps = _pinch_gap_table()
    s = float(np.interp(gap, gaps[::-1], scales[::-1]))
    return s, _PINCH_PATH_RATIO * s


def _pinch_curls_cached(gap: float) -> tuple[float, float]:
    return solve_pinch_curl(gap)


def posed_frame(label: str, *, timestamp: float = 0.0,
                origin: Sequence[float] = (0.3, 0.0, 0.25),
                aim: Sequence[float] | None = None,
                yaw: float = 0.0,
                noise: float = 0.0,
                pinch_gap: float | None = None,
                rng: np.random.Generator | None = None) -> HandFrame:
    """One synthetic visible frame holding a static pose.

    `aim` points the palm direction at a 3D target (used for deictic
    sessions); otherwise the hand is rotated by `yaw` about vertical.
    `noise` is the joint-position jitter sigma in meters.
    """
    curls = np.array(STATIC_POSES[label], dtype=float)
    if pinch_gap is not None:
        if label != "pinch":
            raise ValueError("pinch_gap only applies to the pinch pose")
        curls[0], curls[1] = _pinch_curls_cached(round(pinch_gap, 6))
    joints = hand_joints(curls)
    origin = np.asarray(origin, dtype=float)
    if aim is not None:
        rotation = _rot_between(CANONICAL_PALM_DIRECTION, _unit(np.asarray(aim, dtype=float) - origin))
    else:
        rotation = _rot_about(np.array([0.0, 0.0, 1.0]), yaw)
    palm_direction = rotation @ CANONICAL_PALM_DIRECTION
    palm_normal = rotation @ CANONICAL_PALM_NORMAL

    if noise > 0.0:
        rng = rng if rng is not None else np.random.default_rng()
        joints = joints + rng.normal(0.0, noise, size=joints.shape)
        origin = origin + rng.normal(0.0, noise, size=3)
        wobble = rng.normal(0.0, 10.0 * noise, size=3)
        angle = float(np.linalg.norm(wobble))
        if angle > 1e-12:
            wobble_rot = _rot_about(wobble / angle, angle)
            palm_direction = wobble_rot @ palm_direction
            palm_normal = wobble_rot @ palm_normal

    return _frame_from_joints(joints, timestamp=timestamp, origin=origin,
                              rotation=rotation, palm_direction=_unit(palm_direction),
                              palm_normal=_unit(palm_normal))


def static_dataset(labels: Iterable[str], n_per_class: int, *, noise: float = 0.004,
                   seed: int = 0) -> tuple[np.ndarray, list[str]]:
    """Feature matrix and label list for a synthetic static-gesture dataset."""
    from .handstream import static_features

    rng = np.random.default_rng(seed)
    rows, y = [], []
    for label in labels:
        for _ in range(n_per_class):
            # pinch is a metric gesture: train it across its whole width range
            gap = None
            if label == "pinch":
                gap = round(float(rng.uniform(0.019, 0.104)), 3)
            frame = posed_frame(
                label,
                origin=rng.uniform([-0.1, -0.2, 0.1], [0.5, 0.2, 0.4]),
                yaw=float(rng.uniform(-math.pi, math.pi)),
                noise=noise,
                pinch_gap=gap,
                rng=rng,
            )
            rows.append(static_features(frame).values)
            y.append(label)
    return np.vstack(rows), y


def swipe_trajectory(direction: str, *, extent: float = 0.4, n_points: int = 20,
                     rate: float = 20.0, start: Sequence[float] = (0.35, 0.0, 0.20),
                     warp: float = 1.0, noise: float = 0.0,
                     rng: np.random.Generator | None = None) -> Trajectory:
    """Straight swipe with a smooth velocity profile.

    `warp` != 1 reparameterizes time nonlinearly (u -> u**warp), which DTW
    absorbs and pointwise comparison does not.
    """
    d = SWIPE_DIRECTIONS[direction]
    u = np.linspace(0.0, 1.0, n_points) ** warp
    progress = (1.0 - np.cos(math.pi * u)) / 2.0
    points = np.asarray(start, dtype=float) + np.outer(progress * extent, d)
    if noise > 0.0:
        rng = rng if rng is not None else np.random.default_rng()
        points = points + rng.normal(0.0, noise, size=points.shape)
    return Trajectory(points=points, rate=rate)


def default_templates(rate: float = 20.0) -> dict[str, Trajectory]:
    """One clean representative trajectory per swipe gesture."""
    return {name: swipe_trajectory(name, rate=rate) for name in SWIPE_DIRECTIONS}


def dynamic_dataset(n_per_class: int, *, noise: float = 0.006, seed: int = 0,
                    warp_range: tuple[float, float] = (0.45, 2.2),
                    start_jitter: float = 0.02) -> tuple[list[Trajectory], list[str]]:
    """Swipe samples with random warp/noise plus stationary no_gesture samples."""
    rng = np.random.default_rng(seed)
    base_start = np.array([0.35, 0.0, 0.20])
    samples, y = [], []
    for label in SWIPE_DIRECTIONS:
        for _ in range(n_per_class):
            start = base_start + rng.normal(0.0, start_jitter, size=3)
            n_points = int(rng.integers(14, 30))
            samples.append(swipe_trajectory(
                label, start=start, n_points=n_points,
                warp=float(rng.uniform(*warp_range)), noise=noise, rng=rng))
            y.append(label)
    for _ in range(n_per_class):
        center = base_start + rng.normal(0.0, start_jitter, size=3)
        pts = np.tile(center, (20, 1)) + rng.normal(0.0, noise, size=(20, 3))
        samples.append(Trajectory(points=pts, rate=20.0))
        y.append("no_gesture")
    return samples, y


def swipe_frames(direction: str, *, t0: float, duration: float = 1.0, rate: float = 90.0,
                 start: Sequence[float] = (0.35, 0.0, 0.20), extent: float = 0.4,
                 noise: float = 0.0, rng: np.random.Generator | None = None) -> list[HandFrame]:
    """Full hand-frame burst whose palm sweeps a swipe (neutral static pose)."""
    n = max(2, int(round(duration * rate)))
    traj = swipe_trajectory(direction, extent=extent, n_points=n, rate=rate,
                            start=start, noise=noise, rng=rng)
    frames = []
    for i, p in enumerate(traj.points):
        frame = posed_frame("neutral", timestamp=t0 + i / rate, origin=p, noise=0.0)
        frames.append(frame)
    return frames


def pose_burst(label: str, *, t0: float, duration: float, rate: float = 90.0,
               origin: Sequence[float] = (0.3, 0.0, 0.25),
               aim: Sequence[float] | None = None, pinch_gap: float | None = None,
               noise: float = 0.0005, seed: int = 0) -> list[HandFrame]:
    """Hold a static pose for `duration` seconds (frames at the source rate)."""
    rng = np.random.default_rng(seed)
    n = max(1, int(round(duration * rate)))
    return [
        posed_frame(label, timestamp=t0 + i / rate, origin=origin, aim=aim,
                    pinch_gap=pinch_gap, noise=noise, rng=rng)
        for i in range(n)
    ]


def invisible_frames(t0: float, duration: float, rate: float = 90.0) -> list[HandFrame]:
    """Hand-out-of-view filler between bursts."""
    n = max(1, int(round(duration * rate)))
    return [HandFrame(timestamp=t0 + i / rate, visible=False) for i in range(n)]
