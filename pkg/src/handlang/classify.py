"""Static- and dynamic-gesture classifiers.

Static gestures: a small two-hidden-layer softmax network over the 57
features (maximum-likelihood training with early stopping), plus a
hand-picked threshold baseline. Dynamic gestures: template matching with
dynamic time warping, plus a pointwise Euclidean baseline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _mlp
from .handstream import FEATURE_LAYOUT_TAG, FeatureVector, Trajectory

NO_GESTURE = "no_gesture"

DEFAULT_STATIC_LABELS = ("grab", "pinch", "point", "two", "three", "four", "five", "thumbsup")
DEFAULT_DYNAMIC_LABELS = ("swipe_up", "swipe_down", "swipe_left", "swipe_right", NO_GESTURE)

#: mean-per-step DTW distance above which a sample is "no gesture" (meters)
DEFAULT_NO_GESTURE_CUTOFF = 0.08


class TrainingError(RuntimeError):
    """Dataset unusable for training (e.g. a class with zero samples)."""


class LayoutMismatchError(ValueError):
    """Feature layout of the input differs from the model's."""


@dataclass(frozen=True)
class GestureSet:
    """Gesture vocabulary; dynamic labels include the implicit no_gesture class."""

    static_labels: tuple[str, ...] = DEFAULT_STATIC_LABELS
    dynamic_labels: tuple[str, ...] = DEFAULT_DYNAMIC_LABELS

    def __post_init__(self):
        labels = self.static_labels + self.dynamic_labels
        if len(set(labels)) != len(labels):
            raise ValueError("gesture labels must be unique")
        if NO_GESTURE not in self.dynamic_labels:
            raise ValueError(f"dynamic labels must include {NO_GESTURE!r}")

    @property
    def swipe_labels(self) -> tuple[str, ...]:
        return tuple(l for l in self.dynamic_labels if l != NO_GESTURE)


@dataclass
class StaticModel:
    """Two-hidden-layer softmax classifier over the 57 static features."""

    labels: tuple[str, ...]
    layout_tag: str
    weights: list[np.ndarray]  # [W1, b1, W2, b2, W3, b3]
    mean: np.ndarray
    std: np.ndarray

    def save(self, path) -> None:
        doc = {
            "schema": "static-model/v1",
            "labels": list(self.labels),
            "layout_tag": self.layout_tag,
            "weights": [w.tolist() for w in self.weights],
            "mean": self.mean.tolist(),
            "std": self.std.tolist(),
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)

    @classmethod
    def load(cls, path) -> "StaticModel":
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("schema") != "static-model/v1":
            raise ValueError("not a static-model/v1 file")
        return cls(
            labels=tuple(doc["labels"]),
            layout_tag=doc["layout_tag"],
            weights=[np.asarray(w, dtype=float) for w in doc["weights"]],
            mean=np.asarray(doc["mean"], dtype=float),
            std=np.asarray(doc["std"], dtype=float),
        )


@dataclass(frozen=True)
class DynamicTemplates:
    """One representative trajectory per swipe gesture."""

    templates: dict[str, Trajectory]

    def __post_init__(self):
        if NO_GESTURE in self.templates:
            raise ValueError("no_gesture has no template")

    def save(self, path) -> None:
        doc = {
            "schema": "dynamic-templates/v1",
            "templates": {k: {"points": t.points.tolist(), "rate": t.rate}
                          for k, t in self.templates.items()},
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)

    @classmethod
    def load(cls, path) -> "DynamicTemplates":
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("schema") != "dynamic-templates/v1":
            raise ValueError("not a dynamic-templates/v1 file")
        return cls(templates={
            k: Trajectory(points=np.asarray(v["points"], dtype=float), rate=v["rate"])
            for k, v in doc["templates"].items()})


@dataclass(frozen=True)
class GestureProbabilities:
    """Per-label scores of both channels at one timestamp (each sums to 1)."""

    timestamp: float
    static: dict[str, float]
    dynamic: dict[str, float]


def train_static(features: np.ndarray, labels: Sequence[str], gesture_set: GestureSet,
                 *, layout_tag: str = FEATURE_LAYOUT_TAG, hidden: tuple[int, int] = (32, 32),
                 seed: int = 0, epochs: int = 200, batch_size: int = 64,
                 learning_rate: float = 3e-3, patience: int = 20) -> StaticModel:
    """Fit the static classifier by maximum likelihood (Adam, early stopping).

    Requires samples for every label in the gesture set; a single-label set
    degenerates to a constant predictor with probability 1.
    """
    classes = gesture_set.static_labels
    features = np.asarray(features, dtype=float)
    y = np.array([classes.index(l) if l in classes else -1 for l in labels])
    if (y < 0).any():
        bad = sorted({l for l in labels if l not in classes})
        raise TrainingError(f"labels outside the gesture set: {bad}")
    counts = np.bincount(y, minlength=len(classes))
    empty = [classes[i] for i in np.flatnonzero(counts == 0)]
    if empty:
        raise TrainingError(f"classes with zero samples: {empty}")

    mean = features.mean(axis=0)
    std = features.std(axis=0)
    std[std < 1e-9] = 1.0
    x = (features - mean) / std
    weights = _mlp.train_mlp(x, y, len(classes), hidden=hidden, seed=seed, epochs=epochs,
                             batch_size=batch_size, learning_rate=learning_rate,
                             patience=patience)
    return StaticModel(labels=classes, layout_tag=layout_tag, weights=weights,
                       mean=mean, std=std)


def classify_static(model: StaticModel, features: FeatureVector) -> np.ndarray:
    """Probability vector over the model's labels; always sums to 1."""
    if features.layout_tag != model.layout_tag:
        raise LayoutMismatchError(
            f"feature layout {features.layout_tag!r} != model layout {model.layout_tag!r}")
    x = (features.values - model.mean) / model.std
    return _mlp.forward(model.weights, x[None, :])[0]


# --- deterministic threshold baseline -------------------------------------

#: expected finger extension per label (1 extended, 0 curled, None ignored)
#: plus whether the thumb-index pinch must be closed
DEFAULT_STATIC_RULES = {
    "grab": ((0, 0, 0, 0, 0), None),
    "pinch": ((None, None, 1, 1, 1), True),
    "point": ((0, 1, 0, 0, 0), None),
    "two": ((0, 1, 1, 0, 0), None),
    "three": ((0, 1, 1, 1, 0), None),
    "four": ((0, 1, 1, 1, 1), None),
    "five": ((1, 1, 1, 1, 1), False),
    "thumbsup": ((1, 0, 0, 0, 0), None),
}

#: tip-to-palm distance (m) above which each finger counts as extended,
#: hand-picked between the curled and extended values of the pose vocabulary
EXTENSION_DISTANCE_MIN = (0.135, 0.128, 0.123, 0.114, 0.101)
#: thumb-index fingertip distance below this counts as a closed pinch
PINCH_DISTANCE_MAX = 0.055

#: feature indices of the five tip-to-palm distances (layout v1)
_TIP_PALM_IDX = (4, 8, 11, 13, 14)


@dataclass(frozen=True)
class StaticRules:
    patterns: dict[str, tuple] = field(default_factory=lambda: dict(DEFAULT_STATIC_RULES))
    extension_distance_min: tuple[float, ...] = EXTENSION_DISTANCE_MIN
    pinch_distance_max: float = PINCH_DISTANCE_MAX


def finger_extensions(features: FeatureVector,
                      thresholds: Sequence[float] = EXTENSION_DISTANCE_MIN) -> tuple[bool, ...]:
    """Per-finger extension flags from the tip-to-palm distance features."""
    dists = features.values[list(_TIP_PALM_IDX)]
    return tuple(bool(d > t) for d, t in zip(dists, thresholds))


def classify_static_deterministic(rules: StaticRules, features: FeatureVector,
                                  labels: Sequence[str] = DEFAULT_STATIC_LABELS) -> str:
    """Hand-picked threshold classifier; always outputs exactly one label.

    Scores each label's expected extension pattern plus the pinch flag;
    ties break by label order.
    """
    missing = [l for l in labels if l not in rules.patterns]
    if missing:
        raise ValueError(f"rules missing labels: {missing}")
    ext = finger_extensions(features, rules.extension_distance_min)
    pinch_closed = float(features.values[0]) < rules.pinch_distance_max  # dist thumb-index
    best_label, best_score = labels[0], -np.inf
    for label in labels:
        pattern, want_pinch = rules.patterns[label]
        score = 0.0
        for expected, actual in zip(pattern, ext):
            if expected is None:
                continue
            score += 1.0 if bool(expected) == actual else -1.0
        if want_pinch is not None:
            score += 3.0 if want_pinch == pinch_closed else -3.0
        if score > best_score:
            best_label, best_score = label, score
    return best_label


# --- dynamic gestures ------------------------------------------------------

def dtw_distance(a: Trajectory, b: Trajectory) -> float:
    """Dynamic-time-warping distance between two 3D trajectories.

    Symmetric step pattern (diagonal weighted 2), 3D Euclidean point cost,
    normalized by the warping-path weight n+m. Symmetric and zero iff the
    point sequences are identical.
    """
    if len(a) == 0 or len(b) == 0:
        raise ValueError("DTW requires non-empty trajectories")
    pa, pb = a.points, b.points
    n, m = len(pa), len(pb)
    cost = np.linalg.norm(pa[:, None, :] - pb[None, :, :], axis=-1)
    acc = np.full((n + 1, m + 1), np.inf)
    acc[0, 0] = 0.0
    for i in range(1, n + 1):
        c = cost[i - 1]
        for j in range(1, m + 1):
            acc[i, j] = min(acc[i - 1, j] + c[j - 1],
                            acc[i, j - 1] + c[j - 1],
                            acc[i - 1, j - 1] + 2.0 * c[j - 1])
    return float(acc[n, m] / (n + m))


def classify_dynamic(templates: DynamicTemplates, sample: Trajectory,
                     *, cutoff: float = DEFAULT_NO_GESTURE_CUTOFF) -> tuple[str, dict[str, float]]:
    """Label of the nearest template by DTW; no_gesture above the cutoff."""
    if not templates.templates:
        raise ValueError("no dynamic templates")
    if len(sample) == 0:
        raise ValueError("empty sample trajectory")
    dists = {label: dtw_distance(t, sample) for label, t in templates.templates.items()}
    label = min(dists, key=lambda k: (dists[k], list(templates.templates).index(k)))
    if dists[label] > cutoff:
        return NO_GESTURE, dists
    return label, dists


def resample_trajectory(traj: Trajectory, n_points: int) -> Trajectory:
    """Linear index-space resampling to a fixed point count."""
    if len(traj) == 0:
        raise ValueError("cannot resample an empty trajectory")
    if len(traj) == 1:
        return Trajectory(points=np.tile(traj.points[0], (n_points, 1)), rate=traj.rate)
    src = np.linspace(0.0, 1.0, len(traj))
    dst = np.linspace(0.0, 1.0, n_points)
    points = np.column_stack([np.interp(dst, src, traj.points[:, k]) for k in range(3)])
    return Trajectory(points=points, rate=traj.rate)


def euclidean_baseline(templates: DynamicTemplates, sample: Trajectory,
                       *, cutoff: float = DEFAULT_NO_GESTURE_CUTOFF,
                       n_points: int = 20) -> tuple[str, dict[str, float]]:
    """Pointwise-Euclidean baseline: resample both sides to n_points, mean distance."""
    if not templates.templates:
        raise ValueError("no dynamic templates")
    if len(sample) == 0:
        raise ValueError("empty sample trajectory")
    s = resample_trajectory(sample, n_points).points
    dists = {}
    for label, t in templates.templates.items():
        r = resample_trajectory(t, n_points).points
        dists[label] = float(np.linalg.norm(r - s, axis=1).mean())
    label = min(dists, key=lambda k: (dists[k], list(templates.templates).index(k)))
    if dists[label] > cutoff:
        return NO_GESTURE, dists
    return label, dists


def dynamic_probabilities(dists: dict[str, float], *, cutoff: float = DEFAULT_NO_GESTURE_CUTOFF,
                          temperature: float = 0.02) -> dict[str, float]:
    """Distance-to-probability shaping for the dynamic channel.

    Softmax over -distance/temperature with no_gesture carrying a pseudo
    distance equal to the cutoff, so argmax matches classify_dynamic.
    """
    labels = list(dists) + [NO_GESTURE]
    z = np.array([-dists[l] / temperature for l in dists] + [-cutoff / temperature])
    p = _mlp.softmax(z)
    return {l: float(q) for l, q in zip(labels, p)}


def balanced_accuracy(predictions: Sequence[str], labels: Sequence[str]) -> float:
    """Macro-averaged one-vs-rest balanced accuracy, 0.5*(TPR + TNR) per class."""
    if len(predictions) != len(labels):
        raise ValueError("predictions and labels differ in length")
    if len(labels) == 0:
        raise ValueError("empty input")
    preds = np.asarray(predictions, dtype=object)
    truth = np.asarray(labels, dtype=object)
    scores = []
    for cls in dict.fromkeys(labels):  # preserves first-seen order
        pos = truth == cls
        tp = float(np.sum(pos & (preds == cls)))
        fn = float(np.sum(pos & (preds != cls)))
        tn = float(np.sum(~pos & (preds != cls)))
        fp = float(np.sum(~pos & (preds == cls)))
        tpr = tp / (tp + fn) if tp + fn else 0.0
        tnr = tn / (tn + fp) if tn + fp else 1.0
        scores.append(0.5 * (tpr + tnr))
    return float(np.mean(scores))
