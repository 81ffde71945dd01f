"""Trained intent classifier: (gesture probabilities, scene features) -> action.

The rule table stays the deterministic default; this model is the learned
alternative, trained on a corpus generated from that same table so both modes
agree on clean inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import _mlp
from .classify import GestureSet
from .config import DEFAULT_GESTURE_ACTIONS, PipelineConfig
from .sentence import ACTIONS, scene_features


@dataclass
class IntentModel:
    gesture_labels: tuple[str, ...]
    actions: tuple[str, ...]
    weights: list[np.ndarray]

    def save(self, path) -> None:
        doc = {
            "schema": "intent-model/v1",
            "gesture_labels": list(self.gesture_labels),
            "actions": list(self.actions),
            "weights": [w.tolist() for w in self.weights],
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)

    @classmethod
    def load(cls, path) -> "IntentModel":
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("schema") != "intent-model/v1":
            raise ValueError("not an intent-model/v1 file")
        return cls(gesture_labels=tuple(doc["gesture_labels"]),
                   actions=tuple(doc["actions"]),
                   weights=[np.asarray(w, dtype=float) for w in doc["weights"]])


def _rule_action(label: str, holding: bool, table: dict) -> str | None:
    action = table.get(label)
    if action == "move_put":
        return "put" if holding else "move"
    if action == "rotate" or action in ACTIONS:
        return action
    return None


def _inputs(gesture_probs: np.ndarray, world) -> np.ndarray:
    total = gesture_probs.sum()
    probs = gesture_probs / total if total > 0 else gesture_probs
    scene = scene_features(world)
    return np.concatenate([probs, [scene[0], scene[1], scene[2] / 10.0]])


def train_intent_model(gesture_set: GestureSet | None = None, *,
                       table: dict | None = None, n_per_case: int = 40,
                       seed: int = 0) -> IntentModel:
    """Fit the model on a corpus generated from the gesture-action rule table."""
    gesture_set = gesture_set or GestureSet()
    table = table or DEFAULT_GESTURE_ACTIONS
    labels = tuple(l for l in gesture_set.static_labels + gesture_set.swipe_labels
                   if _rule_action(l, False, table) is not None)
    rng = np.random.default_rng(seed)

    class _FakeGripper:
        def __init__(self, holding):
            self.holding = holding

    class _FakeWorld:
        def __init__(self, holding, drawer_open, count):
            self.gripper = _FakeGripper("x" if holding else None)
            self.objects = {}
            self._drawer_open = drawer_open
            self._count = count

    rows, targets = [], []
    for label in labels:
        for holding in (False, True):
            for drawer_open in (0.0, 1.0):
                for _ in range(n_per_case):
                    count = int(rng.integers(0, 8))
                    action = _rule_action(label, holding, table)
                    onehot = np.zeros(len(labels))
                    onehot[labels.index(label)] = 1.0
                    # concentrate probability mass near the true label
                    noise = rng.dirichlet(np.ones(len(labels))) * rng.uniform(0.0, 0.3)
                    probs = onehot * (1.0 - noise.sum()) + noise
                    scene = np.array([1.0 if holding else 0.0, drawer_open, count / 10.0])
                    rows.append(np.concatenate([probs, scene]))
                    targets.append(ACTIONS.index(action))
    x = np.vstack(rows)
    y = np.array(targets)
    weights = _mlp.train_mlp(x, y, len(ACTIONS), hidden=(32, 32), seed=seed, epochs=120,
                             patience=15)
    return IntentModel(gesture_labels=labels, actions=ACTIONS, weights=weights)


def predict_action_distribution(model: IntentModel, sentence, world,
                                gesture_probs: dict[str, float] | None = None) -> dict[str, float]:
    """Action distribution from the trained model.

    Without an explicit probability vector the sentence's action label is a
    one-hot input. Inputs are normalized, so positive rescaling of the
    gesture vector cannot change the argmax.
    """
    vec = np.zeros(len(model.gesture_labels))
    if gesture_probs:
        for i, label in enumerate(model.gesture_labels):
            vec[i] = gesture_probs.get(label, 0.0)
    elif sentence.action_label in model.gesture_labels:
        vec[model.gesture_labels.index(sentence.action_label)] = 1.0
    x = _inputs(vec, world)
    probs = _mlp.forward(model.weights, x[None, :])[0]
    return {a: float(p) for a, p in zip(model.actions, probs)}
