"""Episode segmentation and gesture-activation extraction.

An episode is the bounded window while the hand is in view (closed by hand
loss or a 3 s timeout); activations turn the 10 Hz probability timelines into
discrete gesture events lasting longer than 0.3 s.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Sequence

from .handstream import HandFrame

EPISODE_TIMEOUT = 3.0
VISIBILITY_DEBOUNCE = 0.15
ACTIVATION_THRESHOLD = 0.9
MIN_EVENT_DURATION = 0.3
DETECTION_PERIOD = 0.1  # 10 Hz detection

HAND_LOST = "hand_lost"
TIMEOUT = "timeout"


@dataclass(frozen=True)
class GestureEvent:
    label: str
    channel: str  # static | dynamic | deictic
    start: float
    end: float
    peak_probability: float
    payload: dict = field(default_factory=dict)

    @property
    def duration(self) -> float:
        return self.end - self.start


@dataclass(frozen=True)
class Episode:
    start: float
    end: float
    events: tuple[GestureEvent, ...]
    reason: str  # hand_lost | timeout

    @property
    def duration(self) -> float:
        return self.end - self.start


@dataclass(frozen=True)
class EpisodeSummary:
    episode: Episode
    events: tuple[GestureEvent, ...]
    action_candidate: GestureEvent | None


def _visible_runs(frames: Sequence[HandFrame], debounce: float) -> list[list[float]]:
    """Timestamps of visible frames grouped into debounced runs."""
    runs: list[list[float]] = []
    for f in frames:
        if f.visible:
            if runs and f.timestamp - runs[-1][-1] <= debounce:
                runs[-1].append(f.timestamp)  # short gap: same run
            else:
                runs.append([f.timestamp])
    return [r for r in runs if r[-1] - r[0] > debounce]


def segment(frames: Sequence[HandFrame], *, timeout: float = EPISODE_TIMEOUT,
            debounce: float = VISIBILITY_DEBOUNCE) -> list[Episode]:
    """Split a frame stream into episode windows (no events attached yet).

    Visibility flickers shorter than the debounce neither open nor close an
    episode; a window longer than the timeout closes at the timeout and a new
    episode opens on the next frame.
    """
    episodes = []
    for run in _visible_runs(frames, debounce):
        ep_start = run[0]
        last = run[0]
        for ts in run[1:]:
            if ts - ep_start > timeout:
                episodes.append(Episode(start=ep_start, end=ep_start + timeout,
                                        events=(), reason=TIMEOUT))
                ep_start = ts
            last = ts
        if last > ep_start or ep_start == run[0]:
            episodes.append(Episode(start=ep_start, end=last, events=(), reason=HAND_LOST))
    return episodes


def activations(timeline: Sequence[tuple[float, dict[str, float]]], *, channel: str,
                threshold: float = ACTIVATION_THRESHOLD,
                min_duration: float = MIN_EVENT_DURATION,
                period: float = DETECTION_PERIOD,
                payloads: Sequence[dict] | None = None) -> list[GestureEvent]:
    """Events for every maximal above-threshold run longer than min_duration.

    `timeline` is (timestamp, {label: probability}) samples at the detection
    rate. Optional per-sample payload dicts are merged into each event
    (deictic target votes, metric samples).
    """
    if not timeline:
        return []
    labels: set[str] = set()
    for _, probs in timeline:
        labels.update(probs)
    events = []
    for label in sorted(labels):
        run_start = None
        run_samples: list[int] = []
        series = [(t, probs.get(label, 0.0)) for t, probs in timeline]
        for i, (t, p) in enumerate(series + [(series[-1][0] + period, 0.0)]):
            if p > threshold:
                if run_start is None:
                    run_start = t
                run_samples.append(i)
            elif run_start is not None:
                duration = len(run_samples) * period
                if duration > min_duration + 1e-9:  # strictly greater, float-safe
                    payload: dict = {}
                    if payloads is not None:
                        votes = [payloads[j] for j in run_samples if j < len(payloads)]
                        payload = _merge_payloads(votes)
                    events.append(GestureEvent(
                        label=label, channel=channel, start=run_start,
                        end=run_start + duration,
                        peak_probability=max(series[j][1] for j in run_samples),
                        payload=payload))
                run_start, run_samples = None, []
    events.sort(key=lambda e: (e.start, e.label))
    return events


def _merge_payloads(votes: list[dict]) -> dict:
    payload: dict = {}
    targets = [v["target"] for v in votes if v.get("target") is not None]
    if targets:
        payload["target_votes"] = targets
    metrics = [v["metric"] for v in votes if v.get("metric") is not None]
    if metrics:
        payload["metric_samples"] = metrics
    return payload


def majority_target(votes: Sequence[str]) -> str | None:
    """Most-voted target id; ties break to the lowest id."""
    if not votes:
        return None
    counts = Counter(votes)
    best = max(counts.values())
    return min(t for t, c in counts.items() if c == best)


def episode_summary(episode: Episode, *, action_labels: Sequence[str],
                    policy: str = "last") -> EpisodeSummary:
    """Resolve deictic votes and pick the episode's action candidate.

    Policy "last" (default) marks the last action-gesture event; "peak" the
    one with the highest peak probability.
    """
    resolved = []
    for event in episode.events:
        if "target_votes" in event.payload:
            payload = dict(event.payload)
            payload["target"] = majority_target(payload.pop("target_votes"))
            event = replace(event, payload=payload)
        resolved.append(event)
    candidates = [e for e in resolved if e.label in action_labels]
    candidate = None
    if candidates:
        if policy == "last":
            candidate = candidates[-1]
        elif policy == "peak":
            candidate = max(candidates, key=lambda e: e.peak_probability)
        else:
            raise ValueError(f"unknown action-candidate policy {policy!r}")
    return EpisodeSummary(episode=episode, events=tuple(resolved), action_candidate=candidate)
