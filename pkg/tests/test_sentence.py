import math

import numpy as np
import pytest

from handlang import synth
from handlang.config import PipelineConfig
from handlang.episode import Episode, EpisodeSummary, GestureEvent
from handlang.sentence import (ACTIONS, ClarificationNeeded, GestureSentence,
                               IncompleteSentenceError, MetricParameter, SentenceAssembler,
                               UnknownActionError, assemble, complexity, estimate_intent,
                               metric_value, required_slots, resolve_gesture_action)
from handlang.simworld import load_scene


def world_doc(holding=None, drawer_open=0.0):
    return {
        "schema": "scene/v1", "table_height": 0.0, "workspace": [-0.1, 0.9, -0.6, 0.6],
        "gripper": {"pose": [0.4, 0.0, 0.3, 0.0], "holding": holding},
        "objects": [
            {"id": "mug", "class": "mug", "pose": [0.2, 0.3, 0.03, 0.0], "support": "table"},
            {"id": "bowl", "class": "bowl", "pose": [0.6, -0.3, 0.03, 0.0], "support": "table"},
            {"id": "can", "class": "can", "pose": [0.3, -0.1, 0.03, 0.0], "support": "table",
             "fill": {"level": 1.0, "kind": "beans"}},
            {"id": "spam", "class": "spam", "pose": [0.5, 0.2, 0.03, 0.0],
             "support": None if holding == "spam" else "table"},
            {"id": "drawer", "class": "drawer", "pose": [0.8, 0.4, 0.05, 0.0], "support": "table",
             "open_fraction": drawer_open},
        ],
    }


def make_world(holding=None, drawer_open=0.0):
    return load_scene(world_doc(holding=holding, drawer_open=drawer_open))


def ev(label, channel, start, end, payload=None):
    return GestureEvent(label=label, channel=channel, start=start, end=end,
                        peak_probability=0.95, payload=payload or {})


def summary(events, start=0.0, end=2.0):
    episode = Episode(start=start, end=end, events=tuple(events), reason="hand_lost")
    candidate = None
    for e in events:
        if e.channel != "deictic" and e.label != "no_gesture":
            candidate = e
    return EpisodeSummary(episode=episode, events=tuple(events), action_candidate=candidate)


def action_episode(label, t=0.0):
    return summary([ev(label, "static", t + 0.2, t + 0.8)], start=t, end=t + 1.0)


def point_episode(target, t=0.0):
    return summary([ev("point", "deictic", t + 0.2, t + 0.8,
                       {"target": target})], start=t, end=t + 1.0)


def pinch_episode(raw, t=0.0):
    return summary([ev("pinch", "static", t + 0.2, t + 0.8,
                       {"metric_samples": [raw] * 6})], start=t, end=t + 1.0)


def empty_episode(t=0.0):
    return summary([], start=t, end=t + 0.5)


class TestRequiredSlots:
    def test_zero_parameter_actions(self):
        for action in ("move_cartesian", "place"):
            spec = required_slots(action)
            assert spec.ref_slots == 0

    def test_pick_one_object(self):
        spec = required_slots("pick")
        assert spec.object_slots == 1 and spec.location_slots == 0

    def test_swap_two_objects(self):
        spec = required_slots("swap")
        assert spec.object_slots == 2

    def test_put_context_dependent(self):
        assert required_slots("put", holding=False).ref_slots == 2
        assert required_slots("put", holding=True).ref_slots == 1

    def test_unknown_action(self):
        with pytest.raises(UnknownActionError):
            required_slots("fly")

    def test_gesture_action_map_total(self):
        config = PipelineConfig()
        from handlang.classify import GestureSet
        gs = GestureSet()
        for label in gs.static_labels + gs.swipe_labels:
            resolve_gesture_action(label, config)  # must not raise


class TestMetricValue:
    def test_pinch_5cm_is_50_percent(self):
        frames = [synth.posed_frame("pinch", timestamp=i / 20.0, pinch_gap=0.05)
                  for i in range(5)]
        metric = metric_value("pinch_distance", frames)
        assert metric.raw == pytest.approx(0.05, abs=1e-3)
        assert metric.mapped == pytest.approx(50.0, abs=1.0)

    def test_pinch_zero_is_zero_percent(self):
        frame = synth.posed_frame("five")
        coincident = frame.fingertips.copy()
        coincident[0] = coincident[1]
        from dataclasses import replace
        frames = [replace(frame, fingertips=coincident)]
        metric = metric_value("pinch_distance", frames)
        assert metric.mapped == 0.0

    def test_pinch_8cm_is_80_percent(self):
        frames = [synth.posed_frame("pinch", pinch_gap=0.08)]
        metric = metric_value("pinch_distance", frames)
        assert metric.mapped == pytest.approx(80.0, abs=1.0)

    def test_point_angle_degrees(self):
        frames = [synth.posed_frame("point", yaw=math.radians(30.0))]
        metric = metric_value("point_angle", frames)
        assert metric.mapped == pytest.approx(30.0, abs=1e-6)

    def test_hands_distance_identity(self):
        a = [synth.posed_frame("five", origin=(0.2, 0.0, 0.2))]
        b = [synth.posed_frame("five", origin=(0.2, 0.25, 0.2))]
        metric = metric_value("hands_distance", a, b)
        assert metric.mapped == pytest.approx(0.25, abs=1e-9)

    def test_hands_distance_needs_second_hand(self):
        a = [synth.posed_frame("five")]
        with pytest.raises(ValueError, match="second hand"):
            metric_value("hands_distance", a)


class TestAssemble:
    def test_eq3_golden_sentence(self):
        world = make_world()
        episodes = [action_episode("thumbsup", 0.0), point_episode("mug", 1.5),
                    point_episode("bowl", 3.0), pinch_episode(0.05, 4.5)]
        sentence = assemble(episodes, world)
        assert sentence.action_label == "thumbsup"
        assert sentence.refs == ("mug", "bowl")
        assert len(sentence.metrics) == 1
        assert sentence.metrics[0].mapped == pytest.approx(50.0)
        assert complexity(sentence) == 3

    def test_swipe_zero_parameter(self):
        world = make_world()
        sentence = assemble([summary([ev("swipe_right", "dynamic", 0.2, 0.8)])], world)
        assert sentence.action_label == "swipe_right"
        assert sentence.refs == () and sentence.metrics == ()

    def test_incomplete_on_completion_signal(self):
        world = make_world()
        with pytest.raises(IncompleteSentenceError) as err:
            assemble([action_episode("grab", 0.0), empty_episode(1.5)], world)
        assert "object[0]" in err.value.missing

    def test_requires_action_first(self):
        world = make_world()
        with pytest.raises(ValueError, match="action candidate"):
            assemble([point_episode("mug")], world)

    def test_refs_never_outside_world(self):
        world = make_world()
        assembler = SentenceAssembler()
        assembler.feed(action_episode("grab", 0.0), world)
        assembler.feed(point_episode("phantom", 1.5), world)  # unknown id ignored
        state = assembler.state
        assert state.sentence.refs == ()

    def test_auto_completes_when_all_slots_filled(self):
        world = make_world()
        assembler = SentenceAssembler()
        assembler.feed(action_episode("grab", 0.0), world)
        result = assembler.feed(point_episode("can", 1.5), world)
        assert result is not None
        assert result.refs == ("can",)


class TestEstimateIntent:
    def test_eq4_golden_intent(self):
        world = make_world()
        sentence = GestureSentence(
            action_label="thumbsup", refs=("mug", "bowl"),
            metrics=(MetricParameter("pinch_distance", 0.05, 50.0),))
        intent = estimate_intent(sentence, None, world)
        assert intent.action == "move"
        assert intent.target_object == "mug"
        assert intent.ap == ("bowl", 50.0)

    def test_pick_can_empty_gripper(self):
        world = make_world()
        intent = estimate_intent(GestureSentence(action_label="grab", refs=("can",)), None, world)
        assert intent.action == "pick"
        assert intent.target_object == "can"
        assert intent.ap == ()

    def test_put_with_held_object(self):
        world = make_world(holding="spam")
        intent = estimate_intent(GestureSentence(action_label="thumbsup", refs=("bowl",)),
                                 None, world)
        assert intent.action == "put"
        assert intent.target_object == "spam"
        assert intent.locations == ("bowl",)

    def test_drawer_destination_is_put(self):
        world = make_world()
        intent = estimate_intent(GestureSentence(action_label="thumbsup", refs=("spam", "drawer")),
                                 None, world)
        assert intent.action == "put"

    def test_rotate_uses_default_angle(self):
        config = PipelineConfig().with_overrides(gesture_actions={"two": "rotate"})
        world = make_world(holding="spam")
        intent = estimate_intent(GestureSentence(action_label="two"), None, world, config)
        assert intent.action == "rotate"
        assert intent.target_object == "spam"
        assert intent.metrics == (("angle", 90.0),)

    def test_move_cartesian_resolves_absolute_target(self):
        world = make_world()
        intent = estimate_intent(GestureSentence(action_label="swipe_right"), None, world)
        assert intent.action == "move_cartesian"
        target = intent.anchors["gripper_target"]
        assert target == pytest.approx([0.4, -0.1, 0.3])


class TestComplexityCatalog:
    def test_catalog_values(self):
        # the scenario-catalog fixtures with their pinned S_c values
        cases = [
            (GestureSentence("two"), 0),                                   # rotate held
            (GestureSentence("grab", refs=("can",)), 1),                   # pick can
            (GestureSentence("thumbsup", refs=("bowl",)), 1),              # put held -> bowl
            (GestureSentence("four", refs=("spam", "bowl")), 2),           # pour spam bowl
            (GestureSentence("four", refs=("can", "bowl"),
                             metrics=(MetricParameter("pinch_distance", 1 / 30, 60.0),)), 3),
        ]
        for sentence, sc in cases:
            assert complexity(sentence) == sc


@pytest.fixture(scope="module")
def model():
    from handlang.intent_model import train_intent_model
    return train_intent_model(n_per_case=30, seed=0)


class TestIntentModel:

    def test_agrees_with_rule_table(self, model):
        from handlang.intent_model import predict_action_distribution
        world = make_world()
        for label, expected in (("grab", "pick"), ("five", "swap"), ("four", "pour"),
                                ("thumbsup", "move"), ("two", "open")):
            dist = predict_action_distribution(model, GestureSentence(label), world)
            assert max(dist, key=dist.get) == expected

    def test_holding_flips_thumbsup_to_put(self, model):
        from handlang.intent_model import predict_action_distribution
        world = make_world(holding="spam")
        dist = predict_action_distribution(model, GestureSentence("thumbsup"), world)
        assert max(dist, key=dist.get) == "put"

    def test_argmax_invariant_under_rescaling(self, model):
        from handlang.classify import GestureProbabilities
        config = PipelineConfig().with_overrides(intent_mode="model", ambiguity_gap=0.0)
        world = make_world()
        base = {l: (0.9 if l == "grab" else 0.01) for l in model.gesture_labels}
        sentence = GestureSentence("grab", refs=("can",))
        intents = []
        for scale in (1.0, 0.25, 40.0):
            probs = GestureProbabilities(
                timestamp=0.0, static={k: v * scale for k, v in base.items()}, dynamic={})
            intents.append(estimate_intent(sentence, probs, world, config, model).action)
        assert len(set(intents)) == 1

    def test_ambiguous_distribution_raises(self, model):
        config = PipelineConfig().with_overrides(intent_mode="model", ambiguity_gap=0.5)
        world = make_world()
        from handlang.classify import GestureProbabilities
        # an even two/three split: open vs close cannot be resolved
        mixed = {l: 0.0 for l in model.gesture_labels}
        mixed["two"] = 0.5
        mixed["three"] = 0.5
        probs = GestureProbabilities(timestamp=0.0, static=mixed, dynamic={})
        with pytest.raises(ClarificationNeeded):
            estimate_intent(GestureSentence("two", refs=("drawer",)), probs, world, config, model)
