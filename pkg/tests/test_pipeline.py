import numpy as np
import pytest

from handlang.config import PipelineConfig
from handlang.pipeline import GesturePipeline, default_models
from handlang.scenarios import catalog, fig4_session, g, brk, golden_eq3_session
from handlang.simworld import load_scene


@pytest.fixture(scope="module")
def models():
    return default_models()


def make_pipeline(models, sid="pick_can", mode="high_level_gesture", config=None, seed=0):
    scn = catalog()[sid]
    cfg = (config or PipelineConfig()).with_overrides(**scn.config_overrides)
    return GesturePipeline(load_scene(scn.scene), cfg, models, seed=seed, mode=mode)


class TestSyntheticGesturePath:
    def test_pick_sentence_executes(self, models):
        p = make_pipeline(models)
        p.handle(g(0.0, "grab"))
        p.handle(g(1.0, "point", target="can"))
        p.flush()
        assert p.world.gripper.holding == "can"
        assert [i.action for i in p.intents] == ["pick"]

    def test_interaction_counting(self, models):
        p = make_pipeline(models)
        p.handle(g(0.0, "grab"))
        p.handle(g(1.0, "point", target="can"))
        p.flush()
        assert p.interaction_events == 2
        assert p.total_input_events == 2

    def test_incomplete_sentence_emits_error(self, models):
        p = make_pipeline(models)
        p.handle(g(0.0, "grab"))
        p.handle(brk(1.0))
        p.flush()
        errors = [e for e in p.events if e["type"] == "error"]
        assert errors and "missing" in errors[0]["message"]

    def test_execution_interleaves_with_messages(self, models):
        p = make_pipeline(models)
        p.handle(g(0.0, "grab"))
        p.handle(g(1.0, "point", target="can"))
        # execution is pending; a later message advances it
        assert p._execution is not None
        p.handle({"type": "mode", "t": 10.0, "mode": "gesture"})
        assert p._execution is None
        assert p.world.gripper.holding == "can"


class TestFramePath:
    def test_golden_eq3_full_stack(self, models):
        scn = catalog()["golden_eq3"]
        p = GesturePipeline(load_scene(scn.scene), PipelineConfig(), models)
        for msg in golden_eq3_session(load_scene(scn.scene)):
            p.handle(msg)
        p.flush()
        assert len(p.sentences) == 1
        s = p.sentences[0]
        assert s.action_label == "thumbsup"
        assert s.refs == ("mug", "bowl")
        assert s.metrics[0].mapped == pytest.approx(50.0, abs=1.0)
        i = p.intents[0]
        assert i.action == "move" and i.target_object == "mug"
        assert i.ap[0] == "bowl"
        assert i.ap[1] == pytest.approx(50.0, abs=1.0)
        assert scn.goal(p.world)

    def test_fig4_episode_events(self, models):
        p = make_pipeline(models)
        for msg in fig4_session():
            p.handle(msg)
        p.flush()
        closes = [e for e in p.events if e["type"] == "episode_close"]
        assert len(closes) == 1
        labels = [(ev["label"], ev["channel"]) for ev in closes[0]["events"]]
        assert labels == [("point", "deictic"), ("grab", "static"), ("swipe_down", "dynamic")]
        assert closes[0]["action_candidate"] == "swipe_down"

    def test_no_event_shorter_than_min_duration(self, models):
        p = make_pipeline(models)
        for msg in fig4_session():
            p.handle(msg)
        p.flush()
        for e in p.events:
            if e["type"] == "episode_close":
                for ev in e["events"]:
                    assert ev["end"] - ev["start"] > 0.3

    def test_probs_always_normalized(self, models):
        p = make_pipeline(models)
        for msg in fig4_session():
            p.handle(msg)
        p.flush()
        probs = [e for e in p.events if e["type"] == "probs"]
        assert probs
        for e in probs:
            assert sum(e["static"].values()) == pytest.approx(1.0, abs=1e-6)
            assert sum(e["dynamic"].values()) == pytest.approx(1.0, abs=1e-6)

    def test_deictic_events_name_the_target(self, models):
        p = make_pipeline(models)
        for msg in fig4_session():
            p.handle(msg)
        p.flush()
        deictic = [e for e in p.events if e["type"] == "deictic"]
        assert deictic
        assert any(e["target"] == "can" for e in deictic)


class TestTeleopMode:
    def test_grip_roundtrip(self, models):
        scn = catalog()["put_in_bowl"]
        p = GesturePipeline(load_scene(scn.scene), PipelineConfig(), models, mode="teleop")
        for msg in scn.sessions["teleop"]():
            p.handle(msg)
        p.flush()
        assert scn.goal(p.world)
        assert not p.failures

    def test_mode_switch_mid_plan_pauses_and_resumes(self, models):
        p = make_pipeline(models, sid="put_in_bowl")
        p.handle(g(0.0, "thumbsup"))
        p.handle(g(1.0, "point", target="spam"))
        p.handle(g(2.0, "point", target="bowl"))
        p.handle(brk(3.0))
        assert p._execution is not None
        p.handle({"type": "mode", "t": 3.1, "mode": "teleop"})
        acks = [e for e in p.events if e["type"] == "mode_ack"]
        assert acks and acks[-1]["mode"] == "teleop"
        assert acks[-1]["paused_plan"] is True
        # messages during teleop do not advance the plan
        snapshot = p.world.objects["spam"].support
        p.handle({"type": "mode", "t": 9.0, "mode": "gesture"})
        assert p.world.objects["spam"].support == snapshot
        p.flush()
        assert catalog()["put_in_bowl"].goal(p.world)


class TestLowLevelMode:
    def test_micro_commands(self, models):
        scn = catalog()["put_in_bowl"]
        p = GesturePipeline(load_scene(scn.scene),
                            PipelineConfig().with_overrides(**scn.config_overrides),
                            models, mode="low_level_gesture")
        for msg in scn.sessions["low_level_gesture"]():
            p.handle(msg)
        p.flush()
        assert scn.goal(p.world)

    def test_infeasible_command_reports_error(self, models):
        p = make_pipeline(models, mode="low_level_gesture")
        p.handle(g(0.0, "pinch"))  # nothing held: release infeasible
        errors = [e for e in p.events if e["type"] == "error"]
        assert errors and "empty-gripper" in errors[0]["message"]


class TestPerturbationMessages:
    def test_scripted_perturbation_changes_world(self, models):
        p = make_pipeline(models)
        p.handle({"type": "perturb", "t": 0.5, "kind": "ghost_object",
                  "params": {"class": "mug"}})
        ghosts = [o for o in p.world.objects.values() if o.ghost]
        assert len(ghosts) == 1


class TestRayMessages:
    def test_drag_then_point_resolves_majority_target(self, models):
        p = make_pipeline(models)
        can = p.world.objects["can"].pose[:3]
        hand = [0.1, 0.4, 0.5]
        p.handle(g(0.0, "grab"))
        for i in range(8):
            aim = list(can) if i >= 2 else [can[0] + 0.5, can[1] + 0.5, 0.0]
            p.handle({"type": "ray", "t": 1.0 + i * 0.1, "p1": hand, "p2": aim})
        deictic = [e for e in p.events if e["type"] == "deictic"]
        assert len(deictic) == 8
        assert deictic[-1]["target"] == "can"
        p.handle(g(2.0, "point"))  # no explicit target: use the drag votes
        p.flush()
        assert p.world.gripper.holding == "can"
        assert p.intents and p.intents[0].target_object == "can"

    def test_ray_probabilities_sum_to_one(self, models):
        p = make_pipeline(models)
        can = p.world.objects["can"].pose[:3]
        p.handle({"type": "ray", "t": 0.0, "p1": [0.1, 0.4, 0.5], "p2": list(can)})
        e = [e for e in p.events if e["type"] == "deictic"][-1]
        total = sum(e["probabilities"].values())
        assert abs(total - 1.0) < 1e-6

    def test_bad_ray_is_an_error_event(self, models):
        p = make_pipeline(models)
        p.handle({"type": "ray", "t": 0.0, "p1": [0, 0, 0], "p2": [0, 0, 0]})
        assert any(e["type"] == "error" for e in p.events)
