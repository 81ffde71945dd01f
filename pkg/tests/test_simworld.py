import numpy as np
import pytest

from handlang.handstream import HandFrame
from handlang.simworld import (InfeasibleActionError, Perturbation, Primitive,
                               TeleopController, TeleopMap, WorldError, apply, feasible,
                               free_slot, load_scene, perturb)


def base_scene(**overrides):
    doc = {
        "schema": "scene/v1", "table_height": 0.0, "workspace": [-0.1, 0.9, -0.6, 0.6],
        "gripper": {"pose": [0.4, 0.0, 0.3, 0.0], "holding": None},
        "objects": [
            {"id": "spam", "class": "spam", "pose": [0.3, 0.1, 0.03, 0.0], "support": "table"},
            {"id": "can", "class": "can", "pose": [0.3, 0.1, 0.09, 0.0], "support": {"on": "spam"},
             "fill": {"level": 1.0, "kind": "beans"}},
            {"id": "bowl", "class": "bowl", "pose": [0.6, -0.3, 0.03, 0.0], "support": "table"},
            {"id": "drawer", "class": "drawer", "pose": [0.8, 0.4, 0.05, 0.0], "support": "table",
             "open_fraction": 0.0},
        ],
    }
    doc.update(overrides)
    return doc


def grasped(world, oid):
    w, _ = apply(world, Primitive("approach", target=oid))
    w, _ = apply(w, Primitive("grasp", target=oid))
    return w


class TestLoadScene:
    def test_grid_scene(self):
        objects = [{"id": f"o{k}", "class": "cube",
                    "pose": [0.2 + 0.2 * (k // 3), -0.2 + 0.2 * (k % 3), 0.03, 0.0],
                    "support": "table"} for k in range(9)]
        world = load_scene({"schema": "scene/v1", "objects": objects})
        assert len(world.objects) == 9

    def test_empty_scene(self):
        world = load_scene({"schema": "scene/v1", "objects": []})
        assert world.objects == {}

    def test_cycle_rejected(self):
        doc = {"schema": "scene/v1", "objects": [
            {"id": "a", "class": "cube", "pose": [0.3, 0, 0.03, 0], "support": {"on": "b"}},
            {"id": "b", "class": "cube", "pose": [0.3, 0, 0.09, 0], "support": {"on": "a"}},
        ]}
        with pytest.raises(WorldError, match="cycle"):
            load_scene(doc)

    def test_out_of_workspace_rejected(self):
        doc = {"schema": "scene/v1", "objects": [
            {"id": "a", "class": "cube", "pose": [5.0, 0, 0.03, 0], "support": "table"}]}
        with pytest.raises(WorldError, match="workspace"):
            load_scene(doc)

    def test_diagnostics_carry_paths(self):
        doc = base_scene()
        doc["objects"][0]["support"] = {"on": "nosuch"}
        with pytest.raises(WorldError, match="objects.spam.support"):
            load_scene(doc)

    def test_doc_roundtrip(self):
        world = load_scene(base_scene())
        again = load_scene(world.to_doc())
        assert set(again.objects) == set(world.objects)
        assert again.objects["can"].support == ("on", "spam")
        assert again.objects["can"].fill_level == 1.0


class TestFeasible:
    def test_occluded_grasp(self):
        world = load_scene(base_scene())
        world, _ = apply(world, Primitive("approach", target="spam"))
        ok, reason = feasible(world, Primitive("grasp", target="spam"))
        assert not ok and reason == "occluded-by(can)"

    def test_insert_into_closed_drawer(self):
        world = grasped(load_scene(base_scene()), "can")
        world, _ = apply(world, Primitive("move_to", target="drawer"))
        ok, reason = feasible(world, Primitive("release"))
        assert not ok and reason == "drawer-closed"

    def test_clear_grasp_ok(self):
        world = load_scene(base_scene())
        world, _ = apply(world, Primitive("approach", target="can"))
        ok, reason = feasible(world, Primitive("grasp", target="can"))
        assert ok and reason is None

    def test_release_into_occupied_bowl(self):
        world = grasped(load_scene(base_scene()), "can")
        world, _ = apply(world, Primitive("move_to", target="bowl"))
        world, _ = apply(world, Primitive("release"))
        assert world.objects["can"].support == ("in", "bowl")
        world = grasped(world, "spam")
        world, _ = apply(world, Primitive("move_to", target="bowl"))
        ok, reason = feasible(world, Primitive("release"))
        assert not ok and reason == "occupied(bowl)"

    def test_tilt_needs_fill(self):
        world = grasped(load_scene(base_scene()), "can")
        world, _ = apply(world, Primitive("move_to", target="bowl"))
        world, _ = apply(world, Primitive("tilt", target="bowl"))
        ok, reason = feasible(world, Primitive("tilt", target="bowl"))
        assert not ok and reason == "nothing-to-pour"


class TestApply:
    def test_grasp_effect(self):
        world = grasped(load_scene(base_scene()), "can")
        assert world.gripper.holding == "can"
        assert world.objects["can"].support is None

    def test_tilt_transfers_fill(self):
        world = grasped(load_scene(base_scene()), "can")
        world, _ = apply(world, Primitive("move_to", target="bowl"))
        world, _ = apply(world, Primitive("tilt", target="bowl"))
        assert world.objects["bowl"].fill_level == 1.0
        assert world.objects["bowl"].fill_kind == "beans"
        assert world.objects["can"].fill_level == 0.0

    def test_open_drawer_effect(self):
        world = load_scene(base_scene())
        world, _ = apply(world, Primitive("open_drawer", target="drawer"))
        assert world.objects["drawer"].open_fraction == 1.0

    def test_infeasible_apply_is_contract_violation(self):
        world = load_scene(base_scene())
        with pytest.raises(InfeasibleActionError):
            apply(world, Primitive("grasp", target="spam"))

    def test_configured_failure_leaves_world_unchanged(self):
        world = load_scene(base_scene())
        world, _ = apply(world, Primitive("approach", target="can"))
        rng = np.random.default_rng(0)
        new, ok = apply(world, Primitive("grasp", target="can"), rng=rng, failure_prob=1.0)
        assert not ok
        assert new.gripper.holding is None

    def test_does_not_mutate_input(self):
        world = load_scene(base_scene())
        apply(world, Primitive("open_drawer", target="drawer"))
        assert world.objects["drawer"].open_fraction == 0.0

    def test_invariants_preserved_under_random_feasible_primitives(self):
        rng = np.random.default_rng(42)
        world = load_scene(base_scene())
        object_count = len(world.objects)
        applied = 0
        for _ in range(300):
            oid = rng.choice(sorted(world.objects))
            kind = rng.choice(["approach", "grasp", "lift", "move_to", "release",
                               "open_drawer", "close_drawer", "tilt"])
            point = tuple(rng.uniform([-0.1, -0.6], [0.9, 0.6]))
            prim = Primitive(kind, target=None if kind in ("lift", "release") else oid,
                             point=point if kind == "move_to" and rng.random() < 0.5 else None)
            if prim.kind == "move_to" and prim.point is not None:
                prim = Primitive("move_to", point=point)
            ok, _ = feasible(world, prim)
            if not ok:
                continue
            world, _ = apply(world, prim)
            world.validate()
            assert len(world.objects) == object_count
            applied += 1
        assert applied > 50


class TestFreeSlot:
    def test_deterministic_and_clear(self):
        world = load_scene(base_scene())
        a = free_slot(world, near=(0.3, 0.1))
        b = free_slot(world, near=(0.3, 0.1))
        assert a == b
        for obj in world.objects.values():
            assert np.hypot(a[0] - obj.pose[0], a[1] - obj.pose[1]) > 0.07


class TestPerturb:
    def test_ghost_object_flagged(self):
        world = load_scene(base_scene())
        new = perturb(world, Perturbation("ghost_object", {"class": "mug"}))
        ghosts = [o for o in new.objects.values() if o.ghost]
        assert len(ghosts) == 1
        assert len(new.objects) == len(world.objects) + 1

    def test_move_object(self):
        world = load_scene(base_scene())
        new = perturb(world, Perturbation("move_object", {"id": "bowl", "pose": [0.2, -0.5, 0.03, 0.0]}))
        assert np.allclose(new.objects["bowl"].pose[:2], [0.2, -0.5])
        new.validate()

    def test_drop_object_releases_dependents(self):
        world = load_scene(base_scene())
        new = perturb(world, Perturbation("drop_object", {"id": "spam"}))
        assert "spam" not in new.objects
        assert new.objects["can"].support == ("table",)
        new.validate()

    def test_misdetect_pose(self):
        world = load_scene(base_scene())
        new = perturb(world, Perturbation("misdetect_pose", {"id": "bowl", "delta": [0.05, 0.0, 0.0]}))
        assert new.objects["bowl"].pose[0] == pytest.approx(0.65)

    def test_unknown_id_rejected(self):
        world = load_scene(base_scene())
        with pytest.raises(ValueError):
            perturb(world, Perturbation("drop_object", {"id": "nosuch"}))


def teleop_frame(t, pos, z_rot=0.0, visible=True):
    if not visible:
        return HandFrame(timestamp=t, visible=False)
    return HandFrame(timestamp=t, visible=True, palm_position=np.asarray(pos, dtype=float),
                     palm_direction=np.array([1.0, 0, 0]), palm_normal=np.array([0, 0, -1.0]),
                     z_rotation=z_rot, fingers=np.zeros((5, 4, 2, 3)),
                     fingertips=np.zeros((5, 3)))


class TestTeleop:
    def test_identity_map_in_bounds(self):
        world = load_scene(base_scene())
        ctl = TeleopController(world)
        target = ctl.step(teleop_frame(0.0, [0.3, 0.0, 0.2], z_rot=0.4))
        assert target[:3] == pytest.approx([0.3, 0.0, 0.2])
        assert target[3] == pytest.approx(0.4)

    def test_clamped_to_workspace(self):
        world = load_scene(base_scene())
        ctl = TeleopController(world)
        target = ctl.step(teleop_frame(0.0, [5.0, -5.0, 0.2]))
        assert target[0] == pytest.approx(0.9)
        assert target[1] == pytest.approx(-0.6)

    def test_rate_limit_at_20hz(self):
        world = load_scene(base_scene())
        ctl = TeleopController(world, TeleopMap(max_speed=0.5))
        ctl.step(teleop_frame(0.0, [0.3, 0.0, 0.2]))
        target = ctl.step(teleop_frame(0.05, [0.5, 0.0, 0.2]))  # 0.2 m jump
        moved = np.linalg.norm(target[:3] - [0.3, 0.0, 0.2])
        assert moved == pytest.approx(0.025, abs=1e-12)

    def test_invisible_frame_holds_target(self):
        world = load_scene(base_scene())
        ctl = TeleopController(world)
        a = ctl.step(teleop_frame(0.0, [0.3, 0.0, 0.2]))
        b = ctl.step(teleop_frame(0.05, None, visible=False))
        assert np.allclose(a, b)

    def test_displacement_bounded_for_arbitrary_streams(self):
        world = load_scene(base_scene())
        mapping = TeleopMap(max_speed=0.5)
        ctl = TeleopController(world, mapping)
        rng = np.random.default_rng(7)
        t = 0.0
        prev = ctl.step(teleop_frame(t, rng.uniform([-1, -1, 0], [2, 1, 1])))
        for _ in range(200):
            dt = float(rng.uniform(0.01, 0.2))
            t += dt
            if rng.random() < 0.1:
                cur = ctl.step(teleop_frame(t, None, visible=False))
            else:
                cur = ctl.step(teleop_frame(t, rng.uniform([-1, -1, -1], [2, 1, 2])))
            step = np.linalg.norm(cur[:3] - prev[:3])
            assert step <= mapping.max_speed * dt + 1e-9
            prev = cur
