import math

import numpy as np
import pytest

from handlang import synth
from handlang.deictic import (Ray, object_distances, point_line_distance, ray_from_hand,
                              table_point, target_object)
from handlang.simworld import load_scene


def projection_oracle(p1, p2, s):
    """Independent perpendicular distance: reject the along-ray component."""
    u = np.asarray(p2, dtype=float) - np.asarray(p1, dtype=float)
    u = u / np.linalg.norm(u)
    w = np.asarray(s, dtype=float) - np.asarray(p1, dtype=float)
    perp = w - np.dot(w, u) * u
    return float(np.linalg.norm(perp))


def grid_world(n=3, spacing=0.2):
    objects = []
    k = 0
    for i in range(n):
        for j in range(n):
            objects.append({
                "id": f"obj{k}", "class": "cube",
                "pose": [0.2 + i * spacing, -spacing + j * spacing, 0.03, 0.0],
                "support": "table",
            })
            k += 1
    return load_scene({
        "schema": "scene/v1", "table_height": 0.0,
        "workspace": [-0.2, 1.0, -0.7, 0.7],
        "gripper": {"pose": [0.4, 0.0, 0.3, 0.0], "holding": None},
        "objects": objects,
    })


class TestRayFromHand:
    def test_palm_mode(self):
        frame = synth.posed_frame("point", origin=(0.0, 0.0, 0.0), yaw=0.0)
        ray = ray_from_hand(frame, "palm")
        assert np.allclose(ray.p1, [0, 0, 0])
        assert np.allclose(ray.p2, frame.palm_direction)

    def test_finger_mode_uses_index_distal(self):
        frame = synth.posed_frame("point")
        ray = ray_from_hand(frame, "finger")
        assert np.allclose(ray.p1, frame.fingers[1, 3, 0])
        assert np.allclose(ray.p2, frame.fingers[1, 3, 1])

    def test_invisible_rejected(self):
        from handlang.handstream import HandFrame
        with pytest.raises(ValueError):
            ray_from_hand(HandFrame(timestamp=0.0, visible=False), "palm")

    def test_degenerate_ray_rejected(self):
        with pytest.raises(ValueError):
            Ray(p1=np.zeros(3), p2=np.zeros(3))


class TestObjectDistances:
    def test_on_line_zero(self):
        world = grid_world()
        obj = world.objects["obj4"]
        ray = Ray(p1=obj.pose[:3] - np.array([1.0, 0, 0]), p2=obj.pose[:3])
        dists = object_distances(ray, world)
        assert dists.distances["obj4"] == pytest.approx(0.0, abs=1e-12)

    def test_perpendicular_offset(self):
        world = load_scene({
            "schema": "scene/v1", "workspace": [-1, 1, -1, 1],
            "objects": [{"id": "a", "class": "cube", "pose": [0.5, 0.2, 0.0, 0.0], "support": "table"}],
        })
        ray = Ray(p1=np.zeros(3), p2=np.array([1.0, 0.0, 0.0]))
        dists = object_distances(ray, world)
        assert dists.distances["a"] == pytest.approx(0.2, abs=1e-12)

    def test_grid_center_is_argmin(self):
        world = grid_world()
        center = world.objects["obj4"].pose[:3]
        ray = Ray(p1=np.array([-0.3, 0.0, 0.4]), p2=center)
        dists = object_distances(ray, world)
        assert target_object(dists) == "obj4"
        assert dists.distances["obj4"] < min(v for k, v in dists.distances.items() if k != "obj4")

    def test_matches_projection_oracle(self):
        world = grid_world()
        rng = np.random.default_rng(19)
        for _ in range(100):
            p1 = rng.uniform([-0.5, -0.8, 0.0], [1.2, 0.8, 0.8])
            p2 = p1 + rng.normal(size=3)
            if np.linalg.norm(p2 - p1) < 1e-6:
                continue
            ray = Ray(p1=p1, p2=p2)
            dists = object_distances(ray, world)
            for oid, obj in world.objects.items():
                assert dists.distances[oid] == pytest.approx(
                    projection_oracle(p1, p2, obj.pose[:3]), abs=1e-9)

    def test_reparameterization_invariance(self):
        world = grid_world()
        rng = np.random.default_rng(29)
        p1 = np.array([-0.2, 0.1, 0.5])
        p2 = np.array([0.8, -0.1, 0.0])
        base = object_distances(Ray(p1=p1, p2=p2), world).distances
        v = p2 - p1
        for _ in range(10):
            alpha, beta = rng.uniform(-3, 3, size=2)
            if abs(alpha - beta) < 1e-3:
                continue
            moved = object_distances(Ray(p1=p1 + alpha * v, p2=p1 + beta * v), world).distances
            for oid in base:
                assert moved[oid] == pytest.approx(base[oid], abs=1e-9)

    def test_probabilities_sum_to_one_in_range(self):
        world = grid_world()
        ray = Ray(p1=np.array([-0.3, 0.0, 0.4]), p2=world.objects["obj4"].pose[:3])
        dists = object_distances(ray, world)
        assert sum(dists.probabilities.values()) == pytest.approx(1.0, abs=1e-9)

    def test_empty_world(self):
        world = load_scene({"schema": "scene/v1", "objects": []})
        dists = object_distances(Ray(p1=np.zeros(3), p2=np.ones(3)), world)
        assert dists.distances == {}
        assert target_object(dists) is None


class TestTargetObject:
    def test_argmin(self):
        from handlang.deictic import TargetDistances
        dists = TargetDistances(distances={"a": 0.02, "b": 0.15}, probabilities={}, cutoff=0.30)
        assert target_object(dists) == "a"

    def test_cutoff(self):
        from handlang.deictic import TargetDistances
        dists = TargetDistances(distances={"a": 0.31}, probabilities={}, cutoff=0.30)
        assert target_object(dists) is None

    def test_tie_breaks_to_lowest_id(self):
        from handlang.deictic import TargetDistances
        dists = TargetDistances(distances={"b": 0.1, "a": 0.1}, probabilities={}, cutoff=0.30)
        assert target_object(dists) == "a"

    def test_on_ray_object_always_selected(self):
        world = grid_world()
        rng = np.random.default_rng(37)
        for _ in range(20):
            oid = f"obj{int(rng.integers(0, 9))}"
            target = world.objects[oid].pose[:3]
            p1 = rng.uniform([-0.5, -0.5, 0.2], [0.0, 0.5, 0.6])
            dists = object_distances(Ray(p1=p1, p2=target), world)
            assert dists.distances[oid] == pytest.approx(0.0, abs=1e-9)
            assert target_object(dists) == oid


class TestTablePoint:
    def test_vertical_ray(self):
        world = grid_world()
        hit = table_point(Ray(p1=np.array([0.0, 0.0, 0.5]), p2=np.array([0.0, 0.0, -0.5])), world)
        assert hit == pytest.approx([0.0, 0.0])

    def test_parallel_ray(self):
        world = grid_world()
        assert table_point(Ray(p1=np.array([0.0, 0.0, 0.5]), p2=np.array([1.0, 0.0, 0.5])), world) is None

    def test_diagonal_analytic(self):
        world = grid_world()
        hit = table_point(Ray(p1=np.array([0.0, 0.0, 0.4]),
                              p2=np.array([0.0, 0.0, 0.4]) + np.array([1.0, 0.0, -1.0])), world)
        assert hit == pytest.approx([0.4, 0.0], abs=1e-12)

    def test_backward_intersection_rejected(self):
        world = grid_world()
        # pointing up: the plane is behind the hand
        assert table_point(Ray(p1=np.array([0.0, 0.0, 0.4]), p2=np.array([0.0, 0.0, 1.4])), world) is None

    def test_outside_workspace_rejected(self):
        world = grid_world()
        assert table_point(Ray(p1=np.array([5.0, 0.0, 0.5]), p2=np.array([5.0, 0.0, -0.5])), world) is None


class TestNoiseMonotonicity:
    def test_accuracy_non_increasing_with_angular_noise(self):
        world = grid_world()
        rng = np.random.default_rng(101)
        hand = np.array([-0.25, 0.0, 0.45])
        trials = 200
        accuracies = []
        for sigma_deg in (0.0, 2.0, 5.0, 10.0):
            hits = 0
            rng_local = np.random.default_rng(7)  # same noise stream per level
            for t in range(trials):
                oid = f"obj{t % 9}"
                aim = world.objects[oid].pose[:3] - hand
                if sigma_deg > 0:
                    axis = rng_local.normal(size=3)
                    axis /= np.linalg.norm(axis)
                    angle = math.radians(rng_local.normal(0.0, sigma_deg))
                    aim = synth._rot_about(axis, angle) @ aim
                else:
                    rng_local.normal(size=3), rng_local.normal()  # keep streams aligned
                dists = object_distances(Ray(p1=hand, p2=hand + aim), world)
                if target_object(dists) == oid:
                    hits += 1
            accuracies.append(hits / trials)
        assert accuracies[0] == 1.0
        for lo, hi in zip(accuracies[1:], accuracies):
            assert lo <= hi + 1e-9
