import itertools

import numpy as np
import pytest

from handlang.behavior import (ActionTrace, InfeasibleIntentError, Task, build_tree, execute,
                               render_tree, resolve_preconditions, task_complete, tick)
from handlang.sentence import Intent
from handlang.simworld import (Perturbation, Primitive, apply, feasible, load_scene, perturb)


def scene_doc(objects, holding=None, gripper=(0.4, 0.0, 0.3, 0.0)):
    return {
        "schema": "scene/v1", "table_height": 0.0, "workspace": [-0.1, 0.9, -0.6, 0.6],
        "gripper": {"pose": list(gripper), "holding": holding},
        "objects": objects,
    }


def stacked_world():
    return load_scene(scene_doc([
        {"id": "spam", "class": "spam", "pose": [0.3, 0.1, 0.03, 0.0], "support": "table"},
        {"id": "cheese", "class": "cheese", "pose": [0.3, 0.1, 0.09, 0.0], "support": {"on": "spam"}},
        {"id": "can", "class": "can", "pose": [0.3, 0.1, 0.15, 0.0], "support": {"on": "cheese"}},
        {"id": "drawer", "class": "drawer", "pose": [0.8, 0.4, 0.05, 0.0], "support": "table",
         "open_fraction": 0.0},
        {"id": "bowl", "class": "bowl", "pose": [0.6, -0.3, 0.03, 0.0], "support": "table"},
    ]))


def flat_world():
    return load_scene(scene_doc([
        {"id": "can", "class": "can", "pose": [0.2, 0.2, 0.03, 0.0], "support": "table",
         "fill": {"level": 1.0, "kind": "beans"}},
        {"id": "bowl", "class": "bowl", "pose": [0.6, -0.2, 0.03, 0.0], "support": "table"},
        {"id": "spam", "class": "spam", "pose": [0.3, -0.4, 0.03, 0.0], "support": "table"},
        {"id": "drawer", "class": "drawer", "pose": [0.8, 0.4, 0.05, 0.0], "support": "table",
         "open_fraction": 0.0},
    ]))


def run_tasks(tasks, world):
    """Oracle executor: run each task's primitives directly, in order."""
    from handlang.behavior import next_primitive
    for task in tasks:
        for _ in range(32):
            if task_complete(task, world):
                break
            prim = next_primitive(task, world)
            ok, reason = feasible(world, prim)
            assert ok, f"{task}: {prim} infeasible ({reason})"
            world, _ = apply(world, prim)
        assert task_complete(task, world), f"{task} did not complete"
    return world


class TestResolvePreconditions:
    def test_unstacks_top_down(self):
        plan = resolve_preconditions(Task("pick", obj="spam"), stacked_world())
        assert [str(t) for t in plan] == ["unstack(can)", "unstack(cheese)", "pick(spam)"]

    def test_closed_drawer_opens_first(self):
        plan = resolve_preconditions(Task("put", obj="spam", dest="drawer"), flat_world())
        kinds = [t.kind for t in plan]
        assert kinds.index("open") < kinds.index("put")

    def test_occupied_bowl_vacated(self):
        world = flat_world()
        world.objects["can"].support = ("in", "bowl")
        world.objects["can"].pose = np.array([0.6, -0.2, 0.03, 0.0])
        plan = resolve_preconditions(Task("put", obj="spam", dest="bowl"), world)
        labels = [str(t) for t in plan]
        assert labels[0] == "pick(can)"
        assert labels[1].startswith("place(can")
        assert labels[-1] == "put(spam, bowl)"

    def test_full_gripper_parks_held_object(self):
        world = flat_world()
        world = run_tasks([Task("pick", obj="spam")], world)
        plan = resolve_preconditions(Task("pick", obj="can"), world)
        assert plan[0].kind == "place" and plan[0].obj == "spam"

    def test_missing_object_infeasible(self):
        with pytest.raises(InfeasibleIntentError, match="missing-object"):
            resolve_preconditions(Task("pick", obj="phantom"), flat_world())

    def test_plan_execution_enables_goal(self):
        world = stacked_world()
        plan = resolve_preconditions(Task("pick", obj="spam"), world)
        final = run_tasks(plan, world)
        assert final.gripper.holding == "spam"

    def test_all_three_object_stackings_brute_force(self):
        """Every stacking arrangement of 3 objects: the resolved plan always
        makes the goal pick complete, for every goal object."""
        ids = ("a", "b", "c")
        arrangements = []
        for supports in itertools.product(["table", "a", "b", "c"], repeat=3):
            if any(ids[i] == supports[i] for i in range(3)):
                continue
            on_counts = {t: 0 for t in ids}
            ok = True
            for s in supports:
                if s != "table":
                    on_counts[s] += 1
                    if on_counts[s] > 1:
                        ok = False
            if not ok:
                continue
            # acyclicity
            parents = dict(zip(ids, supports))
            def roots_out(o, seen=()):
                if o == "table":
                    return True
                if o in seen:
                    return False
                return roots_out(parents[o], seen + (o,))
            if all(roots_out(o) for o in ids):
                arrangements.append(supports)
        assert len(arrangements) == 13
        heights = {"table": 0.03}
        for supports in arrangements:
            objects = []
            # derive z by chain depth
            def depth(o):
                return 0 if parents_map[o] == "table" else depth(parents_map[o]) + 1
            parents_map = dict(zip(ids, supports))
            for i, oid in enumerate(ids):
                d = depth(oid)
                base = parents_map[oid]
                xy = [0.3 + 0.2 * i, 0.2, 0.03] if base == "table" else None
                objects.append({"id": oid, "class": "cube", "pose": [0, 0, 0, 0],
                                "support": "table" if base == "table" else {"on": base}})
            world = load_scene(scene_doc(objects))
            # place stacks consistently
            for oid in ids:
                chain = []
                cur = oid
                while parents_map[cur] != "table":
                    cur = parents_map[cur]
                    chain.append(cur)
                root = chain[-1] if chain else oid
                world.objects[oid].pose = np.array([
                    0.3 + 0.2 * ids.index(root), 0.2, 0.03 + 0.06 * depth(oid), 0.0])
            world.validate()
            for goal in ids:
                plan = resolve_preconditions(Task("pick", obj=goal), world.clone())
                final = run_tasks(plan, world.clone())
                assert final.gripper.holding == goal

    def test_drawer_bowl_occupancy_combinations(self):
        for drawer_open in (0.0, 1.0):
            for bowl_occupied in (False, True):
                for holding in (None, "spam"):
                    world = flat_world()
                    world.objects["drawer"].open_fraction = drawer_open
                    if bowl_occupied:
                        world.objects["can"].support = ("in", "bowl")
                        world.objects["can"].pose = np.array([0.6, -0.2, 0.03, 0.0])
                    if holding:
                        world = run_tasks([Task("pick", obj=holding)], world)
                    for goal in (Task("put", obj="spam", dest="bowl"),
                                 Task("put", obj="spam", dest="drawer"),
                                 Task("pick", obj="can")):
                        plan = resolve_preconditions(goal, world.clone())
                        final = run_tasks(plan, world.clone())
                        assert task_complete(goal, final)


class TestBuildTreeAndTick:
    def test_pick_decomposition(self):
        world = flat_world()
        intent = Intent(action="pick", target_object="can")
        trace = execute(intent, world)
        assert trace.status == "success"
        assert [p.kind for p in trace.primitives] == ["approach", "grasp", "lift"]

    def test_satisfied_goal_empty_trace(self):
        world = flat_world()
        trace1 = execute(Intent(action="pick", target_object="can"), world)
        intent = Intent(action="pick", target_object="can")
        trace2 = execute(intent, trace1.final_world)
        assert trace2.status == "success"
        assert trace2.primitives == []

    def test_sequence_progression_after_open(self):
        world = flat_world()
        intent = Intent(action="put", target_object="spam", locations=("drawer",))
        tree = build_tree(intent, world)
        r1 = tick(tree, world)
        assert r1.primitive.kind == "open_drawer"
        world, _ = apply(world, r1.primitive)
        r2 = tick(tree, world)
        assert r2.primitive.kind == "approach"

    def test_perturbation_triggers_new_unstack(self):
        world = flat_world()
        intent = Intent(action="pick", target_object="can")
        tree = build_tree(intent, world)
        r1 = tick(tree, world)
        assert r1.primitive == Primitive("approach", target="can")
        # someone drops spam onto the can mid-plan
        world = perturb(world, Perturbation("move_object", {
            "id": "spam", "pose": [0.2, 0.2, 0.09, 0.0], "support": ("on", "can")}))
        r2 = tick(tree, world)
        assert r2.status == "running"
        assert r2.tasks[0].kind == "unstack" and r2.tasks[0].obj == "spam"

    def test_all_conditions_satisfied_success(self):
        world = flat_world()
        intent = Intent(action="open", target_object="drawer")
        world, _ = apply(world, Primitive("open_drawer", target="drawer"))
        tree = build_tree(intent, world)
        assert tick(tree, world).status == "success"

    def test_render_tree_outline(self):
        world = flat_world()
        intent = Intent(action="pick", target_object="can")
        tree = build_tree(intent, world)
        tick(tree, world)
        text = render_tree(tree.root)
        assert "intent: pick" in text
        assert "approach" in text


class TestExecute:
    def test_put_closed_drawer_full_trace(self):
        world = flat_world()
        intent = Intent(action="put", target_object="spam", locations=("drawer",))
        trace = execute(intent, world)
        assert trace.status == "success"
        assert trace.primitives[0].kind == "open_drawer"
        assert trace.final_world.objects["spam"].support == ("in", "drawer")

    def test_stack_three_objects(self):
        world = flat_world()
        t1 = execute(Intent(action="put", target_object="spam", locations=("can",)), world)
        t2 = execute(Intent(action="put", target_object="bowl", locations=("spam",)), t1.final_world)
        fw = t2.final_world
        assert t1.status == t2.status == "success"
        assert fw.objects["spam"].support == ("on", "can")
        assert fw.objects["bowl"].support == ("on", "spam")
        fw.validate()

    def test_adversarial_executor_converges(self):
        world = flat_world()
        nominal = execute(Intent(action="put", target_object="spam", locations=("bowl",)), world)
        assert nominal.status == "success"

        class FailOnce:
            def __init__(self):
                self.seen = set()

            def __call__(self, w, p):
                key = str(p)
                if key not in self.seen:
                    self.seen.add(key)
                    return w, False
                return apply(w, p)

        trace = execute(Intent(action="put", target_object="spam", locations=("bowl",)),
                        world, executor=FailOnce())
        assert trace.status == "success"
        assert len(trace.steps) <= 2 * len(nominal.steps)

    def test_budget_exhaustion_is_livelock(self):
        world = flat_world()

        def never(w, p):
            return w, False

        trace = execute(Intent(action="pick", target_object="can"), world,
                        executor=never, budget=25)
        assert trace.status == "failure"
        assert trace.reason == "livelock"

    def test_dropped_object_failure_reason(self):
        world = flat_world()

        def drop_can(w, tick_i):
            if tick_i == 1:
                return perturb(w, Perturbation("drop_object", {"id": "can"}))
            return w

        trace = execute(Intent(action="pick", target_object="can"), world,
                        between_ticks=drop_can)
        assert trace.status == "failure"
        assert "missing-object(can)" in trace.reason

    def test_swap_and_idempotence(self):
        world = flat_world()
        intent = Intent(action="swap", target_object="can", locations=("bowl",))
        trace = execute(intent, world)
        assert trace.status == "success"
        fw = trace.final_world
        assert fw.objects["can"].pose[:2] == pytest.approx([0.6, -0.2])
        assert fw.objects["bowl"].pose[:2] == pytest.approx([0.2, 0.2])
        again = execute(intent, fw)
        assert again.status == "success" and again.primitives == []

    def test_pour_with_angle(self):
        world = flat_world()
        intent = Intent(action="pour", target_object="can", locations=("bowl",),
                        metrics=(("angle", 60.0),))
        trace = execute(intent, world)
        assert trace.status == "success"
        assert trace.final_world.objects["bowl"].fill_level == 1.0
        assert "tilt" in [p.kind for p in trace.primitives]

    def test_every_step_was_feasible_in_its_pre_world(self):
        world = stacked_world()
        intent = Intent(action="put", target_object="spam", locations=("drawer",))
        trace = execute(intent, world)
        assert trace.status == "success"
        for step in trace.steps:
            ok, _ = feasible(step.pre, step.primitive)
            assert ok


class TestCloseAfterInsert:
    def test_drawer_closed_behind_when_configured(self):
        from handlang.config import PipelineConfig

        world = flat_world()
        intent = Intent(action="put", target_object="spam", locations=("drawer",))
        config = PipelineConfig().with_overrides(close_drawer_after_insert=True)
        trace = execute(intent, world, config=config)
        assert trace.status == "success"
        assert trace.primitives[-1].kind == "close_drawer"
        assert trace.final_world.objects["spam"].support == ("in", "drawer")
        assert trace.final_world.objects["drawer"].open_fraction == 0.0
        # default config leaves the drawer open
        trace2 = execute(Intent(action="put", target_object="spam", locations=("drawer",)),
                         flat_world())
        assert trace2.final_world.objects["drawer"].open_fraction == 1.0
