import numpy as np
import pytest

from handlang import synth
from handlang.classify import (DEFAULT_NO_GESTURE_CUTOFF, DynamicTemplates, GestureSet,
                               LayoutMismatchError, StaticModel, StaticRules, TrainingError,
                               balanced_accuracy, classify_dynamic, classify_static,
                               classify_static_deterministic, dtw_distance, dynamic_probabilities,
                               euclidean_baseline, resample_trajectory, train_static)
from handlang.handstream import FeatureVector, Trajectory


def dtw_oracle(a, b):
    """Independent quadratic-DP implementation (pure python loops)."""
    pa, pb = a.points, b.points
    n, m = len(pa), len(pb)
    INF = float("inf")
    acc = [[INF] * (m + 1) for _ in range(n + 1)]
    acc[0][0] = 0.0
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            c = float(sum((pa[i - 1][k] - pb[j - 1][k]) ** 2 for k in range(3)) ** 0.5)
            acc[i][j] = min(acc[i - 1][j] + c, acc[i][j - 1] + c, acc[i - 1][j - 1] + 2 * c)
    return acc[n][m] / (n + m)


@pytest.fixture(scope="module")
def gesture_set():
    return GestureSet()


@pytest.fixture(scope="module")
def small_model(gesture_set):
    x, y = synth.static_dataset(gesture_set.static_labels, 60, noise=0.004, seed=42)
    return train_static(x, y, gesture_set, seed=1)


@pytest.fixture(scope="module")
def templates():
    return DynamicTemplates(templates=synth.default_templates())


class TestTrainStatic:
    def test_holdout_balanced_accuracy_floor(self, gesture_set, small_model):
        x, y = synth.static_dataset(gesture_set.static_labels, 25, noise=0.004, seed=77)
        preds = [small_model.labels[int(np.argmax(classify_static(small_model, FeatureVector(values=v))))]
                 for v in x]
        assert balanced_accuracy(preds, y) >= 0.95

    def test_single_class_degenerates(self):
        gs = GestureSet(static_labels=("grab",))
        x, y = synth.static_dataset(("grab",), 30, noise=0.004, seed=0)
        model = train_static(x, y, gs, seed=0, epochs=5)
        probs = classify_static(model, FeatureVector(values=x[0]))
        assert probs.shape == (1,)
        assert probs[0] == pytest.approx(1.0)

    def test_zero_sample_class_errors(self, gesture_set):
        x, y = synth.static_dataset(("grab", "pinch"), 30, noise=0.004, seed=0)
        with pytest.raises(TrainingError, match="zero samples"):
            train_static(x, y, gesture_set, seed=0)

    def test_separable_blobs_perfect(self):
        # two Gaussian blobs 10 sigma apart; verified against a nearest-centroid oracle
        rng = np.random.default_rng(4)
        gs = GestureSet(static_labels=("grab", "five"))
        a = rng.normal(0.0, 0.1, size=(60, 57))
        b = rng.normal(1.0, 0.1, size=(60, 57))
        x = np.vstack([a, b])
        y = ["grab"] * 60 + ["five"] * 60
        model = train_static(x, y, gs, seed=2)
        preds = [model.labels[int(np.argmax(classify_static(model, FeatureVector(values=v))))]
                 for v in x]
        centroids = {"grab": a.mean(axis=0), "five": b.mean(axis=0)}
        oracle = [min(centroids, key=lambda c: np.linalg.norm(v - centroids[c])) for v in x]
        assert preds == oracle
        assert balanced_accuracy(preds, y) == 1.0

    def test_model_file_roundtrip(self, small_model, tmp_path):
        path = tmp_path / "model.json"
        small_model.save(path)
        loaded = StaticModel.load(path)
        fv = FeatureVector(values=np.linspace(0.0, 1.0, 57))
        assert np.allclose(classify_static(loaded, fv), classify_static(small_model, fv))


class TestClassifyStatic:
    def test_training_sample_memorized(self, gesture_set, small_model):
        frame = synth.posed_frame("point", noise=0.002, rng=np.random.default_rng(9))
        from handlang.handstream import static_features
        probs = classify_static(small_model, static_features(frame))
        assert small_model.labels[int(np.argmax(probs))] == "point"

    def test_zero_vector_still_a_distribution(self, small_model):
        probs = classify_static(small_model, FeatureVector(values=np.zeros(57)))
        assert probs.sum() == pytest.approx(1.0, abs=1e-6)
        assert (probs >= 0).all()

    def test_five_fixture_confident(self, small_model):
        from handlang.handstream import static_features
        frame = synth.posed_frame("five", noise=0.001, rng=np.random.default_rng(1))
        probs = classify_static(small_model, static_features(frame))
        assert small_model.labels[int(np.argmax(probs))] == "five"
        assert probs.max() > 0.8

    def test_layout_mismatch(self, small_model):
        with pytest.raises(LayoutMismatchError):
            classify_static(small_model, FeatureVector(values=np.zeros(57), layout_tag="v2"))

    def test_sums_to_one_for_arbitrary_inputs(self, small_model):
        rng = np.random.default_rng(13)
        for _ in range(20):
            fv = FeatureVector(values=rng.normal(0, 10, size=57))
            probs = classify_static(small_model, fv)
            assert probs.sum() == pytest.approx(1.0, abs=1e-6)
            assert (probs >= 0).all()


class TestDeterministicRules:
    def test_open_hand_is_five(self):
        from handlang.handstream import static_features
        fv = static_features(synth.posed_frame("five"))
        assert classify_static_deterministic(StaticRules(), fv) == "five"

    def test_fist_is_grab(self):
        from handlang.handstream import static_features
        fv = static_features(synth.posed_frame("grab"))
        assert classify_static_deterministic(StaticRules(), fv) == "grab"

    def test_rules_must_cover_labels(self):
        rules = StaticRules(patterns={"grab": ((0, 0, 0, 0, 0), None)})
        with pytest.raises(ValueError, match="missing"):
            classify_static_deterministic(rules, FeatureVector(values=np.zeros(57)))

    def test_noisy_two_below_probabilistic(self, gesture_set, small_model):
        from handlang.handstream import static_features
        rng = np.random.default_rng(21)
        frames = [synth.posed_frame("two", noise=0.01, rng=rng) for _ in range(60)]
        # pad with other labels so balanced accuracy is meaningful
        others = [synth.posed_frame(l, noise=0.01, rng=rng)
                  for l in ("five", "grab", "point") for _ in range(20)]
        labels = ["two"] * 60 + ["five"] * 20 + ["grab"] * 20 + ["point"] * 20
        feats = [static_features(f) for f in frames + others]
        det = [classify_static_deterministic(StaticRules(), fv) for fv in feats]
        prob = [small_model.labels[int(np.argmax(classify_static(small_model, fv)))] for fv in feats]
        assert balanced_accuracy(det, labels) < balanced_accuracy(prob, labels)


class TestDTW:
    def test_identity_zero(self):
        a = synth.swipe_trajectory("swipe_up")
        assert dtw_distance(a, a) == 0.0

    def test_symmetry(self):
        rng = np.random.default_rng(8)
        for _ in range(10):
            a = Trajectory(points=rng.normal(size=(int(rng.integers(2, 30)), 3)), rate=20.0)
            b = Trajectory(points=rng.normal(size=(int(rng.integers(2, 30)), 3)), rate=20.0)
            assert dtw_distance(a, b) == pytest.approx(dtw_distance(b, a), abs=1e-12)

    def test_half_length_resample_close(self):
        a = synth.swipe_trajectory("swipe_left", n_points=20)
        half = resample_trajectory(a, 10)
        assert dtw_distance(a, half) < 0.05 * 0.4  # path extent 0.4 m

    def test_matches_independent_oracle(self):
        rng = np.random.default_rng(17)
        for _ in range(8):
            a = Trajectory(points=rng.normal(size=(int(rng.integers(2, 15)), 3)), rate=20.0)
            b = Trajectory(points=rng.normal(size=(int(rng.integers(2, 15)), 3)), rate=20.0)
            assert dtw_distance(a, b) == pytest.approx(dtw_oracle(a, b), abs=1e-12)

    def test_empty_rejected(self):
        a = synth.swipe_trajectory("swipe_up")
        empty = Trajectory(points=np.zeros((0, 3)), rate=20.0)
        with pytest.raises(ValueError):
            dtw_distance(a, empty)

    def test_nonnegative(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            a = Trajectory(points=rng.normal(size=(5, 3)), rate=20.0)
            b = Trajectory(points=rng.normal(size=(7, 3)), rate=20.0)
            assert dtw_distance(a, b) >= 0.0


class TestClassifyDynamic:
    def test_template_identity(self, templates):
        label, dists = classify_dynamic(templates, templates.templates["swipe_left"])
        assert label == "swipe_left"
        assert dists["swipe_left"] == 0.0

    def test_stationary_is_no_gesture(self, templates):
        pts = np.tile(np.array([0.35, 0.0, 0.20]) + 0.2, (20, 1))
        label, dists = classify_dynamic(templates, Trajectory(points=pts, rate=20.0))
        assert label == "no_gesture"
        assert min(dists.values()) > DEFAULT_NO_GESTURE_CUTOFF

    def test_warped_noisy_swipe_up(self, templates):
        sample = synth.swipe_trajectory("swipe_up", warp=1.5, noise=0.005,
                                        rng=np.random.default_rng(3))
        label, _ = classify_dynamic(templates, sample)
        assert label == "swipe_up"

    def test_no_templates_error(self):
        with pytest.raises(ValueError):
            classify_dynamic(DynamicTemplates(templates={}), synth.swipe_trajectory("swipe_up"))

    def test_time_scale_invariance_of_label(self, templates):
        rng = np.random.default_rng(31)
        for direction in ("swipe_up", "swipe_down", "swipe_left", "swipe_right"):
            sample = synth.swipe_trajectory(direction, noise=0.004, rng=rng)
            for factor in (0.5, 0.75, 1.5, 2.0):
                scaled = resample_trajectory(sample, max(2, int(round(len(sample) * factor))))
                label, _ = classify_dynamic(templates, scaled)
                assert label == direction

    def test_argmin_invariant_under_uniform_scaling(self, templates):
        sample = synth.swipe_trajectory("swipe_right", warp=1.3, noise=0.004,
                                        rng=np.random.default_rng(5))
        _, dists = classify_dynamic(templates, sample)
        base = min(dists, key=dists.get)
        for c in (0.5, 2.0, 7.5):
            scaled = {k: c * v for k, v in dists.items()}
            assert min(scaled, key=scaled.get) == base

    def test_templates_roundtrip(self, templates, tmp_path):
        path = tmp_path / "templates.json"
        templates.save(path)
        loaded = DynamicTemplates.load(path)
        assert set(loaded.templates) == set(templates.templates)
        for k in loaded.templates:
            assert np.allclose(loaded.templates[k].points, templates.templates[k].points)

    def test_dynamic_probabilities_sum_and_argmax(self, templates):
        sample = synth.swipe_trajectory("swipe_down", warp=0.8, noise=0.003,
                                        rng=np.random.default_rng(6))
        label, dists = classify_dynamic(templates, sample)
        probs = dynamic_probabilities(dists)
        assert sum(probs.values()) == pytest.approx(1.0, abs=1e-9)
        assert max(probs, key=probs.get) == label


class TestEuclideanBaseline:
    def test_identity_zero(self, templates):
        label, dists = euclidean_baseline(templates, templates.templates["swipe_up"])
        assert label == "swipe_up"
        assert dists["swipe_up"] == pytest.approx(0.0, abs=1e-12)

    def test_constant_offset_distance(self, templates):
        a = templates.templates["swipe_up"]
        b = Trajectory(points=a.points + np.array([0.1, 0.0, 0.0]), rate=a.rate)
        _, dists = euclidean_baseline(templates, b)
        assert dists["swipe_up"] == pytest.approx(0.1, abs=1e-12)

    def test_ordering_on_warped_set(self, templates):
        samples, labels = synth.dynamic_dataset(25, seed=3)
        dtw_preds = [classify_dynamic(templates, s)[0] for s in samples]
        euc_preds = [euclidean_baseline(templates, s)[0] for s in samples]
        ba_dtw = balanced_accuracy(dtw_preds, labels)
        ba_euc = balanced_accuracy(euc_preds, labels)
        assert ba_euc < ba_dtw


class TestBalancedAccuracy:
    def test_perfect(self):
        assert balanced_accuracy(["a", "b", "a"], ["a", "b", "a"]) == 1.0

    def test_constant_predictor_chance(self):
        preds = ["a"] * 10
        labels = ["a"] * 5 + ["b"] * 5
        assert balanced_accuracy(preds, labels) == pytest.approx(0.5)

    def test_binary_formula(self):
        # TP=3, FN=1, TN=2, FP=2 -> 0.5 * (3/4 + 2/4) = 0.625
        labels = ["p"] * 4 + ["n"] * 4
        preds = ["p", "p", "p", "n", "p", "p", "n", "n"]
        assert balanced_accuracy(preds, labels) == pytest.approx(0.625)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            balanced_accuracy([], [])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            balanced_accuracy(["a"], ["a", "b"])
