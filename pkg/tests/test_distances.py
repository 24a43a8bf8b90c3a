"""Tests for the built-in distance measures, the registry, and check_axioms."""

import numpy as np
import pytest

from ifhv import (
    IFS,
    DistanceMeasure,
    DomainError,
    MismatchError,
    MeasureKind,
    available_measures,
    check_axioms,
    euclidean2,
    euclidean3,
    get_measure,
    hamming,
    hausdorff,
)
from ifhv.distances import register, sample_simplex


@pytest.fixture
def reference_sets():
    x1 = IFS.from_pairs([(0.2, 0.4), (0.1, 0.2)])
    x2 = IFS.from_pairs([(0.3, 0.6), (0.4, 0.4)])
    x3 = IFS.from_pairs([(0.2, 0.7), (0.6, 0.3)])
    return x1, x2, x3


PIS2 = IFS.positive_ideal(2)
NIS2 = IFS.negative_ideal(2)


class TestHamming:
    def test_against_positive_ideal(self, reference_sets):
        x1, x2, x3 = reference_sets
        # (|0.2-1| + |0.4-0| + |0.1-1| + |0.2-0|) / 4 = 2.3 / 4
        assert hamming(x1, PIS2) == pytest.approx(0.5750, abs=1e-12)
        assert hamming(x2, PIS2) == pytest.approx(0.5750, abs=1e-12)
        assert hamming(x3, PIS2) == pytest.approx(0.5500, abs=1e-12)

    def test_against_negative_ideal(self, reference_sets):
        x1, x2, x3 = reference_sets
        assert hamming(x1, NIS2) == pytest.approx(0.4250, abs=1e-12)
        assert hamming(x2, NIS2) == pytest.approx(0.4250, abs=1e-12)
        assert hamming(x3, NIS2) == pytest.approx(0.4500, abs=1e-12)

    def test_self_distance_zero(self, reference_sets):
        for x in reference_sets:
            assert hamming(x, x) == 0.0

    def test_complement_sum_is_one(self):
        # linearity: d(A, PIS-seq) + d(A, NIS-seq) = 1 for every A
        rng = np.random.default_rng(11)
        for _ in range(5000):
            n = int(rng.integers(1, 6))
            mu, nu = sample_simplex(rng, n)
            a = IFS.from_pairs(zip(mu, nu))
            total = hamming(a, IFS.positive_ideal(n)) + hamming(a, IFS.negative_ideal(n))
            assert abs(total - 1.0) <= 1e-12


class TestEuclidean2:
    def test_against_positive_ideal(self, reference_sets):
        x1, _, _ = reference_sets
        # sqrt((0.8^2 + 0.4^2 + 0.9^2 + 0.2^2) / 4) = sqrt(1.65 / 4)
        assert euclidean2(x1, PIS2) == pytest.approx(np.sqrt(1.65 / 4), abs=1e-12)
        assert euclidean2(x1, PIS2) == pytest.approx(0.6423, abs=5e-5)

    def test_single_element(self):
        a = IFS.from_pairs([(0.0, 0.5)])
        # sqrt((0 + 0.25) / 2)
        assert euclidean2(a, IFS.negative_ideal(1)) == pytest.approx(0.35355, abs=5e-6)

    def test_self_distance_zero(self, reference_sets):
        for x in reference_sets:
            assert euclidean2(x, x) == 0.0


class TestEuclidean3:
    def test_full_hesitancy_to_ideal(self):
        a = IFS.from_pairs([(0.0, 0.0)])
        # dmu=1, dnu=0, dpi=1 -> sqrt(2/2) = 1
        assert euclidean3(a, IFS.positive_ideal(1)) == pytest.approx(1.0, abs=1e-12)

    def test_partial_hesitancy(self):
        a = IFS.from_pairs([(0.2, 0.4)])
        # sqrt((0.64 + 0.16 + 0.16) / 2)
        assert euclidean3(a, IFS.positive_ideal(1)) == pytest.approx(0.69282, abs=5e-6)

    def test_self_distance_zero(self, reference_sets):
        for x in reference_sets:
            assert euclidean3(x, x) == 0.0


class TestHausdorff:
    def test_against_ideals(self, reference_sets):
        x1, _, _ = reference_sets
        # (max(0.8, 0.4) + max(0.9, 0.2)) / 2
        assert hausdorff(x1, PIS2) == pytest.approx(0.85, abs=1e-12)
        # (max(0.2, 0.6) + max(0.1, 0.8)) / 2
        assert hausdorff(x1, NIS2) == pytest.approx(0.70, abs=1e-12)

    def test_self_distance_zero(self, reference_sets):
        for x in reference_sets:
            assert hausdorff(x, x) == 0.0


ALL_BUILTINS = (hamming, euclidean2, euclidean3, hausdorff)


class TestCommonBehavior:
    @pytest.mark.parametrize("measure", ALL_BUILTINS, ids=lambda m: m.name)
    def test_length_mismatch_rejected(self, measure):
        with pytest.raises(MismatchError):
            measure(IFS.positive_ideal(2), IFS.positive_ideal(3))

    @pytest.mark.parametrize("measure", ALL_BUILTINS, ids=lambda m: m.name)
    def test_range_and_permutation_equivariance(self, measure):
        rng = np.random.default_rng(12)
        for _ in range(500):
            n = int(rng.integers(1, 6))
            a_mu, a_nu = sample_simplex(rng, n)
            b_mu, b_nu = sample_simplex(rng, n)
            a = IFS.from_pairs(zip(a_mu, a_nu))
            b = IFS.from_pairs(zip(b_mu, b_nu))
            d = measure(a, b)
            assert 0.0 <= d <= 1.0
            perm = rng.permutation(n)
            a_p = IFS(tuple(a[int(i)] for i in perm))
            b_p = IFS(tuple(b[int(i)] for i in perm))
            assert measure(a_p, b_p) == pytest.approx(d, abs=1e-12)

    @pytest.mark.parametrize("measure", ALL_BUILTINS, ids=lambda m: m.name)
    def test_batch_entry_points_match_evaluate(self, measure):
        rng = np.random.default_rng(13)
        a_mu, a_nu = sample_simplex(rng, (50, 3))
        b_mu, b_nu = sample_simplex(rng, (50, 3))
        batch = measure.evaluate_many(a_mu, a_nu, b_mu, b_nu)
        for i in range(50):
            a = IFS.from_pairs(zip(a_mu[i], a_nu[i]))
            b = IFS.from_pairs(zip(b_mu[i], b_nu[i]))
            assert batch[i] == measure(a, b)
        single = measure.pair_many(a_mu[:, 0], a_nu[:, 0], b_mu[:, 0], b_nu[:, 0])
        for i in range(50):
            a = IFS.from_pairs([(a_mu[i, 0], a_nu[i, 0])])
            b = IFS.from_pairs([(b_mu[i, 0], b_nu[i, 0])])
            assert single[i] == measure(a, b)

    def test_kinds(self):
        assert hamming.kind is MeasureKind.LINEAR
        assert all(m.kind is MeasureKind.NONLINEAR for m in (euclidean2, euclidean3, hausdorff))


class TestRegistry:
    def test_builtins_are_registered(self):
        names = available_measures()
        for measure in ALL_BUILTINS:
            assert measure.name in names
            assert get_measure(measure.name) is measure

    def test_unknown_name(self):
        with pytest.raises(DomainError):
            get_measure("no-such-measure")

    def test_duplicate_name_rejected(self):
        with pytest.raises(DomainError):
            register(DistanceMeasure("hamming", MeasureKind.LINEAR, None, lambda a, b: 0.0))

    def test_plugin_function_round_trip(self):
        name = "plugin-half-hamming"
        if name not in available_measures():
            from ifhv import register_function

            register_function(name, lambda a, b: 0.5 * hamming(a, b))
        measure = get_measure(name)
        a = IFS.from_pairs([(0.2, 0.4)])
        b = IFS.from_pairs([(0.6, 0.1)])
        assert measure(a, b) == pytest.approx(0.5 * hamming(a, b))
        # fallback batch paths loop over evaluate
        out = measure.pair_many(np.array([0.2]), np.array([0.4]), np.array([0.6]), np.array([0.1]))
        assert out[0] == pytest.approx(0.5 * hamming(a, b))


class TestCheckAxioms:
    @pytest.mark.parametrize("measure", ALL_BUILTINS, ids=lambda m: m.name)
    def test_builtins_pass(self, measure):
        report = check_axioms(measure, samples=10_000, seed=17)
        assert report.all_ok
        assert report.witnesses == ()

    def test_asymmetric_measure_caught(self):
        skew = DistanceMeasure(
            "skew-test", MeasureKind.NONLINEAR, None,
            lambda a, b: float(np.clip(np.mean(a.mu_values() - b.mu_values()) + 0.5, 0, 1)),
        )
        report = check_axioms(skew, samples=2000, seed=18)
        assert not report.symmetry_ok
        assert len(report.witnesses) > 0
        assert any(w.axiom == "symmetry" for w in report.witnesses)

    def test_identity_violation_caught(self):
        offset = DistanceMeasure(
            "offset-test", MeasureKind.NONLINEAR, None,
            lambda a, b: hamming(a, b) + 0.1,
        )
        report = check_axioms(offset, samples=500, seed=19)
        assert not report.identity_ok

    def test_triangle_violation_caught(self):
        squared = DistanceMeasure(
            "squared-test", MeasureKind.NONLINEAR, None,
            lambda a, b: hamming(a, b) ** 2,
        )
        report = check_axioms(squared, samples=5000, seed=20)
        assert not report.triangle_ok

    def test_deterministic_under_seed(self):
        first = check_axioms(hamming, samples=1000, seed=21)
        second = check_axioms(hamming, samples=1000, seed=21)
        assert first == second

    def test_witness_cap(self):
        always_bad = DistanceMeasure(
            "bad-test", MeasureKind.NONLINEAR, None,
            lambda a, b: float(np.mean(a.mu_values())),
        )
        report = check_axioms(always_bad, samples=2000, seed=22)
        assert len(report.witnesses) <= 10

    def test_bad_sample_count(self):
        with pytest.raises(ValueError):
            check_axioms(hamming, samples=0)
