"""Tests for reference-point ranking, the robustness check, and the auditor."""

import math

import numpy as np
import pytest

from ifhv import (
    IFS,
    DomainError,
    MismatchError,
    ReferenceKind,
    audit,
    euclidean2,
    euclidean3,
    hamming,
    hausdorff,
    iso_nis_pairs,
    rank_by_reference,
    robustness_check,
)


@pytest.fixture
def reference_sets():
    x1 = IFS.from_pairs([(0.2, 0.4), (0.1, 0.2)])
    x2 = IFS.from_pairs([(0.3, 0.6), (0.4, 0.4)])
    x3 = IFS.from_pairs([(0.2, 0.7), (0.6, 0.3)])
    return [x1, x2, x3]


class TestRankByReference:
    def test_hamming_pis_order_with_tie(self, reference_sets):
        result = rank_by_reference(reference_sets, hamming, ReferenceKind.PIS)
        assert result.order == (("X3",), ("X1", "X2"))
        assert result.scores == pytest.approx({"X1": 0.575, "X2": 0.575, "X3": 0.55})
        assert not result.higher_is_better

    def test_hamming_nis_order_with_tie(self, reference_sets):
        result = rank_by_reference(reference_sets, hamming, ReferenceKind.NIS)
        assert result.order == (("X3",), ("X1", "X2"))
        assert result.higher_is_better

    def test_euclidean2_pis_order(self, reference_sets):
        result = rank_by_reference(reference_sets, euclidean2, ReferenceKind.PIS)
        # hand-computed: sqrt(1.37/4)=0.5852 < sqrt(1.38/4)=0.5874 < sqrt(1.65/4)=0.6423
        assert result.order == (("X2",), ("X3",), ("X1",))
        assert result.scores["X2"] == pytest.approx(0.5852, abs=5e-5)
        assert result.scores["X3"] == pytest.approx(0.5874, abs=5e-5)
        assert result.scores["X1"] == pytest.approx(0.6423, abs=5e-5)

    def test_euclidean2_nis_order(self, reference_sets):
        result = rank_by_reference(reference_sets, euclidean2, ReferenceKind.NIS)
        assert result.order == (("X1",), ("X3",), ("X2",))

    def test_relabeling_invariance(self, reference_sets):
        rng = np.random.default_rng(40)
        base = rank_by_reference(reference_sets, euclidean2, ReferenceKind.PIS)
        for _ in range(20):
            perm = list(rng.permutation(3))
            shuffled = [reference_sets[i] for i in perm]
            labels = [f"X{i + 1}" for i in perm]
            result = rank_by_reference(shuffled, euclidean2, ReferenceKind.PIS, labels=labels)
            assert [sorted(g) for g in result.order] == [sorted(g) for g in base.order]

    def test_length_mismatch(self, reference_sets):
        with pytest.raises(MismatchError):
            rank_by_reference(reference_sets + [IFS.positive_ideal(3)], hamming, ReferenceKind.PIS)

    def test_empty_collection(self):
        with pytest.raises(DomainError):
            rank_by_reference([], hamming, ReferenceKind.PIS)


class TestRobustnessCheck:
    def test_hamming_is_robust_here(self, reference_sets):
        assert robustness_check(reference_sets, hamming) is True

    def test_euclidean2_is_not(self, reference_sets):
        assert robustness_check(reference_sets, euclidean2) is False

    def test_singleton_trivially_robust(self):
        assert robustness_check([IFS.from_pairs([(0.2, 0.3)])], euclidean2) is True


class TestKnownCounterexample:
    def test_circle_pair_for_euclidean2(self):
        # (0, 0.5) and the boundary point at the same euclidean2-distance
        # sqrt(0.125) from (0, 1); their distances to (1, 0) differ.
        boundary_mu = math.sqrt(0.125)
        a = IFS.from_pairs([(0.0, 0.5)])
        b = IFS.from_pairs([(boundary_mu, 1.0 - boundary_mu)])
        nis, pis = IFS.negative_ideal(1), IFS.positive_ideal(1)
        assert euclidean2(a, nis) == pytest.approx(0.35355, abs=5e-6)
        assert euclidean2(b, nis) == pytest.approx(euclidean2(a, nis), abs=1e-12)
        assert euclidean2(a, pis) == pytest.approx(0.79057, abs=5e-6)
        assert euclidean2(b, pis) == pytest.approx(0.64645, abs=5e-6)
        assert abs(euclidean2(a, pis) - euclidean2(b, pis)) > 1e-3


class TestAudit:
    @pytest.mark.parametrize("measure", (euclidean2, euclidean3, hausdorff), ids=lambda m: m.name)
    def test_nonlinear_measures_fail(self, measure):
        report = audit(measure, budget=10_000, eps=1e-9, delta=1e-3, seed=7)
        assert not report.is_robust_on_budget
        assert 1 <= len(report.counterexamples) <= 10
        assert report.samples_used <= report.budget

    def test_counterexamples_self_verify(self):
        report = audit(euclidean2, budget=5000, eps=1e-9, delta=1e-3, seed=8)
        for c in report.counterexamples:
            assert c.verify(euclidean2, eps=1e-9, delta=1e-3)

    def test_hamming_survives(self):
        report = audit(hamming, budget=100_000, eps=1e-9, delta=1e-6, seed=9)
        assert report.is_robust_on_budget
        assert report.counterexamples == ()
        assert report.samples_used == 100_000

    def test_deterministic_under_seed(self):
        assert audit(euclidean2, budget=2000, seed=10) == audit(euclidean2, budget=2000, seed=10)

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            audit(euclidean2, budget=0)
        with pytest.raises(ValueError):
            audit(euclidean2, budget=10, eps=0.0)
        with pytest.raises(ValueError):
            audit(euclidean2, budget=10, delta=-1.0)

    def test_counterexamples_stay_in_valid_region(self):
        report = audit(hausdorff, budget=5000, seed=11)
        for c in report.counterexamples:
            for point in (c.a, c.b):
                assert 0.0 <= point.mu <= 1.0
                assert 0.0 <= point.nu <= 1.0
                assert point.mu + point.nu <= 1.0


class TestIsoNisPairs:
    def test_hamming_equal_nis_implies_equal_pis(self):
        # the linearity property behind robustness, on constructed pairs
        built = iso_nis_pairs(hamming, count=100_000, seed=12, tol=1e-12)
        assert built["a_mu"].size > 50_000  # construction succeeds generically
        pis_a = hamming.pair_many(
            built["a_mu"], built["a_nu"],
            np.ones_like(built["a_mu"]), np.zeros_like(built["a_mu"]),
        )
        pis_b = hamming.pair_many(
            built["b_mu"], built["b_nu"],
            np.ones_like(built["b_mu"]), np.zeros_like(built["b_mu"]),
        )
        assert np.max(np.abs(pis_a - pis_b)) <= 1e-12

    def test_construction_hits_target_distance(self):
        built = iso_nis_pairs(euclidean2, count=10_000, seed=13, tol=1e-10)
        assert np.max(np.abs(built["d_nis_a"] - built["d_nis_b"])) <= 1e-10

    def test_bad_count(self):
        with pytest.raises(ValueError):
            iso_nis_pairs(hamming, count=0)
