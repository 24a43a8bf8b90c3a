"""Reference-point ranking and the non-robustness auditor.

A distance-based ranking of IFS collections measures each set's distance to
an ideal point and ranks by similarity: against the positive ideal (every
element (1, 0)) smaller distances are better, against the negative ideal
(every element (0, 1)) larger distances are better. A measure is robust when
both choices yield the same order for every collection.

`audit` searches a measure for witness pairs that break robustness: two
single-element sets at (numerically) equal distance from the negative ideal
whose distances to the positive ideal differ. Partners are constructed by
bisecting along rays from the negative ideal through random valid points,
because equal-distance pairs have measure zero and rejection sampling would
never hit them. Every reported pair is re-verified from its own coordinates,
so reports are self-checking.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .distances import DistanceMeasure, sample_simplex
from .errors import DomainError, MismatchError
from .ifs import IFN, IFS
from .ranking import RankingResult, build_ranking

MAX_COUNTEREXAMPLES = 10
_BISECTION_STEPS = 100


class ReferenceKind(enum.Enum):
    """Which ideal point anchors a distance-based ranking."""

    PIS = "PIS"
    NIS = "NIS"

    def expand(self, n: int) -> IFS:
        if self is ReferenceKind.PIS:
            return IFS.positive_ideal(n)
        return IFS.negative_ideal(n)


def rank_by_reference(
    sets: Sequence[IFS],
    measure: DistanceMeasure,
    ref: ReferenceKind,
    labels: Sequence[str] | None = None,
    tie_tolerance: float = 1e-9,
) -> RankingResult:
    """Rank IFS by distance to an ideal point.

    Scores are the raw distances. Against PIS ascending distance is better;
    against NIS descending distance is better. Distances within
    `tie_tolerance` form tie groups.
    """
    if len(sets) == 0:
        raise DomainError("cannot rank an empty collection of sets")
    n = len(sets[0])
    if any(len(s) != n for s in sets):
        raise MismatchError("all sets must have the same length")
    if labels is None:
        labels = [f"X{i + 1}" for i in range(len(sets))]
    ideal = ref.expand(n)
    distances = [measure.evaluate(s, ideal) for s in sets]
    return build_ranking(
        method=f"{measure.name}/{ref.value}",
        labels=labels,
        scores=distances,
        higher_is_better=(ref is ReferenceKind.NIS),
        tie_tolerance=tie_tolerance,
        config_echo={
            "measure": measure.name,
            "reference": ref.value,
            "tie_tolerance": tie_tolerance,
        },
    )


def robustness_check(
    sets: Sequence[IFS],
    measure: DistanceMeasure,
    labels: Sequence[str] | None = None,
    tie_tolerance: float = 1e-9,
) -> bool:
    """True iff ranking against PIS and against NIS produce identical orders,
    tie structure included."""
    against_pis = rank_by_reference(sets, measure, ReferenceKind.PIS, labels, tie_tolerance)
    against_nis = rank_by_reference(sets, measure, ReferenceKind.NIS, labels, tie_tolerance)
    return against_pis.order == against_nis.order


@dataclass(frozen=True)
class Counterexample:
    """Two IFNs equidistant from the negative ideal but not from the positive one."""

    a: IFN
    b: IFN
    d_nis_a: float
    d_nis_b: float
    d_pis_a: float
    d_pis_b: float

    def verify(self, measure: DistanceMeasure, eps: float, delta: float) -> bool:
        """Recompute all four distances from the stored pair and confirm both
        the equal-NIS-distance construction and the PIS-distance violation."""
        nis, pis = IFS.negative_ideal(1), IFS.positive_ideal(1)
        d_nis_a = measure.evaluate(IFS((self.a,)), nis)
        d_nis_b = measure.evaluate(IFS((self.b,)), nis)
        d_pis_a = measure.evaluate(IFS((self.a,)), pis)
        d_pis_b = measure.evaluate(IFS((self.b,)), pis)
        reproduced = (
            d_nis_a == self.d_nis_a
            and d_nis_b == self.d_nis_b
            and d_pis_a == self.d_pis_a
            and d_pis_b == self.d_pis_b
        )
        return reproduced and abs(d_nis_a - d_nis_b) <= eps and abs(d_pis_a - d_pis_b) > delta

    def to_dict(self) -> dict:
        return {
            "a": [self.a.mu, self.a.nu],
            "b": [self.b.mu, self.b.nu],
            "d_nis_a": self.d_nis_a,
            "d_nis_b": self.d_nis_b,
            "d_pis_a": self.d_pis_a,
            "d_pis_b": self.d_pis_b,
        }


@dataclass(frozen=True)
class AuditReport:
    """Outcome of a robustness search over a sampling budget."""

    measure: str
    budget: int
    eps: float
    delta: float
    seed: int
    is_robust_on_budget: bool
    counterexamples: tuple[Counterexample, ...]
    samples_used: int

    def to_dict(self) -> dict:
        return {
            "measure": self.measure,
            "budget": self.budget,
            "eps": self.eps,
            "delta": self.delta,
            "seed": self.seed,
            "is_robust_on_budget": self.is_robust_on_budget,
            "samples_used": self.samples_used,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


def _iso_nis_partners(
    measure: DistanceMeasure, rng: np.random.Generator, count: int
) -> dict[str, np.ndarray]:
    """For `count` random anchors, construct partners at equal NIS-distance.

    Draws an anchor and a direction point per attempt, then bisects along the
    ray from the negative ideal (0, 1) through the direction point until the
    ray point matches the anchor's NIS-distance. Returns coordinate arrays,
    the achieved distances, and a feasibility mask (rays too short to reach
    the target distance are marked infeasible).
    """
    a_mu, a_nu = sample_simplex(rng, count)
    dir_mu, dir_nu = sample_simplex(rng, count)

    zeros = np.zeros(count)
    ones = np.ones(count)
    target = measure.pair_many(a_mu, a_nu, zeros, ones)

    # Ray p(s) = (s * dir_mu, 1 + s * (dir_nu - 1)) stays inside the valid
    # region for s in [0, s_max], exiting where nu reaches 0.
    drop = 1.0 - dir_nu
    s_max = np.where(drop > 0.0, 1.0 / np.maximum(drop, 1e-300), 0.0)
    end_mu = s_max * dir_mu
    end_nu = 1.0 + s_max * (dir_nu - 1.0)
    feasible = measure.pair_many(end_mu, end_nu, zeros, ones) >= target

    lo = np.zeros(count)
    hi = np.where(feasible, s_max, 0.0)
    for _ in range(_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        mid_mu = mid * dir_mu
        mid_nu = 1.0 + mid * (dir_nu - 1.0)
        below = measure.pair_many(mid_mu, mid_nu, zeros, ones) < target
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    s = 0.5 * (lo + hi)

    # Clean float dust off the ray point, then measure from the cleaned
    # coordinates so reported values re-verify exactly.
    b_mu = np.clip(s * dir_mu, 0.0, 1.0)
    b_nu = np.clip(1.0 + s * (dir_nu - 1.0), 0.0, 1.0)
    over = b_mu + b_nu > 1.0
    b_nu = np.where(over, 1.0 - b_mu, b_nu)
    d_nis_b = measure.pair_many(b_mu, b_nu, zeros, ones)

    return {
        "a_mu": a_mu, "a_nu": a_nu,
        "b_mu": b_mu, "b_nu": b_nu,
        "d_nis_a": target, "d_nis_b": d_nis_b,
        "feasible": feasible,
    }


def iso_nis_pairs(
    measure: DistanceMeasure, count: int, seed: int = 0, tol: float = 1e-12
) -> dict[str, np.ndarray]:
    """Construct IFN pairs whose NIS-distances agree within `tol`.

    Returns coordinate arrays filtered to successful constructions; intended
    for property checks over large sample counts.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.default_rng(seed)
    built = _iso_nis_partners(measure, rng, count)
    keep = built["feasible"] & (np.abs(built["d_nis_a"] - built["d_nis_b"]) <= tol)
    return {key: value[keep] for key, value in built.items() if key != "feasible"}


def audit(
    measure: DistanceMeasure,
    budget: int = 10_000,
    eps: float = 1e-9,
    delta: float = 1e-3,
    seed: int = 0,
) -> AuditReport:
    """Search for robustness violations within a sampling budget.

    Each budget unit spends one anchor/direction attempt. A counterexample is
    a constructed pair with NIS-distances within `eps` whose PIS-distances
    differ by more than `delta`. The search stops (logically) at the first
    10 counterexamples; `samples_used` reports the budget a sequential scan
    would have consumed. Deterministic for a fixed seed. An empty report is
    a valid outcome and yields is_robust_on_budget=True.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if eps <= 0.0 or delta <= 0.0:
        raise ValueError("eps and delta must be positive")
    rng = np.random.default_rng(seed)
    built = _iso_nis_partners(measure, rng, budget)

    ok = built["feasible"] & (np.abs(built["d_nis_a"] - built["d_nis_b"]) <= eps)
    zeros = np.zeros(budget)
    ones = np.ones(budget)
    d_pis_a = measure.pair_many(built["a_mu"], built["a_nu"], ones, zeros)
    d_pis_b = measure.pair_many(built["b_mu"], built["b_nu"], ones, zeros)
    violating = ok & (np.abs(d_pis_a - d_pis_b) > delta)

    hits = np.flatnonzero(violating)
    if hits.size >= MAX_COUNTEREXAMPLES:
        samples_used = int(hits[MAX_COUNTEREXAMPLES - 1]) + 1
        hits = hits[:MAX_COUNTEREXAMPLES]
    else:
        samples_used = budget

    counterexamples = tuple(
        Counterexample(
            a=IFN(float(built["a_mu"][i]), float(built["a_nu"][i])),
            b=IFN(float(built["b_mu"][i]), float(built["b_nu"][i])),
            d_nis_a=float(built["d_nis_a"][i]),
            d_nis_b=float(built["d_nis_b"][i]),
            d_pis_a=float(d_pis_a[i]),
            d_pis_b=float(d_pis_b[i]),
        )
        for i in hits
    )
    return AuditReport(
        measure=measure.name,
        budget=budget,
        eps=eps,
        delta=delta,
        seed=seed,
        is_robust_on_budget=len(counterexamples) == 0,
        counterexamples=counterexamples,
        samples_used=samples_used,
    )
