"""Distance-based comparator methods sharing the HVAS front pipeline.

IF-TOPSIS, IF-VIKOR, and IF-CODAS all start from `build_weighted_matrix`
(aggregation, normalization, weighting), then determine per-criterion
positive and negative solutions from the candidate values themselves via
score/accuracy comparison. The extreme points (1, 0) and (0, 1) are not
used here because the shared normalization works relative to the best and
worst values actually present.

Method cores, for an alternative profile A against the positive solution
profile PS and negative solution profile NS:

    TOPSIS  closeness = d(A, NS) / (d(A, PS) + d(A, NS)), ranked descending.
    VIKOR   per-criterion gaps e_j = d1(A_j, PS_j) / d1(PS_j, NS_j);
            group utility S = sum_j e_j, individual regret R = max_j e_j;
            Q = v * (S - S*) / (S- - S*) + (1 - v) * (R - R*) / (R- - R*),
            ranked ascending; a collapsed denominator drops its term and the
            remaining weight is renormalized.
    CODAS   E = d_primary(A, NS), T = d_secondary(A, NS); pairwise assessment
            h_ik = (E_i - E_k) + (T_i - T_k when |E_i - E_k| < tau);
            ranked by H_i = sum_k h_ik descending.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .distances import DistanceMeasure, euclidean2, hamming
from .errors import DegenerateError, DomainError
from .hvas import (
    DecisionProblem,
    Matrix,
    alternative_profiles,
    build_weighted_matrix,
    rank as hvas_rank,
)
from .ifs import IFN, IFS, select_extremes
from .ranking import RankingResult, build_ranking

DEFAULT_TAU = 0.02
DEFAULT_V = 0.5


@dataclass(frozen=True)
class CompareConfig:
    """Shared knobs of the comparator methods.

    tau is the CODAS threshold under which the secondary distance joins the
    pairwise assessment; v is the VIKOR strategy weight between group utility
    and individual regret.
    """

    tau: float = DEFAULT_TAU
    v: float = DEFAULT_V
    measure_primary: DistanceMeasure = field(default_factory=lambda: euclidean2)
    measure_secondary: DistanceMeasure = field(default_factory=lambda: hamming)
    tie_tolerance: float = 1e-9

    def __post_init__(self) -> None:
        if not 0.0 <= float(self.tau) <= 1.0:
            raise DomainError(f"tau must lie in [0, 1], got {self.tau}")
        if not 0.0 <= float(self.v) <= 1.0:
            raise DomainError(f"v must lie in [0, 1], got {self.v}")

    def echo(self) -> dict:
        return {
            "tau": self.tau,
            "v": self.v,
            "measure_primary": self.measure_primary.name,
            "measure_secondary": self.measure_secondary.name,
            "tie_tolerance": self.tie_tolerance,
        }


def column_extremes(matrix: Matrix) -> tuple[IFS, IFS]:
    """Per-criterion best and worst values over the candidate set."""
    best: list[IFN] = []
    worst: list[IFN] = []
    for row in matrix:
        ps, ns = select_extremes(row)
        best.append(ps)
        worst.append(ns)
    return IFS(tuple(best)), IFS(tuple(worst))


def _prepared(problem: DecisionProblem, cfg: CompareConfig):
    matrix = build_weighted_matrix(problem)
    profiles = alternative_profiles(matrix, problem)
    ps_profile, ns_profile = column_extremes(matrix)
    if ps_profile == ns_profile and problem.n_alternatives > 1:
        raise DegenerateError(
            "all alternatives are identical after weighting; nothing to rank"
        )
    return matrix, profiles, ps_profile, ns_profile


def topsis(problem: DecisionProblem, cfg: CompareConfig | None = None) -> RankingResult:
    """Relative closeness to the negative solution, ranked descending."""
    cfg = cfg if cfg is not None else CompareConfig()
    _, profiles, ps_profile, ns_profile = _prepared(problem, cfg)
    scores = []
    for label, profile in zip(problem.alternatives, profiles):
        to_ps = cfg.measure_primary.evaluate(profile, ps_profile)
        to_ns = cfg.measure_primary.evaluate(profile, ns_profile)
        if to_ps + to_ns == 0.0:
            raise DegenerateError(
                f"alternative '{label}' is at zero distance from both solution profiles"
            )
        scores.append(to_ns / (to_ps + to_ns))
    return build_ranking(
        method="topsis",
        labels=problem.alternatives,
        scores=scores,
        higher_is_better=True,
        tie_tolerance=cfg.tie_tolerance,
        config_echo=cfg.echo(),
    )


def vikor(problem: DecisionProblem, cfg: CompareConfig | None = None) -> RankingResult:
    """Compromise index Q from group utility and individual regret, ranked ascending."""
    cfg = cfg if cfg is not None else CompareConfig()
    matrix, _, ps_profile, ns_profile = _prepared(problem, cfg)
    m = problem.n_criteria
    n = problem.n_alternatives

    def gap(value: IFN, ideal: IFN, span: float) -> float:
        if span == 0.0:
            return 0.0  # the criterion cannot discriminate; skip it
        return cfg.measure_primary.evaluate(IFS((value,)), IFS((ideal,))) / span

    spans = [
        cfg.measure_primary.evaluate(IFS((ps_profile[j],)), IFS((ns_profile[j],)))
        for j in range(m)
    ]
    utilities = []
    regrets = []
    for i in range(n):
        gaps = [gap(matrix[j][i], ps_profile[j], spans[j]) for j in range(m)]
        utilities.append(sum(gaps))
        regrets.append(max(gaps))

    s_best, s_worst = min(utilities), max(utilities)
    r_best, r_worst = min(regrets), max(regrets)
    terms = []
    if s_worst > s_best:
        terms.append((cfg.v, [(s - s_best) / (s_worst - s_best) for s in utilities]))
    if r_worst > r_best:
        terms.append((1.0 - cfg.v, [(r - r_best) / (r_worst - r_best) for r in regrets]))
    total_weight = sum(weight for weight, _ in terms)
    if total_weight == 0.0:
        q_values = [0.0] * n  # nothing discriminates; everything ties
    else:
        q_values = [
            sum(weight * values[i] for weight, values in terms) / total_weight
            for i in range(n)
        ]
    return build_ranking(
        method="vikor",
        labels=problem.alternatives,
        scores=q_values,
        higher_is_better=False,
        tie_tolerance=cfg.tie_tolerance,
        config_echo=cfg.echo(),
    )


def codas(problem: DecisionProblem, cfg: CompareConfig | None = None) -> RankingResult:
    """Combined distance assessment against the negative solution, ranked descending."""
    cfg = cfg if cfg is not None else CompareConfig()
    _, profiles, _, ns_profile = _prepared(problem, cfg)
    n = problem.n_alternatives
    primary = [cfg.measure_primary.evaluate(p, ns_profile) for p in profiles]
    secondary = [cfg.measure_secondary.evaluate(p, ns_profile) for p in profiles]
    assessments = []
    for i in range(n):
        total = 0.0
        for k in range(n):
            total += primary[i] - primary[k]
            if abs(primary[i] - primary[k]) < cfg.tau:
                total += secondary[i] - secondary[k]
        assessments.append(total)
    return build_ranking(
        method="codas",
        labels=problem.alternatives,
        scores=assessments,
        higher_is_better=True,
        tie_tolerance=cfg.tie_tolerance,
        config_echo=cfg.echo(),
    )


_COMPARATORS = {
    "topsis": topsis,
    "vikor": vikor,
    "codas": codas,
}

METHOD_NAMES = ("hvas",) + tuple(_COMPARATORS)


def run_methods(
    problem: DecisionProblem,
    methods: Sequence[str],
    cfg: CompareConfig | None = None,
    hv_config=None,
) -> list[RankingResult]:
    """Run a subset of {hvas, topsis, vikor, codas} on one problem."""
    cfg = cfg if cfg is not None else CompareConfig()
    results = []
    for name in methods:
        if name == "hvas":
            results.append(hvas_rank(problem, hv_config))
        elif name in _COMPARATORS:
            results.append(_COMPARATORS[name](problem, cfg))
        else:
            raise DomainError(
                f"unknown method '{name}'; available: {', '.join(METHOD_NAMES)}"
            )
    return results
