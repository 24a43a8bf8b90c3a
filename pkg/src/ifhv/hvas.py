"""The HVAS decision pipeline: hypervolume-based assessment of alternatives.

A decision problem holds evaluations from q decision makers over n
alternatives and m criteria, plus per-criterion importance values and DM
expertise weights. The pipeline:

    1. aggregate DM evaluations per (criterion, alternative) with expertise
       weights (aggregate_evaluations),
    2. aggregate criterion importance the same way (aggregate_weights),
    3. normalize by criterion kind: cost criteria swap mu and nu (normalize),
    4. multiply each row by its aggregated importance (weight_matrix),
    5. score each alternative's column of weighted values by net hypervolume
       and rank descending (rank).

`build_weighted_matrix` runs steps 1-4; the comparator methods in
`ifhv.compare` start from the same function, so all methods share one
pipeline implementation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateError, DomainError, MismatchError
from .hypervolume import HVConfig, HVNetResult, hv_net
from .ifs import IFN, IFS, ifa_aggregate, multiply
from .ranking import RankingResult, build_ranking


class CriterionKind(enum.Enum):
    BENEFIT = "benefit"
    COST = "cost"


@dataclass(frozen=True)
class CriterionSpec:
    id: str
    kind: CriterionKind


@dataclass(frozen=True)
class DecisionProblem:
    """Evaluations, criterion importance, and expertise from q decision makers.

    Index order is [dm][criterion][alternative] for evaluations and
    [dm][criterion] for importance and expertise. Expertise values are
    ordinary fuzzy memberships in [0, 1].
    """

    alternatives: tuple[str, ...]
    criteria: tuple[CriterionSpec, ...]
    dms: tuple[str, ...]
    evaluations: tuple[tuple[tuple[IFN, ...], ...], ...]
    importance: tuple[tuple[IFN, ...], ...]
    expertise: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        n, m, q = len(self.alternatives), len(self.criteria), len(self.dms)
        if n < 1 or m < 1 or q < 1:
            raise DomainError("a problem needs at least one alternative, criterion, and DM")
        if len(set(self.alternatives)) != n:
            raise DomainError("alternative ids must be unique")
        if len(set(c.id for c in self.criteria)) != m:
            raise DomainError("criterion ids must be unique")
        if len(set(self.dms)) != q:
            raise DomainError("DM ids must be unique")
        for tensor, name, width in (
            (self.evaluations, "evaluations", n),
            (self.importance, "importance", None),
            (self.expertise, "expertise", None),
        ):
            if len(tensor) != q:
                raise MismatchError(f"{name} must have one entry per DM")
            for per_dm in tensor:
                if len(per_dm) != m:
                    raise MismatchError(f"{name} must have one entry per criterion")
                if width is not None:
                    for row in per_dm:
                        if len(row) != width:
                            raise MismatchError(f"{name} rows must have one entry per alternative")
        for per_dm in self.expertise:
            for w in per_dm:
                if not 0.0 <= float(w) <= 1.0:
                    raise DomainError(f"expertise weights must lie in [0, 1], got {w}")

    @property
    def n_alternatives(self) -> int:
        return len(self.alternatives)

    @property
    def n_criteria(self) -> int:
        return len(self.criteria)

    @property
    def n_dms(self) -> int:
        return len(self.dms)


Matrix = list[list[IFN]]  # criteria rows x alternative columns


def aggregate_evaluations(problem: DecisionProblem) -> Matrix:
    """Expertise-weighted aggregation of DM evaluations, per (criterion, alternative)."""
    matrix: Matrix = []
    for j, criterion in enumerate(problem.criteria):
        weights = [problem.expertise[l][j] for l in range(problem.n_dms)]
        if sum(weights) == 0.0:
            raise DegenerateError(
                f"expertise weights for criterion '{criterion.id}' sum to zero"
            )
        matrix.append(
            [
                ifa_aggregate(
                    [problem.evaluations[l][j][i] for l in range(problem.n_dms)], weights
                )
                for i in range(problem.n_alternatives)
            ]
        )
    return matrix


def aggregate_weights(problem: DecisionProblem) -> list[IFN]:
    """Expertise-weighted aggregation of criterion importance, per criterion."""
    aggregated: list[IFN] = []
    for j, criterion in enumerate(problem.criteria):
        weights = [problem.expertise[l][j] for l in range(problem.n_dms)]
        if sum(weights) == 0.0:
            raise DegenerateError(
                f"expertise weights for criterion '{criterion.id}' sum to zero"
            )
        aggregated.append(
            ifa_aggregate([problem.importance[l][j] for l in range(problem.n_dms)], weights)
        )
    return aggregated


def normalize(matrix: Matrix, criteria: Sequence[CriterionSpec]) -> Matrix:
    """Swap mu and nu on cost-criterion rows; benefit rows pass through."""
    if len(matrix) != len(criteria):
        raise MismatchError(
            f"matrix has {len(matrix)} rows but there are {len(criteria)} criteria"
        )
    out: Matrix = []
    for row, criterion in zip(matrix, criteria):
        if criterion.kind is CriterionKind.COST:
            out.append([IFN(value.nu, value.mu) for value in row])
        else:
            out.append(list(row))
    return out


def weight_matrix(matrix: Matrix, weights: Sequence[IFN]) -> Matrix:
    """Multiply each row by its criterion's aggregated importance value."""
    if len(matrix) != len(weights):
        raise MismatchError(
            f"matrix has {len(matrix)} rows but {len(weights)} weights were given"
        )
    return [
        [multiply(value, weight) for value in row]
        for row, weight in zip(matrix, weights)
    ]


def build_weighted_matrix(problem: DecisionProblem) -> Matrix:
    """Aggregate, normalize, and weight: the shared front half of every method."""
    aggregated = aggregate_evaluations(problem)
    weights = aggregate_weights(problem)
    normalized = normalize(aggregated, problem.criteria)
    return weight_matrix(normalized, weights)


def alternative_profiles(matrix: Matrix, problem: DecisionProblem) -> list[IFS]:
    """Column view of a weighted matrix: one IFS of m values per alternative."""
    return [
        IFS(tuple(matrix[j][i] for j in range(problem.n_criteria)))
        for i in range(problem.n_alternatives)
    ]


def score_details(
    problem: DecisionProblem, config: HVConfig | None = None
) -> dict[str, HVNetResult]:
    """Per-alternative space hypervolumes after the shared pipeline."""
    cfg = config if config is not None else HVConfig()
    matrix = build_weighted_matrix(problem)
    return {
        label: hv_net(profile, cfg)
        for label, profile in zip(problem.alternatives, alternative_profiles(matrix, problem))
    }


def rank(problem: DecisionProblem, config: HVConfig | None = None) -> RankingResult:
    """Rank alternatives by net hypervolume of their weighted value profiles."""
    cfg = config if config is not None else HVConfig()
    reference = cfg.reference_for(problem.n_criteria)
    details = score_details(problem, cfg)
    scores = [details[label].hv_net for label in problem.alternatives]
    return build_ranking(
        method="hvas",
        labels=problem.alternatives,
        scores=scores,
        higher_is_better=True,
        tie_tolerance=cfg.tie_tolerance,
        config_echo={
            "reference": list(reference),
            "alpha": cfg.alpha,
            "tie_tolerance": cfg.tie_tolerance,
        },
    )
