"""Reading and writing decision-problem files.

A problem file is JSON with explicit numeric (mu, nu) pairs; there are no
linguistic labels. Layout:

    {
      "schema_version": 1,
      "alternatives": ["X1", ...],
      "criteria": [{"id": "c1", "kind": "benefit" | "cost"}, ...],
      "dms": ["dm1", ...],
      "evaluations": {dm: {criterion: {alternative: [mu, nu]}}},
      "importance":  {dm: {criterion: [mu, nu]}},
      "expertise":   {dm: {criterion: weight}}
    }

Every malformed field is reported with its path inside the document, e.g.
``evaluations.dm1.c1.X2``. `parse_problem` and `serialize_problem` are
inverses on valid problems.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import DomainError, ParseError, ValidationError, VersionError
from .hvas import CriterionKind, CriterionSpec, DecisionProblem
from .ifs import IFN

SCHEMA_VERSION = 1


def _require(data: dict, key: str, kind, path: str):
    if key not in data:
        raise ValidationError(f"{path}.{key}: missing required field")
    value = data[key]
    if not isinstance(value, kind):
        raise ValidationError(
            f"{path}.{key}: expected {kind.__name__}, got {type(value).__name__}"
        )
    return value


def _parse_ifn(value, path: str) -> IFN:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
    ):
        raise ValidationError(f"{path}: expected a [mu, nu] pair of numbers")
    try:
        return IFN(float(value[0]), float(value[1]))
    except DomainError as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def problem_from_dict(data: dict, source: str = "<problem>") -> DecisionProblem:
    """Validate a decoded problem document and build a DecisionProblem."""
    if not isinstance(data, dict):
        raise ValidationError(f"{source}: top level must be an object")
    version = _require(data, "schema_version", int, source)
    if version != SCHEMA_VERSION:
        raise VersionError(
            f"{source}: unsupported schema_version {version}; this build reads {SCHEMA_VERSION}"
        )

    alternatives = _require(data, "alternatives", list, source)
    if not alternatives or not all(isinstance(a, str) for a in alternatives):
        raise ValidationError(f"{source}.alternatives: expected a non-empty list of ids")

    raw_criteria = _require(data, "criteria", list, source)
    if not raw_criteria:
        raise ValidationError(f"{source}.criteria: expected a non-empty list")
    criteria: list[CriterionSpec] = []
    for index, entry in enumerate(raw_criteria):
        path = f"{source}.criteria[{index}]"
        if not isinstance(entry, dict):
            raise ValidationError(f"{path}: expected an object with id and kind")
        cid = _require(entry, "id", str, path)
        kind_name = _require(entry, "kind", str, path)
        try:
            kind = CriterionKind(kind_name)
        except ValueError:
            raise ValidationError(
                f"{path}.kind: expected 'benefit' or 'cost', got '{kind_name}'"
            ) from None
        criteria.append(CriterionSpec(cid, kind))

    dms = _require(data, "dms", list, source)
    if not dms or not all(isinstance(d, str) for d in dms):
        raise ValidationError(f"{source}.dms: expected a non-empty list of ids")

    evaluations_doc = _require(data, "evaluations", dict, source)
    importance_doc = _require(data, "importance", dict, source)
    expertise_doc = _require(data, "expertise", dict, source)

    def dm_section(doc: dict, name: str, dm: str) -> dict:
        if dm not in doc:
            raise ValidationError(f"{source}.{name}.{dm}: missing decision maker")
        section = doc[dm]
        if not isinstance(section, dict):
            raise ValidationError(f"{source}.{name}.{dm}: expected an object keyed by criterion")
        return section

    evaluations = []
    importance = []
    expertise = []
    for dm in dms:
        eval_dm = dm_section(evaluations_doc, "evaluations", dm)
        imp_dm = dm_section(importance_doc, "importance", dm)
        exp_dm = dm_section(expertise_doc, "expertise", dm)
        eval_rows = []
        imp_row = []
        exp_row = []
        for criterion in criteria:
            cid = criterion.id
            for section, name in ((eval_dm, "evaluations"), (imp_dm, "importance"), (exp_dm, "expertise")):
                if cid not in section:
                    raise ValidationError(f"{source}.{name}.{dm}.{cid}: missing criterion")
            cells = eval_dm[cid]
            if not isinstance(cells, dict):
                raise ValidationError(
                    f"{source}.evaluations.{dm}.{cid}: expected an object keyed by alternative"
                )
            row = []
            for alt in alternatives:
                if alt not in cells:
                    raise ValidationError(
                        f"{source}.evaluations.{dm}.{cid}.{alt}: missing alternative"
                    )
                row.append(_parse_ifn(cells[alt], f"{source}.evaluations.{dm}.{cid}.{alt}"))
            eval_rows.append(tuple(row))
            imp_row.append(_parse_ifn(imp_dm[cid], f"{source}.importance.{dm}.{cid}"))
            weight = exp_dm[cid]
            if not isinstance(weight, (int, float)) or isinstance(weight, bool) or not 0.0 <= weight <= 1.0:
                raise ValidationError(
                    f"{source}.expertise.{dm}.{cid}: expected a weight in [0, 1], got {weight!r}"
                )
            exp_row.append(float(weight))
        evaluations.append(tuple(eval_rows))
        importance.append(tuple(imp_row))
        expertise.append(tuple(exp_row))

    return DecisionProblem(
        alternatives=tuple(alternatives),
        criteria=tuple(criteria),
        dms=tuple(dms),
        evaluations=tuple(evaluations),
        importance=tuple(importance),
        expertise=tuple(expertise),
    )


def parse_problem(path: str | Path) -> DecisionProblem:
    """Load and validate a problem file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: cannot read file: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return problem_from_dict(data, source=path.name)


def serialize_problem(problem: DecisionProblem) -> dict:
    """Inverse of problem_from_dict for valid problems."""
    return {
        "schema_version": SCHEMA_VERSION,
        "alternatives": list(problem.alternatives),
        "criteria": [{"id": c.id, "kind": c.kind.value} for c in problem.criteria],
        "dms": list(problem.dms),
        "evaluations": {
            dm: {
                criterion.id: {
                    alt: [problem.evaluations[l][j][i].mu, problem.evaluations[l][j][i].nu]
                    for i, alt in enumerate(problem.alternatives)
                }
                for j, criterion in enumerate(problem.criteria)
            }
            for l, dm in enumerate(problem.dms)
        },
        "importance": {
            dm: {
                criterion.id: [problem.importance[l][j].mu, problem.importance[l][j].nu]
                for j, criterion in enumerate(problem.criteria)
            }
            for l, dm in enumerate(problem.dms)
        },
        "expertise": {
            dm: {
                criterion.id: problem.expertise[l][j]
                for j, criterion in enumerate(problem.criteria)
            }
            for l, dm in enumerate(problem.dms)
        },
    }


def write_problem(problem: DecisionProblem, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(serialize_problem(problem), indent=2) + "\n", encoding="utf-8"
    )
