"""Report objects and deterministic emitters.

A Report carries a `machine` payload with exact scalars; the human-readable
markdown rendering rounds to 6 significant digits, while json and csv keep
full precision. Rendering is a pure function of (report, format): the same
input always produces the same bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import IO

from .errors import DomainError

FORMATS = ("md", "json", "csv")


@dataclass(frozen=True)
class Report:
    kind: str  # rank | compare | audit | hv | axioms
    machine: dict


def _fmt(value) -> str:
    """Human form: 6 significant digits for floats, plain str otherwise."""
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return str(value)
    if isinstance(value, int):
        return str(value)
    return f"{value:.6g}"


def _table(headers: list[str], rows: list[list[str]]) -> str:
    lines = [
        "| " + " | ".join(headers) + " |",
        "| " + " | ".join("---" for _ in headers) + " |",
    ]
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines)


def _render_rank_md(machine: dict) -> str:
    result = machine["result"]
    headers = ["alternative", "rank"]
    components = machine.get("components", {})
    if components:
        headers += ["hv_mu", "hv_nu", "hv_pi"]
    headers.append("score")
    ranks = {}
    position = 1
    for group in result["order"]:
        for label in group:
            ranks[label] = position
        position += len(group)
    rows = []
    for label in machine["alternatives"]:
        row = [label, str(ranks[label])]
        if components:
            parts = components[label]
            row += [_fmt(parts["hv_mu"]), _fmt(parts["hv_nu"]), _fmt(parts["hv_pi"])]
        row.append(_fmt(result["scores"][label]))
        rows.append(row)
    return "\n".join(
        [
            f"# {result['method']} ranking",
            "",
            _table(headers, rows),
            "",
            f"Ranking order: {result['order_string']}",
            "",
        ]
    )


def _render_compare_md(machine: dict) -> str:
    order_rows = [
        [name, machine["results"][name]["order_string"]] for name in machine["methods"]
    ]
    score_headers = ["alternative"] + list(machine["methods"])
    score_rows = [
        [alt] + [_fmt(machine["results"][name]["scores"][alt]) for name in machine["methods"]]
        for alt in machine["alternatives"]
    ]
    return "\n".join(
        [
            "# method comparison",
            "",
            _table(["method", "ranking order"], order_rows),
            "",
            _table(score_headers, score_rows),
            "",
        ]
    )


def _render_audit_md(machine: dict) -> str:
    verdict = (
        "no violation found within budget"
        if machine["is_robust_on_budget"]
        else "NOT robust"
    )
    lines = [
        f"# robustness audit: {machine['measure']}",
        "",
        f"Verdict: {verdict} "
        f"(budget {machine['budget']}, eps {_fmt(machine['eps'])}, "
        f"delta {_fmt(machine['delta'])}, seed {machine['seed']}, "
        f"samples used {machine['samples_used']})",
        "",
    ]
    if machine["counterexamples"]:
        rows = [
            [
                f"({_fmt(c['a'][0])}, {_fmt(c['a'][1])})",
                f"({_fmt(c['b'][0])}, {_fmt(c['b'][1])})",
                _fmt(c["d_nis_a"]),
                _fmt(c["d_nis_b"]),
                _fmt(c["d_pis_a"]),
                _fmt(c["d_pis_b"]),
            ]
            for c in machine["counterexamples"]
        ]
        lines += [
            _table(["a", "b", "d(a,NIS)", "d(b,NIS)", "d(a,PIS)", "d(b,PIS)"], rows),
            "",
        ]
    return "\n".join(lines)


def _render_hv_md(machine: dict) -> str:
    lines = [
        "# hypervolume",
        "",
        f"Points: {machine['points']} in {machine['dimension']} dimensions, "
        f"reference {machine['reference']}",
        f"Exact hypervolume: {_fmt(machine['hypervolume'])}",
        f"Monte Carlo check: {_fmt(machine['mc_estimate'])} "
        f"+/- {_fmt(machine['mc_stderr'])} "
        f"({machine['mc_samples']} samples, seed {machine['seed']})",
        "",
    ]
    return "\n".join(lines)


def _render_axioms_md(machine: dict) -> str:
    rows = [
        ["symmetry", str(machine["symmetry_ok"])],
        ["identity", str(machine["identity_ok"])],
        ["triangle", str(machine["triangle_ok"])],
    ]
    lines = [
        f"# metric axioms: {machine['measure']}",
        "",
        f"Checked on {machine['samples']} random triples (seed {machine['seed']}).",
        "",
        _table(["axiom", "holds"], rows),
        "",
    ]
    if machine["witnesses"]:
        lines += [f"Witnesses: {len(machine['witnesses'])} recorded (see json format).", ""]
    return "\n".join(lines)


_MD_RENDERERS = {
    "rank": _render_rank_md,
    "compare": _render_compare_md,
    "audit": _render_audit_md,
    "hv": _render_hv_md,
    "axioms": _render_axioms_md,
}


def _csv_text(headers: list[str], rows: list[list]) -> str:
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()


def _render_csv(report: Report) -> str:
    machine = report.machine
    if report.kind == "rank":
        result = machine["result"]
        ranks = {}
        position = 1
        for group in result["order"]:
            for label in group:
                ranks[label] = position
            position += len(group)
        rows = [
            [label, ranks[label], repr(result["scores"][label])]
            for label in machine["alternatives"]
        ]
        return _csv_text(["alternative", "rank", "score"], rows)
    if report.kind == "compare":
        rows = []
        for name in machine["methods"]:
            result = machine["results"][name]
            ranks = {}
            position = 1
            for group in result["order"]:
                for label in group:
                    ranks[label] = position
                position += len(group)
            for alt in machine["alternatives"]:
                rows.append([name, alt, ranks[alt], repr(result["scores"][alt])])
        return _csv_text(["method", "alternative", "rank", "score"], rows)
    if report.kind == "audit":
        rows = [
            [
                machine["measure"],
                machine["is_robust_on_budget"],
                machine["samples_used"],
                index,
                repr(c["a"][0]),
                repr(c["a"][1]),
                repr(c["b"][0]),
                repr(c["b"][1]),
                repr(c["d_nis_a"]),
                repr(c["d_nis_b"]),
                repr(c["d_pis_a"]),
                repr(c["d_pis_b"]),
            ]
            for index, c in enumerate(machine["counterexamples"])
        ] or [
            [machine["measure"], machine["is_robust_on_budget"], machine["samples_used"]]
            + [""] * 9
        ]
        return _csv_text(
            [
                "measure", "robust_on_budget", "samples_used", "index",
                "a_mu", "a_nu", "b_mu", "b_nu",
                "d_nis_a", "d_nis_b", "d_pis_a", "d_pis_b",
            ],
            rows,
        )
    if report.kind == "hv":
        return _csv_text(
            ["hypervolume", "mc_estimate", "mc_stderr", "mc_samples", "seed"],
            [[
                repr(machine["hypervolume"]),
                repr(machine["mc_estimate"]),
                repr(machine["mc_stderr"]),
                machine["mc_samples"],
                machine["seed"],
            ]],
        )
    if report.kind == "axioms":
        return _csv_text(
            ["measure", "samples", "seed", "symmetry_ok", "identity_ok", "triangle_ok", "witnesses"],
            [[
                machine["measure"], machine["samples"], machine["seed"],
                machine["symmetry_ok"], machine["identity_ok"], machine["triangle_ok"],
                len(machine["witnesses"]),
            ]],
        )
    raise DomainError(f"no csv renderer for report kind '{report.kind}'")


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.machine, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(report)
    if fmt == "md":
        renderer = _MD_RENDERERS.get(report.kind)
        if renderer is None:
            raise DomainError(f"no markdown renderer for report kind '{report.kind}'")
        return renderer(report.machine)
    raise DomainError(f"unknown report format '{fmt}'; choose from {', '.join(FORMATS)}")


def emit_report(report: Report, fmt: str, sink: IO[str]) -> None:
    """Write one rendering of the report to a text sink."""
    sink.write(render(report, fmt))
