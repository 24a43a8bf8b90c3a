"""Command-line front end.

Commands: rank (HVAS on a problem file), compare (method side-by-side),
audit (robustness search for a distance measure), hv (hypervolume of a point
set with a Monte Carlo cross-check), axioms (metric-axiom probe).

Exit codes: 0 success, 2 usage error, 3 data error (unreadable or invalid
input), 4 degenerate input (zero weights, indistinguishable alternatives).
All commands are deterministic given their flags, including --seed.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import mcdm as mcdm_mod
from . import hvas as hvas_mod
from . import robustness as robustness_mod
from .distances import available_measures, check_axioms, get_measure
from .errors import DegenerateError, IfhvError, ParseError
from .hypervolume import DEFAULT_REFERENCE_COORD, HVConfig, hv_set, mc_oracle
from .problemfile import parse_problem
from .report import FORMATS, Report, emit_report

EXIT_DATA_ERROR = 3
EXIT_DEGENERATE = 4


def _parse_reference(_ctx, _param, value):
    if value is None:
        return None
    try:
        coords = tuple(float(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter("expected comma-separated numbers, e.g. '-1,-1'")
    if not coords:
        raise click.BadParameter("reference needs at least one coordinate")
    return coords


def _nonpositive_reference(_ctx, _param, value):
    coords = _parse_reference(_ctx, _param, value)
    if coords is not None and any(c > 0.0 for c in coords):
        raise click.BadParameter("reference coordinates must be <= 0")
    return coords


def _measure_option(_ctx, _param, value):
    if value is None:
        return None
    try:
        return get_measure(value)
    except IfhvError:
        raise click.BadParameter(
            f"unknown measure '{value}'; available: {', '.join(available_measures())}"
        )


def _alpha_option(_ctx, _param, value):
    if not -1.0 <= value <= 1.0:
        raise click.BadParameter("alpha must lie in [-1, 1]")
    return value


def _unit_interval(name):
    def check(_ctx, _param, value):
        if not 0.0 <= value <= 1.0:
            raise click.BadParameter(f"{name} must lie in [0, 1]")
        return value

    return check


def _positive(name):
    def check(_ctx, _param, value):
        if value <= 0.0:
            raise click.BadParameter(f"{name} must be positive")
        return value

    return check


format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="md", show_default=True,
    help="Output format; md rounds to 6 significant digits, json/csv keep full precision.",
)
output_option = click.option(
    "--output", type=click.Path(dir_okay=False, writable=True, path_type=Path),
    default=None, help="Write the report to a file instead of stdout.",
)


def _emit(report: Report, fmt: str, output: Path | None) -> None:
    if output is None:
        emit_report(report, fmt, sys.stdout)
    else:
        with open(output, "w", encoding="utf-8", newline="") as sink:
            emit_report(report, fmt, sink)


def _run(builder, fmt: str, output: Path | None) -> None:
    try:
        report = builder()
    except DegenerateError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DEGENERATE)
    except IfhvError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DATA_ERROR)
    _emit(report, fmt, output)


@click.group()
def main() -> None:
    """Rank intuitionistic fuzzy sets by hypervolume and audit distance measures."""


@main.command()
@click.argument("problem_file", type=click.Path(path_type=Path))
@click.option("--alpha", type=float, default=0.0, show_default=True,
              callback=_alpha_option, help="Hesitancy perception factor in [-1, 1].")
@click.option("--reference", default=None, callback=_nonpositive_reference,
              help="Reference point as comma-separated coordinates, all <= 0 [default: -1 per criterion].")
@click.option("--tie-tolerance", type=float, default=1e-9, show_default=True,
              help="Absolute tolerance for score ties.")
@format_option
@output_option
def rank(problem_file, alpha, reference, tie_tolerance, fmt, output):
    """Rank the alternatives of PROBLEM_FILE by net hypervolume."""

    def build() -> Report:
        problem = parse_problem(problem_file)
        cfg = HVConfig(reference=reference, alpha=alpha, tie_tolerance=tie_tolerance)
        result = hvas_mod.rank(problem, cfg)
        details = hvas_mod.score_details(problem, cfg)
        return Report(
            kind="rank",
            machine={
                "command": "rank",
                "problem": str(problem_file),
                "alternatives": list(problem.alternatives),
                "components": {label: part.to_dict() for label, part in details.items()},
                "result": result.to_dict(),
            },
        )

    _run(build, fmt, output)


@main.command()
@click.argument("problem_file", type=click.Path(path_type=Path))
@click.option("--methods", default=",".join(mcdm_mod.METHOD_NAMES), show_default=True,
              help="Comma-separated subset of the available methods.")
@click.option("--tau", type=float, default=mcdm_mod.DEFAULT_TAU, show_default=True,
              callback=_unit_interval("tau"), help="CODAS secondary-distance threshold.")
@click.option("--v", type=float, default=mcdm_mod.DEFAULT_V, show_default=True,
              callback=_unit_interval("v"), help="VIKOR strategy weight.")
@click.option("--measure", "measure_primary", default="euclidean2", show_default=True,
              callback=_measure_option, help="Primary distance measure.")
@click.option("--measure-secondary", default="hamming", show_default=True,
              callback=_measure_option, help="Secondary distance measure (CODAS).")
@click.option("--alpha", type=float, default=0.0, show_default=True,
              callback=_alpha_option, help="Hesitancy perception factor for the hvas method.")
@click.option("--reference", default=None, callback=_nonpositive_reference,
              help="Reference point for the hvas method [default: -1 per criterion].")
@format_option
@output_option
def compare(problem_file, methods, tau, v, measure_primary, measure_secondary,
            alpha, reference, fmt, output):
    """Run several ranking methods on PROBLEM_FILE and tabulate their orders."""
    names = [name.strip() for name in methods.split(",") if name.strip()]
    if not names:
        raise click.BadParameter("at least one method is required", param_hint="--methods")
    unknown = [name for name in names if name not in mcdm_mod.METHOD_NAMES]
    if unknown:
        raise click.BadParameter(
            f"unknown method(s) {', '.join(unknown)}; "
            f"available: {', '.join(mcdm_mod.METHOD_NAMES)}",
            param_hint="--methods",
        )

    def build() -> Report:
        problem = parse_problem(problem_file)
        cfg = mcdm_mod.CompareConfig(
            tau=tau, v=v,
            measure_primary=measure_primary, measure_secondary=measure_secondary,
        )
        hv_cfg = HVConfig(reference=reference, alpha=alpha)
        results = mcdm_mod.run_methods(problem, names, cfg, hv_cfg)
        return Report(
            kind="compare",
            machine={
                "command": "compare",
                "problem": str(problem_file),
                "alternatives": list(problem.alternatives),
                "methods": names,
                "results": {r.method: r.to_dict() for r in results},
            },
        )

    _run(build, fmt, output)


@main.command()
@click.option("--measure", required=True, callback=_measure_option,
              help="Distance measure to audit.")
@click.option("--budget", type=click.IntRange(min=1), default=10_000, show_default=True,
              help="Number of anchor/direction attempts.")
@click.option("--eps", type=float, default=1e-9, show_default=True,
              callback=_positive("eps"), help="Tolerance for equal NIS-distances.")
@click.option("--delta", type=float, default=1e-3, show_default=True,
              callback=_positive("delta"), help="PIS-distance gap that counts as a violation.")
@click.option("--seed", type=int, default=0, show_default=True)
@format_option
@output_option
def audit(measure, budget, eps, delta, seed, fmt, output):
    """Search a distance measure for ranking-robustness violations."""

    def build() -> Report:
        result = robustness_mod.audit(measure, budget=budget, eps=eps, delta=delta, seed=seed)
        machine = {"command": "audit", "kind": measure.kind.value}
        machine.update(result.to_dict())
        return Report(kind="audit", machine=machine)

    _run(build, fmt, output)


def _parse_points(path: Path) -> list[tuple[float, ...]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: cannot read file: {exc}") from exc
    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            points.append(tuple(float(part) for part in stripped.split(",")))
        except ValueError:
            raise ParseError(f"{path}:{lineno}: expected comma-separated numbers") from None
    return points


@main.command()
@click.argument("points_file", type=click.Path(path_type=Path))
@click.option("--reference", default=None, callback=_parse_reference,
              help="Reference point as comma-separated coordinates [default: -1 per dimension].")
@click.option("--samples", type=click.IntRange(min=1), default=100_000, show_default=True,
              help="Monte Carlo samples for the cross-check.")
@click.option("--seed", type=int, default=0, show_default=True)
@format_option
@output_option
def hv(points_file, reference, samples, seed, fmt, output):
    """Exact hypervolume of the points in POINTS_FILE (one per line, comma-separated)."""

    def build() -> Report:
        points = _parse_points(points_file)
        if not points:
            raise ParseError(f"{points_file}: no points found")
        dimension = len(points[0])
        ref = reference if reference is not None else (DEFAULT_REFERENCE_COORD,) * dimension
        value = hv_set(points, ref)
        estimate, stderr = mc_oracle(points, ref, samples=samples, seed=seed)
        return Report(
            kind="hv",
            machine={
                "command": "hv",
                "points_file": str(points_file),
                "points": len(points),
                "dimension": dimension,
                "reference": list(ref),
                "hypervolume": value,
                "mc_estimate": estimate,
                "mc_stderr": stderr,
                "mc_samples": samples,
                "seed": seed,
            },
        )

    _run(build, fmt, output)


@main.command()
@click.option("--measure", required=True, callback=_measure_option,
              help="Distance measure to probe.")
@click.option("--samples", type=click.IntRange(min=1), default=10_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@format_option
@output_option
def axioms(measure, samples, seed, fmt, output):
    """Check symmetry, identity, and the triangle inequality on random triples."""

    def build() -> Report:
        result = check_axioms(measure, samples=samples, seed=seed)
        machine = {"command": "axioms"}
        machine.update(result.to_dict())
        return Report(kind="axioms", machine=machine)

    _run(build, fmt, output)


if __name__ == "__main__":
    main()
