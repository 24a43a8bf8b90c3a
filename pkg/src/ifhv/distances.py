"""Distance measures between equal-length intuitionistic fuzzy sets.

Built-in measures, all normalized to [0, 1] over IFS of length n:

    hamming      (1/(2n)) * sum_i (|dmu_i| + |dnu_i|)
    euclidean2   sqrt((1/(2n)) * sum_i (dmu_i^2 + dnu_i^2))
    euclidean3   sqrt((1/(2n)) * sum_i (dmu_i^2 + dnu_i^2 + dpi_i^2))
    hausdorff    (1/n) * sum_i max(|dmu_i|, |dnu_i|)

where dmu_i, dnu_i, dpi_i are per-element differences of membership,
non-membership, and hesitancy. Hamming is the only linear one: it satisfies
d(A, PIS-sequence) + d(A, NIS-sequence) = 1 for every IFS A, which is what
makes rankings against either ideal point agree.

Additional measures can be registered by name through `register`, which is
how literature measures whose formulas live elsewhere are plugged in.
`check_axioms` probes any measure for the metric axioms (symmetry, identity
of indiscernibles, triangle inequality) on seeded random triples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, MismatchError
from .ifs import IFS

AXIOM_TOLERANCE = 1e-9

# A batch kernel maps per-element difference arrays (dmu, dnu) to distances,
# reducing over `axis`; axis=() means elementwise (length-1 sets), axis=-1
# reduces a trailing element dimension.
BatchKernel = Callable[[np.ndarray, np.ndarray, object], np.ndarray]


class MeasureKind(enum.Enum):
    LINEAR = "linear"
    NONLINEAR = "nonlinear"


@dataclass(frozen=True)
class DistanceMeasure:
    """A named distance over equal-length IFS pairs.

    Built-in measures carry a vectorized batch kernel; plugin measures wrap a
    plain (IFS, IFS) -> float callable and fall back to per-pair evaluation
    in the batch entry points.
    """

    name: str
    kind: MeasureKind
    _kernel: BatchKernel | None = None
    _func: Callable[[IFS, IFS], float] | None = None

    def __post_init__(self) -> None:
        if (self._kernel is None) == (self._func is None):
            raise DomainError("a DistanceMeasure needs exactly one of kernel or function")

    def __call__(self, a: IFS, b: IFS) -> float:
        return self.evaluate(a, b)

    def evaluate(self, a: IFS, b: IFS) -> float:
        """Distance between two IFS of equal length."""
        if len(a) != len(b):
            raise MismatchError(
                f"{self.name}: IFS lengths differ ({len(a)} vs {len(b)})"
            )
        if self._kernel is not None:
            dmu = a.mu_values() - b.mu_values()
            dnu = a.nu_values() - b.nu_values()
            return float(self._kernel(dmu, dnu, -1))
        return float(self._func(a, b))

    def pair_many(
        self,
        a_mu: np.ndarray,
        a_nu: np.ndarray,
        b_mu: np.ndarray,
        b_nu: np.ndarray,
    ) -> np.ndarray:
        """Distances between corresponding single-element sets, vectorized."""
        a_mu, a_nu = np.asarray(a_mu, float), np.asarray(a_nu, float)
        b_mu, b_nu = np.asarray(b_mu, float), np.asarray(b_nu, float)
        if self._kernel is not None:
            return np.asarray(self._kernel(a_mu - b_mu, a_nu - b_nu, ()))
        flat = [
            self._func(IFS.from_pairs([(am, an)]), IFS.from_pairs([(bm, bn)]))
            for am, an, bm, bn in zip(a_mu.ravel(), a_nu.ravel(), b_mu.ravel(), b_nu.ravel())
        ]
        return np.array(flat, float).reshape(a_mu.shape)

    def evaluate_many(
        self,
        a_mu: np.ndarray,
        a_nu: np.ndarray,
        b_mu: np.ndarray,
        b_nu: np.ndarray,
    ) -> np.ndarray:
        """Distances between row-wise IFS pairs given as (k, n) arrays."""
        a_mu, a_nu = np.asarray(a_mu, float), np.asarray(a_nu, float)
        b_mu, b_nu = np.asarray(b_mu, float), np.asarray(b_nu, float)
        if self._kernel is not None:
            return np.asarray(self._kernel(a_mu - b_mu, a_nu - b_nu, -1))
        out = [
            self._func(
                IFS.from_pairs(zip(a_mu[i], a_nu[i])),
                IFS.from_pairs(zip(b_mu[i], b_nu[i])),
            )
            for i in range(a_mu.shape[0])
        ]
        return np.array(out, float)


def _hamming_kernel(dmu: np.ndarray, dnu: np.ndarray, axis) -> np.ndarray:
    return np.mean(0.5 * (np.abs(dmu) + np.abs(dnu)), axis=axis)


def _euclidean2_kernel(dmu: np.ndarray, dnu: np.ndarray, axis) -> np.ndarray:
    return np.sqrt(np.mean(0.5 * (dmu * dmu + dnu * dnu), axis=axis))


def _euclidean3_kernel(dmu: np.ndarray, dnu: np.ndarray, axis) -> np.ndarray:
    dpi = -(dmu + dnu)  # hesitancy difference is determined by the other two
    return np.sqrt(np.mean(0.5 * (dmu * dmu + dnu * dnu + dpi * dpi), axis=axis))


def _hausdorff_kernel(dmu: np.ndarray, dnu: np.ndarray, axis) -> np.ndarray:
    return np.mean(np.maximum(np.abs(dmu), np.abs(dnu)), axis=axis)


hamming = DistanceMeasure("hamming", MeasureKind.LINEAR, _hamming_kernel)
euclidean2 = DistanceMeasure("euclidean2", MeasureKind.NONLINEAR, _euclidean2_kernel)
euclidean3 = DistanceMeasure("euclidean3", MeasureKind.NONLINEAR, _euclidean3_kernel)
hausdorff = DistanceMeasure("hausdorff", MeasureKind.NONLINEAR, _hausdorff_kernel)

BUILTIN_MEASURES = (hamming, euclidean2, euclidean3, hausdorff)

_REGISTRY: dict[str, DistanceMeasure] = {}


def register(measure: DistanceMeasure) -> DistanceMeasure:
    """Register a measure for lookup by name. Names are single-assignment."""
    if measure.name in _REGISTRY:
        raise DomainError(f"distance measure '{measure.name}' is already registered")
    _REGISTRY[measure.name] = measure
    return measure


def register_function(
    name: str, func: Callable[[IFS, IFS], float], kind: MeasureKind = MeasureKind.NONLINEAR
) -> DistanceMeasure:
    """Wrap a plain (IFS, IFS) -> float callable and register it."""
    return register(DistanceMeasure(name, kind, None, func))


def get_measure(name: str) -> DistanceMeasure:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise DomainError(
            f"unknown distance measure '{name}'; available: {', '.join(available_measures())}"
        ) from None


def available_measures() -> tuple[str, ...]:
    return tuple(_REGISTRY)


for _m in BUILTIN_MEASURES:
    register(_m)
del _m


@dataclass(frozen=True)
class AxiomWitness:
    """A concrete input triple on which a metric axiom failed."""

    axiom: str  # "symmetry" | "identity" | "triangle"
    sets: tuple[tuple[tuple[float, float], ...], ...]
    values: tuple[float, ...]


@dataclass(frozen=True)
class AxiomReport:
    measure: str
    samples: int
    seed: int
    symmetry_ok: bool
    identity_ok: bool
    triangle_ok: bool
    witnesses: tuple[AxiomWitness, ...] = field(default_factory=tuple)

    @property
    def all_ok(self) -> bool:
        return self.symmetry_ok and self.identity_ok and self.triangle_ok

    def to_dict(self) -> dict:
        return {
            "measure": self.measure,
            "samples": self.samples,
            "seed": self.seed,
            "symmetry_ok": self.symmetry_ok,
            "identity_ok": self.identity_ok,
            "triangle_ok": self.triangle_ok,
            "witnesses": [
                {"axiom": w.axiom, "sets": [list(map(list, s)) for s in w.sets],
                 "values": list(w.values)}
                for w in self.witnesses
            ],
        }


def sample_simplex(rng: np.random.Generator, shape) -> tuple[np.ndarray, np.ndarray]:
    """Uniform samples from the valid region {mu, nu >= 0, mu + nu <= 1}."""
    mu = rng.random(shape)
    nu = rng.random(shape)
    over = mu + nu > 1.0
    mu[over], nu[over] = 1.0 - mu[over], 1.0 - nu[over]
    # the reflection can leave mu + nu a few ulps above 1; pin those exactly
    # onto the boundary so downstream IFN construction cannot shift the values
    over = mu + nu > 1.0
    nu[over] = 1.0 - mu[over]
    return mu, nu


_MAX_WITNESSES = 10


def check_axioms(
    measure: DistanceMeasure,
    samples: int = 10_000,
    seed: int = 0,
    lengths: Sequence[int] = (1, 2, 3, 4),
) -> AxiomReport:
    """Probe the metric axioms on `samples` random IFS triples.

    Each triple (A, B, C) shares a random length drawn from `lengths`.
    Checks, to tolerance 1e-9: d(A, B) = d(B, A); d(A, A) = 0 with
    d(A, B) > 0 for distinct pairs; d(A, B) <= d(B, C) + d(A, C).
    Deterministic for a fixed seed. Collects at most 10 witnesses.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    drawn = rng.choice(np.asarray(lengths, dtype=int), size=samples)

    sym_ok = True
    ident_ok = True
    tri_ok = True
    witnesses: list[AxiomWitness] = []

    def add_witness(axiom: str, arrays, row: int, values: tuple[float, ...]) -> None:
        if len(witnesses) >= _MAX_WITNESSES:
            return
        sets = tuple(
            tuple((float(mu[row, j]), float(nu[row, j])) for j in range(mu.shape[1]))
            for mu, nu in arrays
        )
        witnesses.append(AxiomWitness(axiom, sets, values))

    for n in sorted(set(int(x) for x in drawn)):
        count = int(np.sum(drawn == n))
        a_mu, a_nu = sample_simplex(rng, (count, n))
        b_mu, b_nu = sample_simplex(rng, (count, n))
        c_mu, c_nu = sample_simplex(rng, (count, n))

        d_ab = measure.evaluate_many(a_mu, a_nu, b_mu, b_nu)
        d_ba = measure.evaluate_many(b_mu, b_nu, a_mu, a_nu)
        d_aa = measure.evaluate_many(a_mu, a_nu, a_mu, a_nu)
        d_bc = measure.evaluate_many(b_mu, b_nu, c_mu, c_nu)
        d_ac = measure.evaluate_many(a_mu, a_nu, c_mu, c_nu)

        pairs = ((a_mu, a_nu), (b_mu, b_nu))
        triple = ((a_mu, a_nu), (b_mu, b_nu), (c_mu, c_nu))

        sym_bad = np.abs(d_ab - d_ba) > AXIOM_TOLERANCE
        if np.any(sym_bad):
            sym_ok = False
            for i in np.flatnonzero(sym_bad):
                add_witness("symmetry", pairs, int(i), (float(d_ab[i]), float(d_ba[i])))

        distinct = (np.abs(a_mu - b_mu) + np.abs(a_nu - b_nu)).max(axis=1) > 1e-6
        ident_bad = (d_aa > AXIOM_TOLERANCE) | (distinct & (d_ab <= AXIOM_TOLERANCE))
        if np.any(ident_bad):
            ident_ok = False
            for i in np.flatnonzero(ident_bad):
                add_witness("identity", pairs, int(i), (float(d_aa[i]), float(d_ab[i])))

        tri_bad = d_ab > d_bc + d_ac + AXIOM_TOLERANCE
        if np.any(tri_bad):
            tri_ok = False
            for i in np.flatnonzero(tri_bad):
                add_witness(
                    "triangle", triple, int(i),
                    (float(d_ab[i]), float(d_bc[i]), float(d_ac[i])),
                )

    return AxiomReport(
        measure=measure.name,
        samples=samples,
        seed=seed,
        symmetry_ok=sym_ok,
        identity_ok=ident_ok,
        triangle_ok=tri_ok,
        witnesses=tuple(witnesses),
    )
