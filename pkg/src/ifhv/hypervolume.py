"""Hypervolume of axis-aligned dominated regions and net-hypervolume scores.

The hypervolume of a point set P with respect to a reference point r (with
p >= r componentwise for every p in P) is the Lebesgue measure of the union
of boxes [r, p]. For a single point it reduces to prod_j (p_j - r_j).

An IFS of length m spans three m-dimensional decision spaces: the membership
point (mu_1..mu_m), the non-membership point (nu_1..nu_m), and the hesitancy
point (pi_1..pi_m). Ranking scores combine their single-point hypervolumes:

    hv_net = hv_mu - hv_nu - alpha * hv_pi

where alpha in [-1, 1] expresses aversion (positive) or proneness (negative)
to hesitancy; alpha = 0 ignores the hesitancy space. The default reference
puts -1 in every coordinate so a value of 0 contributes a factor of exactly
1 and every factor lies in [1, 2].

`hv_set` is exact (recursive sweep over the last coordinate); `hv_inclusion_exclusion`
and `mc_oracle` are independent cross-checks for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, MismatchError
from .ifs import IFS

DEFAULT_REFERENCE_COORD = -1.0
DEFAULT_TIE_TOLERANCE = 1e-9

Point = Sequence[float]


def _as_point(p: Point, name: str = "point") -> np.ndarray:
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError(f"{name} must be a non-empty 1-D coordinate sequence")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} has non-finite coordinates: {p}")
    return arr


def hv_point(p: Point, r: Point) -> float:
    """Volume of the box spanned between a reference r and one point p >= r."""
    pa = _as_point(p)
    ra = _as_point(r, "reference")
    if pa.shape != ra.shape:
        raise MismatchError(f"point has {pa.size} dimensions, reference has {ra.size}")
    if np.any(pa < ra):
        bad = int(np.argmax(pa < ra))
        raise DomainError(
            f"point does not dominate the reference: coordinate {bad} is "
            f"{pa[bad]} < {ra[bad]}"
        )
    return float(np.prod(pa - ra))


def _pareto_max(v: np.ndarray) -> np.ndarray:
    """Drop rows dominated by another row (componentwise <=, duplicates deduped)."""
    k = v.shape[0]
    if k <= 1:
        return v
    ge = np.all(v[:, None, :] <= v[None, :, :], axis=-1)  # ge[i, j]: row j >= row i
    gt = np.any(v[:, None, :] < v[None, :, :], axis=-1)   # gt[i, j]: row j > row i somewhere
    strictly_dominated = np.any(ge & gt, axis=1)
    equal = ge & ge.T
    duplicate = np.array([bool(np.any(equal[i, :i])) for i in range(k)])
    return v[~(strictly_dominated | duplicate)]


def _union_volume(v: np.ndarray) -> float:
    """Measure of the union of boxes [0, row] for non-negative rows.

    Sweeps slabs of the last coordinate and recurses one dimension down;
    dominated rows are filtered at every level to keep the recursion small.
    """
    if v.shape[0] == 0:
        return 0.0
    if v.shape[1] == 1:
        return float(v.max())
    v = _pareto_max(v)
    levels = np.unique(v[:, -1])[::-1]
    total = 0.0
    bounds = np.append(levels, 0.0)
    for z_hi, z_lo in zip(bounds[:-1], bounds[1:]):
        if z_hi == z_lo:
            continue
        active = v[v[:, -1] >= z_hi, :-1]
        total += (z_hi - z_lo) * _union_volume(active)
    return total


def _points_array(points: Sequence[Point], r: Point) -> tuple[np.ndarray, np.ndarray]:
    ra = _as_point(r, "reference")
    if len(points) == 0:
        return np.empty((0, ra.size)), ra
    rows = [_as_point(p) for p in points]
    dims = {row.size for row in rows}
    if len(dims) != 1 or rows[0].size != ra.size:
        raise MismatchError("all points and the reference must share one dimension")
    arr = np.vstack(rows)
    if np.any(arr < ra):
        bad = int(np.argmax(np.any(arr < ra, axis=1)))
        raise DomainError(f"point {bad} does not dominate the reference")
    return arr, ra


def hv_set(points: Sequence[Point], r: Point) -> float:
    """Exact hypervolume of a point set: measure of the union of boxes [r, p]."""
    arr, ra = _points_array(points, r)
    if arr.shape[0] == 0:
        return 0.0
    return _union_volume(arr - ra)


def hv_inclusion_exclusion(points: Sequence[Point], r: Point) -> float:
    """Union volume by inclusion-exclusion over all non-empty subsets.

    Exponential in the number of points; intended as an independent oracle
    for small sets (at most 20 points).
    """
    arr, ra = _points_array(points, r)
    k = arr.shape[0]
    if k == 0:
        return 0.0
    if k > 20:
        raise DomainError("inclusion-exclusion oracle is limited to 20 points")
    offsets = arr - ra
    total = 0.0
    for mask in range(1, 1 << k):
        members = [i for i in range(k) if mask >> i & 1]
        box = float(np.prod(offsets[members].min(axis=0)))
        total += box if len(members) % 2 == 1 else -box
    return total


def mc_oracle(
    points: Sequence[Point],
    r: Point,
    samples: int = 100_000,
    seed: int = 0,
) -> tuple[float, float]:
    """Monte Carlo estimate of hv_set with its standard error.

    Samples uniformly over the bounding box [r, componentwise max] and counts
    hits inside the union of boxes. Returns (estimate, stderr); deterministic
    for a fixed seed. An empty point set yields (0.0, 0.0).
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    arr, ra = _points_array(points, r)
    if arr.shape[0] == 0:
        return 0.0, 0.0
    hi = arr.max(axis=0)
    span = hi - ra
    box_volume = float(np.prod(span))
    if box_volume == 0.0:
        return 0.0, 0.0
    rng = np.random.default_rng(seed)
    hits = 0
    remaining = samples
    chunk = 250_000
    while remaining > 0:
        take = min(chunk, remaining)
        q = ra + rng.random((take, ra.size)) * span
        inside = np.any(np.all(q[:, None, :] <= arr[None, :, :], axis=-1), axis=-1)
        hits += int(np.count_nonzero(inside))
        remaining -= take
    fraction = hits / samples
    estimate = fraction * box_volume
    stderr = box_volume * math.sqrt(fraction * (1.0 - fraction) / samples)
    return estimate, stderr


@dataclass(frozen=True)
class HVConfig:
    """Configuration for net-hypervolume scoring.

    reference: coordinates of the reference point, all <= 0; None means -1
    in every dimension. alpha: perception factor in [-1, 1] applied to the
    hesitancy-space hypervolume. tie_tolerance: absolute tolerance used when
    grouping equal ranking scores.
    """

    reference: tuple[float, ...] | None = None
    alpha: float = 0.0
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE

    def __post_init__(self) -> None:
        if self.reference is not None:
            ref = tuple(float(c) for c in self.reference)
            if len(ref) == 0:
                raise DomainError("reference must have at least one coordinate")
            if any(not math.isfinite(c) for c in ref):
                raise DomainError("reference coordinates must be finite")
            if any(c > 0.0 for c in ref):
                raise DomainError("reference coordinates must be <= 0")
            object.__setattr__(self, "reference", ref)
        alpha = float(self.alpha)
        if not -1.0 <= alpha <= 1.0:
            raise DomainError(f"alpha must lie in [-1, 1], got {alpha}")
        object.__setattr__(self, "alpha", alpha)
        if not (math.isfinite(self.tie_tolerance) and self.tie_tolerance >= 0.0):
            raise DomainError("tie_tolerance must be a non-negative finite number")

    def reference_for(self, m: int) -> tuple[float, ...]:
        """Concrete reference coordinates for an m-dimensional space."""
        if self.reference is None:
            return (DEFAULT_REFERENCE_COORD,) * m
        if len(self.reference) != m:
            raise MismatchError(
                f"reference has {len(self.reference)} coordinates but the IFS has {m} elements"
            )
        return self.reference


@dataclass(frozen=True)
class HVNetResult:
    """Per-space hypervolumes of one IFS and their combination."""

    hv_mu: float
    hv_nu: float
    hv_pi: float
    hv_net: float

    def to_dict(self) -> dict:
        return {
            "hv_mu": self.hv_mu,
            "hv_nu": self.hv_nu,
            "hv_pi": self.hv_pi,
            "hv_net": self.hv_net,
        }


def hv_net(x: IFS, config: HVConfig | None = None) -> HVNetResult:
    """Net hypervolume of one IFS: hv_mu - hv_nu - alpha * hv_pi.

    Each space contributes the single-point hypervolume of its value vector
    against the configured reference.
    """
    cfg = config if config is not None else HVConfig()
    reference = cfg.reference_for(len(x))
    volume_mu = hv_point(x.mu_values(), reference)
    volume_nu = hv_point(x.nu_values(), reference)
    volume_pi = hv_point(x.pi_values(), reference)
    return HVNetResult(
        hv_mu=volume_mu,
        hv_nu=volume_nu,
        hv_pi=volume_pi,
        hv_net=volume_mu - volume_nu - cfg.alpha * volume_pi,
    )
