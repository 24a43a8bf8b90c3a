"""Intuitionistic fuzzy numbers and sets.

An intuitionistic fuzzy number (IFN) is a pair (mu, nu) of membership and
non-membership degrees with mu, nu in [0, 1] and mu + nu <= 1. The residue
pi = 1 - mu - nu is the hesitancy degree. An IFS is a fixed-length sequence
of IFNs, one per element of the underlying universe (one per criterion in
decision-making use).

Comparison of IFNs is lexicographic on the score mu - nu and then the
accuracy mu + nu; the greatest IFN is (1, 0) and the smallest is (0, 1).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateError, DomainError, MismatchError

# Aggregation chains can overshoot the mu + nu <= 1 simplex by a few ulps.
# Sums inside this tolerance are clamped back onto the boundary; anything
# beyond it is rejected as bad data.
SUM_TOLERANCE = 1e-9


class Ordering(enum.Enum):
    """Outcome of comparing two IFNs."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class IFN:
    """A membership / non-membership degree pair."""

    mu: float
    nu: float

    def __post_init__(self) -> None:
        mu = float(self.mu)
        nu = float(self.nu)
        if not (math.isfinite(mu) and math.isfinite(nu)):
            raise DomainError(f"IFN components must be finite, got ({self.mu}, {self.nu})")
        if not (0.0 <= mu <= 1.0 and 0.0 <= nu <= 1.0):
            raise DomainError(f"IFN components must lie in [0, 1], got ({mu}, {nu})")
        if mu + nu > 1.0 + SUM_TOLERANCE:
            raise DomainError(f"IFN requires mu + nu <= 1, got {mu} + {nu} = {mu + nu}")
        if mu + nu > 1.0:
            nu = 1.0 - mu  # clamp rounding overshoot onto the simplex boundary
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    @property
    def pi(self) -> float:
        """Hesitancy degree 1 - mu - nu."""
        return 1.0 - self.mu - self.nu

    def as_pair(self) -> tuple[float, float]:
        return (self.mu, self.nu)

    def __repr__(self) -> str:
        return f"IFN({self.mu:g}, {self.nu:g})"


#: The greatest IFN, the positive ideal value.
PIS = IFN(1.0, 0.0)
#: The smallest IFN, the negative ideal value.
NIS = IFN(0.0, 1.0)


def hesitancy(a: IFN) -> float:
    """Hesitancy degree 1 - mu - nu, in [0, 1]."""
    return 1.0 - a.mu - a.nu


def score(a: IFN) -> float:
    """Score mu - nu, in [-1, 1]. Primary comparison key."""
    return a.mu - a.nu


def accuracy(a: IFN) -> float:
    """Accuracy mu + nu, in [0, 1]. Tie-breaking comparison key."""
    return a.mu + a.nu


def compare(a: IFN, b: IFN) -> Ordering:
    """Compare two IFNs lexicographically on (score, accuracy)."""
    sa, sb = score(a), score(b)
    if sa < sb:
        return Ordering.LESS
    if sa > sb:
        return Ordering.GREATER
    ha, hb = accuracy(a), accuracy(b)
    if ha < hb:
        return Ordering.LESS
    if ha > hb:
        return Ordering.GREATER
    return Ordering.EQUAL


def multiply(a: IFN, b: IFN) -> IFN:
    """Product of two IFNs: (mu_a * mu_b, nu_a + nu_b - nu_a * nu_b).

    The non-membership part is evaluated as nu_b + nu_a * (1 - nu_b), which
    is algebraically identical and keeps the identity (1, 0) and the
    absorbing element (0, 1) exact in floating point.
    """
    return IFN(a.mu * b.mu, b.nu + a.nu * (1.0 - b.nu))


def ifa_aggregate(values: Sequence[IFN], weights: Sequence[float]) -> IFN:
    """Weighted arithmetic aggregation of IFNs with ordinary fuzzy weights.

    Returns (sum(mu_l * w_l) / sum(w_l), sum(nu_l * w_l) / sum(w_l)), a convex
    combination of the inputs. Weights must be non-negative; only their
    ratios matter, so uniform rescaling by any positive factor is a no-op.
    """
    if len(values) == 0:
        raise DomainError("ifa_aggregate requires at least one value")
    if len(values) != len(weights):
        raise MismatchError(
            f"got {len(values)} values but {len(weights)} weights"
        )
    total = 0.0
    mu_acc = 0.0
    nu_acc = 0.0
    for value, weight in zip(values, weights):
        w = float(weight)
        if not math.isfinite(w) or w < 0.0:
            raise DomainError(f"weights must be finite and non-negative, got {weight}")
        total += w
        mu_acc += value.mu * w
        nu_acc += value.nu * w
    if total == 0.0:
        raise DegenerateError(
            "aggregation weights sum to zero; the evaluations carry no usable information"
        )
    return IFN(mu_acc / total, nu_acc / total)


def select_extremes(values: Sequence[IFN]) -> tuple[IFN, IFN]:
    """Return (greatest, smallest) of a non-empty IFN sequence.

    Uses `compare`; on exact ties the earliest occurrence wins, so the result
    is deterministic in the input order.
    """
    if len(values) == 0:
        raise DomainError("select_extremes requires at least one value")
    best = values[0]
    worst = values[0]
    for candidate in values[1:]:
        if compare(candidate, best) is Ordering.GREATER:
            best = candidate
        if compare(candidate, worst) is Ordering.LESS:
            worst = candidate
    return best, worst


@dataclass(frozen=True)
class IFS:
    """A fixed-length ordered sequence of IFNs."""

    elements: tuple[IFN, ...]

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        if len(elements) == 0:
            raise DomainError("an IFS must contain at least one element")
        for element in elements:
            if not isinstance(element, IFN):
                raise DomainError(f"IFS elements must be IFN, got {type(element).__name__}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]]) -> "IFS":
        return cls(tuple(IFN(mu, nu) for mu, nu in pairs))

    @classmethod
    def positive_ideal(cls, n: int) -> "IFS":
        """The IFS whose every element is (1, 0)."""
        return cls((PIS,) * n)

    @classmethod
    def negative_ideal(cls, n: int) -> "IFS":
        """The IFS whose every element is (0, 1)."""
        return cls((NIS,) * n)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, index: int) -> IFN:
        return self.elements[index]

    def mu_values(self) -> np.ndarray:
        return np.array([e.mu for e in self.elements], dtype=float)

    def nu_values(self) -> np.ndarray:
        return np.array([e.nu for e in self.elements], dtype=float)

    def pi_values(self) -> np.ndarray:
        return np.array([e.pi for e in self.elements], dtype=float)
