"""Logical (quadratic) information measures.

The logical entropy of a probability vector is 1 - sum(p_i^2): the chance
that two independent draws land on distinct outcomes.  For a partition it is
the product measure of the dit set, so every compound quantity (conditional,
joint, mutual, cross) is the measure of an explicit subset of a pair space
and the usual Venn identities hold literally.

All functions are pure and numeric-type generic: feed them ``float`` entries
for fast arithmetic or ``fractions.Fraction`` entries for exact arithmetic.
Zero-probability outcomes are kept (they contribute nothing) so indices stay
aligned with user input and distance matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    DomainError,
    InvalidDistanceMatrixError,
    InvalidDistributionError,
    LogentError,
    SizeMismatchError,
)
from .partitions import Partition, PairRelation, dit_set, join, mutual_dit_set

NORMALIZATION_TOLERANCE = 1e-9
IDENTITY_TOLERANCE = 1e-12


def _accumulate(terms: Iterable):
    """Sum that stays exact for Fraction/int terms and uses fsum for floats."""
    values = list(terms)
    if values and all(isinstance(v, float) for v in values):
        return math.fsum(values)
    return sum(values)


@dataclass(frozen=True)
class Distribution:
    """A finite probability vector p = (p_1, .., p_n).

    Entries must be nonnegative and sum to 1 within 1e-9; a small drift is
    renormalized away on construction, anything larger is rejected.  Entries
    may be floats or Fractions; Fractions are preserved so downstream sums
    stay exact.
    """

    probs: tuple

    def __post_init__(self) -> None:
        probs = tuple(self.probs)
        if not probs:
            raise InvalidDistributionError("a distribution needs at least one outcome")
        for p in probs:
            if p < 0:
                raise InvalidDistributionError(f"negative probability {p}")
        total = sum(probs)
        if abs(float(total) - 1.0) > NORMALIZATION_TOLERANCE:
            raise InvalidDistributionError(f"probabilities sum to {float(total)}, not 1")
        if total != 1:
            probs = tuple(p / total for p in probs)
        object.__setattr__(self, "probs", probs)

    def __len__(self) -> int:
        return len(self.probs)

    def __getitem__(self, i: int):
        return self.probs[i]

    @property
    def is_exact(self) -> bool:
        return all(not isinstance(p, float) for p in self.probs)

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        if n < 1:
            raise InvalidDistributionError("need at least one outcome")
        return cls((1.0 / n,) * n)

    @classmethod
    def uniform_exact(cls, n: int) -> "Distribution":
        if n < 1:
            raise InvalidDistributionError("need at least one outcome")
        return cls((Fraction(1, n),) * n)

    @classmethod
    def point_mass(cls, n: int, outcome: int = 0) -> "Distribution":
        if not (0 <= outcome < n):
            raise InvalidDistributionError(f"outcome {outcome} outside 0..{n - 1}")
        return cls(tuple(1 if i == outcome else 0 for i in range(n)))

    def mix(self, other: "Distribution") -> "Distribution":
        """The half-and-half mixture (p + q) / 2."""
        _check_same_length(self, other)
        half = Fraction(1, 2) if self.is_exact and other.is_exact else 0.5
        return Distribution(tuple((p + q) * half for p, q in zip(self.probs, other.probs)))


@dataclass(frozen=True)
class JointDistribution:
    """A joint probability matrix p(x, y); rows are x values, columns y values."""

    rows: tuple

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise InvalidDistributionError("a joint distribution needs at least one cell")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise InvalidDistributionError("ragged joint matrix")
            for p in r:
                if p < 0:
                    raise InvalidDistributionError(f"negative probability {p}")
        total = sum(p for r in rows for p in r)
        if abs(float(total) - 1.0) > NORMALIZATION_TOLERANCE:
            raise InvalidDistributionError(f"joint probabilities sum to {float(total)}, not 1")
        if total != 1:
            rows = tuple(tuple(p / total for p in r) for r in rows)
        object.__setattr__(self, "rows", rows)

    @property
    def nx(self) -> int:
        return len(self.rows)

    @property
    def ny(self) -> int:
        return len(self.rows[0])

    @property
    def marginal_x(self) -> tuple:
        return tuple(sum(r) for r in self.rows)

    @property
    def marginal_y(self) -> tuple:
        return tuple(sum(r[j] for r in self.rows) for j in range(self.ny))

    def cells(self) -> Iterator[tuple[int, int, object]]:
        for i, r in enumerate(self.rows):
            for j, p in enumerate(r):
                yield i, j, p

    def flatten(self) -> Distribution:
        return Distribution(tuple(p for r in self.rows for p in r))

    def product_of_marginals(self) -> "JointDistribution":
        px, py = self.marginal_x, self.marginal_y
        return JointDistribution(tuple(tuple(a * b for b in py) for a in px))

    def independence_residual(self) -> float:
        """max |p(x,y) - p(x)p(y)|; zero exactly when the joint is a product."""
        px, py = self.marginal_x, self.marginal_y
        return max(abs(float(p - px[i] * py[j])) for i, j, p in self.cells())

    @classmethod
    def uniform(cls, nx: int, ny: int) -> "JointDistribution":
        return cls(tuple((1.0 / (nx * ny),) * ny for _ in range(nx)))

    @classmethod
    def outer(cls, px: Distribution, py: Distribution) -> "JointDistribution":
        return cls(tuple(tuple(a * b for b in py.probs) for a in px.probs))


@dataclass(frozen=True)
class DistanceMatrix:
    """A symmetric nonnegative distance grid with zero diagonal."""

    entries: tuple

    def __post_init__(self) -> None:
        entries = tuple(tuple(r) for r in self.entries)
        n = len(entries)
        if n == 0 or any(len(r) != n for r in entries):
            raise InvalidDistanceMatrixError("distance matrix must be square and nonempty")
        for i in range(n):
            if entries[i][i] != 0:
                raise InvalidDistanceMatrixError(f"nonzero diagonal entry at {i}")
            for j in range(n):
                if entries[i][j] < 0:
                    raise InvalidDistanceMatrixError(f"negative distance at ({i}, {j})")
                if entries[i][j] != entries[j][i]:
                    raise InvalidDistanceMatrixError(f"asymmetric entries at ({i}, {j})")
        object.__setattr__(self, "entries", entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def logical(cls, n: int) -> "DistanceMatrix":
        """d_ij = 1 for i != j, 0 on the diagonal."""
        return cls(tuple(tuple(0 if i == j else 1 for j in range(n)) for i in range(n)))


def _check_same_length(p: Distribution, q: Distribution) -> None:
    if len(p) != len(q):
        raise SizeMismatchError(f"distributions of length {len(p)} and {len(q)}")


def _check_weights(partition: Partition, weights: Distribution | None) -> None:
    if weights is not None and len(weights) != partition.universe.size:
        raise SizeMismatchError(
            f"weights of length {len(weights)} for a universe of size {partition.universe.size}"
        )


# ----------------------------------------------------------------------
# core measures
# ----------------------------------------------------------------------


def product_measure(relation: PairRelation, p: Distribution):
    """mu(S) = sum of p_i * p_j over the member pairs (i, j) of S."""
    if len(p) != relation.universe.size:
        raise SizeMismatchError(
            f"distribution of length {len(p)} for a universe of size {relation.universe.size}"
        )
    probs = p.probs
    return _accumulate(probs[i] * probs[j] for i, j in relation.pairs())


def logical_entropy_dist(p: Distribution):
    """h(p) = 1 - sum(p_i^2), the chance two independent draws differ."""
    return 1 - _accumulate(q * q for q in p.probs)


def identification_probability(p: Distribution):
    """sum(p_i^2): the repeat rate, complement of the logical entropy."""
    return _accumulate(q * q for q in p.probs)


def logical_entropy_partition(partition: Partition, weights: Distribution | None = None):
    """Measure of the dit set: |dit|/n^2 unweighted, mu(dit) under weights."""
    _check_weights(partition, weights)
    if weights is None:
        n = partition.universe.size
        return len(dit_set(partition)) / (n * n)
    return product_measure(dit_set(partition), weights)


def block_probabilities(partition: Partition, weights: Distribution | None = None) -> tuple:
    """p_B for each block: the share of weight (or of elements) it carries."""
    _check_weights(partition, weights)
    if weights is None:
        n = partition.universe.size
        return tuple(len(b) / n for b in partition.blocks)
    return tuple(_accumulate(weights.probs[u] for u in b) for b in partition.blocks)


def logical_conditional_partition(
    p: Partition, s: Partition, weights: Distribution | None = None
):
    """Measure of dit(p) - dit(s): distinctions of p that s does not make.

    Equals h(p v s) - h(s).  The unweighted definition is counting measure;
    general weights go through the product measure in the same way as the
    plain entropy (an extension of the unweighted counting form).
    """
    relation = dit_set(p).difference(dit_set(s))
    _check_weights(p, weights)
    if weights is None:
        n = p.universe.size
        return len(relation) / (n * n)
    return product_measure(relation, weights)


def logical_mutual_partition(p: Partition, s: Partition, weights: Distribution | None = None):
    """Measure of dit(p) & dit(s); equals h(p) + h(s) - h(p v s)."""
    relation = mutual_dit_set(p, s)
    _check_weights(p, weights)
    if weights is None:
        n = p.universe.size
        return len(relation) / (n * n)
    return product_measure(relation, weights)


# ----------------------------------------------------------------------
# joint distributions
# ----------------------------------------------------------------------


def joint_logical_entropy(joint: JointDistribution):
    """h(x, y) = 1 - sum of p(x,y)^2 over all cells."""
    return 1 - _accumulate(p * p for _, _, p in joint.cells())


def _marginal_for_axis(joint: JointDistribution, given: str):
    if given == "y":
        return lambda i, j: joint.marginal_y[j]
    if given == "x":
        return lambda i, j: joint.marginal_x[i]
    raise DomainError(f"axis selector must be 'x' or 'y', got {given!r}")


def logical_conditional_joint(joint: JointDistribution, given: str = "y"):
    """h(x|y) = sum p(x,y) * [p(y) - p(x,y)] (swap axes with given='x').

    The product measure of pairs of draws that differ on the free axis but
    agree on the conditioning axis; equals h(x,y) - h(given axis).
    """
    marginal = _marginal_for_axis(joint, given)
    return _accumulate(p * (marginal(i, j) - p) for i, j, p in joint.cells())


def logical_mutual_joint(joint: JointDistribution):
    """m(x,y) = sum p(x,y) * [(1-p(x)) + (1-p(y)) - (1-p(x,y))].

    The chance a second draw differs in both coordinates; equals
    h(x) + h(y) - h(x,y).
    """
    px, py = joint.marginal_x, joint.marginal_y
    return _accumulate(
        p * ((1 - px[i]) + (1 - py[j]) - (1 - p)) for i, j, p in joint.cells()
    )


# ----------------------------------------------------------------------
# two distributions
# ----------------------------------------------------------------------


def logical_cross_entropy(p: Distribution, q: Distribution):
    """h(p||q) = 1 - sum(p_i * q_i); symmetric, and h(p||p) = h(p)."""
    _check_same_length(p, q)
    return 1 - _accumulate(a * b for a, b in zip(p.probs, q.probs))


def logical_divergence(p: Distribution, q: Distribution):
    """d(p||q) = (1/2) * sum (p_i - q_i)^2, zero exactly when p = q.

    Identical to the Jensen difference h(p||q) - [h(p) + h(q)] / 2.
    """
    _check_same_length(p, q)
    half = Fraction(1, 2) if p.is_exact and q.is_exact else 0.5
    return half * _accumulate((a - b) * (a - b) for a, b in zip(p.probs, q.probs))


def quadratic_entropy(p: Distribution, distances: DistanceMatrix):
    """sum over i != j of d_ij * p_i * p_j: mean distance of two draws.

    With the logical distance (all off-diagonal distances 1) this is exactly
    the logical entropy of p.
    """
    if distances.size != len(p):
        raise SizeMismatchError(
            f"distance matrix of size {distances.size} for distribution of length {len(p)}"
        )
    probs = p.probs
    return _accumulate(
        distances.entries[i][j] * probs[i] * probs[j]
        for i in range(len(p))
        for j in range(len(p))
        if i != j
    )


@dataclass(frozen=True)
class MixingReport:
    """Entropy of the half-and-half mixture with its two comparison values."""

    h_mix: object
    cross: object
    mean_h: object


def mixing_entropy(p: Distribution, q: Distribution) -> MixingReport:
    """h((p+q)/2) together with h(p||q) and [h(p)+h(q)]/2.

    Checks the exact relation h((p+q)/2) = h(p||q)/2 + [h(p)+h(q)]/4 and the
    chain h(p||q) >= h((p+q)/2) >= [h(p)+h(q)]/2 before returning.
    """
    _check_same_length(p, q)
    h_mix = logical_entropy_dist(p.mix(q))
    cross = logical_cross_entropy(p, q)
    mean_h = (logical_entropy_dist(p) + logical_entropy_dist(q)) / 2
    slack = 0 if (p.is_exact and q.is_exact) else IDENTITY_TOLERANCE
    if abs(float(h_mix - cross / 2 - mean_h / 2)) > max(slack, IDENTITY_TOLERANCE):
        raise LogentError("mixture identity violated beyond numeric tolerance")
    if float(cross - h_mix) < -slack or float(h_mix - mean_h) < -slack:
        raise LogentError("mixing chain violated beyond numeric tolerance")
    return MixingReport(h_mix=h_mix, cross=cross, mean_h=mean_h)
