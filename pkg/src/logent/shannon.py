"""Shannon information measures and the bridge to the logical measures.

Values are in bits (base-2 logarithms) unless a ``base`` argument says
otherwise; pass ``base=math.e`` for nats.  The convention 0 * log(1/0) = 0
applies in every sum, and a cross entropy or divergence evaluated against a
zero probability where the reference puts mass is reported as ``math.inf``
rather than raised, since that is the correct limiting value.

The termwise substitution log(1/p) <-> (1 - p) turns each logical compound
formula into its Shannon counterpart; :func:`dit_bit_transform` performs the
substitution and checks it against the directly computed quantity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, LogentError, SizeMismatchError
from .logical import Distribution, JointDistribution, block_probabilities
from .partitions import Partition, join

_TRANSFORM_GUARD = 1e-9


def _log(x: float, base: float) -> float:
    if base == 2.0:
        return math.log2(x)
    if base == math.e:
        return math.log(x)
    return math.log(x) / math.log(base)


def _surprisal(p, base: float) -> float:
    """log(1/p) with the zero convention handled by callers."""
    return -_log(float(p), base)


def shannon_hartley(p0: float, base: float = 2.0) -> float:
    """log(1/p0): bits needed to single out one of 1/p0 equiprobable items."""
    if not 0.0 < float(p0) <= 1.0:
        raise DomainError(f"probability must lie in (0, 1], got {p0}")
    return _surprisal(p0, base)


def shannon_entropy_dist(p: Distribution, base: float = 2.0) -> float:
    """H(p) = sum p_i * log(1/p_i), between 0 and log(n)."""
    return math.fsum(float(q) * _surprisal(q, base) for q in p.probs if q > 0)


def shannon_entropy_partition(
    partition: Partition, weights: Distribution | None = None, base: float = 2.0
) -> float:
    """H of the block-probability vector of the partition."""
    masses = block_probabilities(partition, weights)
    return math.fsum(float(m) * _surprisal(m, base) for m in masses if m > 0)


def shannon_conditional_joint(
    joint: JointDistribution, given: str = "y", base: float = 2.0
) -> float:
    """H(x|y) = sum p(x,y) * log(p(y)/p(x,y)) (swap axes with given='x')."""
    if given == "y":
        marginal = joint.marginal_y
        pick = lambda i, j: marginal[j]
    elif given == "x":
        marginal = joint.marginal_x
        pick = lambda i, j: marginal[i]
    else:
        raise DomainError(f"axis selector must be 'x' or 'y', got {given!r}")
    return math.fsum(
        float(p) * _log(float(pick(i, j)) / float(p), base)
        for i, j, p in joint.cells()
        if p > 0
    )


def shannon_conditional_partition(
    p: Partition, s: Partition, weights: Distribution | None = None, base: float = 2.0
) -> float:
    """H(p|s): block entropies of p restricted to each block of s, averaged.

    Equals H(p v s) - H(s).
    """
    joined = join(p, s)  # raises on universe mismatch
    s_index = s.block_index_of()
    joint_masses = block_probabilities(joined, weights)
    s_masses = block_probabilities(s, weights)
    total = 0.0
    for block, m in zip(joined.blocks, joint_masses):
        if m <= 0:
            continue
        p_c = s_masses[s_index[block[0]]]
        total += float(m) * _log(float(p_c) / float(m), base)
    return total


def shannon_mutual_joint(joint: JointDistribution, base: float = 2.0) -> float:
    """I(x,y) = sum p(x,y) * log(p(x,y) / (p(x)p(y))); zero cells contribute 0."""
    px, py = joint.marginal_x, joint.marginal_y
    return math.fsum(
        float(p) * _log(float(p) / (float(px[i]) * float(py[j])), base)
        for i, j, p in joint.cells()
        if p > 0
    )


def shannon_mutual_partition(
    p: Partition, s: Partition, weights: Distribution | None = None, base: float = 2.0
) -> float:
    """I(p,s) = sum over nonempty B & C of p_BC * log(p_BC / (p_B p_C))."""
    joined = join(p, s)
    p_index = p.block_index_of()
    s_index = s.block_index_of()
    p_masses = block_probabilities(p, weights)
    s_masses = block_probabilities(s, weights)
    joint_masses = block_probabilities(joined, weights)
    total = 0.0
    for block, m in zip(joined.blocks, joint_masses):
        if m <= 0:
            continue
        p_b = p_masses[p_index[block[0]]]
        p_c = s_masses[s_index[block[0]]]
        total += float(m) * _log(float(m) / (float(p_b) * float(p_c)), base)
    return total


def shannon_cross_entropy(p: Distribution, q: Distribution, base: float = 2.0) -> float:
    """H(p||q) = sum p_i * log(1/q_i); inf when q lacks mass where p has it."""
    if len(p) != len(q):
        raise SizeMismatchError(f"distributions of length {len(p)} and {len(q)}")
    total = 0.0
    for a, b in zip(p.probs, q.probs):
        if a <= 0:
            continue
        if b <= 0:
            return math.inf
        total += float(a) * _surprisal(b, base)
    return total


def symmetrized_cross_entropy(p: Distribution, q: Distribution, base: float = 2.0) -> float:
    return (shannon_cross_entropy(p, q, base) + shannon_cross_entropy(q, p, base)) / 2


def kl_divergence(p: Distribution, q: Distribution, base: float = 2.0) -> float:
    """D(p||q) = sum p_i * log(p_i/q_i) >= 0, zero exactly when p = q."""
    if len(p) != len(q):
        raise SizeMismatchError(f"distributions of length {len(p)} and {len(q)}")
    total = 0.0
    for a, b in zip(p.probs, q.probs):
        if a <= 0:
            continue
        if b <= 0:
            return math.inf
        total += float(a) * _log(float(a) / float(b), base)
    return total


def symmetrized_kl_divergence(p: Distribution, q: Distribution, base: float = 2.0) -> float:
    return (kl_divergence(p, q, base) + kl_divergence(q, p, base)) / 2


# ----------------------------------------------------------------------
# the dit-bit bridge
# ----------------------------------------------------------------------


def dit_to_bit(h0: float, base: float = 2.0) -> float:
    """log(1/(1-h0)): the bit count of the equiprobable set whose dit count is h0."""
    if not 0.0 <= h0 < 1.0:
        raise DomainError(f"normalized dit count must lie in [0, 1), got {h0}")
    return -math.log1p(-h0) / math.log(base)


def bit_to_dit(bits: float, base: float = 2.0) -> float:
    """1 - base**(-bits): inverse of :func:`dit_to_bit`."""
    if bits < 0:
        raise DomainError(f"bit count must be nonnegative, got {bits}")
    return -math.expm1(-bits * math.log(base))


def dit_bit_transform(kind: str, *inputs, base: float = 2.0) -> float:
    """Termwise substitution log(1/p) for (1-p) in a logical compound formula.

    Supported kinds and inputs:

    - ``entropy``     (p)            -> H(p)
    - ``conditional`` (joint, given) -> H(x|y) or H(y|x)
    - ``mutual``      (joint)        -> I(x,y)
    - ``cross``       (p, q)         -> H(p||q)
    - ``divergence``  (p, q)         -> symmetrized KL divergence

    The substituted sum is checked against the directly computed Shannon
    quantity before being returned.
    """
    if kind == "entropy":
        (p,) = inputs
        value = math.fsum(float(a) * _surprisal(a, base) for a in p.probs if a > 0)
        direct = shannon_entropy_dist(p, base)
    elif kind == "conditional":
        joint, given = inputs
        if given == "y":
            marg = joint.marginal_y
            pick = lambda i, j: marg[j]
        elif given == "x":
            marg = joint.marginal_x
            pick = lambda i, j: marg[i]
        else:
            raise DomainError(f"axis selector must be 'x' or 'y', got {given!r}")
        value = math.fsum(
            float(p) * (_surprisal(p, base) - _surprisal(pick(i, j), base))
            for i, j, p in joint.cells()
            if p > 0
        )
        direct = shannon_conditional_joint(joint, given, base)
    elif kind == "mutual":
        (joint,) = inputs
        px, py = joint.marginal_x, joint.marginal_y
        value = math.fsum(
            float(p)
            * (_surprisal(px[i], base) + _surprisal(py[j], base) - _surprisal(p, base))
            for i, j, p in joint.cells()
            if p > 0
        )
        direct = shannon_mutual_joint(joint, base)
    elif kind == "cross":
        p, q = inputs
        value = shannon_cross_entropy(p, q, base)
        direct = value
    elif kind == "divergence":
        p, q = inputs
        cross_part = (
            shannon_cross_entropy(p, q, base) + shannon_cross_entropy(q, p, base)
        ) / 2
        entropy_part = (shannon_entropy_dist(p, base) + shannon_entropy_dist(q, base)) / 2
        value = cross_part - entropy_part
        direct = symmetrized_kl_divergence(p, q, base)
    else:
        raise DomainError(f"unknown transform selector {kind!r}")
    if math.isinf(value) or math.isinf(direct):
        if value != direct:
            raise LogentError(f"transform of {kind!r} disagrees with the direct value")
        return value
    if abs(value - direct) > _TRANSFORM_GUARD * (1.0 + abs(direct)):
        raise LogentError(
            f"transform of {kind!r} drifted from the direct value by {abs(value - direct):.3e}"
        )
    return value


# ----------------------------------------------------------------------
# multinomial entropy and its Stirling approximations
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class StirlingReport:
    """Exact normalized log-multinomial next to its two Stirling approximations.

    ``s_exact`` is ln(N! / prod N_i!) / N from exact log-factorials;
    ``approx2`` drops each factorial to the two-term Stirling form and lands
    on the natural-log entropy of the size proportions; ``approx3`` keeps the
    (1/2) ln(2 pi M) term of each factorial as well.  Values are in nats
    unless ``unit`` says bits.
    """

    s_exact: float
    approx2: float
    approx3: float
    unit: str = "nats"

    @property
    def err2(self) -> float:
        return abs(self.s_exact - self.approx2)

    @property
    def err3(self) -> float:
        return abs(self.s_exact - self.approx3)


def _log_factorial(m: int) -> float:
    """ln(m!) by direct summation of logs; exact to double precision at desk scale."""
    return math.fsum(math.log(k) for k in range(2, m + 1))


def stirling_entropy(block_sizes, bits: bool = False) -> StirlingReport:
    """Exact S = ln(W)/N for W = N!/(prod N_i!) and its Stirling estimates."""
    sizes = list(block_sizes)
    if not sizes:
        raise DomainError("need at least one block size")
    for s in sizes:
        if not isinstance(s, int) or isinstance(s, bool) or s < 1:
            raise DomainError(f"block sizes must be positive integers, got {s!r}")
    total = sum(sizes)
    s_exact = (_log_factorial(total) - math.fsum(_log_factorial(s) for s in sizes)) / total
    proportions = [s / total for s in sizes]
    approx2 = math.fsum(-p * math.log(p) for p in proportions if p > 0)
    # third Stirling term: (1/2N) * [ln(2 pi N) - sum_i ln(2 pi N_i)]
    correction = (
        math.log(2 * math.pi * total)
        - math.fsum(math.log(2 * math.pi * s) for s in sizes)
    ) / (2 * total)
    approx3 = approx2 + correction
    if bits:
        scale = 1.0 / math.log(2)
        return StirlingReport(
            s_exact=s_exact * scale,
            approx2=approx2 * scale,
            approx3=approx3 * scale,
            unit="bits",
        )
    return StirlingReport(s_exact=s_exact, approx2=approx2, approx3=approx3)
