"""Exhaustive and randomized identity suites.

Small universes are swept completely: every ordered pair of partitions is
pushed through the lattice identities with exact set equality, and through
the measure identities with exact rational weights.  Distributions and joint
matrices are exercised with seeded random inputs at a 1e-12 residual bound.
The CLI ``verify`` command and the acceptance tests both drive these suites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .logical import (
    Distribution,
    JointDistribution,
    joint_logical_entropy,
    logical_conditional_joint,
    logical_conditional_partition,
    logical_cross_entropy,
    logical_divergence,
    logical_entropy_dist,
    logical_entropy_partition,
    logical_mutual_joint,
    logical_mutual_partition,
    mixing_entropy,
)
from .partitions import (
    PairRelation,
    Partition,
    Universe,
    bell_number,
    dit_set,
    enumerate_partitions,
    implication,
    indit_set,
    interior,
    join,
    meet,
    mutual_dit_set,
    mutual_dit_set_blockform,
    partition_from_equivalence,
    refines,
    rst_closure,
)
from .rng import SplitMix64
from .shannon import (
    bit_to_dit,
    dit_bit_transform,
    dit_to_bit,
    kl_divergence,
    shannon_conditional_joint,
    shannon_cross_entropy,
    shannon_entropy_dist,
    shannon_entropy_partition,
    shannon_hartley,
    shannon_mutual_joint,
    shannon_mutual_partition,
    stirling_entropy,
    symmetrized_kl_divergence,
)

RESIDUAL_BOUND = 1e-12


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: int
    failures: int
    worst_residual: float

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.checks > 0


class _Tally:
    def __init__(self, name: str) -> None:
        self.name = name
        self.checks = 0
        self.failures = 0
        self.worst = 0.0

    def exact(self, ok: bool) -> None:
        self.checks += 1
        if not ok:
            self.failures += 1

    def residual(self, value: float, bound: float = RESIDUAL_BOUND) -> None:
        value = abs(float(value))
        self.checks += 1
        self.worst = max(self.worst, value)
        if not value <= bound:
            self.failures += 1

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.checks, self.failures, self.worst)


# ----------------------------------------------------------------------
# seeded random inputs
# ----------------------------------------------------------------------


def random_distribution(gen: SplitMix64, n: int, floor: float = 0.05) -> Distribution:
    """A random vector with components bounded away from zero, normalized."""
    raw = [floor + (1.0 - floor) * gen.next_unit() for _ in range(n)]
    total = sum(raw)
    return Distribution(tuple(v / total for v in raw))


def random_joint(
    gen: SplitMix64, nx: int, ny: int, zero_rate: float = 0.0
) -> JointDistribution:
    """A random joint matrix, optionally with some cells forced to exact zero."""
    while True:
        rows = [
            [0.05 + 0.95 * gen.next_unit() for _ in range(ny)] for _ in range(nx)
        ]
        if zero_rate > 0.0:
            for i in range(nx):
                for j in range(ny):
                    if gen.next_unit() <= zero_rate:
                        rows[i][j] = 0.0
        total = sum(v for r in rows for v in r)
        if total > 0:
            return JointDistribution(tuple(tuple(v / total for v in r) for r in rows))


# ----------------------------------------------------------------------
# exhaustive partition-pair suites
# ----------------------------------------------------------------------


def run_lattice_suites(max_n: int) -> list[SuiteResult]:
    """Exact set identities over every ordered partition pair for n <= max_n."""
    relation_laws = _Tally("dit_indit_partition_relation_laws")
    roundtrip = _Tally("equivalence_roundtrip")
    join_union = _Tally("join_dit_union")
    meet_interior = _Tally("meet_dit_interior_of_intersection")
    meet_closure = _Tally("meet_equals_closure_of_indit_union")
    impl_formula = _Tally("implication_discretize_equals_interior_formula")
    refine_equiv = _Tally("refines_iff_dit_subset_iff_implication_discrete")
    mut_structure = _Tally("mutual_dit_structure_theorem")
    mut_nonempty = _Tally("nonempty_dit_sets_intersect")
    contrapositive = _Tally("covering_indit_union_forces_indiscrete")

    for n in range(1, max_n + 1):
        parts = list(enumerate_partitions(n))
        full = PairRelation.full(n)
        discrete = parts[-1]
        dits = [dit_set(p) for p in parts]
        indits = [indit_set(p) for p in parts]

        for p, d, e in zip(parts, dits, indits):
            relation_laws.exact(
                d.is_irreflexive()
                and d.is_symmetric()
                and d.is_anti_transitive()
                and d.is_partition_relation
                and e.is_equivalence()
                and (d.bits | e.bits) == full.bits
                and (d.bits & e.bits) == 0
            )
            roundtrip.exact(partition_from_equivalence(e) == p)

        for i, p in enumerate(parts):
            for j, s in enumerate(parts):
                joined = join(p, s)
                join_union.exact(dit_set(joined).bits == (dits[i].bits | dits[j].bits))

                met = meet(p, s)
                interior_bits = interior(dits[i] & dits[j]).bits
                meet_interior.exact(dit_set(met).bits == interior_bits)
                meet_closure.exact(
                    met == partition_from_equivalence(rst_closure(indits[i] | indits[j]))
                )

                arrow = implication(s, p)
                formula_bits = interior(dits[j].complement() | dits[i]).bits
                impl_formula.exact(dit_set(arrow).bits == formula_bits)
                refine_equiv.exact(
                    refines(s, p)
                    == dits[j].issubset(dits[i])
                    == (implication(s, p) == discrete)
                )

                mut = mutual_dit_set(p, s)
                mut_structure.exact(mut.bits == mutual_dit_set_blockform(p, s).bits)
                if not dits[i].is_empty and not dits[j].is_empty:
                    mut_nonempty.exact(not mut.is_empty)
                if (indits[i].bits | indits[j].bits) == full.bits:
                    contrapositive.exact(p.is_indiscrete or s.is_indiscrete)

    return [
        t.result()
        for t in (
            relation_laws,
            roundtrip,
            join_union,
            meet_interior,
            meet_closure,
            impl_formula,
            refine_equiv,
            mut_structure,
            mut_nonempty,
            contrapositive,
        )
    ]


def run_closure_operator_suite(max_n: int = 4, seed: int = 2024, samples: int = 400) -> list[SuiteResult]:
    """Closure/interior operator laws on random and dit-derived relations."""
    closure_laws = _Tally("rst_closure_idempotent_extensive_monotone")
    interior_laws = _Tally("interior_idempotent_intensive_monotone")
    gen = SplitMix64(seed)
    for n in range(1, max_n + 1):
        universe = Universe(n)
        mask = (1 << (n * n)) - 1
        relations = [dit_set(p) for p in enumerate_partitions(n)]
        if n <= 3:
            relations.extend(PairRelation(universe, b) for b in range(mask + 1))
        else:
            relations.extend(
                PairRelation(universe, gen.next_uint64() & mask) for _ in range(samples)
            )
        for rel in relations:
            closed = rst_closure(rel)
            closure_laws.exact(
                rel.issubset(closed)
                and rst_closure(closed).bits == closed.bits
                and closed.is_equivalence()
            )
            opened = interior(rel)
            interior_laws.exact(
                opened.issubset(rel)
                and interior(opened).bits == opened.bits
                and opened.is_partition_relation
            )
            bigger = rel | PairRelation(universe, gen.next_uint64() & mask)
            closure_laws.exact(closed.issubset(rst_closure(bigger)))
            interior_laws.exact(opened.issubset(interior(bigger)))
    return [closure_laws.result(), interior_laws.result()]


def run_measure_suites(max_n: int) -> list[SuiteResult]:
    """Exact rational measure identities, uniform weights, all pairs, n <= max_n."""
    inclusion_exclusion = _Tally("mutual_equals_inclusion_exclusion")
    conditional = _Tally("conditional_equals_join_minus_given")
    submodular = _Tally("meet_measure_submodular")
    identification = _Tally("identification_vs_mutual_identity")
    entropy_forms = _Tally("partition_entropy_block_form")

    for n in range(2, max_n + 1):
        weights = Distribution.uniform_exact(n)
        parts = list(enumerate_partitions(n))
        entropies = [logical_entropy_partition(p, weights) for p in parts]

        for p, h in zip(parts, entropies):
            block_form = 1 - sum(Fraction(len(b), n) ** 2 for b in p.blocks)
            counting = Fraction(len(dit_set(p)), n * n)
            entropy_forms.exact(h == block_form == counting)

        for i, p in enumerate(parts):
            for j, s in enumerate(parts):
                h_p, h_s = entropies[i], entropies[j]
                h_join = logical_entropy_partition(join(p, s), weights)
                h_meet = logical_entropy_partition(meet(p, s), weights)
                m = logical_mutual_partition(p, s, weights)
                cond = logical_conditional_partition(p, s, weights)
                inclusion_exclusion.exact(m == h_p + h_s - h_join)
                conditional.exact(cond == h_join - h_s)
                submodular.exact(h_meet <= h_p + h_s - h_join)
                identification.exact(
                    (1 - h_join) - (1 - h_p) * (1 - h_s) == m - h_p * h_s
                )

    return [
        t.result()
        for t in (entropy_forms, inclusion_exclusion, conditional, submodular, identification)
    ]


# ----------------------------------------------------------------------
# independence on product universes
# ----------------------------------------------------------------------


def _lift_rows(p: Partition, ny: int) -> Partition:
    """Lift a partition of X to X x Y (index x*ny + y) by block rows."""
    n = p.universe.size * ny
    blocks = tuple(
        tuple(sorted(x * ny + y for x in block for y in range(ny)))
        for block in p.blocks
    )
    return Partition(Universe(n), tuple(sorted(blocks, key=lambda b: b[0])))


def _lift_cols(p: Partition, nx: int) -> Partition:
    """Lift a partition of Y to X x Y by block columns."""
    ny = p.universe.size
    n = nx * ny
    blocks = tuple(
        tuple(sorted(x * ny + y for y in block for x in range(nx)))
        for block in p.blocks
    )
    return Partition(Universe(n), tuple(sorted(blocks, key=lambda b: b[0])))


def run_independence_suite(sizes: tuple[int, ...] = (2, 3, 4)) -> list[SuiteResult]:
    """Stochastically independent partition pairs on product universes.

    Any partition of X lifted by rows is independent of any partition of Y
    lifted by columns under uniform weights, so the multiplicative laws must
    hold exactly on the rational path and the Shannon mutual information must
    vanish.
    """
    multiplicative = _Tally("independent_mutual_is_product")
    identification = _Tally("independent_identification_multiplies")
    shannon_zero = _Tally("independent_shannon_mutual_zero")
    shannon_additive = _Tally("independent_shannon_join_additive")

    for nx in sizes:
        for ny in sizes:
            weights = Distribution.uniform_exact(nx * ny)
            lifted_x = [_lift_rows(p, ny) for p in enumerate_partitions(nx)]
            lifted_y = [_lift_cols(p, nx) for p in enumerate_partitions(ny)]
            hx = [logical_entropy_partition(p, weights) for p in lifted_x]
            hy = [logical_entropy_partition(p, weights) for p in lifted_y]
            for p, h_p in zip(lifted_x, hx):
                for s, h_s in zip(lifted_y, hy):
                    m = logical_mutual_partition(p, s, weights)
                    h_join = logical_entropy_partition(join(p, s), weights)
                    multiplicative.exact(m == h_p * h_s)
                    identification.exact((1 - h_p) * (1 - h_s) == 1 - h_join)
                    shannon_zero.residual(shannon_mutual_partition(p, s))
                    shannon_additive.residual(
                        shannon_entropy_partition(join(p, s))
                        - shannon_entropy_partition(p)
                        - shannon_entropy_partition(s)
                    )

    return [
        t.result()
        for t in (multiplicative, identification, shannon_zero, shannon_additive)
    ]


# ----------------------------------------------------------------------
# randomized distribution and joint suites
# ----------------------------------------------------------------------


def run_divergence_suite(seed: int = 2024, pairs: int = 10_000) -> list[SuiteResult]:
    """Divergence positivity, the Jensen difference, and the mixing chain."""
    nonneg = _Tally("divergences_nonnegative_zero_iff_equal")
    jensen = _Tally("logical_divergence_jensen_difference")
    mixing = _Tally("mixing_identity_and_chain")
    cross_sym = _Tally("logical_cross_entropy_symmetric")

    gen = SplitMix64(seed)
    for k in range(pairs):
        n = 2 + gen.next_uint64() % 7
        p = random_distribution(gen, int(n))
        q = p if k % 10 == 0 else random_distribution(gen, int(n))
        d = logical_divergence(p, q)
        kl = kl_divergence(p, q)
        if q is p:
            nonneg.exact(d == 0 and kl == 0)
        else:
            nonneg.exact(d > 0 and kl > 0)
        h_p, h_q = logical_entropy_dist(p), logical_entropy_dist(q)
        cross = logical_cross_entropy(p, q)
        jensen.residual(d - (cross - (h_p + h_q) / 2))
        cross_sym.residual(cross - logical_cross_entropy(q, p))
        report = mixing_entropy(p, q)
        mixing.residual(report.h_mix - report.cross / 2 - report.mean_h / 2)
        mixing.exact(
            report.cross >= report.h_mix - RESIDUAL_BOUND
            and report.h_mix >= report.mean_h - RESIDUAL_BOUND
        )

    return [t.result() for t in (nonneg, jensen, mixing, cross_sym)]


def _brute_force_conditional(joint: JointDistribution) -> float:
    """Product measure of pairs differing in x but matching in y, by double sum."""
    cells = list(joint.cells())
    return math.fsum(
        float(p1) * float(p2)
        for i1, j1, p1 in cells
        for i2, j2, p2 in cells
        if i1 != i2 and j1 == j2
    )


def _brute_force_mutual(joint: JointDistribution) -> float:
    cells = list(joint.cells())
    return math.fsum(
        float(p1) * float(p2)
        for i1, j1, p1 in cells
        for i2, j2, p2 in cells
        if i1 != i2 and j1 != j2
    )


def run_joint_suites(seed: int = 2024, count: int = 400) -> list[SuiteResult]:
    """Venn identities on random joint distributions, logical and Shannon."""
    venn_logical = _Tally("joint_logical_venn_identities")
    venn_shannon = _Tally("joint_shannon_venn_identities")
    kl_form = _Tally("shannon_mutual_equals_kl_to_product")
    pair_space = _Tally("conditional_and_mutual_as_pair_space_measures")
    product_case = _Tally("product_joint_independence_laws")

    gen = SplitMix64(seed)
    for k in range(count):
        nx = 2 + int(gen.next_uint64() % 3)
        ny = 2 + int(gen.next_uint64() % 3)
        joint = random_joint(gen, nx, ny, zero_rate=0.15 if k % 3 == 0 else 0.0)
        hx = logical_entropy_dist(Distribution(joint.marginal_x))
        hy = logical_entropy_dist(Distribution(joint.marginal_y))
        hxy = joint_logical_entropy(joint)
        m = logical_mutual_joint(joint)
        cxy = logical_conditional_joint(joint, "y")
        cyx = logical_conditional_joint(joint, "x")
        venn_logical.residual(cxy - (hxy - hy))
        venn_logical.residual(cyx - (hxy - hx))
        venn_logical.residual(m - (hx + hy - hxy))
        venn_logical.residual((1 - hxy) - (1 - hx) * (1 - hy) - (m - hx * hy))

        capital_hx = shannon_entropy_dist(Distribution(joint.marginal_x))
        capital_hy = shannon_entropy_dist(Distribution(joint.marginal_y))
        capital_hxy = shannon_entropy_dist(joint.flatten())
        mutual = shannon_mutual_joint(joint)
        venn_shannon.residual(
            shannon_conditional_joint(joint, "y") - (capital_hxy - capital_hy)
        )
        venn_shannon.residual(
            shannon_conditional_joint(joint, "x") - (capital_hxy - capital_hx)
        )
        venn_shannon.residual(mutual - (capital_hx + capital_hy - capital_hxy))
        venn_shannon.exact(mutual >= -RESIDUAL_BOUND)
        kl_form.residual(
            mutual
            - kl_divergence(joint.flatten(), joint.product_of_marginals().flatten())
        )

        if k < 100:
            pair_space.residual(cxy - _brute_force_conditional(joint))
            pair_space.residual(m - _brute_force_mutual(joint))

        px = random_distribution(gen, nx)
        py = random_distribution(gen, ny)
        product = JointDistribution.outer(px, py)
        product_case.residual(shannon_mutual_joint(product))
        product_case.residual(
            logical_mutual_joint(product)
            - logical_entropy_dist(px) * logical_entropy_dist(py)
        )
        product_case.residual(product.independence_residual(), bound=1e-15)

    return [
        t.result() for t in (venn_logical, venn_shannon, kl_form, pair_space, product_case)
    ]


def run_dit_bit_suite(seed: int = 2024, grid: int = 1000, cases: int = 1000) -> list[SuiteResult]:
    """Round trips of the conversion formulas and the compound transforms."""
    roundtrip = _Tally("dit_bit_roundtrip")
    equiprobable = _Tally("equiprobable_set_conversions")
    transforms = _Tally("compound_transforms_match_direct")

    for i in range(grid):
        h0 = 0.999 * i / (grid - 1)
        roundtrip.residual(bit_to_dit(dit_to_bit(h0)) - h0)
    for k in range(2, 65):
        p0 = 1.0 / k
        equiprobable.residual(dit_to_bit(1.0 - p0) - shannon_hartley(p0))
        equiprobable.residual(bit_to_dit(shannon_hartley(p0)) - (1.0 - p0))

    gen = SplitMix64(seed)
    for _ in range(cases):
        n = 2 + int(gen.next_uint64() % 7)
        p = random_distribution(gen, n)
        q = random_distribution(gen, n)
        transforms.residual(dit_bit_transform("entropy", p) - shannon_entropy_dist(p))
        transforms.residual(
            dit_bit_transform("cross", p, q) - shannon_cross_entropy(p, q)
        )
        transforms.residual(
            dit_bit_transform("divergence", p, q) - symmetrized_kl_divergence(p, q)
        )
        nx = 2 + int(gen.next_uint64() % 3)
        ny = 2 + int(gen.next_uint64() % 3)
        joint = random_joint(gen, nx, ny)
        transforms.residual(
            dit_bit_transform("conditional", joint, "y")
            - shannon_conditional_joint(joint, "y")
        )
        transforms.residual(dit_bit_transform("mutual", joint) - shannon_mutual_joint(joint))

    return [t.result() for t in (roundtrip, equiprobable, transforms)]


def run_stirling_suite() -> list[SuiteResult]:
    """Three-term Stirling beats two-term, and both errors shrink with N."""
    anchor = _Tally("stirling_exact_matches_log_factorials")
    sharper = _Tally("three_term_beats_two_term")
    decay = _Tally("errors_decrease_with_scale")

    report = stirling_entropy([6, 6])
    anchor.residual(report.s_exact - math.log(924) / 12)

    errors2, errors3 = [], []
    for total in (100, 1000, 10_000):
        rep = stirling_entropy([total // 4] * 4)
        sharper.exact(rep.err3 < rep.err2)
        errors2.append(rep.err2)
        errors3.append(rep.err3)
    decay.exact(errors2[0] > errors2[1] > errors2[2])
    decay.exact(errors3[0] > errors3[1] > errors3[2])

    return [t.result() for t in (anchor, sharper, decay)]


def run_all(max_n: int = 5, seed: int = 2024) -> list[SuiteResult]:
    results: list[SuiteResult] = []
    results.extend(run_lattice_suites(max_n))
    results.extend(run_closure_operator_suite(min(max_n, 4), seed))
    results.extend(run_measure_suites(max_n))
    results.extend(run_independence_suite())
    results.extend(run_divergence_suite(seed))
    results.extend(run_joint_suites(seed))
    results.extend(run_dit_bit_suite(seed))
    results.extend(run_stirling_suite())
    return results


def expected_pair_count(max_n: int) -> int:
    """Ordered partition pairs swept by the exhaustive suites."""
    return sum(bell_number(n) ** 2 for n in range(1, max_n + 1))
