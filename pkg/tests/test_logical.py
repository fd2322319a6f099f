import itertools
from fractions import Fraction

import pytest

from logent.errors import (
    InvalidDistanceMatrixError,
    InvalidDistributionError,
    SizeMismatchError,
)
from logent.logical import (
    DistanceMatrix,
    Distribution,
    JointDistribution,
    identification_probability,
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
    product_measure,
    quadratic_entropy,
)
from logent.partitions import (
    PairRelation,
    discrete_partition,
    dit_set,
    enumerate_partitions,
    indiscrete_partition,
    join,
    make_partition,
    meet,
)

THIRDS = Distribution((Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)))


class TestDistribution:
    def test_rejects_negative(self):
        with pytest.raises(InvalidDistributionError, match="negative"):
            Distribution((0.5, -0.5, 1.0))

    def test_rejects_bad_total(self):
        with pytest.raises(InvalidDistributionError, match="sum"):
            Distribution((0.5, 0.6))

    def test_renormalizes_small_drift(self):
        d = Distribution((0.5, 0.5 + 1e-10))
        assert abs(sum(d.probs) - 1.0) < 1e-15

    def test_rejects_empty(self):
        with pytest.raises(InvalidDistributionError):
            Distribution(())

    def test_exactness_preserved(self):
        assert THIRDS.is_exact
        assert not Distribution.uniform(3).is_exact

    def test_zero_entries_kept(self):
        d = Distribution((0.5, 0.0, 0.5))
        assert len(d) == 3 and d[1] == 0.0

    def test_point_mass(self):
        d = Distribution.point_mass(4, 2)
        assert d.probs == (0, 0, 1, 0)


class TestJointDistribution:
    def test_marginals_are_computed_sums(self):
        j = JointDistribution(((0.25, 0.25), (0.5, 0.0)))
        assert j.marginal_x == (0.5, 0.5)
        assert j.marginal_y == (0.75, 0.25)

    def test_ragged_rejected(self):
        with pytest.raises(InvalidDistributionError, match="ragged"):
            JointDistribution(((0.5,), (0.25, 0.25)))

    def test_negative_rejected(self):
        with pytest.raises(InvalidDistributionError):
            JointDistribution(((1.5, -0.5),))

    def test_product_and_residual(self):
        j = JointDistribution.outer(Distribution((0.5, 0.5)), Distribution((0.25, 0.75)))
        assert j.independence_residual() == 0.0
        coupled = JointDistribution(((0.5, 0.0), (0.0, 0.5)))
        assert coupled.independence_residual() == 0.25


class TestPartitionEntropy:
    def test_discrete_on_three(self):
        assert logical_entropy_partition(discrete_partition(3)) == pytest.approx(2 / 3)

    def test_indiscrete_is_zero(self):
        assert logical_entropy_partition(indiscrete_partition(5)) == 0
        weights = Distribution((0.7, 0.1, 0.1, 0.05, 0.05))
        assert logical_entropy_partition(indiscrete_partition(5), weights) == 0

    def test_two_block_example(self):
        assert logical_entropy_partition(make_partition([{0, 1}, {2}], 3)) == pytest.approx(4 / 9)

    def test_equiprobable_bound(self):
        for n in range(2, 10):
            assert logical_entropy_partition(discrete_partition(n)) == pytest.approx(1 - 1 / n)

    def test_weighted_equals_block_sum(self):
        p = make_partition([{0, 1}, {2}], 3)
        w = Distribution((Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)))
        by_measure = logical_entropy_partition(p, w)
        p_blocks = [Fraction(3, 4), Fraction(1, 4)]
        assert by_measure == sum(pb * (1 - pb) for pb in p_blocks)

    def test_weight_length_mismatch(self):
        with pytest.raises(SizeMismatchError):
            logical_entropy_partition(discrete_partition(3), Distribution((0.5, 0.5)))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_unweighted_equals_uniform_product_measure(self, n):
        uniform = Distribution.uniform_exact(n)
        for p in enumerate_partitions(n):
            h = logical_entropy_partition(p)
            exact = product_measure(dit_set(p), uniform)
            block_form = 1 - sum(Fraction(len(b), n) ** 2 for b in p.blocks)
            assert exact == block_form
            assert h == pytest.approx(float(exact), abs=1e-12)


class TestDistributionEntropy:
    def test_uniform_four(self):
        assert logical_entropy_dist(Distribution.uniform(4)) == pytest.approx(0.75)

    def test_point_mass_zero(self):
        assert logical_entropy_dist(Distribution.point_mass(5)) == 0

    def test_halves_thirds_sixths(self):
        assert logical_entropy_dist(THIRDS) == Fraction(11, 18)

    def test_identification_probability_complement(self):
        assert identification_probability(THIRDS) == Fraction(7, 18)
        assert identification_probability(Distribution.uniform(8)) == pytest.approx(1 / 8)
        assert identification_probability(Distribution.point_mass(3)) == 1

    def test_bounds(self):
        for n in (2, 3, 7):
            h = logical_entropy_dist(Distribution.uniform(n))
            assert 0 <= h <= 1 - 1 / n + 1e-15


class TestProductMeasure:
    def test_total_measure_one(self):
        p = Distribution((0.2, 0.3, 0.5))
        assert product_measure(PairRelation.full(3), p) == pytest.approx(1.0)

    def test_diagonal_uniform(self):
        assert product_measure(
            PairRelation.diagonal(4), Distribution.uniform(4)
        ) == pytest.approx(0.25)

    def test_weighted_dit_example(self):
        rel = dit_set(make_partition([{0, 1}, {2}], 3))
        w = Distribution((Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)))
        assert product_measure(rel, w) == Fraction(3, 8)

    def test_additive_over_disjoint(self):
        p = Distribution((Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)))
        diag = PairRelation.diagonal(3)
        off = diag.complement()
        total = product_measure(diag, p) + product_measure(off, p)
        assert total == 1

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            product_measure(PairRelation.full(3), Distribution((0.5, 0.5)))


class TestConditionalAndMutualPartition:
    def test_self_conditional_zero(self):
        p = make_partition([{0, 1}, {2, 3}], 4)
        assert logical_conditional_partition(p, p) == 0

    def test_conditional_on_indiscrete(self):
        p = make_partition([{0, 1}, {2, 3}], 4)
        assert logical_conditional_partition(p, indiscrete_partition(4)) == pytest.approx(
            logical_entropy_partition(p)
        )

    def test_crossing_example(self):
        p = make_partition([{0, 1}, {2, 3}], 4)
        s = make_partition([{0, 2}, {1, 3}], 4)
        assert logical_conditional_partition(p, s) == pytest.approx(1 / 4)

    def test_mutual_examples(self):
        p = make_partition([{0, 1}, {2, 3}], 4)
        s = make_partition([{0, 2}, {1, 3}], 4)
        assert logical_mutual_partition(p, s) == pytest.approx(1 / 4)
        assert logical_mutual_partition(p, indiscrete_partition(4)) == 0
        assert logical_mutual_partition(
            discrete_partition(3), discrete_partition(3)
        ) == pytest.approx(2 / 3)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_venn_identities_exact(self, n):
        weights = Distribution.uniform_exact(n)
        parts = list(enumerate_partitions(n))
        for p, s in itertools.product(parts, parts):
            h_p = logical_entropy_partition(p, weights)
            h_s = logical_entropy_partition(s, weights)
            h_join = logical_entropy_partition(join(p, s), weights)
            h_meet = logical_entropy_partition(meet(p, s), weights)
            assert logical_conditional_partition(p, s, weights) == h_join - h_s
            m = logical_mutual_partition(p, s, weights)
            assert m == h_p + h_s - h_join
            assert h_meet <= h_p + h_s - h_join
            assert (1 - h_join) - (1 - h_p) * (1 - h_s) == m - h_p * h_s


class TestJointMeasures:
    def test_uniform_2x2(self):
        j = JointDistribution.uniform(2, 2)
        assert joint_logical_entropy(j) == pytest.approx(0.75)
        assert logical_conditional_joint(j, "y") == pytest.approx(0.25)
        assert logical_mutual_joint(j) == pytest.approx(0.25)

    def test_point_mass_cell(self):
        j = JointDistribution(((1.0, 0.0), (0.0, 0.0)))
        assert joint_logical_entropy(j) == 0
        assert logical_conditional_joint(j, "y") == 0
        assert logical_mutual_joint(j) == 0

    def test_identity_coupling(self):
        j = JointDistribution(((Fraction(1, 2), 0), (0, Fraction(1, 2))))
        assert joint_logical_entropy(j) == Fraction(1, 2)
        assert logical_conditional_joint(j, "y") == 0
        assert logical_mutual_joint(j) == Fraction(1, 2)

    def test_conditional_venn(self):
        j = JointDistribution(((0.25, 0.25), (0.5, 0.0)))
        hy = logical_entropy_dist(Distribution(j.marginal_y))
        hx = logical_entropy_dist(Distribution(j.marginal_x))
        hxy = joint_logical_entropy(j)
        assert logical_conditional_joint(j, "y") == pytest.approx(hxy - hy, abs=1e-12)
        assert logical_conditional_joint(j, "x") == pytest.approx(hxy - hx, abs=1e-12)

    def test_independent_product_multiplies(self):
        px = Distribution((Fraction(1, 2), Fraction(1, 2)))
        py = Distribution((Fraction(1, 4), Fraction(3, 4)))
        j = JointDistribution.outer(px, py)
        assert logical_mutual_joint(j) == logical_entropy_dist(px) * logical_entropy_dist(py)
        assert (1 - logical_entropy_dist(px)) * (1 - logical_entropy_dist(py)) == (
            1 - joint_logical_entropy(j)
        )

    def test_conditional_and_mutual_are_pair_space_measures(self):
        # not just averages: the double-sum product measure over (X x Y)^2
        # of the relevant pair set must give the same numbers
        j = JointDistribution(
            (
                (Fraction(1, 8), Fraction(1, 4), Fraction(1, 8)),
                (Fraction(1, 4), Fraction(0), Fraction(1, 4)),
            )
        )
        cells = list(j.cells())
        cond_oracle = sum(
            p1 * p2
            for i1, j1, p1 in cells
            for i2, j2, p2 in cells
            if i1 != i2 and j1 == j2
        )
        mut_oracle = sum(
            p1 * p2
            for i1, j1, p1 in cells
            for i2, j2, p2 in cells
            if i1 != i2 and j1 != j2
        )
        assert logical_conditional_joint(j, "y") == cond_oracle
        assert logical_mutual_joint(j) == mut_oracle


class TestCrossAndDivergence:
    def test_cross_of_self_is_entropy(self):
        p = Distribution((0.3, 0.7))
        assert logical_cross_entropy(p, p) == pytest.approx(logical_entropy_dist(p))

    def test_disjoint_supports(self):
        assert logical_cross_entropy(Distribution((1, 0)), Distribution((0, 1))) == 1

    def test_cross_example(self):
        p = Distribution((Fraction(1, 2), Fraction(1, 2)))
        q = Distribution((Fraction(1, 4), Fraction(3, 4)))
        assert logical_cross_entropy(p, q) == Fraction(1, 2)

    def test_divergence_zero_iff_equal(self):
        p = Distribution((0.3, 0.7))
        assert logical_divergence(p, p) == 0
        q = Distribution((0.31, 0.69))
        assert logical_divergence(p, q) > 0

    def test_divergence_examples(self):
        assert logical_divergence(Distribution((1, 0)), Distribution((0, 1))) == 1
        p = Distribution((Fraction(1, 2), Fraction(1, 2)))
        q = Distribution((Fraction(1, 4), Fraction(3, 4)))
        assert logical_divergence(p, q) == Fraction(1, 16)

    def test_jensen_identity_exact(self):
        p = Distribution((Fraction(1, 2), Fraction(1, 2)))
        q = Distribution((Fraction(1, 4), Fraction(3, 4)))
        jensen = logical_cross_entropy(p, q) - (
            logical_entropy_dist(p) + logical_entropy_dist(q)
        ) / 2
        assert logical_divergence(p, q) == jensen == Fraction(1, 16)

    def test_length_mismatch(self):
        with pytest.raises(SizeMismatchError):
            logical_cross_entropy(Distribution((1.0,)), Distribution((0.5, 0.5)))
        with pytest.raises(SizeMismatchError):
            logical_divergence(Distribution((1.0,)), Distribution((0.5, 0.5)))


class TestQuadraticEntropy:
    def test_logical_distance_recovers_entropy(self):
        p = THIRDS
        d = DistanceMatrix.logical(3)
        assert quadratic_entropy(p, d) == logical_entropy_dist(p)

    def test_zero_distances(self):
        d = DistanceMatrix(((0, 0), (0, 0)))
        assert quadratic_entropy(Distribution((0.5, 0.5)), d) == 0

    def test_scaled_distance(self):
        d = DistanceMatrix(((0, 3), (3, 0)))
        assert quadratic_entropy(Distribution((Fraction(1, 2), Fraction(1, 2))), d) == Fraction(3, 2)

    def test_invalid_matrices(self):
        with pytest.raises(InvalidDistanceMatrixError, match="diagonal"):
            DistanceMatrix(((1, 0), (0, 0)))
        with pytest.raises(InvalidDistanceMatrixError, match="asymmetric"):
            DistanceMatrix(((0, 1), (2, 0)))
        with pytest.raises(InvalidDistanceMatrixError, match="negative"):
            DistanceMatrix(((0, -1), (-1, 0)))

    def test_dimension_mismatch(self):
        with pytest.raises(SizeMismatchError):
            quadratic_entropy(Distribution((0.5, 0.5)), DistanceMatrix.logical(3))


class TestMixing:
    def test_degenerate(self):
        p = Distribution((0.3, 0.7))
        report = mixing_entropy(p, p)
        h = logical_entropy_dist(p)
        assert report.h_mix == pytest.approx(h)
        assert report.cross == pytest.approx(h)
        assert report.mean_h == pytest.approx(h)

    def test_disjoint(self):
        report = mixing_entropy(Distribution((1, 0)), Distribution((0, 1)))
        assert report.h_mix == Fraction(1, 2)
        assert report.cross == 1
        assert report.mean_h == 0

    def test_identity_example(self):
        p = Distribution((Fraction(1, 2), Fraction(1, 2)))
        q = Distribution((Fraction(1, 4), Fraction(3, 4)))
        report = mixing_entropy(p, q)
        assert report.h_mix == Fraction(15, 32)
        assert report.h_mix == report.cross / 2 + (report.mean_h * 2) / 4
        assert report.cross >= report.h_mix >= report.mean_h
