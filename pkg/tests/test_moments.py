from fractions import Fraction
from math import factorial

import pytest

from neutral_sampler.combinatorics import (
    EMPTY,
    IntegerPartition,
    all_set_partitions,
    enumerate_partitions,
)
from neutral_sampler.moments import (
    esf_monomial_moment,
    mixed_power_sum_moment,
    power_sum_moment,
    rising_factorial,
)

THETA_GRID = [Fraction(1, 2), 1, 2, 4, 8, 16, 32]


def partitions_min2(max_n):
    for n in range(2, max_n + 1):
        for eta in enumerate_partitions(n):
            if eta.min_part >= 2:
                yield eta


class TestRisingFactorial:
    def test_one_to_the_fourth(self):
        assert rising_factorial(1, 4) == 24

    def test_empty_product(self):
        assert rising_factorial(Fraction(7, 3), 0) == 1

    def test_half(self):
        assert rising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)

    def test_negative_n(self):
        with pytest.raises(ValueError):
            rising_factorial(1, -1)


class TestEsfMonomialMoment:
    def test_pair_at_theta_one(self):
        assert esf_monomial_moment(IntegerPartition.of(2), 1) == Fraction(1, 2)

    @pytest.mark.parametrize("n", range(2, 7))
    @pytest.mark.parametrize("theta", [Fraction(1, 2), 1, 10])
    def test_single_block_formula(self, n, theta):
        theta = Fraction(theta)
        expected = factorial(n - 1) * theta / rising_factorial(theta, n)
        assert esf_monomial_moment(IntegerPartition.of(n), theta) == expected

    @pytest.mark.parametrize("theta", THETA_GRID)
    def test_single_sample(self, theta):
        assert esf_monomial_moment(IntegerPartition.of(1), theta) == 1

    def test_bad_theta(self):
        with pytest.raises(ValueError):
            esf_monomial_moment(IntegerPartition.of(2), 0)


class TestPowerSumMoment:
    @pytest.mark.parametrize("theta", THETA_GRID)
    def test_phi2(self, theta):
        theta = Fraction(theta)
        assert power_sum_moment(IntegerPartition.of(2), theta) == 1 / (1 + theta)

    def test_phi22_at_one(self):
        # (6 theta + theta^2)/theta_(4) at theta = 1.
        assert power_sum_moment(IntegerPartition.of(2, 2), 1) == Fraction(7, 24)

    def test_empty(self):
        assert power_sum_moment(EMPTY, Fraction(3, 2)) == 1

    def test_singleton_part_rejected(self):
        with pytest.raises(ValueError):
            power_sum_moment(IntegerPartition.of(2, 1), 1)

    @pytest.mark.parametrize("theta", [Fraction(1, 2), 1, 10])
    def test_set_partition_oracle(self, theta):
        # phi_eta = sum over coarsenings of monomial samplers, so the moment
        # must equal the termwise Ewens moments; |eta| <= 5.
        for eta in partitions_min2(5):
            expected = Fraction(0)
            for beta in all_set_partitions(eta.l):
                block = IntegerPartition.of(*beta.block_sums(eta.parts))
                expected += esf_monomial_moment(block, theta)
            assert power_sum_moment(eta, theta) == expected

    def test_in_unit_interval_and_decreasing_in_theta(self):
        for eta in partitions_min2(8):
            values = [power_sum_moment(eta, Fraction(t)) for t in THETA_GRID]
            assert all(0 < v <= 1 for v in values)
            assert all(a > b for a, b in zip(values, values[1:]))


class TestMixedPowerSumMoment:
    def test_pair_pair_at_one(self):
        p2 = IntegerPartition.of(2)
        assert mixed_power_sum_moment(p2, p2, 1) == Fraction(7, 24)

    @pytest.mark.parametrize("theta", THETA_GRID)
    def test_empty_reduces(self, theta):
        theta = Fraction(theta)
        got = mixed_power_sum_moment(IntegerPartition.of(2), EMPTY, theta)
        assert got == 1 / (1 + theta)

    def test_concatenation_identity(self):
        got = mixed_power_sum_moment(IntegerPartition.of(2), IntegerPartition.of(3), 1)
        assert got == power_sum_moment(IntegerPartition.of(3, 2), 1)

    @pytest.mark.parametrize("theta", [Fraction(1, 2), 1, 10])
    def test_symmetry(self, theta):
        etas = list(partitions_min2(4))
        for a in etas:
            for b in etas:
                assert mixed_power_sum_moment(a, b, theta) == \
                    mixed_power_sum_moment(b, a, theta)
