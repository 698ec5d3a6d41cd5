import math
from fractions import Fraction

import mpmath
import pytest

from neutral_sampler.combinatorics import IntegerPartition, enumerate_partitions
from neutral_sampler.moments import esf_monomial_moment, power_sum_moment
from neutral_sampler.sampling import FrequencyVector, power_sum_product, sampling_probability
from neutral_sampler.transient import (
    STATIONARY,
    BasisNotBuiltError,
    SpectralEvaluator,
    TimePoint,
    eigenvalue,
    transient_moment,
    transient_sampling_probability,
)

P2 = IntegerPartition.of(2)


class TestEigenvalue:
    def test_m2_theta1(self):
        assert eigenvalue(2, 1) == 2

    @pytest.mark.parametrize("theta", [Fraction(1, 2), 1, 10])
    def test_m2_simplifies(self, theta):
        assert eigenvalue(2, theta) == 1 + Fraction(theta)

    def test_m3_theta3(self):
        # 3 * (3 - 1 + 3) / 2
        assert eigenvalue(3, 3) == Fraction(15, 2)

    def test_below_two_rejected(self):
        with pytest.raises(ValueError):
            eigenvalue(1, 1)


class TestTimePoint:
    def test_negative_time_rejected(self):
        with pytest.raises(ValueError):
            TimePoint(-1, Fraction(1))

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            TimePoint(1, Fraction(1), precision_bits=32)

    def test_stationary_sentinel(self):
        assert TimePoint(STATIONARY, Fraction(1)).is_stationary


class TestTransientMoment:
    def test_closed_form_pair(self, x_point):
        # E phi_2 = 1/(1+theta) + e^{-(1+theta)t}(phi_2(x) - 1/(1+theta));
        # at theta=1, x a point mass, t = ln(2)/2 this is 1/2 + (1/2)(1/2).
        with mpmath.workprec(256):
            tp = TimePoint(mpmath.log(2) / 2, Fraction(1))
            got = transient_moment(P2, x_point, tp)
            assert abs(got - mpmath.mpf(3) / 4) < mpmath.mpf(2) ** -200

    @pytest.mark.parametrize("theta", [Fraction(1), Fraction(10)])
    def test_t0_identity_to_full_precision(self, theta, x_full):
        ev = SpectralEvaluator(theta, 6, 256)
        with mpmath.workprec(300):
            for n in range(2, 7):
                for omega in enumerate_partitions(n):
                    if omega.min_part < 2:
                        continue
                    exact = power_sum_product(omega, x_full)
                    assert ev.moment_exact_t0(omega, x_full) == exact
                    fl = ev.moment(omega, x_full, mpmath.mpf(0))
                    delta = abs(fl - mpmath.mpf(exact.numerator) / exact.denominator)
                    assert delta <= mpmath.mpf(2) ** -200

    def test_stationary_sentinel_is_exact(self, x_full):
        tp = TimePoint(STATIONARY, Fraction(10))
        got = transient_moment(IntegerPartition.of(2, 2), x_full, tp)
        assert got == power_sum_moment(IntegerPartition.of(2, 2), Fraction(10))

    def test_size_beyond_basis_rejected(self, x_full):
        ev = SpectralEvaluator(Fraction(1), 3)
        with pytest.raises(BasisNotBuiltError):
            ev.moment(IntegerPartition.of(2, 2), x_full, mpmath.mpf(1))


class TestTransientSampling:
    def test_pair_at_log2_over_2(self, x_point):
        with mpmath.workprec(256):
            tp = TimePoint(mpmath.log(2) / 2, Fraction(1))
            got = transient_sampling_probability(P2, x_point, tp)
            assert abs(got - mpmath.mpf(3) / 4) < mpmath.mpf(2) ** -200

    @pytest.mark.parametrize("theta", [Fraction(1), Fraction(10)])
    def test_t0_reproduces_sampling_probability(self, theta, x_full):
        ev = SpectralEvaluator(theta, 5, 256)
        with mpmath.workprec(300):
            for n in range(1, 6):
                for eta in enumerate_partitions(n):
                    exact = sampling_probability(eta, x_full)
                    fl = ev.sampling_probability(eta, x_full, mpmath.mpf(0))
                    delta = abs(fl - mpmath.mpf(exact.numerator) / exact.denominator)
                    assert delta <= mpmath.mpf(2) ** -200

    @pytest.mark.parametrize("theta", [Fraction(1), Fraction(10)])
    def test_stationary_is_ewens_exactly(self, theta, x_full):
        ev = SpectralEvaluator(theta, 5, 256)
        for n in range(1, 6):
            for eta in enumerate_partitions(n):
                esf = ev.stationary_sampling_probability(eta)
                assert esf == ev.sampling_probability(eta, x_full, STATIONARY)
                # Also: the spectral constant term must agree with the ESF.
                coeffs = ev._sampler_eigencoeffs(eta, x_full)
                assert coeffs.get(0, Fraction(0)) == esf

    @pytest.mark.parametrize("theta", [Fraction(1), Fraction(10)])
    def test_pair_stationary_value(self, theta, x_full):
        tp = TimePoint(STATIONARY, theta)
        assert transient_sampling_probability(P2, x_full, tp) == 1 / (1 + theta)

    @pytest.mark.parametrize("theta", [Fraction(1), Fraction(10)])
    @pytest.mark.parametrize("t", ["0.01", "0.1", "1", "10"])
    def test_normalization_in_time(self, theta, t, x_full):
        ev = SpectralEvaluator(theta, 5, 256)
        with mpmath.workprec(256):
            for n in range(1, 6):
                total = sum(ev.sampling_probability(eta, x_full, mpmath.mpf(t))
                            for eta in enumerate_partitions(n))
                assert abs(total - 1) < mpmath.mpf(2) ** -200

    @pytest.mark.parametrize("theta", [Fraction(50), Fraction(200)])
    def test_all_singletons_monotone_toward_stationary(self, theta, x_full):
        # Dust takes over: at large theta the all-singleton probability climbs.
        ev = SpectralEvaluator(theta, 4, 256)
        eta = IntegerPartition.of(1, 1, 1, 1)
        times = [mpmath.mpf(t) for t in ("0.01", "0.1", "1", "10")]
        values = [ev.sampling_probability(eta, x_full, t) for t in times]
        assert all(a <= b for a, b in zip(values, values[1:]))
        stat = ev.stationary_sampling_probability(eta)
        with mpmath.workprec(256):
            assert values[-1] <= mpmath.mpf(stat.numerator) / stat.denominator
