"""Finite spectral evaluation of transient moments and sampling probabilities.

Every phi-monomial lies in the span of finitely many eigenfunctions of the
neutral diffusion, so no series truncation happens: expectations are exact
rational eigen-coefficients combined with e^{-lambda t} factors at a
configurable (default 256-bit) float precision.  t = inf is a sentinel that
drops all exponential terms and returns the exact stationary value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from .basis import build_basis, evaluate_coeff_map, inner_product
from .combinatorics import EMPTY, IntegerPartition, multinomial_constant
from .moments import check_theta, esf_monomial_moment, power_sum_moment
from .sampling import FrequencyVector, expansion_of_monomial_sampler

DEFAULT_PRECISION_BITS = 256

#: Sentinel accepted wherever a time is expected: drop all exponentials.
STATIONARY = math.inf


class BasisNotBuiltError(RuntimeError):
    """A moment was requested beyond the size the evaluator was built for."""


def eigenvalue(m: int, theta) -> Fraction:
    """lambda_m = m (m - 1 + theta) / 2 for m >= 2."""
    if m < 2:
        raise ValueError("the spectral expansion starts at m = 2, got %r" % (m,))
    theta = check_theta(theta)
    return Fraction(m) * (m - 1 + theta) / 2


@dataclass(frozen=True)
class TimePoint:
    """A nonnegative time (or the stationary sentinel) with its theta."""

    t: object
    theta: Fraction
    precision_bits: int = DEFAULT_PRECISION_BITS

    def __post_init__(self):
        object.__setattr__(self, "theta", check_theta(self.theta))
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be >= 64")
        if not self.is_stationary and mpmath.mpf(self.t) < 0:
            raise ValueError("t must be >= 0, got %r" % (self.t,))

    @property
    def is_stationary(self) -> bool:
        return isinstance(self.t, float) and math.isinf(self.t)


def _to_mpf(q) -> mpmath.mpf:
    if isinstance(q, Fraction):
        return mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator)
    return mpmath.mpf(q)


class SpectralEvaluator:
    """Moments E_x phi_omega(X_t) and transient sampling probabilities,
    sharing one exact basis per (theta, max_size)."""

    def __init__(self, theta, max_size: int,
                 precision_bits: int = DEFAULT_PRECISION_BITS):
        self.theta = check_theta(theta)
        self.max_size = max_size
        self.precision_bits = precision_bits
        self.basis = build_basis(max(2, max_size), self.theta)
        self._eigencoeff_cache: dict = {}

    # -- exact layer ---------------------------------------------------

    def _check_size(self, size: int):
        if size > self.max_size:
            raise BasisNotBuiltError(
                "basis built to size %d, needed %d" % (self.max_size, size)
            )

    def eigen_coefficients(
        self, f: tuple[tuple[IntegerPartition, Fraction], ...], x: FrequencyVector
    ) -> dict[int, Fraction]:
        """Group f = sum c_xi psi_xi by eigenvalue index: returns {m: C_m}
        with C_0 the stationary part, such that
        E_x f(X_t) = C_0 + sum_m C_m e^{-lambda_m t}."""
        fmap = {k: v for k, v in f}
        out: dict[int, Fraction] = {}
        for psi in self.basis:
            c = inner_product(fmap, psi.coeffs, self.theta) / psi.norm2
            if c == 0:
                continue
            m = psi.label.n
            value = c if m == 0 else c * evaluate_coeff_map(psi.coeffs, x)
            out[m] = out.get(m, Fraction(0)) + value
        return {m: v for m, v in out.items() if v != 0}

    def _moment_eigencoeffs(self, omega: IntegerPartition, x: FrequencyVector):
        key = ("phi", omega, x)
        if key not in self._eigencoeff_cache:
            self._check_size(omega.n)
            if omega != EMPTY and omega.min_part < 2:
                raise ValueError("moment needs parts >= 2, got %s" % (omega,))
            self._eigencoeff_cache[key] = self.eigen_coefficients(
                ((omega, Fraction(1)),), x
            )
        return self._eigencoeff_cache[key]

    def _sampler_eigencoeffs(self, eta: IntegerPartition, x: FrequencyVector):
        key = ("p", eta, x)
        if key not in self._eigencoeff_cache:
            self._check_size(eta.n)
            expansion = expansion_of_monomial_sampler(eta)
            coeffs = self.eigen_coefficients(expansion, x)
            const = multinomial_constant(eta)
            self._eigencoeff_cache[key] = {
                m: const * v for m, v in coeffs.items()
            }
        return self._eigencoeff_cache[key]

    # -- combination with exponentials ---------------------------------

    def _combine(self, eigen: dict[int, Fraction], t) -> mpmath.mpf:
        with mpmath.workprec(self.precision_bits):
            tval = _to_mpf(t)
            total = mpmath.mpf(0)
            for m, c in sorted(eigen.items()):
                term = _to_mpf(c)
                if m >= 2:
                    term *= mpmath.exp(-_to_mpf(eigenvalue(m, self.theta)) * tval)
                total += term
            return total

    # -- public surface ------------------------------------------------

    def moment(self, omega: IntegerPartition, x: FrequencyVector, t):
        """E_x phi_omega(X_t); exact Fraction for the stationary sentinel."""
        if isinstance(t, float) and math.isinf(t):
            return self.stationary_moment(omega)
        return self._combine(self._moment_eigencoeffs(omega, x), t)

    def stationary_moment(self, omega: IntegerPartition) -> Fraction:
        self._check_size(omega.n)
        return power_sum_moment(omega, self.theta)

    def moment_exact_t0(self, omega: IntegerPartition, x: FrequencyVector) -> Fraction:
        self._check_size(omega.n)
        return sum(self._moment_eigencoeffs(omega, x).values(), Fraction(0))

    def sampling_probability(self, eta: IntegerPartition, x: FrequencyVector, t):
        """P_n^theta(eta) = E_x p_eta(X_t); exact ESF value at the sentinel."""
        if isinstance(t, float) and math.isinf(t):
            return self.stationary_sampling_probability(eta)
        return self._combine(self._sampler_eigencoeffs(eta, x), t)

    def stationary_sampling_probability(self, eta: IntegerPartition) -> Fraction:
        """The Ewens sampling formula value, exactly."""
        self._check_size(eta.n)
        return multinomial_constant(eta) * esf_monomial_moment(eta, self.theta)


@lru_cache(maxsize=32)
def get_evaluator(theta, max_size: int,
                  precision_bits: int = DEFAULT_PRECISION_BITS) -> SpectralEvaluator:
    return SpectralEvaluator(theta, max_size, precision_bits)


def transient_moment(omega: IntegerPartition, x: FrequencyVector, tp: TimePoint):
    ev = get_evaluator(tp.theta, max(2, omega.n), tp.precision_bits)
    return ev.moment(omega, x, tp.t)


def transient_sampling_probability(eta: IntegerPartition, x: FrequencyVector,
                                   tp: TimePoint):
    ev = get_evaluator(tp.theta, max(2, eta.n), tp.precision_bits)
    return ev.sampling_probability(eta, x, tp.t)
