"""Batch verification suites: every algebraic identity the library rests on,
checked in exact arithmetic.  Used by the CLI `verify` subcommand."""

from __future__ import annotations

import random
from fractions import Fraction

from .asymptotics import rate_function
from .basis import build_basis, inner_product
from .combinatorics import IntegerPartition, enumerate_partitions
from .sampling import (
    FrequencyVector,
    consistency_check,
    monomial_sampler_bruteforce,
    monomial_sampler_expansion,
    random_frequency_vector,
    sampling_probability,
)


def orthogonality_suite(max_size: int = 6, thetas=(Fraction(1, 2), 1, 10)):
    for theta in thetas:
        basis = build_basis(max_size, Fraction(theta))
        for i, a in enumerate(basis):
            for b in basis[i + 1:]:
                ip = inner_product(a.coeffs, b.coeffs, Fraction(theta))
                yield (
                    "orthogonality <psi_%s, psi_%s> theta=%s" % (a.label, b.label, theta),
                    ip == 0,
                    str(ip),
                )


def oracle_suite(max_n: int = 6, seed: int = 20260824, vectors: int = 20):
    rng = random.Random(seed)
    xs = [random_frequency_vector(rng, max_atoms=8) for _ in range(vectors)]
    for n in range(1, max_n + 1):
        for eta in enumerate_partitions(n):
            for j, x in enumerate(xs):
                lhs = monomial_sampler_expansion(eta, x)
                rhs = monomial_sampler_bruteforce(eta, x)
                yield (
                    "oracle eta=%s vector#%d" % (eta, j),
                    lhs == rhs,
                    "%s vs %s" % (lhs, rhs),
                )


def normalization_suite(max_n: int = 6, seed: int = 20260824):
    rng = random.Random(seed)
    xs = [
        FrequencyVector.parse("1/2,1/3,1/6"),
        random_frequency_vector(rng, max_atoms=6),
        random_frequency_vector(rng, max_atoms=6, with_dust=True),
        FrequencyVector(()),  # pure dust
    ]
    for n in range(1, max_n + 1):
        for x in xs:
            total = sum(
                (sampling_probability(eta, x) for eta in enumerate_partitions(n)),
                Fraction(0),
            )
            yield (
                "normalization n=%d x=(%s) dust=%s" % (n, x, x.dust),
                total == 1,
                str(total),
            )


def consistency_suite(max_n: int = 6, seed: int = 20260824):
    rng = random.Random(seed)
    xs = [random_frequency_vector(rng, max_atoms=6) for _ in range(4)]
    xs.append(random_frequency_vector(rng, max_atoms=6, with_dust=True))
    for n in range(2, max_n + 1):
        for j, x in enumerate(xs):
            ok, residuals = consistency_check(n, x)
            worst = max(abs(r) for r in residuals.values())
            yield ("consistency n=%d vector#%d" % (n, j), ok, "max residual %s" % worst)


def rate_function_suite(max_n: int = 8,
                        ks=(Fraction(1, 4), Fraction(1, 2), 1, Fraction(3, 2), Fraction(7, 4))):
    for n in range(2, max_n + 1):
        for eta in enumerate_partitions(n):
            for k in ks:
                k = Fraction(k)
                got = rate_function(n, eta, k).value
                if eta.alpha_1 == eta.l:
                    want = Fraction(0)
                else:
                    want = min(Fraction(n - eta.alpha_1) * k / 2, Fraction(n - eta.l))
                yield (
                    "rate-function n=%d eta=(%s) k=%s" % (n, eta, k),
                    got == want,
                    "%s vs min-form %s" % (got, want),
                )
            # Exact branch agreement at the transition k (where one exists).
            if eta.alpha_1 < eta.l and eta.n > eta.l:
                density = Fraction(n - eta.alpha_1, eta.l - eta.alpha_1)
                k_star = 2 - Fraction(2, 1) / density
                if 0 < k_star < 2:
                    kinked = Fraction(n - eta.alpha_1) * k_star / 2
                    flat = Fraction(n - eta.l)
                    yield (
                        "rate-function boundary eta=(%s) k*=%s" % (eta, k_star),
                        kinked == flat == rate_function(n, eta, k_star).value,
                        "%s vs %s" % (kinked, flat),
                    )


SUITES = {
    "orthogonality": orthogonality_suite,
    "oracle": oracle_suite,
    "normalization": normalization_suite,
    "consistency": consistency_suite,
    "rate-function": rate_function_suite,
}


def run_suite(name: str, **kwargs):
    """Yield (label, ok, detail) rows for one suite or, with "all", every suite."""
    if name == "all":
        for suite in SUITES.values():
            yield from suite()
        return
    if name not in SUITES:
        raise KeyError("unknown suite %r; choose from %s or 'all'"
                       % (name, sorted(SUITES)))
    yield from SUITES[name](**kwargs)
