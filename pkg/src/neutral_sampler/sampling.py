"""Sampling probabilities p_eta(x) on the closed infinite simplex.

Two independent routes are kept side by side: a brute-force sum over tuples
of distinct atom indices (exponential, capped) and the alternating
set-partition expansion in power sums (the continuous extension, with the
phi_1 == 1 convention).  Singleton sample slots may draw from the dust mass
1 - sum(atoms); each dust draw is automatically a fresh type.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import (
    EMPTY,
    IntegerPartition,
    all_set_partitions,
    enumerate_partitions,
    multinomial_constant,
)

DEFAULT_MAX_N = 8
DEFAULT_MAX_ATOMS = 10


class CapExceededError(ValueError):
    """The brute-force oracle was asked for more than its configured caps."""


@dataclass(frozen=True)
class FrequencyVector:
    """Finitely many ranked atoms plus a dust mass making up total mass 1."""

    atoms: tuple[Fraction, ...]

    def __post_init__(self):
        atoms = tuple(Fraction(a) for a in self.atoms)
        # Trailing zero atoms carry no information.
        while atoms and atoms[-1] == 0:
            atoms = atoms[:-1]
        object.__setattr__(self, "atoms", atoms)
        if any(a < 0 or a > 1 for a in atoms):
            raise ValueError("atoms must lie in [0,1]: %r" % (atoms,))
        if any(atoms[i] < atoms[i + 1] for i in range(len(atoms) - 1)):
            raise ValueError("atoms must be nonincreasing: %r" % (atoms,))
        if sum(atoms) > 1:
            raise ValueError("atoms must sum to at most 1: %r" % (atoms,))

    @classmethod
    def of(cls, *atoms) -> "FrequencyVector":
        return cls(tuple(sorted((Fraction(a) for a in atoms), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "FrequencyVector":
        """Parse comma-separated rationals, e.g. "1/2,1/3,1/6"; "" is pure dust."""
        text = text.strip()
        if not text:
            return cls(())
        return cls.of(*(Fraction(tok) for tok in text.split(",")))

    @property
    def dust(self) -> Fraction:
        return 1 - sum(self.atoms, Fraction(0))

    def __str__(self):
        return ",".join(str(a) for a in self.atoms)

    def to_json(self) -> list[str]:
        return [str(a) for a in self.atoms]


def power_sum(k: int, x: FrequencyVector) -> Fraction:
    """phi_k(x) = sum_i atoms_i^k for k >= 2; phi_1 == 1 by convention."""
    if k < 1:
        raise ValueError("k must be >= 1, got %r" % (k,))
    if k == 1:
        return Fraction(1)
    return sum((a**k for a in x.atoms), Fraction(0))


def power_sum_product(eta: IntegerPartition, x: FrequencyVector) -> Fraction:
    """phi_eta(x) = prod_j phi_{eta_j}(x)."""
    out = Fraction(1)
    for p in eta.parts:
        out *= power_sum(p, x)
    return out


def monomial_sampler_bruteforce(
    eta: IntegerPartition,
    x: FrequencyVector,
    max_n: int = DEFAULT_MAX_N,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> Fraction:
    """p^o_eta(x) summed directly over tuples of distinct atom indices.

    Parts of size >= 2 must take distinct atoms; each singleton slot takes
    either an unused atom or the dust (reusable: continuous-spectrum draws
    are distinct types by themselves).  Exponential by design.
    """
    if eta.n > max_n:
        raise CapExceededError("|eta| = %d exceeds cap %d" % (eta.n, max_n))
    if len(x.atoms) > max_atoms:
        raise CapExceededError(
            "%d atoms exceed cap %d" % (len(x.atoms), max_atoms)
        )
    if eta == EMPTY:
        return Fraction(1)
    atoms = x.atoms
    dust = x.dust
    parts = eta.parts  # nonincreasing, so singleton slots come last

    def walk(slot: int, used: int) -> Fraction:
        if slot == len(parts):
            return Fraction(1)
        p = parts[slot]
        total = Fraction(0)
        for i, a in enumerate(atoms):
            if used >> i & 1:
                continue
            if a == 0:
                continue
            total += a**p * walk(slot + 1, used | (1 << i))
        if p == 1 and dust > 0:
            total += dust * walk(slot + 1, used)
        return total

    return walk(0, 0)


@lru_cache(maxsize=None)
def expansion_of_monomial_sampler(eta: IntegerPartition) -> tuple[tuple[IntegerPartition, Fraction], ...]:
    """Expansion of p^o_eta over power-sum monomials phi_xi.

    Returns (xi, coefficient) pairs where xi has all parts >= 2 or is empty;
    block sums equal to 1 are dropped because phi_1 == 1.
    """
    if eta == EMPTY:
        return ((EMPTY, Fraction(1)),)
    coeffs: dict[IntegerPartition, Fraction] = {}
    l = eta.l
    for beta in all_set_partitions(l):
        weight = Fraction((-1) ** (l - beta.d))
        for b in beta.blocks:
            weight *= factorial(len(b) - 1)
        sums = beta.block_sums(eta.parts)
        key = IntegerPartition.of(*(s for s in sums if s >= 2))
        coeffs[key] = coeffs.get(key, Fraction(0)) + weight
    return tuple((k, v) for k, v in coeffs.items() if v != 0)


def monomial_sampler_expansion(eta: IntegerPartition, x: FrequencyVector) -> Fraction:
    """p^o_eta(x) via the alternating set-partition expansion."""
    total = Fraction(0)
    for xi, coeff in expansion_of_monomial_sampler(eta):
        total += coeff * power_sum_product(xi, x)
    return total


def sampling_probability(eta: IntegerPartition, x: FrequencyVector) -> Fraction:
    """P_n(eta) = multinomial constant times p^o_eta(x)."""
    return multinomial_constant(eta) * monomial_sampler_expansion(eta, x)


def removal_children(eta: IntegerPartition):
    """Yield (xi, weight) where weight is the chance a uniformly removed
    individual turns an eta-sample into a xi-sample."""
    n = eta.n
    seen: set[int] = set()
    for r in eta.parts:
        if r in seen:
            continue
        seen.add(r)
        count = sum(1 for p in eta.parts if p == r)
        parts = list(eta.parts)
        parts.remove(r)
        if r > 1:
            parts.append(r - 1)
        xi = IntegerPartition.of(*parts)
        yield xi, Fraction(r * count, n)


def consistency_check(n: int, x: FrequencyVector):
    """Kingman consistency: marginalizing one individual from the n-sample
    law reproduces the (n-1)-sample law.  Returns (ok, residuals by xi)."""
    if n < 2:
        raise ValueError("n must be >= 2, got %r" % (n,))
    child_totals: dict[IntegerPartition, Fraction] = {
        xi: Fraction(0) for xi in enumerate_partitions(n - 1)
    }
    for eta in enumerate_partitions(n):
        p = sampling_probability(eta, x)
        for xi, weight in removal_children(eta):
            child_totals[xi] += p * weight
    residuals = {
        xi: sampling_probability(xi, x) - child_totals[xi]
        for xi in child_totals
    }
    ok = all(r == 0 for r in residuals.values())
    return ok, residuals


def random_frequency_vector(
    rng: random.Random, max_atoms: int = 8, with_dust: bool = False
) -> FrequencyVector:
    """A pseudo-random exact vector from a normalized integer composition."""
    k = rng.randint(1, max_atoms)
    weights = [rng.randint(1, 20) for _ in range(k)]
    denom = sum(weights) + (rng.randint(1, 20) if with_dust else 0)
    return FrequencyVector.of(*(Fraction(w, denom) for w in weights))
