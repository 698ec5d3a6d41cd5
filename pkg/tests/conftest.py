"""Shared independent oracles for the test suite.

These deliberately avoid the library's own code paths: partition counts come
from the Euler recurrence, Bell/Stirling numbers from their triangles, and
expected rationals are recomputed from first principles where frozen.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import pytest

from neutral_sampler.sampling import FrequencyVector


@lru_cache(maxsize=None)
def partition_count(n: int, max_part: int | None = None) -> int:
    """p(n) by direct recursion on the largest part."""
    if max_part is None:
        max_part = n
    if n == 0:
        return 1
    return sum(partition_count(n - k, k) for k in range(1, min(n, max_part) + 1))


@lru_cache(maxsize=None)
def stirling2(l: int, d: int) -> int:
    if d == 0:
        return 1 if l == 0 else 0
    if l == 0 or d > l:
        return 0
    return d * stirling2(l - 1, d) + stirling2(l - 1, d - 1)


def bell(l: int) -> int:
    return sum(stirling2(l, d) for d in range(l + 1))


@pytest.fixture
def x_full() -> FrequencyVector:
    return FrequencyVector.parse("1/2,1/3,1/6")


@pytest.fixture
def x_dusty() -> FrequencyVector:
    return FrequencyVector.parse("1/2,1/4")  # dust 1/4


@pytest.fixture
def x_point() -> FrequencyVector:
    return FrequencyVector.parse("1")


@pytest.fixture
def x_pure_dust() -> FrequencyVector:
    return FrequencyVector(())
