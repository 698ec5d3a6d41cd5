"""Exact sampling probabilities of random partitions under the
infinitely-many-neutral-alleles diffusion: stationary (Ewens), transient
(finite spectral expansion) and asymptotic (weak limits and large-deviation
rate functions with their phase transition)."""

from .combinatorics import (
    EMPTY,
    IntegerPartition,
    SetPartition,
    enumerate_partitions,
    enumerate_set_partitions,
    multinomial_constant,
    partition_order,
)
from .moments import (
    esf_monomial_moment,
    mixed_power_sum_moment,
    power_sum_moment,
    rising_factorial,
)
from .basis import (
    BasisElement,
    build_basis,
    evaluate_basis_element,
    inner_product,
    normalized_element,
)
from .sampling import (
    FrequencyVector,
    consistency_check,
    monomial_sampler_bruteforce,
    monomial_sampler_expansion,
    power_sum,
    sampling_probability,
)
from .transient import (
    STATIONARY,
    SpectralEvaluator,
    TimePoint,
    eigenvalue,
    transient_moment,
    transient_sampling_probability,
)
from .asymptotics import (
    RateFunctionResult,
    RegimeSpec,
    ldp_slope_scan,
    lemma41_leading_term,
    lemma41_order_scan,
    moment_limit_scan,
    rate_function,
    weak_limit_point,
)

__version__ = "0.1.0"
