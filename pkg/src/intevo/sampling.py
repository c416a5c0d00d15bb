"""Step-size distributions for the mutation operators.

Two operators are provided. The unit operator moves one step up or down with
equal probability. The heavy-tailed operator draws an exponent I >= 2 with
P(I = i) proportional to 1 / (i * log(i)^(1 + epsilon)) and moves by 2^(I-2),
again with a fair sign. The normalizing constant of that series has no closed
form, so it is estimated with certified bounds (partial sum plus an integral
bracket for the tail).

Exponents are tabulated up to a maximum; draws that fall past the table end
return the TAIL_SATURATED sentinel and the step saturates at a configured
cap. With the default cap of 2^62 a saturated step overshoots any target this
package will run trials on, so saturation only ever produces rejected
offspring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from .core import clamp_to_int64


class _TailSaturated:
    """Singleton marker for exponent draws beyond the table end."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "TAIL_SATURATED"


TAIL_SATURATED = _TailSaturated()

DEFAULT_TABLE_LIMIT = 64
DEFAULT_SATURATION_STEP = 2**62
DEFAULT_PARTIAL_SUM_LIMIT = 10_000_000
DEFAULT_BRACKET_TOLERANCE = 1e-8


@dataclass(frozen=True)
class HeavyTailedParams:
    """Parameters of the heavy-tailed exponent distribution.

    The normalized distribution is invariant to log_base (the constant
    absorbs the base change); the base only rescales the reported
    normalizer. Base 2 is the default.
    """

    epsilon: float
    log_base: float = 2.0
    table_limit: int = DEFAULT_TABLE_LIMIT
    saturation_step: int = DEFAULT_SATURATION_STEP

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if not self.log_base > 1:
            raise ValueError("log_base must exceed 1")
        if self.table_limit < 2:
            raise ValueError("table_limit must be at least 2")
        if self.saturation_step < 1:
            raise ValueError("saturation_step must be positive")
        if 2 ** (self.table_limit - 2) < self.saturation_step:
            raise ValueError("table must reach the saturation step: need 2^(table_limit-2) >= saturation_step")


def pmf_numerator(i: int, params: HeavyTailedParams) -> float:
    """Unnormalized mass of exponent i, that is 1 / (i * log(i)^(1+eps))."""
    if i < 2:
        raise ValueError("exponents start at 2")
    log_i = math.log(i) / math.log(params.log_base)
    return 1.0 / (i * log_i ** (1.0 + params.epsilon))


@dataclass(frozen=True)
class CEpsilonEstimate:
    """Normalizing constant with a certified bracket.

    value is the bracket midpoint. tolerance_met records whether the bracket
    width came in under the requested tolerance; callers who need the
    certificate must check it, the estimate is never silently degraded.
    """

    value: float
    lower: float
    upper: float
    width: float
    tolerance: float
    tolerance_met: bool
    partial_sum_limit: int


def compute_c_epsilon(
    params: HeavyTailedParams,
    partial_sum_limit: int = DEFAULT_PARTIAL_SUM_LIMIT,
    tolerance: float = DEFAULT_BRACKET_TOLERANCE,
) -> CEpsilonEstimate:
    """Estimate sum_{i>=2} 1/(i * log(i)^(1+eps)) with certified bounds.

    The series is summed exactly (in float64) up to partial_sum_limit. The
    remainder is bracketed by integrals of the summand: the tail from N+1
    is at most the integral from N and at least the integral from N+1,
    both of which have the closed form (ln(base)/eps) * log_base(N)^(-eps).
    """
    if partial_sum_limit < 2:
        raise ValueError("partial_sum_limit must be at least 2")
    eps = params.epsilon
    ln_base = math.log(params.log_base)

    partial = 0.0
    chunk = 2_000_000
    lo = 2
    while lo <= partial_sum_limit:
        hi = min(lo + chunk - 1, partial_sum_limit)
        i = np.arange(lo, hi + 1, dtype=np.float64)
        partial += float(np.sum(1.0 / (i * (np.log(i) / ln_base) ** (1.0 + eps))))
        lo = hi + 1

    def tail_integral(from_n: int) -> float:
        return (ln_base / eps) * (math.log(from_n) / ln_base) ** (-eps)

    lower = partial + tail_integral(partial_sum_limit + 1)
    upper = partial + tail_integral(partial_sum_limit)
    width = upper - lower
    return CEpsilonEstimate(
        value=0.5 * (lower + upper),
        lower=lower,
        upper=upper,
        width=width,
        tolerance=tolerance,
        tolerance_met=width <= tolerance,
        partial_sum_limit=partial_sum_limit,
    )


class HeavyTailedSampler:
    """Tabulated inverse-CDF sampler for the heavy-tailed exponent.

    cdf_table[k] is the probability of drawing an exponent <= k + 2. A
    uniform draw is located with a right-side binary search; landing past
    the last entry means the tail was hit.
    """

    __slots__ = ("params", "c_estimate", "cdf_table", "step_sizes", "tail_mass")

    def __init__(
        self,
        params: HeavyTailedParams,
        partial_sum_limit: int = DEFAULT_PARTIAL_SUM_LIMIT,
        tolerance: float = DEFAULT_BRACKET_TOLERANCE,
    ):
        if partial_sum_limit < params.table_limit:
            raise ValueError("partial_sum_limit must cover the exponent table")
        self.params = params
        self.c_estimate = compute_c_epsilon(params, partial_sum_limit, tolerance)
        c = self.c_estimate.value
        weights = np.array(
            [pmf_numerator(i, params) for i in range(2, params.table_limit + 1)],
            dtype=np.float64,
        )
        cdf = np.cumsum(weights / c)
        if not np.all(np.diff(cdf) > 0):
            raise ValueError("degenerate cdf table")
        if cdf[-1] >= 1.0:
            raise ValueError("table mass reached 1, normalizer too small")
        cdf.setflags(write=False)
        self.cdf_table = cdf
        sizes = np.array(
            [min(2 ** (i - 2), params.saturation_step) for i in range(2, params.table_limit + 1)],
            dtype=np.int64,
        )
        sizes.setflags(write=False)
        self.step_sizes = sizes
        self.tail_mass = float(1.0 - cdf[-1])

    @property
    def c_epsilon(self) -> float:
        return self.c_estimate.value

    def probability_of(self, i: int) -> float:
        """Normalized mass of exponent i (any i >= 2, tabulated or not)."""
        return pmf_numerator(i, self.params) / self.c_estimate.value

    def sample_exponent(self, rng: np.random.Generator) -> Union[int, _TailSaturated]:
        """One exponent draw; TAIL_SATURATED when the draw lands past the table."""
        u = rng.random()
        k = int(np.searchsorted(self.cdf_table, u, side="right"))
        if k >= self.cdf_table.shape[0]:
            return TAIL_SATURATED
        return k + 2

    def sample_exponents(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Vector of exponent draws; entries of -1 mark tail saturation."""
        u = rng.random(size)
        k = np.searchsorted(self.cdf_table, u, side="right")
        out = (k + 2).astype(np.int64)
        out[k >= self.cdf_table.shape[0]] = -1
        return out

    def step_size_of(self, exponent: Union[int, _TailSaturated]) -> int:
        if exponent is TAIL_SATURATED:
            return self.params.saturation_step
        return int(self.step_sizes[exponent - 2])


@lru_cache(maxsize=32)
def get_sampler(epsilon: float, log_base: float = 2.0) -> HeavyTailedSampler:
    """Default-table sampler for (epsilon, log_base), built once and cached."""
    return HeavyTailedSampler(HeavyTailedParams(epsilon=epsilon, log_base=log_base))


def sample_exponent(sampler: HeavyTailedSampler, rng: np.random.Generator) -> Union[int, _TailSaturated]:
    """Free-function form of HeavyTailedSampler.sample_exponent."""
    return sampler.sample_exponent(rng)


def heavy_tailed_step(sampler: HeavyTailedSampler, x: int, rng: np.random.Generator) -> int:
    """One heavy-tailed move from x: draw the step size, then a fair sign.

    Saturates at the signed 64-bit bounds.
    """
    size = sampler.step_size_of(sampler.sample_exponent(rng))
    if rng.random() < 0.5:
        return clamp_to_int64(x + size)
    return clamp_to_int64(x - size)


def pm1_step(x: int, rng: np.random.Generator) -> int:
    """One unit move from x, up with probability 1/2, else down."""
    if rng.random() < 0.5:
        return clamp_to_int64(x + 1)
    return clamp_to_int64(x - 1)
