"""Compiled trial runners, bit-compatible with the reference loops.

The kernels replay exactly the RNG draw protocol documented in `algorithms`
(numba reproduces numpy Generator streams bit-for-bit), so a kernel trial and
a reference trial with the same seed give identical trajectories. Parity is
enforced by tests, not assumed.

Integer safety: kernels run on int64. Entry is gated on norm_l1(target) <=
ENGINE_SAFE_L1 (2^58); larger instances silently take the exact pure-Python
route. Inside the EA kernel the fitness-delta accumulator clamps at 2^61,
which never changes an accept/reject decision: a clamped partial sum can only
occur when the true delta is positive (pending negative terms are bounded by
the current fitness, at most 2^58), and accepted offspring therefore never
involve a clamp, so accepted fitness updates are exact.
"""

from __future__ import annotations

import time
from typing import Optional

import numpy as np

from .algorithms import (
    AlgorithmSpec,
    RunBudget,
    TrialResult,
    iterate,
    run_to_threshold,
)
from .core import TargetVector
from .rng import make_rng

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


ENGINE_SAFE_L1 = 1 << 58

_DELTA_CAP = np.int64(1) << np.int64(61)
_EMPTY_F8 = np.zeros(0, dtype=np.float64)
_EMPTY_I8 = np.zeros(0, dtype=np.int64)


@njit(cache=True, nogil=True)
def _ea_run(a, x, use_heavy, cdf, sizes, sat_step, threshold, max_evals, box_upper, rng):
    n = a.shape[0]
    inv_n = 1.0 / n
    fit = np.int64(0)
    for i in range(n):
        fit += abs(a[i] - x[i])
    evals = np.int64(0)
    idxs = np.empty(n, dtype=np.int64)
    vals = np.empty(n, dtype=np.int64)
    while fit > threshold and evals < max_evals:
        delta = np.int64(0)
        nch = 0
        for i in range(n):
            if rng.random() < inv_n:
                if use_heavy:
                    u = rng.random()
                    k = np.searchsorted(cdf, u, side="right")
                    s = sat_step if k >= cdf.shape[0] else sizes[k]
                else:
                    s = np.int64(1)
                if rng.random() < 0.5:
                    yi = x[i] + s
                else:
                    yi = x[i] - s
                if box_upper >= 0:
                    if yi < 0:
                        yi = np.int64(0)
                    elif yi > box_upper:
                        yi = box_upper
                term = abs(a[i] - yi) - abs(a[i] - x[i])
                grown = delta + term
                delta = grown if grown < _DELTA_CAP else _DELTA_CAP
                idxs[nch] = i
                vals[nch] = yi
                nch += 1
        evals += 1
        if delta <= 0:
            for j in range(nch):
                x[idxs[j]] = vals[j]
            fit += delta
    return evals, fit


@njit(cache=True, nogil=True)
def _rls_run(a, x, v, alpha, beta, threshold, max_evals, box_upper, rng):
    n = a.shape[0]
    fit = np.int64(0)
    for i in range(n):
        fit += abs(a[i] - x[i])
    evals = np.int64(0)
    while fit > threshold and evals < max_evals:
        i = rng.integers(0, n)
        step = np.int64(np.floor(v[i]))
        if rng.random() < 0.5:
            yi = x[i] - step
        else:
            yi = x[i] + step
        if box_upper >= 0:
            if yi < 0:
                yi = np.int64(0)
            elif yi > box_upper:
                yi = box_upper
        delta = abs(a[i] - yi) - abs(a[i] - x[i])
        evals += 1
        if delta < 0:
            v[i] = alpha * v[i]
        else:
            shrunk = beta * v[i]
            v[i] = shrunk if shrunk > 1.0 else 1.0
        if delta <= 0:
            x[i] = yi
            fit += delta
    return evals, fit


@njit(cache=True, nogil=True)
def _ea_batch(a, use_heavy, cdf, sizes, sat_step, runs, max_evals, rng):
    out = np.empty(runs, dtype=np.int64)
    n = a.shape[0]
    x = np.empty(n, dtype=np.int64)
    for r in range(runs):
        for i in range(n):
            x[i] = 0
        evals, _ = _ea_run(a, x, use_heavy, cdf, sizes, sat_step, np.int64(0), max_evals, np.int64(-1), rng)
        out[r] = evals
    return out


@njit(cache=True, nogil=True)
def _rls_batch(a, alpha, beta, runs, max_evals, rng):
    out = np.empty(runs, dtype=np.int64)
    n = a.shape[0]
    x = np.empty(n, dtype=np.int64)
    v = np.empty(n, dtype=np.float64)
    for r in range(runs):
        for i in range(n):
            x[i] = 0
            v[i] = 1.0
        evals, _ = _rls_run(a, x, v, alpha, beta, np.int64(0), max_evals, np.int64(-1), rng)
        out[r] = evals
    return out


def engine_can_run(a: TargetVector) -> bool:
    return NUMBA_AVAILABLE and a.l1 <= ENGINE_SAFE_L1


def run_trial(
    spec: AlgorithmSpec,
    a: TargetVector,
    budget: RunBudget,
    seed: int,
    threshold: int = 0,
) -> TrialResult:
    """One trial from the all-zero start, fast path when the engine applies.

    Same contract and same result fields as the reference
    `run_to_threshold` (wall_time_s aside, which measures whichever route
    ran).
    """
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    if not engine_can_run(a):
        state = spec.make_state(a)
        return run_to_threshold(state, a, budget, seed, threshold)

    rng = make_rng(seed)
    arr = a.as_array()
    x = np.zeros(a.n, dtype=np.int64)
    box = np.int64(-1 if budget.box_upper is None else budget.box_upper)
    t0 = time.perf_counter()
    if spec.name == "rls":
        v = np.ones(a.n, dtype=np.float64)
        evals, fit = _rls_run(
            arr, x, v, spec.alpha, spec.beta,
            np.int64(threshold), np.int64(budget.max_evaluations), box, rng,
        )
    else:
        use_heavy = spec.name == "ea_heavy"
        if use_heavy:
            sampler = spec.sampler()
            cdf, sizes = sampler.cdf_table, sampler.step_sizes
            sat = np.int64(sampler.params.saturation_step)
        else:
            cdf, sizes, sat = _EMPTY_F8, _EMPTY_I8, np.int64(1)
        evals, fit = _ea_run(
            arr, x, use_heavy, cdf, sizes, sat,
            np.int64(threshold), np.int64(budget.max_evaluations), box, rng,
        )
    wall = time.perf_counter() - t0
    p1, p2 = spec.param_echo()
    return TrialResult(
        algorithm=spec.name,
        n=a.n,
        r=a.linf,
        param1=p1,
        param2=p2,
        seed=int(seed),
        evaluations=int(evals),
        success=int(fit) <= threshold,
        wall_time_s=wall,
    )


def batch_hitting_times(
    spec: AlgorithmSpec,
    a: TargetVector,
    runs: int,
    seed: int,
    max_evaluations: int = 10**7,
) -> np.ndarray:
    """Evaluation counts of `runs` optimum-hitting runs off one shared stream.

    Built for Monte-Carlo estimates where per-run seeds are not needed; the
    runs are independent draws from a single Philox stream. The pure-Python
    fallback consumes the stream identically.
    """
    if runs < 1:
        raise ValueError("runs must be positive")
    rng = make_rng(seed)
    if engine_can_run(a):
        arr = a.as_array()
        me = np.int64(max_evaluations)
        if spec.name == "rls":
            return _rls_batch(arr, spec.alpha, spec.beta, runs, me, rng)
        use_heavy = spec.name == "ea_heavy"
        if use_heavy:
            sampler = spec.sampler()
            return _ea_batch(arr, True, sampler.cdf_table, sampler.step_sizes,
                             np.int64(sampler.params.saturation_step), runs, me, rng)
        return _ea_batch(arr, False, _EMPTY_F8, _EMPTY_I8, np.int64(1), runs, me, rng)

    out = np.empty(runs, dtype=np.int64)
    for r in range(runs):
        state = spec.make_state(a)
        while state.fitness > 0 and state.evaluations < max_evaluations:
            iterate(state, a, rng)
        out[r] = state.evaluations
    return out
