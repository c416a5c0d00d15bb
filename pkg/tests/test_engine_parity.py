"""The compiled engine must replay the reference loops bit for bit."""

import numpy as np
import pytest

import intevo as iv
from intevo import engine
from intevo.rng import make_rng

pytestmark = pytest.mark.skipif(not iv.NUMBA_AVAILABLE, reason="engine unavailable")

SPECS = [
    iv.AlgorithmSpec("ea_pm1"),
    iv.AlgorithmSpec("ea_heavy", epsilon=0.001),
    iv.AlgorithmSpec("ea_heavy", epsilon=0.25),
    iv.AlgorithmSpec("rls", alpha=1.7, beta=0.9),
    iv.AlgorithmSpec("rls", alpha=2.0, beta=0.5),
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s.name}-{s.param_echo()}")
@pytest.mark.parametrize("seed", [0, 1, 99991])
def test_full_trial_parity(spec, seed):
    a = iv.TargetVector([23, 7, 41])
    budget = iv.RunBudget(max_evaluations=500_000)
    ref = iv.run_to_optimum(spec.make_state(a), a, budget, seed)
    eng = iv.run_trial(spec, a, budget, seed)
    assert (ref.evaluations, ref.success) == (eng.evaluations, eng.success)
    assert (ref.algorithm, ref.n, ref.r, ref.param1, ref.param2, ref.seed) == (
        eng.algorithm, eng.n, eng.r, eng.param1, eng.param2, eng.seed)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s.name}-{s.param_echo()}")
def test_truncated_trial_parity(spec):
    # stop both routes mid-run at several horizons; any divergence in the
    # trajectory would show up as a different fitness at some horizon
    a = iv.TargetVector([101, 55])
    for horizon in (1, 2, 3, 5, 10, 50, 200):
        budget = iv.RunBudget(max_evaluations=horizon)
        ref = iv.run_to_optimum(spec.make_state(a), a, budget, seed=7)
        eng = iv.run_trial(spec, a, budget, 7)
        assert (ref.evaluations, ref.success) == (eng.evaluations, eng.success)


def test_threshold_parity():
    spec = iv.AlgorithmSpec("ea_heavy", epsilon=0.25)
    a = iv.TargetVector.all_equal(4, 1000)
    budget = iv.RunBudget(max_evaluations=10**6)
    for thresh in (0, 1, 100, 1999):
        ref = iv.run_to_threshold(spec.make_state(a), a, budget, seed=3, threshold=thresh)
        eng = iv.run_trial(spec, a, budget, 3, threshold=thresh)
        assert (ref.evaluations, ref.success) == (eng.evaluations, eng.success)


def test_box_clamp_parity():
    spec = iv.AlgorithmSpec("ea_heavy", epsilon=0.001)
    a = iv.TargetVector.all_equal(3, 50)
    budget = iv.RunBudget(max_evaluations=10**5, box_upper=50)
    ref = iv.run_to_optimum(spec.make_state(a), a, budget, seed=13)
    eng = iv.run_trial(spec, a, budget, 13)
    assert (ref.evaluations, ref.success) == (eng.evaluations, eng.success)


def test_batch_matches_fallback_stream():
    # the batch kernel and the pure-Python fallback consume one shared
    # stream identically
    spec = iv.AlgorithmSpec("rls", alpha=1.7, beta=0.9)
    a = iv.TargetVector([9, 4])
    fast = iv.batch_hitting_times(spec, a, 50, seed=555)
    try:
        engine.NUMBA_AVAILABLE = False
        slow = iv.batch_hitting_times(spec, a, 50, seed=555)
    finally:
        engine.NUMBA_AVAILABLE = True
    assert fast.tolist() == slow.tolist()


def test_engine_falls_back_on_oversized_targets():
    # beyond the int64-safe range run_trial silently takes the exact route
    big = iv.TargetVector([engine.ENGINE_SAFE_L1 + 1])
    assert not engine.engine_can_run(big)
    res = iv.run_trial(iv.AlgorithmSpec("ea_pm1"), big, iv.RunBudget(10), 0)
    assert not res.success and res.evaluations == 10


def test_engine_wall_time_is_measured():
    a = iv.TargetVector.all_equal(2, 200)
    res = iv.run_trial(iv.AlgorithmSpec("ea_pm1"), a, iv.RunBudget(10**6), 1)
    assert res.wall_time_s >= 0.0


def test_rng_stream_parity_primitives():
    # the engine's premise: numba draws reproduce numpy Generator draws
    from numba import njit

    @njit(cache=True)
    def draw(rng, n):
        out = np.empty(n, dtype=np.float64)
        ints = np.empty(n, dtype=np.int64)
        for i in range(n):
            out[i] = rng.random()
            ints[i] = rng.integers(0, 1000)
        return out, ints

    u_jit, i_jit = draw(make_rng(42), 500)
    rng = make_rng(42)
    u_ref = np.empty(500)
    i_ref = np.empty(500, dtype=np.int64)
    for i in range(500):
        u_ref[i] = rng.random()
        i_ref[i] = rng.integers(0, 1000)
    assert u_jit.tolist() == u_ref.tolist()
    assert i_jit.tolist() == i_ref.tolist()
