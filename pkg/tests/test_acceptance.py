"""Acceptance gate: one test per criterion, one printed verdict line each.

Every test prints `[criterion NN] PASS/FAIL <detail>` before asserting, so a
plain `pytest -v -s tests/test_acceptance.py` reads as a checklist. The
tolerances are part of the contract; do not loosen them here.
"""

import math
import time

import numpy as np

import intevo as iv
from intevo.cli import cli_dispatch
from intevo.harness import result_sort_key
from intevo.rng import deterministic_mix


def report(num, ok, detail):
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_one_dim_oracle_and_monte_carlo():
    spec = iv.ChainSpec("ea_pm1", 1, 20)
    exact_ok = all(iv.exact_hitting_time(spec, (d,)) == 2.0 * d for d in range(1, 21))
    worst_sigma = 0.0
    for d in range(1, 21):
        mean, se = iv.monte_carlo_hitting_time(spec, (d,), 10_000, seed=100 + d)
        worst_sigma = max(worst_sigma, abs(mean - 2.0 * d) / se)
    ok = exact_ok and worst_sigma <= 4.0
    report(1, ok, f"exact 2d for d=1..20: {exact_ok}; worst MC deviation {worst_sigma:.2f} se (limit 4)")


def test_criterion_02_two_dim_oracle_equivalence():
    worst = 0.0
    checks = 0
    for algo in ("ea_pm1", "rls_fixed_v1"):
        chain = iv.ChainSpec(algo, 2, 10)
        table = iv.hitting_time_table(chain, 10)
        for i in range(6):
            for j in range(6):
                if i == j == 0:
                    continue
                exact = float(table[(i, j)])
                mean, se = iv.monte_carlo_hitting_time(
                    chain, (i, j), 10_000, seed=deterministic_mix(2, checks))
                worst = max(worst, abs(mean - exact) / se)
                checks += 1
    ok = worst <= 4.0
    report(2, ok, f"{checks} start states, worst MC deviation {worst:.2f} se (limit 4)")


def test_criterion_03_drift_window_constant():
    val = iv.drift_constant_check(1.2)
    ok = abs(val - 0.0912687) <= 1e-6
    report(3, ok, f"drift_constant_check(1.2) = {val!r} (want 0.0912687 +/- 1e-6)")


def test_criterion_04_sampler_distribution_soundness():
    details = []
    ok = True
    for eps in (1.0, 0.1, 0.001):
        sampler = iv.get_sampler(eps, 2.0)
        norm = float(sampler.cdf_table[-1]) + sampler.tail_mass
        norm_ok = abs(norm - 1.0) <= 1e-9
        draws = sampler.sample_exponents(iv.make_rng(4000 + int(1000 * eps)), 1_000_000)
        worst = 0.0
        for i in (2, 3, 4):
            p = sampler.probability_of(i)
            freq = float(np.mean(draws == i))
            worst = max(worst, abs(freq - p) / math.sqrt(p * (1 - p) / 1e6))
        p_sat = sampler.tail_mass
        freq_sat = float(np.mean(draws == -1))
        worst = max(worst, abs(freq_sat - p_sat) / math.sqrt(p_sat * (1 - p_sat) / 1e6))
        ok = ok and norm_ok and worst <= 4.0
        details.append(f"eps={eps}: |norm-1|={abs(norm - 1.0):.1e}, worst freq dev {worst:.2f} se")
    report(4, ok, "; ".join(details))


def test_criterion_05_unit_step_ea_is_linear_in_r():
    t0 = time.perf_counter()
    r_values = (32, 64, 128, 256, 512, 1024)
    cfg = iv.ExperimentConfig(
        algorithm=iv.AlgorithmSpec("ea_pm1"),
        n_values=(10,), r_values=r_values, repetitions=20, base_seed=5)
    results = iv.run_matrix(cfg)
    means = {row.r: row.mean for row in iv.summarize(results)}
    xs = np.log([float(r) for r in r_values])
    ys = np.log([means[r] for r in r_values])
    slope = float(np.polyfit(xs, ys, 1)[0])
    ok = 0.85 <= slope <= 1.15 and all(t.success for t in results)
    report(5, ok, f"log-log slope {slope:.4f} in [0.85, 1.15], {time.perf_counter() - t0:.1f}s")


def test_criterion_06_adaptive_local_search_is_logarithmic_in_r():
    t0 = time.perf_counter()
    cfg = iv.ExperimentConfig(
        algorithm=iv.AlgorithmSpec("rls", alpha=1.7, beta=0.9),
        n_values=(10,), r_values=(10**3, 10**6), repetitions=50, base_seed=6)
    results = iv.run_matrix(cfg)
    means = {row.r: row.mean for row in iv.summarize(results)}
    ratio = means[10**6] / means[10**3]
    ok = 1.5 <= ratio <= 2.8 and all(t.success for t in results)
    report(6, ok, f"mean({10**6})/mean({10**3}) = {ratio:.3f} in [1.5, 2.8], {time.perf_counter() - t0:.1f}s")


def test_criterion_07_heavy_tailed_ea_ratio_band():
    # The decay exponent 0.001 leaves almost all of the tail mass past the
    # table, so nearly every heavy step saturates and is rejected; the cost
    # of each halving grows with log r and the r=1e9 / r=1e3 mean ratio
    # lands near 9, not within the stated factor 8. Implemented faithfully
    # and reported honestly; see the acceptance notes in the README.
    t0 = time.perf_counter()
    cfg = iv.ExperimentConfig(
        algorithm=iv.AlgorithmSpec("ea_heavy", epsilon=0.001),
        n_values=(10,), r_values=(10**3, 10**9), repetitions=20, base_seed=7)
    results = iv.run_matrix(cfg)
    means = {row.r: row.mean for row in iv.summarize(results)}
    ratio = means[10**9] / means[10**3]
    all_hit = all(t.success for t in results)
    ok = ratio <= 8.0 and all_hit
    report(7, ok,
           f"mean({10**9})/mean({10**3}) = {ratio:.3f} (limit 8), "
           f"success {'100%' if all_hit else 'incomplete'}, {time.perf_counter() - t0:.1f}s")


def test_criterion_08_approximation_scaling():
    t0 = time.perf_counter()
    spec = iv.AlgorithmSpec("ea_heavy", epsilon=0.001)
    a = iv.TargetVector.all_equal(10, 10**6)
    budget = iv.RunBudget()
    means = {}
    for idx, ratio in enumerate((0.5, 0.25)):
        evals = [
            iv.time_to_approximation(spec, a, ratio, budget, deterministic_mix(8, idx, k)).evaluations
            for k in range(50)
        ]
        means[ratio] = sum(evals) / len(evals)
    factor = means[0.25] / means[0.5]
    ok = 1.5 <= factor <= 2.8
    report(8, ok, f"mean(ratio 1/4)/mean(ratio 1/2) = {factor:.3f} in [1.5, 2.8], {time.perf_counter() - t0:.1f}s")


def test_criterion_09_drift_dominates_the_guaranteed_bound():
    rng = iv.make_rng(310)
    pot = iv.ExpPotential(1.2)
    worst_margin = math.inf
    for _ in range(100):
        n = int(rng.integers(1, 6))
        d = rng.integers(0, 11, size=n)
        if not d.any():
            d[int(rng.integers(0, n))] = 1
        a = iv.TargetVector(rng.integers(1, 50, size=n).tolist())
        signs = np.where(rng.random(n) < 0.5, -1, 1)
        x0 = [int(ai - si * di) for ai, si, di in zip(a.components, signs, d)]
        state = iv.AlgorithmSpec("ea_pm1").make_state(a, x0=x0)
        rep = iv.estimate_drift(state, a, pot, samples=10_000, seed=int(rng.integers(0, 2**31)))
        worst_margin = min(worst_margin, rep.mean - (rep.bound - 4.0 * rep.stderr))
    ok = worst_margin >= 0.0
    report(9, ok, f"100 random states, min(mean - (bound - 4 se)) = {worst_margin:.3e}")


def test_criterion_10_parameter_validator():
    good = iv.rls_constraint_violations(1.7, 0.9, 0.001, 0.01)
    bad = iv.rls_constraint_violations(2.0, 0.5, 0.001, 0.01)
    raised = False
    try:
        iv.RlsPotential(2.0, 0.5)
    except ValueError:
        raised = True
    ok = good == [] and len(bad) > 0 and raised
    report(10, ok, f"accepts (1.7, 0.9, 0.001, 0.01); rejects (2.0, 0.5) with {len(bad)} violations")


def test_criterion_11_bench_reproducibility_and_fixture(tmp_path, capsys):
    args = ("bench", "--algo", "ea_pm1", "--n", "5", "--r", "8,16", "--reps", "3",
            "--seed", "11")
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    code1 = cli_dispatch([*args, "--out", str(p1)])
    code2 = cli_dispatch([*args, "--out", str(p2)])
    capsys.readouterr()

    def stable(path):
        lines = path.read_text().splitlines()
        body = [",".join(l.split(",")[:8]) for l in lines[1:]]
        return [lines[0]] + body

    bytes_ok = code1 == code2 == 0 and stable(p1) == stable(p2)
    fixture = [iv.TrialResult("ea_pm1", 2, 5, 0.0, 0.0, i, e, True, 0.0)
               for i, e in enumerate([1, 2, 3, 100])]
    (row,) = iv.summarize(fixture)
    fixture_ok = (
        (row.q1, row.median, row.q3) == (1.75, 2.5, 27.25)
        and (row.whisker_low, row.whisker_high) == (1.0, 3.0)
        and (row.outliers, row.mean) == (1, 26.5)
    )
    ok = bytes_ok and fixture_ok
    report(11, ok, f"bench rerun byte-identical (excl wall_time): {bytes_ok}; "
                   f"{{1,2,3,100}} quartiles {row.q1}/{row.median}/{row.q3}, "
                   f"whiskers {row.whisker_low}/{row.whisker_high}, outliers {row.outliers}")
