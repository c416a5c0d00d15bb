"""Benchmark matrix plumbing: seeds, summaries, CSV byte contracts."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import intevo as iv
from intevo.harness import (
    RESULTS_HEADER,
    SUMMARY_HEADER,
    _ordered_mean,
    _quantile_linear,
    result_sort_key,
)


def fake(evals, algo="ea_pm1", n=2, r=5, seed=0, success=True):
    return iv.TrialResult(algo, n, r, 0.0, 0.0, seed, evals, success, 0.001)


def small_config(**kw):
    defaults = dict(
        algorithm=iv.AlgorithmSpec("ea_pm1"),
        n_values=(2,),
        r_values=(4, 8),
        repetitions=3,
        budget=iv.RunBudget(10**6),
        base_seed=42,
    )
    defaults.update(kw)
    return iv.ExperimentConfig(**defaults)


# --- seeds and matrix execution ----------------------------------------------

def test_trial_seeds_are_stable_and_distinct():
    cfg = small_config()
    seen = set()
    for n, r, rep in cfg.cells():
        s = cfg.trial_seed(n, r, rep)
        assert s == cfg.trial_seed(n, r, rep)
        seen.add(s)
    assert len(seen) == 2 * 3


def test_base_seed_changes_every_trial_seed():
    a = small_config(base_seed=1)
    b = small_config(base_seed=2)
    assert a.trial_seed(2, 4, 0) != b.trial_seed(2, 4, 0)


def test_run_matrix_is_deterministic_and_ordered():
    cfg = small_config()
    first = iv.run_matrix(cfg)
    second = iv.run_matrix(cfg)
    assert [(t.n, t.r, t.seed, t.evaluations, t.success) for t in first] == [
        (t.n, t.r, t.seed, t.evaluations, t.success) for t in second]
    expected_cells = [(n, r, cfg.trial_seed(n, r, rep)) for n, r, rep in cfg.cells()]
    assert [(t.n, t.r, t.seed) for t in first] == expected_cells
    assert all(t.success for t in first)


def test_worker_count_does_not_change_results():
    serial = iv.run_matrix(small_config(workers=1))
    pooled = iv.run_matrix(small_config(workers=4))
    key = lambda t: (t.algorithm, t.n, t.r, t.seed, t.evaluations, t.success)
    assert list(map(key, serial)) == list(map(key, pooled))


def test_exhausted_budget_counts_as_failure():
    cfg = small_config(r_values=(10**6,), repetitions=2, budget=iv.RunBudget(5))
    results = iv.run_matrix(cfg)
    assert all(not t.success and t.evaluations == 5 for t in results)
    assert iv.failure_rate(results) == 1.0


def test_budget_truncation_is_a_prefix_of_the_full_run():
    spec = iv.AlgorithmSpec("rls", alpha=1.7, beta=0.9)
    a = iv.TargetVector.all_equal(3, 20)
    full = iv.run_trial(spec, a, iv.RunBudget(10**6), 17)
    assert full.success
    for cap in (1, full.evaluations - 1, full.evaluations, full.evaluations + 5):
        part = iv.run_trial(spec, a, iv.RunBudget(cap), 17)
        if cap >= full.evaluations:
            assert part.success and part.evaluations == full.evaluations
        else:
            assert not part.success and part.evaluations == cap


def test_box_clamp_matrix_runs():
    cfg = small_config(box_clamp=True, r_values=(6,), repetitions=2)
    results = iv.run_matrix(cfg)
    assert all(t.success for t in results)


def test_config_validation():
    for kw in (
        dict(n_values=()),
        dict(r_values=()),
        dict(n_values=(0,)),
        dict(r_values=(-1,)),
        dict(repetitions=0),
        dict(workers=0),
    ):
        with pytest.raises(ValueError):
            small_config(**kw)


# --- summary statistics -------------------------------------------------------

def test_skewed_fixture_summary():
    results = [fake(e, seed=i) for i, e in enumerate([1, 2, 3, 100])]
    (row,) = iv.summarize(results)
    assert row.count == 4
    assert row.mean == 26.5
    assert row.q1 == 1.75
    assert row.median == 2.5
    assert row.q3 == 27.25
    assert row.whisker_low == 1.0
    assert row.whisker_high == 3.0
    assert row.outliers == 1
    assert row.failure_rate == 0.0


def test_uniform_fixture_summary():
    results = [fake(e, seed=i) for i, e in enumerate([5, 4, 3, 2, 1])]
    (row,) = iv.summarize(results)
    assert (row.q1, row.median, row.q3) == (2.0, 3.0, 4.0)
    assert (row.whisker_low, row.whisker_high) == (1.0, 5.0)
    assert row.outliers == 0 and row.mean == 3.0


def test_constant_fixture_summary():
    results = [fake(7, seed=i) for i in range(3)]
    (row,) = iv.summarize(results)
    assert (row.q1, row.median, row.q3) == (7.0, 7.0, 7.0)
    assert (row.whisker_low, row.whisker_high) == (7.0, 7.0)
    assert row.outliers == 0 and row.mean == 7.0


def test_summarize_groups_and_sorts():
    results = [
        fake(10, algo="rls", r=8, seed=0),
        fake(20, algo="ea_pm1", r=4, seed=0),
        fake(30, algo="ea_pm1", r=4, seed=1, success=False),
        fake(40, algo="ea_pm1", r=8, seed=0),
    ]
    rows = iv.summarize(results)
    assert [(s.algorithm, s.n, s.r) for s in rows] == [
        ("ea_pm1", 2, 4), ("ea_pm1", 2, 8), ("rls", 2, 8)]
    assert rows[0].count == 2 and rows[0].failure_rate == 0.5


def test_failure_rate_refuses_empty_input():
    with pytest.raises(ValueError):
        iv.failure_rate([])


@given(st.lists(st.integers(min_value=1, max_value=10**6), min_size=1, max_size=40))
@settings(max_examples=200, deadline=None)
def test_quantiles_match_numpy_linear_interpolation(evals):
    data = sorted(float(e) for e in evals)
    for q in (0.25, 0.5, 0.75):
        ours = _quantile_linear(data, q)
        ref = float(np.percentile(data, q * 100, method="linear"))
        assert ours == pytest.approx(ref, rel=1e-12, abs=1e-9)
    assert _ordered_mean(data) == pytest.approx(float(np.mean(data)), rel=1e-12)


# --- number formatting and CSV -----------------------------------------------

def test_format_number_cases():
    assert iv.format_number(3.0) == "3"
    assert iv.format_number(-4) == "-4"
    assert iv.format_number(0) == "0"
    assert iv.format_number(2.5) == "2.5"
    assert iv.format_number(0.1) == "0.1"
    assert iv.format_number(1 / 3) == repr(1 / 3)
    assert iv.format_number(1e15) == repr(1e15)  # too wide to trust int round-trip


def test_results_csv_round_trip(tmp_path):
    results = iv.run_matrix(small_config(repetitions=2))
    path = tmp_path / "results.csv"
    iv.write_results_csv(results, path)
    back = iv.read_results_csv(path)
    assert back == sorted(results, key=result_sort_key)
    assert path.read_text().splitlines()[0] == ",".join(RESULTS_HEADER)


def test_results_csv_is_sorted_and_byte_stable(tmp_path):
    rows = [fake(9, algo="rls", seed=2), fake(1, seed=1), fake(5, seed=0)]
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    iv.write_results_csv(rows, p1)
    iv.write_results_csv(list(reversed(rows)), p2)
    assert p1.read_bytes() == p2.read_bytes()
    back = iv.read_results_csv(p1)
    assert [t.seed for t in back] == [0, 1, 2]
    assert back[-1].algorithm == "rls"


def test_success_column_uses_lowercase_booleans(tmp_path):
    path = tmp_path / "r.csv"
    iv.write_results_csv([fake(3, success=False), fake(4, seed=1)], path)
    body = path.read_text().splitlines()[1:]
    assert body[0].split(",")[7] == "false"
    assert body[1].split(",")[7] == "true"


def test_summary_csv_round_trip(tmp_path):
    rows = iv.summarize([fake(e, seed=i) for i, e in enumerate([1, 2, 3, 100])])
    path = tmp_path / "summary.csv"
    iv.write_summary_csv(rows, path)
    assert iv.read_summary_csv(path) == rows
    text = path.read_text().splitlines()
    assert text[0] == ",".join(SUMMARY_HEADER)
    assert text[1] == "ea_pm1,2,5,4,26.5,1.75,2.5,27.25,1,3,1,0"


def test_header_mismatch_is_rejected(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("algorithm,n\nea_pm1,2\n")
    with pytest.raises(ValueError, match="header"):
        iv.read_results_csv(path)
    with pytest.raises(ValueError, match="header"):
        iv.read_summary_csv(path)


def test_malformed_row_is_rejected(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text(",".join(RESULTS_HEADER) + "\nea_pm1,2,5\n")
    with pytest.raises(ValueError, match="malformed"):
        iv.read_results_csv(path)
