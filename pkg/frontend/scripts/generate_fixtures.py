#!/usr/bin/env python3
"""Regenerate the CSV fixtures the frontend tests pin themselves to.

Runs the three scaling benchmarks the acceptance gate uses (same shapes,
same seeds) plus a tiny skewed set, and writes results + summary CSVs with
the Python harness. The frontend's summarizer must reproduce the summary
files byte for byte, so these are committed rather than rebuilt in CI.
"""

import pathlib
import sys

import intevo as iv

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def write(name, results):
    iv.write_results_csv(results, OUT / f"{name}_results.csv")
    iv.write_summary_csv(iv.summarize(results), OUT / f"{name}_summary.csv")
    print(f"{name}: {len(results)} rows")


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    write("c5", iv.run_matrix(iv.ExperimentConfig(
        algorithm=iv.AlgorithmSpec("ea_pm1"),
        n_values=(10,), r_values=(32, 64, 128, 256, 512, 1024),
        repetitions=20, base_seed=5)))

    write("c6", iv.run_matrix(iv.ExperimentConfig(
        algorithm=iv.AlgorithmSpec("rls", alpha=1.7, beta=0.9),
        n_values=(10,), r_values=(10**3, 10**6),
        repetitions=50, base_seed=6)))

    write("c7", iv.run_matrix(iv.ExperimentConfig(
        algorithm=iv.AlgorithmSpec("ea_heavy", epsilon=0.001),
        n_values=(10,), r_values=(10**3, 10**9),
        repetitions=20, base_seed=7)))

    write("skewed", [
        iv.TrialResult("ea_pm1", 2, 5, 0.0, 0.0, seed, evals, True, 0.0)
        for seed, evals in enumerate([1, 2, 3, 100])
    ])

    write("uniform", [
        iv.TrialResult("ea_pm1", 2, 5, 0.0, 0.0, seed, evals, True, 0.0)
        for seed, evals in enumerate([1, 2, 3, 4, 5])
    ])

    # one-point series for the degenerate-marker rendering path
    write("single", [iv.TrialResult("rls", 4, 100, 1.7, 0.9, 0, 321, True, 0.0)])
    return 0


if __name__ == "__main__":
    sys.exit(main())
