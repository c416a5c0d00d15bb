#!/usr/bin/env python3
"""Run a small benchmark matrix and plot how the algorithms scale in r.

Writes results.csv / summary.csv next to this script (same schemas as the
`intevo bench` command) and, when matplotlib is importable, a log-log PNG.
The unit-step EA grows linearly in r; the other two stay polylogarithmic.
"""

import pathlib

import intevo as iv

HERE = pathlib.Path(__file__).resolve().parent
R_VALUES = (16, 64, 256, 1024, 4096)

all_results = []
for spec in (
    iv.AlgorithmSpec("ea_pm1"),
    iv.AlgorithmSpec("ea_heavy", epsilon=0.1),
    iv.AlgorithmSpec("rls", alpha=1.7, beta=0.9),
):
    cfg = iv.ExperimentConfig(
        algorithm=spec, n_values=(5,), r_values=R_VALUES,
        repetitions=10, base_seed=2, workers=4)
    all_results.extend(iv.run_matrix(cfg))

iv.write_results_csv(all_results, HERE / "results.csv")
rows = iv.summarize(all_results)
iv.write_summary_csv(rows, HERE / "summary.csv")

print(f"{'algorithm':9s} {'r':>6s} {'mean':>12s} {'median':>10s} {'q3':>10s}")
for s in rows:
    print(f"{s.algorithm:9s} {s.r:6d} {s.mean:12.1f} {s.median:10.1f} {s.q3:10.1f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("\nmatplotlib not installed; skipping the PNG")
else:
    fig, ax = plt.subplots(figsize=(6, 4))
    for name in ("ea_pm1", "ea_heavy", "rls"):
        pts = [(s.r, s.mean) for s in rows if s.algorithm == name]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=name)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("r (all-r target, n=5)")
    ax.set_ylabel("mean evaluations")
    ax.legend()
    fig.tight_layout()
    out = HERE / "scaling.png"
    fig.savefig(out, dpi=120)
    print(f"\nwrote {out}")
