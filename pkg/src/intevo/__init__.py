"""Randomized search heuristics on the integer lattice.

Minimize the L1 distance to a hidden integer target with simple mutation-
based heuristics, check small instances against exact hitting-time oracles,
measure drift, and benchmark scaling behaviour into reproducible CSVs.
"""

from .core import (
    FITNESS_CEILING,
    INT64_MAX,
    INT64_MIN,
    SearchPoint,
    TargetVector,
    eval_fitness,
    norm_hamming,
    norm_l1,
    norm_linf,
)
from .sampling import (
    TAIL_SATURATED,
    CEpsilonEstimate,
    HeavyTailedParams,
    HeavyTailedSampler,
    compute_c_epsilon,
    get_sampler,
    heavy_tailed_step,
    pm1_step,
    sample_exponent,
)
from .algorithms import (
    AlgorithmSpec,
    EaState,
    HeavyTailedStep,
    PlusMinusOneStep,
    RlsState,
    RunBudget,
    TrialResult,
    apply_box_clamp,
    ea_iterate,
    iterate,
    rls_iterate,
    run_to_optimum,
    run_to_threshold,
)
from .engine import NUMBA_AVAILABLE, batch_hitting_times, run_trial
from .analysis import (
    CHAIN_ALGORITHMS,
    ChainSpec,
    DriftReport,
    ExpPotential,
    RlsPotential,
    drift_constant_check,
    drift_lower_bound,
    estimate_drift,
    exact_hitting_time,
    hitting_time_table,
    monte_carlo_hitting_time,
    potential_exp_omega,
    rls_constraint_violations,
    time_to_approximation,
)
from .harness import (
    ExperimentConfig,
    SummaryRow,
    failure_rate,
    format_number,
    read_results_csv,
    read_summary_csv,
    run_matrix,
    summarize,
    write_results_csv,
    write_summary_csv,
)
from .rng import deterministic_mix, make_rng

__version__ = "0.1.0"

__all__ = [
    "AlgorithmSpec",
    "CEpsilonEstimate",
    "CHAIN_ALGORITHMS",
    "ChainSpec",
    "DriftReport",
    "EaState",
    "ExpPotential",
    "ExperimentConfig",
    "FITNESS_CEILING",
    "HeavyTailedParams",
    "HeavyTailedSampler",
    "HeavyTailedStep",
    "INT64_MAX",
    "INT64_MIN",
    "NUMBA_AVAILABLE",
    "PlusMinusOneStep",
    "RlsPotential",
    "RlsState",
    "RunBudget",
    "SearchPoint",
    "SummaryRow",
    "TAIL_SATURATED",
    "TargetVector",
    "TrialResult",
    "apply_box_clamp",
    "batch_hitting_times",
    "compute_c_epsilon",
    "deterministic_mix",
    "drift_constant_check",
    "drift_lower_bound",
    "ea_iterate",
    "estimate_drift",
    "eval_fitness",
    "exact_hitting_time",
    "failure_rate",
    "format_number",
    "get_sampler",
    "heavy_tailed_step",
    "hitting_time_table",
    "iterate",
    "make_rng",
    "monte_carlo_hitting_time",
    "norm_hamming",
    "norm_l1",
    "norm_linf",
    "pm1_step",
    "potential_exp_omega",
    "read_results_csv",
    "sample_exponent",
    "read_summary_csv",
    "rls_constraint_violations",
    "rls_iterate",
    "run_matrix",
    "run_to_optimum",
    "run_to_threshold",
    "run_trial",
    "summarize",
    "time_to_approximation",
    "write_results_csv",
    "write_summary_csv",
]
