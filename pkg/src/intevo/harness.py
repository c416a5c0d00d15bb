"""Benchmark matrix runner, summary statistics, and the CSV formats.

Results CSV, one row per trial:

    algorithm,n,r,param1,param2,seed,evaluations,success,wall_time_s

Summary CSV, one row per (algorithm, n, r) group:

    algorithm,n,r,count,mean,q1,median,q3,whisker_low,whisker_high,outliers,failure_rate

Numbers are written canonically: integral values as plain integers, anything
else as the shortest round-tripping decimal. Quartiles use linear
interpolation at position (count - 1) * q over the ascending sample, the
mean is the naive left-to-right sum over that same ascending order divided
by the count, whiskers are the most extreme data within 1.5 IQR of the
quartiles, and outliers is the count beyond the whiskers. These choices are
deliberately pinned so an independent consumer in another language can
reproduce the summary byte for byte. success is written as true/false.
booleans aside, wall_time_s is the only column that is not reproducible
across hosts; consumers are expected to ignore it when comparing files.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .algorithms import AlgorithmSpec, RunBudget, TrialResult
from .core import TargetVector
from .engine import run_trial
from .rng import deterministic_mix

RESULTS_HEADER = ("algorithm", "n", "r", "param1", "param2", "seed", "evaluations", "success", "wall_time_s")
SUMMARY_HEADER = (
    "algorithm", "n", "r", "count", "mean", "q1", "median", "q3",
    "whisker_low", "whisker_high", "outliers", "failure_rate",
)


def format_number(value: Union[int, float]) -> str:
    """Canonical decimal text: integral values as integers, else shortest repr."""
    f = float(value)
    if math.isfinite(f) and f == int(f) and abs(f) < 1e15:
        return str(int(f))
    return repr(f)


@dataclass(frozen=True)
class ExperimentConfig:
    """One benchmark matrix: an algorithm swept over (n, r) with repetitions.

    Targets are the all-r vectors. The per-trial seed is
    deterministic_mix(base_seed, n, r, repetition), so any single trial can
    be reproduced in isolation and the matrix result is independent of
    execution order.
    """

    algorithm: AlgorithmSpec
    n_values: Tuple[int, ...]
    r_values: Tuple[int, ...]
    repetitions: int
    budget: RunBudget = field(default_factory=RunBudget)
    base_seed: int = 0
    workers: int = 1
    box_clamp: bool = False  # clamp proposals into [0, r] per cell

    def __post_init__(self):
        if not self.n_values:
            raise ValueError("need at least one n")
        if not self.r_values:
            raise ValueError("need at least one r")
        if any(n < 1 for n in self.n_values):
            raise ValueError("n values must be positive")
        if any(r < 1 for r in self.r_values):
            raise ValueError("r values must be positive")
        if self.repetitions < 1:
            raise ValueError("repetitions must be positive")
        if self.workers < 1:
            raise ValueError("workers must be positive")

    def trial_seed(self, n: int, r: int, repetition: int) -> int:
        return deterministic_mix(self.base_seed, n, r, repetition)

    def cells(self) -> Iterator[Tuple[int, int, int]]:
        for n in self.n_values:
            for r in self.r_values:
                for rep in range(self.repetitions):
                    yield n, r, rep


def run_matrix(config: ExperimentConfig) -> List[TrialResult]:
    """Run every cell of the matrix, in deterministic (n, r, repetition) order.

    With workers > 1 the trials execute on a thread pool (the compiled
    kernels release the GIL); the returned order is unchanged.
    """

    def one(cell: Tuple[int, int, int]) -> TrialResult:
        n, r, rep = cell
        a = TargetVector.all_equal(n, r)
        budget = config.budget
        if config.box_clamp:
            budget = RunBudget(budget.max_evaluations, box_upper=r)
        return run_trial(config.algorithm, a, budget, config.trial_seed(n, r, rep))

    cells = list(config.cells())
    if config.workers == 1:
        return [one(c) for c in cells]
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(one, cells))


def result_sort_key(t: TrialResult):
    return (t.algorithm, t.n, t.r, t.seed)


def failure_rate(results: Sequence[TrialResult]) -> float:
    """Fraction of trials that exhausted their budget."""
    if not results:
        raise ValueError("failure_rate of an empty result set is undefined")
    return sum(1 for t in results if not t.success) / len(results)


@dataclass(frozen=True)
class SummaryRow:
    """Distribution summary of evaluation counts for one (algorithm, n, r)."""

    algorithm: str
    n: int
    r: int
    count: int
    mean: float
    q1: float
    median: float
    q3: float
    whisker_low: float
    whisker_high: float
    outliers: int
    failure_rate: float


def _quantile_linear(ascending: Sequence[float], q: float) -> float:
    pos = (len(ascending) - 1) * q
    lo = math.floor(pos)
    hi = math.ceil(pos)
    frac = pos - lo
    return ascending[lo] + frac * (ascending[hi] - ascending[lo])


def _ordered_mean(ascending: Sequence[float]) -> float:
    total = 0.0
    for v in ascending:
        total += v
    return total / len(ascending)


def summarize(results: Sequence[TrialResult]) -> List[SummaryRow]:
    """Collapse trial rows into per-(algorithm, n, r) summary rows.

    Groups are emitted sorted by (algorithm, n, r). Evaluation counts go
    into the statistics whether or not the trial succeeded; failure_rate
    reports how many hit the budget.
    """
    groups: Dict[Tuple[str, int, int], List[TrialResult]] = {}
    for t in results:
        groups.setdefault((t.algorithm, t.n, t.r), []).append(t)
    rows: List[SummaryRow] = []
    for key in sorted(groups):
        algorithm, n, r = key
        members = groups[key]
        data = sorted(float(t.evaluations) for t in members)
        q1 = _quantile_linear(data, 0.25)
        median = _quantile_linear(data, 0.5)
        q3 = _quantile_linear(data, 0.75)
        iqr = q3 - q1
        lo_fence = q1 - 1.5 * iqr
        hi_fence = q3 + 1.5 * iqr
        whisker_low = min(v for v in data if v >= lo_fence)
        whisker_high = max(v for v in data if v <= hi_fence)
        outliers = sum(1 for v in data if v < lo_fence or v > hi_fence)
        rows.append(
            SummaryRow(
                algorithm=algorithm,
                n=n,
                r=r,
                count=len(data),
                mean=_ordered_mean(data),
                q1=q1,
                median=median,
                q3=q3,
                whisker_low=whisker_low,
                whisker_high=whisker_high,
                outliers=outliers,
                failure_rate=failure_rate(members),
            )
        )
    return rows


# --- CSV IO ------------------------------------------------------------------


def result_to_row(t: TrialResult) -> List[str]:
    return [
        t.algorithm,
        str(t.n),
        str(t.r),
        format_number(t.param1),
        format_number(t.param2),
        str(t.seed),
        str(t.evaluations),
        "true" if t.success else "false",
        repr(float(t.wall_time_s)),
    ]


def write_results_csv(results: Iterable[TrialResult], path: Union[str, Path], sort: bool = True) -> None:
    rows = list(results)
    if sort:
        rows.sort(key=result_sort_key)
    with open(path, "w", newline="") as fh:
        fh.write(",".join(RESULTS_HEADER) + "\n")
        for t in rows:
            fh.write(",".join(result_to_row(t)) + "\n")


def read_results_csv(path: Union[str, Path]) -> List[TrialResult]:
    out: List[TrialResult] = []
    with open(path, "r", newline="") as fh:
        header = fh.readline().strip()
        if header.split(",") != list(RESULTS_HEADER):
            raise ValueError(f"unexpected results header in {path}: {header!r}")
        for line in fh:
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != len(RESULTS_HEADER):
                raise ValueError(f"malformed results row: {line!r}")
            out.append(
                TrialResult(
                    algorithm=parts[0],
                    n=int(parts[1]),
                    r=int(parts[2]),
                    param1=float(parts[3]),
                    param2=float(parts[4]),
                    seed=int(parts[5]),
                    evaluations=int(parts[6]),
                    success=parts[7] == "true",
                    wall_time_s=float(parts[8]),
                )
            )
    return out


def summary_to_row(s: SummaryRow) -> List[str]:
    return [
        s.algorithm,
        str(s.n),
        str(s.r),
        str(s.count),
        format_number(s.mean),
        format_number(s.q1),
        format_number(s.median),
        format_number(s.q3),
        format_number(s.whisker_low),
        format_number(s.whisker_high),
        str(s.outliers),
        format_number(s.failure_rate),
    ]


def write_summary_csv(rows: Iterable[SummaryRow], path: Union[str, Path]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(",".join(SUMMARY_HEADER) + "\n")
        for s in rows:
            fh.write(",".join(summary_to_row(s)) + "\n")


def read_summary_csv(path: Union[str, Path]) -> List[SummaryRow]:
    out: List[SummaryRow] = []
    with open(path, "r", newline="") as fh:
        header = fh.readline().strip()
        if header.split(",") != list(SUMMARY_HEADER):
            raise ValueError(f"unexpected summary header in {path}: {header!r}")
        for line in fh:
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != len(SUMMARY_HEADER):
                raise ValueError(f"malformed summary row: {line!r}")
            out.append(
                SummaryRow(
                    algorithm=parts[0],
                    n=int(parts[1]),
                    r=int(parts[2]),
                    count=int(parts[3]),
                    mean=float(parts[4]),
                    q1=float(parts[5]),
                    median=float(parts[6]),
                    q3=float(parts[7]),
                    whisker_low=float(parts[8]),
                    whisker_high=float(parts[9]),
                    outliers=int(parts[10]),
                    failure_rate=float(parts[11]),
                )
            )
    return out
