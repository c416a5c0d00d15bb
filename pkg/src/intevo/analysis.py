"""Exact small-instance oracles and theory-side diagnostics.

The oracle views a run through per-position distances d_i = |a_i - x_i|.
For the unit-step algorithms that distance vector is a Markov chain, and for
n <= 2 the expected hitting time of the origin solves a small linear system.
The state space is the simplex {d : sum(d) <= sum(d_start)}: tie acceptance
can push a single component above its start value, so a per-component box is
not closed under the dynamics, but the total never grows.

Also here: the exponential potential and its one-step drift lower bound, the
velocity-aware potential with its parameter validator, Monte-Carlo drift
estimation, and time-to-approximation runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .algorithms import AlgorithmSpec, EaState, HeavyTailedStep, RlsState, RunBudget, TrialResult
from .core import TargetVector, eval_fitness, norm_l1
from .engine import ENGINE_SAFE_L1, batch_hitting_times, run_trial
from .rng import make_rng

CHAIN_ALGORITHMS = ("ea_pm1", "rls_fixed_v1")

# Above this the solver switches from exact rationals to float64.
_EXACT_STATE_LIMIT = 300
_MAX_STATES = 4000


@dataclass(frozen=True)
class ChainSpec:
    """A unit-step distance chain whose hitting time is solved exactly.

    rls_fixed_v1 is the local search with frozen velocities (the alpha =
    beta = 1 degenerate case, every move has magnitude 1).
    """

    algorithm: str
    n: int
    max_distance: int

    def __post_init__(self):
        if self.algorithm not in CHAIN_ALGORITHMS:
            raise ValueError(f"unknown chain algorithm {self.algorithm!r}, expected one of {CHAIN_ALGORITHMS}")
        if self.n not in (1, 2):
            raise ValueError("exact chains are limited to n in {1, 2}")
        if self.max_distance < 1:
            raise ValueError("max_distance must be positive")


def _state_count(n: int, total: int) -> int:
    if n == 1:
        return total + 1
    return (total + 1) * (total + 2) // 2


def _states_for(n: int, total: int) -> List[Tuple[int, ...]]:
    if n == 1:
        return [(d,) for d in range(total + 1)]
    return [(i, j) for i in range(total + 1) for j in range(total + 1 - i)]


def _pos_outcomes(d: int) -> List[Tuple[int, Fraction]]:
    # A unit move from distance d: both signs worsen at the optimum.
    if d == 0:
        return [(1, Fraction(1))]
    return [(d - 1, Fraction(1, 2)), (d + 1, Fraction(1, 2))]


def _transition_row(spec: ChainSpec, d: Tuple[int, ...]) -> Dict[Tuple[int, ...], Fraction]:
    """Exact one-step distribution out of state d (self-loops included)."""
    n = spec.n
    row: Dict[Tuple[int, ...], Fraction] = {}
    total = sum(d)

    def add(dest: Tuple[int, ...], p: Fraction):
        row[dest] = row.get(dest, Fraction(0)) + p

    if spec.algorithm == "ea_pm1":
        p_mut = Fraction(1, n)
        p_keep = 1 - p_mut
        for mask in product((False, True), repeat=n):
            p_mask = Fraction(1)
            for m in mask:
                p_mask *= p_mut if m else p_keep
            if p_mask == 0:
                continue
            per_pos = [
                _pos_outcomes(d[i]) if mask[i] else [(d[i], Fraction(1))]
                for i in range(n)
            ]
            for combo in product(*per_pos):
                p = p_mask
                for _, f in combo:
                    p *= f
                cand = tuple(v for v, _ in combo)
                add(cand if sum(cand) <= total else d, p)
    else:
        for i in range(n):
            for val, f in _pos_outcomes(d[i]):
                cand = d[:i] + (val,) + d[i + 1 :]
                add(cand if sum(cand) <= total else d, Fraction(1, n) * f)

    assert sum(row.values()) == 1
    return row


def _solve_exact(rows: List[Dict[int, Fraction]], m: int) -> List[Fraction]:
    """Gaussian elimination over Fractions for (I - Q) t = 1."""
    A = [[Fraction(0)] * m for _ in range(m)]
    b = [Fraction(1)] * m
    for i, row in enumerate(rows):
        A[i][i] += 1
        for j, p in row.items():
            A[i][j] -= p
    for col in range(m):
        piv = next((r for r in range(col, m) if A[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular hitting-time system: the optimum is unreachable from some state")
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            b[col], b[piv] = b[piv], b[col]
        for r in range(col + 1, m):
            if A[r][col] != 0:
                factor = A[r][col] / A[col][col]
                b[r] -= factor * b[col]
                for c in range(col, m):
                    A[r][c] -= factor * A[col][c]
    t = [Fraction(0)] * m
    for r in range(m - 1, -1, -1):
        acc = b[r]
        for c in range(r + 1, m):
            acc -= A[r][c] * t[c]
        t[r] = acc / A[r][r]
    return t


def _solve_float(rows: List[Dict[int, Fraction]], m: int) -> np.ndarray:
    A = np.eye(m, dtype=np.float64)
    for i, row in enumerate(rows):
        s = 0.0
        for j, p in row.items():
            A[i, j] -= float(p)
            s += float(p)
        # rows reaching the absorbing optimum sum below 1 here because that
        # transition was dropped; anything above 1 is a real construction bug
        if s > 1.0 + 1e-12:
            raise ValueError("transition row drifted from stochasticity")
    try:
        return np.linalg.solve(A, np.ones(m, dtype=np.float64))
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"singular hitting-time system: {exc}") from exc


_table_cache: Dict[Tuple[ChainSpec, int], Dict[Tuple[int, ...], Union[Fraction, float]]] = {}


def hitting_time_table(spec: ChainSpec, start_total: int) -> Dict[Tuple[int, ...], Union[Fraction, float]]:
    """Expected optimum-hitting time for every state with sum <= start_total.

    Values are exact Fractions when the state space is small, float64
    otherwise.
    """
    key = (spec, start_total)
    if key in _table_cache:
        return _table_cache[key]
    count = _state_count(spec.n, start_total)
    if count > _MAX_STATES:
        raise ValueError(f"state space has {count} states, above the solver limit {_MAX_STATES}")
    states = _states_for(spec.n, start_total)
    zero = tuple([0] * spec.n)
    transient = [s for s in states if s != zero]
    index = {s: i for i, s in enumerate(transient)}
    rows: List[Dict[int, Fraction]] = []
    for s in transient:
        row = _transition_row(spec, s)
        rows.append({index[dst]: p for dst, p in row.items() if dst != zero})
    m = len(transient)
    if m <= _EXACT_STATE_LIMIT:
        solved = _solve_exact(rows, m)
        table: Dict[Tuple[int, ...], Union[Fraction, float]] = {zero: Fraction(0)}
        for s, val in zip(transient, solved):
            table[s] = val
    else:
        solved_f = _solve_float(rows, m)
        table = {zero: 0.0}
        for s, val in zip(transient, solved_f):
            table[s] = float(val)
    _table_cache[key] = table
    return table


def exact_hitting_time(spec: ChainSpec, start: Sequence[int]) -> float:
    """Expected evaluations to reach the optimum from the given distance vector."""
    s = tuple(int(v) for v in start)
    if len(s) != spec.n:
        raise ValueError(f"start has {len(s)} components, chain has n={spec.n}")
    if any(v < 0 for v in s):
        raise ValueError("distances must be non-negative")
    if any(v > spec.max_distance for v in s):
        raise ValueError("start exceeds the chain's max_distance")
    return float(hitting_time_table(spec, sum(s))[s])


def monte_carlo_hitting_time(
    spec: ChainSpec,
    start: Sequence[int],
    runs: int,
    seed: int,
) -> Tuple[float, float]:
    """Mean and standard error of the hitting time over seeded runs.

    Runs the actual algorithm (not the chain abstraction) against the target
    whose distance vector is `start`, so agreement with exact_hitting_time
    cross-validates both routes.
    """
    alg = AlgorithmSpec("ea_pm1") if spec.algorithm == "ea_pm1" else AlgorithmSpec("rls", alpha=1.0, beta=1.0)
    a = TargetVector(start)
    times = batch_hitting_times(alg, a, runs, seed)
    mean = float(np.mean(times))
    stderr = float(np.std(times, ddof=1) / math.sqrt(runs))
    return mean, stderr


# --- potentials and drift ---------------------------------------------------


@dataclass(frozen=True)
class ExpPotential:
    """g(x) = sum_i (omega^(d_i) - 1) over per-position distances."""

    omega: float

    def __post_init__(self):
        if not self.omega > 1.0:
            raise ValueError("omega must exceed 1")

    def of_distances(self, distances: Sequence[int]) -> float:
        total = 0.0
        for d in distances:
            try:
                total += self.omega**d - 1.0
            except OverflowError as exc:
                raise OverflowError(f"omega^{d} overflows float64 for omega={self.omega}") from exc
        if math.isinf(total):
            raise OverflowError(f"potential overflows float64 for omega={self.omega}")
        return total

    def value(self, a: TargetVector, x: Sequence[int]) -> float:
        return self.of_distances([abs(ai - xi) for ai, xi in zip(a.components, x)])


def potential_exp_omega(x: Sequence[int], a: TargetVector, omega: float) -> float:
    """Free-function form of ExpPotential: sum_i (omega^|a_i - x_i| - 1)."""
    return ExpPotential(omega).value(a, _point_components(x))


def _point_components(x) -> Sequence[int]:
    return x.components if hasattr(x, "components") else x


def drift_constant_check(omega: float) -> float:
    """The window certificate omega - 1 - e*(omega - 1)^2.

    Positive exactly when 1 < omega < 1 + 1/e, which is the range where the
    exponential potential has a multiplicative drift guarantee.
    """
    return omega - 1.0 - math.e * (omega - 1.0) ** 2


def drift_lower_bound(potential: ExpPotential, n: int, g_value: float) -> float:
    """Guaranteed one-step expected decrease of g under the unit-step EA."""
    c = drift_constant_check(potential.omega) / math.e
    return c / (2.0 * potential.omega * n) * g_value


def rls_constraint_violations(alpha: float, beta: float, c: float, p: float) -> List[str]:
    """Check the parameter ranges the velocity-potential argument needs.

    Returns a list of human-readable violations, empty when all hold.
    """
    out: List[str] = []
    if not 1.0 < alpha <= 2.0:
        out.append(f"alpha={alpha} outside (1, 2]")
    if not 0.5 < beta <= 0.9:
        out.append(f"beta={beta} outside (1/2, 0.9]")
    if not 2 * alpha * beta - beta - alpha > 0:
        out.append(f"2*alpha*beta - beta - alpha = {2 * alpha * beta - beta - alpha} not positive")
    if not alpha + beta > 2:
        out.append(f"alpha + beta = {alpha + beta} not above 2")
    if not alpha * alpha * beta > 1:
        out.append(f"alpha^2 * beta = {alpha * alpha * beta} not above 1")
    if not c > 0:
        out.append(f"c={c} not positive")
    if not 8 * alpha * beta * c + 2 * p + 4 * c / beta <= 1.0 / 16:
        out.append(f"8*alpha*beta*c + 2p + 4c/beta = {8 * alpha * beta * c + 2 * p + 4 * c / beta} above 1/16")
    if not p > 8 * c * ((alpha + beta) / 2 - 1):
        out.append(f"p={p} not above 8c((alpha+beta)/2 - 1) = {8 * c * ((alpha + beta) / 2 - 1)}")
    if not p > 4 * (alpha - 1) * c:
        out.append(f"p={p} not above 4(alpha-1)c = {4 * (alpha - 1) * c}")
    return out


@dataclass(frozen=True)
class RlsPotential:
    """Velocity-aware potential for the adaptive local search.

    Per position: d + c*d*max(2v/d, d/(2v)), plus p*d when v > 2*beta*d;
    zero at d = 0. Construction insists on parameters the decrease argument
    actually covers; use rls_constraint_violations to probe a candidate set
    without raising.
    """

    alpha: float
    beta: float
    c: float = 0.001
    p: float = 0.01

    def __post_init__(self):
        bad = rls_constraint_violations(self.alpha, self.beta, self.c, self.p)
        if bad:
            raise ValueError("invalid potential parameters: " + "; ".join(bad))

    def of_position(self, d: int, v: float) -> float:
        if d == 0:
            return 0.0
        val = d + self.c * d * max(2.0 * v / d, d / (2.0 * v))
        if v > 2.0 * self.beta * d:
            val += self.p * d
        return val

    def value(self, a: TargetVector, x: Sequence[int], v: Sequence[float]) -> float:
        return sum(
            self.of_position(abs(ai - xi), vi)
            for ai, xi, vi in zip(a.components, x, v)
        )


Potential = Union[ExpPotential, RlsPotential]

# Drift estimation is a small-instance diagnostic; this keeps the vectorized
# int64 arithmetic exact even when heavy-tailed steps land in a batch.
_DRIFT_FITNESS_LIMIT = 1 << 40
_DRIFT_TERM_CLAMP = np.int64(1) << np.int64(50)


@dataclass(frozen=True)
class DriftReport:
    """One-step potential decrease, estimated by Monte Carlo."""

    mean: float
    stderr: float
    samples: int
    potential_before: float
    bound: Optional[float]


def estimate_drift(
    state: Union[EaState, RlsState],
    a: TargetVector,
    potential: Potential,
    samples: int = 10_000,
    seed: int = 0,
) -> DriftReport:
    """Estimate E[g(X_t) - g(X_{t+1})] at the given state.

    Samples one algorithm step many times (vectorized, without consuming the
    state's own stream). For the unit-step EA with an exponential potential
    the report also carries the guaranteed lower bound for comparison.
    """
    if samples < 1000:
        raise ValueError("need at least 1000 samples for a usable standard error")
    fx = eval_fitness(a, state.x)
    if fx > _DRIFT_FITNESS_LIMIT:
        raise ValueError("drift estimation expects a small instance (fitness above 2^40)")
    if a.linf > ENGINE_SAFE_L1:
        raise ValueError("drift estimation expects target components within the engine-safe range")
    rng = make_rng(seed)
    ac = a.as_array()
    x = np.asarray(state.x, dtype=np.int64)
    n = a.n
    dist_before = np.abs(ac - x)

    if isinstance(state, EaState):
        if not isinstance(potential, ExpPotential):
            raise TypeError("EA drift is measured against ExpPotential")
        g_before = potential.of_distances(dist_before.tolist())
        mask = rng.random((samples, n)) < (1.0 / n)
        heavy = isinstance(state.step_operator, HeavyTailedStep)
        if heavy:
            sampler = state.step_operator.sampler
            u = rng.random((samples, n))
            k = np.searchsorted(sampler.cdf_table, u, side="right")
            table_len = sampler.cdf_table.shape[0]
            sizes = np.where(
                k < table_len,
                sampler.step_sizes[np.minimum(k, table_len - 1)],
                np.int64(sampler.params.saturation_step),
            )
        else:
            sizes = np.ones((samples, n), dtype=np.int64)
        signs = np.where(rng.random((samples, n)) < 0.5, 1, -1).astype(np.int64)
        y = x + mask * signs * sizes
        terms = np.abs(ac - y) - dist_before
        delta = np.minimum(terms, _DRIFT_TERM_CLAMP).sum(axis=1)
        accept = delta <= 0
        dist_after = np.where(accept[:, None], np.abs(ac - y), dist_before)
        g_after = (potential.omega ** dist_after.astype(np.float64) - 1.0).sum(axis=1)
        if not np.all(np.isfinite(g_after)):
            raise OverflowError("potential overflows float64 on sampled offspring")
        decreases = g_before - g_after
        bound = drift_lower_bound(potential, n, g_before)
        if heavy:
            bound = None  # the guarantee is proved for the unit-step operator
    else:
        if not isinstance(potential, RlsPotential):
            raise TypeError("local-search drift is measured against RlsPotential")
        v = np.asarray(state.v, dtype=np.float64)
        g_before = potential.value(a, state.x, state.v)
        pos = rng.integers(0, n, size=samples)
        dirs = np.where(rng.random(samples) < 0.5, -1, 1).astype(np.int64)
        steps = np.floor(v[pos]).astype(np.int64)
        yi = x[pos] + dirs * steps
        d_old = dist_before[pos]
        d_new = np.abs(ac[pos] - yi)
        delta = d_new - d_old
        v_old = v[pos]
        v_new = np.where(delta < 0, potential.alpha * v_old, np.maximum(1.0, potential.beta * v_old))
        d_eff = np.where(delta <= 0, d_new, d_old)

        def g_pos(d, vel):
            d_f = d.astype(np.float64)
            with np.errstate(divide="ignore", invalid="ignore"):
                core = d_f + potential.c * d_f * np.maximum(2.0 * vel / d_f, d_f / (2.0 * vel))
                core = core + potential.p * d_f * (vel > 2.0 * potential.beta * d_f)
            return np.where(d > 0, core, 0.0)

        decreases = g_pos(d_old, v_old) - g_pos(d_eff, v_new)
        bound = None

    mean = float(np.mean(decreases))
    stderr = float(np.std(decreases, ddof=1) / math.sqrt(samples))
    return DriftReport(
        mean=mean,
        stderr=stderr,
        samples=samples,
        potential_before=float(g_before),
        bound=bound,
    )


def time_to_approximation(
    spec: AlgorithmSpec,
    a: TargetVector,
    approx_ratio: float,
    budget: RunBudget,
    seed: int,
) -> TrialResult:
    """Run until fitness falls to approx_ratio * norm_l1(a), or the budget ends.

    The threshold is floor(ratio * l1) so the stop test stays an exact
    integer comparison. ratio 1.0 is satisfied by the all-zero start and
    costs zero evaluations; any ratio below 1/l1 demands the optimum itself.
    """
    if not 0.0 < approx_ratio <= 1.0:
        raise ValueError("approx_ratio must lie in (0, 1]")
    threshold = math.floor(approx_ratio * a.l1)
    return run_trial(spec, a, budget, seed, threshold=threshold)
