"""Command-line front end.

Subcommands: run, bench, oracle, drift, approx, summarize. Exit codes are 0
on success, 1 for usage or validation problems, 2 for internal errors.

Integer flags accept power tokens (10^6) and ranges accept lo:hi:step with
inclusive endpoints plus comma-separated combinations (10:150:10 or
32,64,10^3).

`bench --config FILE` reads flat key=value lines whose keys are the long
flag names with dashes as underscores; explicit flags override the file.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .algorithms import AlgorithmSpec, EaState, PlusMinusOneStep, RunBudget
from .analysis import (
    ChainSpec,
    ExpPotential,
    drift_constant_check,
    estimate_drift,
    exact_hitting_time,
    time_to_approximation,
)
from .core import TargetVector
from .engine import run_trial
from .harness import (
    ExperimentConfig,
    RESULTS_HEADER,
    format_number,
    read_results_csv,
    result_sort_key,
    result_to_row,
    run_matrix,
    summarize,
    summary_to_row,
    SUMMARY_HEADER,
    write_summary_csv,
)


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise CliError(message)


def parse_int_scalar(text: str) -> int:
    t = str(text).strip().replace("_", "")
    try:
        if "^" in t:
            base, _, exp = t.partition("^")
            return int(base) ** int(exp)
        return int(t)
    except (ValueError, TypeError) as exc:
        raise CliError(f"not an integer: {text!r}") from exc


def parse_int_values(text: str) -> Tuple[int, ...]:
    """Comma-separated integers and inclusive lo:hi:step ranges."""
    out: List[int] = []
    for token in str(text).split(","):
        token = token.strip()
        if not token:
            raise CliError(f"empty token in {text!r}")
        if ":" in token:
            parts = token.split(":")
            if len(parts) == 2:
                lo, hi, step = parse_int_scalar(parts[0]), parse_int_scalar(parts[1]), 1
            elif len(parts) == 3:
                lo, hi, step = (parse_int_scalar(p) for p in parts)
            else:
                raise CliError(f"bad range {token!r}, expected lo:hi or lo:hi:step")
            if step < 1:
                raise CliError(f"range step must be positive in {token!r}")
            if hi < lo:
                raise CliError(f"empty range {token!r}")
            out.extend(range(lo, hi + 1, step))
        else:
            out.append(parse_int_scalar(token))
    return tuple(out)


def _read_config_file(path: str) -> Dict[str, str]:
    out: Dict[str, str] = {}
    p = Path(path)
    if not p.is_file():
        raise CliError(f"config file not found: {path}")
    for lineno, raw in enumerate(p.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise CliError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _merged(args: argparse.Namespace, filecfg: Dict[str, str], key: str, fallback):
    cli_val = getattr(args, key, None)
    if cli_val is not None:
        return cli_val
    if key in filecfg:
        return filecfg[key]
    return fallback


def _algorithm_spec(name: str, epsilon, log_base, alpha, beta) -> AlgorithmSpec:
    kwargs = {}
    if epsilon is not None:
        kwargs["epsilon"] = float(epsilon)
    if log_base is not None:
        kwargs["log_base"] = float(log_base)
    if alpha is not None:
        kwargs["alpha"] = float(alpha)
    if beta is not None:
        kwargs["beta"] = float(beta)
    return AlgorithmSpec(name, **kwargs)


def _print_result_csv(results) -> None:
    print(",".join(RESULTS_HEADER))
    for t in results:
        print(",".join(result_to_row(t)))


def cmd_run(args) -> int:
    spec = _algorithm_spec(args.algo, args.epsilon, args.log_base, args.alpha, args.beta)
    n = parse_int_scalar(args.n)
    r = parse_int_scalar(args.r)
    a = TargetVector.all_equal(n, r)
    budget = RunBudget(
        max_evaluations=parse_int_scalar(args.budget),
        box_upper=r if args.box else None,
    )
    result = run_trial(spec, a, budget, args.seed)
    _print_result_csv([result])
    return 0


def cmd_bench(args) -> int:
    filecfg = _read_config_file(args.config) if args.config else {}
    algo = _merged(args, filecfg, "algo", None)
    if algo is None:
        raise CliError("bench needs --algo (or algo= in the config file)")
    out_path = _merged(args, filecfg, "out", None)
    if out_path is None:
        raise CliError("bench needs --out (or out= in the config file)")
    n_values = parse_int_values(_merged(args, filecfg, "n", "10"))
    r_values = parse_int_values(_merged(args, filecfg, "r", None) or _fail("bench needs --r"))
    reps = parse_int_scalar(_merged(args, filecfg, "reps", "10"))
    seed = parse_int_scalar(_merged(args, filecfg, "seed", "0"))
    budget = parse_int_scalar(_merged(args, filecfg, "budget", "10^9"))
    workers = parse_int_scalar(_merged(args, filecfg, "workers", "1"))
    box = args.box or str(filecfg.get("box", "false")).lower() == "true"
    summary_path = _merged(args, filecfg, "summary", None)
    spec = _algorithm_spec(
        algo,
        _merged(args, filecfg, "epsilon", None),
        _merged(args, filecfg, "log_base", None),
        _merged(args, filecfg, "alpha", None),
        _merged(args, filecfg, "beta", None),
    )
    config = ExperimentConfig(
        algorithm=spec,
        n_values=n_values,
        r_values=r_values,
        repetitions=reps,
        budget=RunBudget(max_evaluations=budget),
        base_seed=seed,
        workers=workers,
        box_clamp=box,
    )
    # Open outputs before any trial runs so a bad path fails at startup.
    out_fh = open(out_path, "w", newline="")
    summary_fh = open(summary_path, "w", newline="") if summary_path else None
    try:
        results = run_matrix(config)
        rows = sorted(results, key=result_sort_key)
        out_fh.write(",".join(RESULTS_HEADER) + "\n")
        for t in rows:
            out_fh.write(",".join(result_to_row(t)) + "\n")
        if summary_fh is not None:
            summary_fh.write(",".join(SUMMARY_HEADER) + "\n")
            for s in summarize(rows):
                summary_fh.write(",".join(summary_to_row(s)) + "\n")
    finally:
        out_fh.close()
        if summary_fh is not None:
            summary_fh.close()
    print(f"wrote {len(rows)} rows to {out_path}")
    if summary_path:
        print(f"wrote summary to {summary_path}")
    return 0


def _fail(message: str):
    raise CliError(message)


def cmd_oracle(args) -> int:
    n = parse_int_scalar(args.n)
    d_values = parse_int_values(args.d)
    if len(d_values) == 1:
        start = (d_values[0],) * n
    elif len(d_values) == n:
        start = d_values
    else:
        raise CliError(f"--d needs 1 or {n} values, got {len(d_values)}")
    spec = ChainSpec(algorithm=args.algo, n=n, max_distance=max(max(start), 1))
    print(format_number(exact_hitting_time(spec, start)))
    return 0


def cmd_drift(args) -> int:
    omega = float(args.omega)
    if args.d is None:
        print(f"{drift_constant_check(omega):.7f}")
        return 0
    n = parse_int_scalar(args.n)
    d = parse_int_scalar(args.d)
    a = TargetVector.all_equal(n, d)
    state = EaState.initial(a, PlusMinusOneStep())
    report = estimate_drift(
        state, a, ExpPotential(omega),
        samples=parse_int_scalar(args.samples), seed=args.seed,
    )
    print(f"potential_before={format_number(report.potential_before)}")
    print(f"drift_mean={report.mean!r}")
    print(f"drift_stderr={report.stderr!r}")
    print(f"bound={report.bound!r}")
    return 0


def cmd_approx(args) -> int:
    spec = _algorithm_spec(args.algo, args.epsilon, args.log_base, args.alpha, args.beta)
    n = parse_int_scalar(args.n)
    r = parse_int_scalar(args.r)
    a = TargetVector.all_equal(n, r)
    budget = RunBudget(max_evaluations=parse_int_scalar(args.budget))
    ratio = float(args.ratio)
    reps = parse_int_scalar(args.reps)
    results = [
        time_to_approximation(spec, a, ratio, budget, seed)
        for seed in (args.seed + k for k in range(reps))
    ]
    mean = sum(t.evaluations for t in results) / len(results)
    if args.out:
        from .harness import write_results_csv

        write_results_csv(results, args.out)
        print(f"wrote {len(results)} rows to {args.out}")
    print(format_number(mean))
    return 0


def cmd_summarize(args) -> int:
    results = read_results_csv(getattr(args, "in"))
    rows = summarize(results)
    if args.out:
        write_summary_csv(rows, args.out)
        print(f"wrote {len(rows)} summary rows to {args.out}")
    else:
        print(",".join(SUMMARY_HEADER))
        for s in rows:
            print(",".join(summary_to_row(s)))
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="intevo", description="Integer-lattice search heuristics and benchmarks.")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add_algo_params(p, with_algo=True, algo_required=True):
        if with_algo:
            p.add_argument("--algo", choices=("ea_pm1", "ea_heavy", "rls"),
                           required=algo_required, default=None)
        p.add_argument("--epsilon", type=float, default=None, help="heavy-tail decay (ea_heavy)")
        p.add_argument("--log-base", dest="log_base", type=float, default=None, help="log base of the tail law (ea_heavy)")
        p.add_argument("--alpha", type=float, default=None, help="velocity growth factor (rls)")
        p.add_argument("--beta", type=float, default=None, help="velocity shrink factor (rls)")

    p_run = sub.add_parser("run", help="one trial against the all-r target")
    add_algo_params(p_run)
    p_run.add_argument("--n", required=True)
    p_run.add_argument("--r", required=True)
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--budget", default="10^9")
    p_run.add_argument("--box", action="store_true", help="clamp proposals into [0, r]")
    p_run.set_defaults(func=cmd_run)

    p_bench = sub.add_parser("bench", help="run an (n, r, repetition) matrix to a results CSV")
    add_algo_params(p_bench, algo_required=False)
    p_bench.add_argument("--n", default=None, help="n values (list/range syntax)")
    p_bench.add_argument("--r", default=None, help="r values (list/range syntax)")
    p_bench.add_argument("--reps", default=None)
    p_bench.add_argument("--seed", default=None)
    p_bench.add_argument("--budget", default=None)
    p_bench.add_argument("--workers", default=None)
    p_bench.add_argument("--box", action="store_true")
    p_bench.add_argument("--out", default=None)
    p_bench.add_argument("--summary", default=None, help="also write the summary CSV here")
    p_bench.add_argument("--config", default=None, help="key=value file; flags override it")
    p_bench.set_defaults(func=cmd_bench)

    p_oracle = sub.add_parser("oracle", help="exact expected hitting time of a unit-step chain")
    p_oracle.add_argument("--algo", choices=("ea_pm1", "rls_fixed_v1"), required=True)
    p_oracle.add_argument("--n", required=True)
    p_oracle.add_argument("--d", required=True, help="start distance (scalar or comma list)")
    p_oracle.set_defaults(func=cmd_oracle)

    p_drift = sub.add_parser("drift", help="drift-window constant, or a sampled drift report")
    p_drift.add_argument("--omega", required=True, type=float)
    p_drift.add_argument("--n", default="1")
    p_drift.add_argument("--d", default=None, help="estimate drift at the all-d state")
    p_drift.add_argument("--samples", default="10000")
    p_drift.add_argument("--seed", type=int, default=0)
    p_drift.set_defaults(func=cmd_drift)

    p_approx = sub.add_parser("approx", help="evaluations until fitness reaches ratio * l1")
    add_algo_params(p_approx)
    p_approx.add_argument("--ratio", required=True, type=float)
    p_approx.add_argument("--n", required=True)
    p_approx.add_argument("--r", required=True)
    p_approx.add_argument("--reps", default="1")
    p_approx.add_argument("--seed", type=int, default=0)
    p_approx.add_argument("--budget", default="10^9")
    p_approx.add_argument("--out", default=None)
    p_approx.set_defaults(func=cmd_approx)

    p_sum = sub.add_parser("summarize", help="collapse a results CSV into the summary CSV")
    p_sum.add_argument("--in", dest="in", required=True)
    p_sum.add_argument("--out", default=None)
    p_sum.set_defaults(func=cmd_summarize)

    return parser


def cli_dispatch(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 1
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch())
