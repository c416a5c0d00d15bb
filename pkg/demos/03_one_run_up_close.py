#!/usr/bin/env python3
"""Watch single runs, then step through one by hand."""

import intevo as iv


def main():
    a = iv.TargetVector.all_equal(5, 1000)
    budget = iv.RunBudget(max_evaluations=10**7)
    print(f"target all-1000 in n=5, starting fitness {a.l1}\n")

    for spec in (
        iv.AlgorithmSpec("ea_pm1"),
        iv.AlgorithmSpec("ea_heavy", epsilon=0.1),
        iv.AlgorithmSpec("rls", alpha=1.7, beta=0.9),
    ):
        res = iv.run_trial(spec, a, budget, seed=5)
        print(f"{spec.name:9s} (param1={spec.param_echo()[0]}, param2={spec.param_echo()[1]}): "
              f"{res.evaluations} evaluations, success={res.success}")

    # now the same thing in slow motion with the reference loop: the state
    # is mutable and iterate() advances it by exactly one evaluation
    print("\nfirst 15 iterations of the velocity-adapting local search:")
    spec = iv.AlgorithmSpec("rls", alpha=1.7, beta=0.9)
    small = iv.TargetVector.all_equal(2, 50)
    state = spec.make_state(small)
    rng = iv.make_rng(5)
    print(f"  start: x={state.x}, v={state.v}, fitness={state.fitness}")
    for _ in range(15):
        iv.iterate(state, small, rng)
        vs = [round(v, 3) for v in state.v]
        print(f"  eval {state.evaluations:2d}: x={state.x}, v={vs}, fitness={state.fitness}")
    print("\nvelocities grow on strict improvement, shrink (floored at 1) otherwise")


if __name__ == "__main__":
    main()
