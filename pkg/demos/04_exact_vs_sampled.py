#!/usr/bin/env python3
"""
Exact hitting times against Monte-Carlo estimates
=================================================

For n in {1, 2} with unit steps the run is a Markov chain on distance
vectors, and E[T] solves a small linear system exactly (in Fractions for
small systems). The sampled means from actual runs should agree to within
a few standard errors; this is the package's main correctness oracle.
"""

import intevo as iv

print("n=1 closed form, E[T] = 2d:")
chain = iv.ChainSpec("ea_pm1", 1, 10)
for d in (1, 3, 10):
    print(f"  d={d:2d}: exact {iv.exact_hitting_time(chain, (d,)):.1f}")

print("\nn=2 table (unit-step EA), exact vs 20k sampled runs:")
chain = iv.ChainSpec("ea_pm1", 2, 4)
print(f"  {'start':8s} {'exact':>10s} {'sampled':>10s} {'stderr':>8s}")
for start in ((1, 1), (2, 1), (2, 2), (4, 3)):
    exact = iv.exact_hitting_time(chain, start)
    mean, se = iv.monte_carlo_hitting_time(chain, start, 20_000, seed=sum(start))
    print(f"  {str(start):8s} {exact:10.4f} {mean:10.4f} {se:8.4f}")

print("\nsame comparison for the frozen-velocity local search:")
chain = iv.ChainSpec("rls_fixed_v1", 2, 4)
for start in ((2, 2), (4, 3)):
    exact = iv.exact_hitting_time(chain, start)
    mean, se = iv.monte_carlo_hitting_time(chain, start, 20_000, seed=sum(start))
    print(f"  {str(start):8s} {exact:10.4f} {mean:10.4f} {se:8.4f}")
