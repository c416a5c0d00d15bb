#!/usr/bin/env python3
"""
Targets, norms, and the fitness function
========================================

A target a in Z^n defines the fitness f(x) = sum_i |a_i - x_i|, which the
algorithms minimize down to 0. The three norms of a (L1, max, Hamming)
are the quantities the runtime bounds are expressed in.
"""

import intevo as iv

a = iv.TargetVector([7, -3, 0, 12])
print(f"target     : {a.components}")
print(f"|a|_1      : {a.l1}")
print(f"|a|_inf    : {a.linf}")
print(f"|a|_H      : {a.hamming}  (non-zero positions)")
print()

# every run starts at the origin, so the starting fitness is |a|_1
for x in ([0, 0, 0, 0], [7, -3, 0, 0], [7, -3, 0, 12]):
    print(f"f({x}) = {iv.eval_fitness(a, x)}")
print()

# the harness sweeps all-r targets, where both norms are easy to read off
for n, r in ((2, 10), (10, 1000)):
    t = iv.TargetVector.all_equal(n, r)
    print(f"all_equal(n={n}, r={r}): |a|_1 = {t.l1}, |a|_inf = {t.linf}")
