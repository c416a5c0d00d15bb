#!/usr/bin/env python3
"""Compare the unit step with the heavy-tailed step.

The heavy-tailed operator draws an exponent I with P(I=i) proportional to
1/(i * (log i)^(1+eps)) and steps by 2^(I-2). Small eps puts most of the
mass past any finite table; those draws saturate at the 2^62 cap, which is
sound because any step that large is rejected no matter what.
"""

import numpy as np

import intevo as iv

for eps in (1.0, 0.1, 0.001):
    sampler = iv.get_sampler(eps, 2.0)
    est = sampler.c_estimate
    print(f"eps = {eps}")
    print(f"  c_eps = {est.value!r}  bracket width {est.width:.3e}  "
          f"(tolerance met: {est.tolerance_met})")
    print(f"  P(I=2) = {sampler.probability_of(2):.6f}   "
          f"P(saturate) = {sampler.tail_mass:.6f}")

    draws = sampler.sample_exponents(iv.make_rng(1), 200_000)
    sat_share = float(np.mean(draws == -1))
    print(f"  200k draws: saturated {100 * sat_share:.2f}%, "
          f"largest tabulated exponent seen {draws.max()}")
    print()

# what this means for actual mutations: one position's proposed moves
# (at eps=1 the tail is light enough that most draws stay tabulated)
rng = iv.make_rng(7)
sampler = iv.get_sampler(1.0, 2.0)
steps = sorted(abs(iv.heavy_tailed_step(sampler, 0, rng)) for _ in range(12))
print("12 heavy-tailed step magnitudes (eps=1):", steps)
steps = sorted(abs(iv.pm1_step(0, rng)) for _ in range(12))
print("12 unit step magnitudes:                ", steps)
