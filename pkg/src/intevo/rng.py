"""Deterministic seeding shared by every trial runner.

Trial streams come from Philox, a counter-based generator, keyed per trial.
Per-trial keys are derived with a splitmix64-style mix so that the mapping
(base_seed, n, r, repetition) -> stream is stable across platforms and runs.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1


def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def deterministic_mix(*parts: int) -> int:
    """Fold integers into one 64-bit seed, order-sensitive and collision-resistant."""
    h = 0x8C7F0AAC97C4AA2F
    for p in parts:
        h = _splitmix64(h ^ (int(p) & MASK64))
    return h


def make_rng(seed: int) -> np.random.Generator:
    """A Philox stream keyed by the (64-bit truncated) seed."""
    return np.random.Generator(np.random.Philox(key=int(seed) & MASK64))
