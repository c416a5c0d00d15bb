"""Integer-lattice search primitives: target vectors, L1 fitness, norms.

The search space is Z^n and fitness is the L1 distance to a fixed target
vector. All arithmetic is exact Python integers; anything that could exceed
the signed 64-bit range saturates at FITNESS_CEILING instead of wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

# Fitness and norm accumulation saturate here instead of overflowing.
FITNESS_CEILING = INT64_MAX


def clamp_to_int64(value: int) -> int:
    """Clamp an integer into the signed 64-bit range."""
    if value > INT64_MAX:
        return INT64_MAX
    if value < INT64_MIN:
        return INT64_MIN
    return value


class TargetVector:
    """The optimum a in Z^n. Norms are computed once at construction."""

    __slots__ = ("components", "n", "l1", "linf", "hamming", "_arr")

    def __init__(self, components: Iterable[int]):
        comps = tuple(int(c) for c in components)
        if len(comps) == 0:
            raise ValueError("target vector needs at least one component")
        if not any(comps):
            raise ValueError("target vector must be non-zero")
        for c in comps:
            if not INT64_MIN <= c <= INT64_MAX:
                raise ValueError(f"component {c} outside the signed 64-bit range")
        self.components = comps
        self.n = len(comps)
        self.l1 = norm_l1(comps)
        self.linf = norm_linf(comps)
        self.hamming = norm_hamming(comps)
        self._arr: Optional[np.ndarray] = None

    @classmethod
    def all_equal(cls, n: int, r: int) -> "TargetVector":
        """The all-r target in dimension n, the shape used by the harness."""
        if n < 1:
            raise ValueError("n must be positive")
        return cls((r,) * n)

    def as_array(self) -> np.ndarray:
        """Components as a read-only int64 array (cached)."""
        if self._arr is None:
            arr = np.asarray(self.components, dtype=np.int64)
            arr.setflags(write=False)
            self._arr = arr
        return self._arr

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TargetVector) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"TargetVector({list(self.components)!r})"


@dataclass
class SearchPoint:
    """A point in Z^n with an optional fitness cache."""

    components: tuple
    cached_fitness: Optional[int] = None

    def fitness(self, a: TargetVector) -> int:
        if self.cached_fitness is None:
            self.cached_fitness = eval_fitness(a, self.components)
        return self.cached_fitness


VectorLike = Union[TargetVector, SearchPoint, Sequence[int]]


def _components(v: VectorLike) -> Sequence[int]:
    if isinstance(v, (TargetVector, SearchPoint)):
        return v.components
    return v


def norm_l1(v: VectorLike) -> int:
    """Sum of absolute components, saturating at FITNESS_CEILING."""
    total = 0
    for c in _components(v):
        total += abs(c)
    return min(total, FITNESS_CEILING)


def norm_linf(v: VectorLike) -> int:
    """Largest absolute component, saturating at FITNESS_CEILING."""
    biggest = max(abs(c) for c in _components(v))
    return min(biggest, FITNESS_CEILING)


def norm_hamming(v: VectorLike) -> int:
    """Number of non-zero components."""
    return sum(1 for c in _components(v) if c != 0)


def eval_fitness(a: Union[TargetVector, Sequence[int]], x: VectorLike) -> int:
    """L1 distance from x to the target, saturating at FITNESS_CEILING.

    Zero if and only if x equals the target. Symmetric in the sense that
    swapping a and x gives the same value.
    """
    ac = _components(a)
    xc = _components(x)
    if len(ac) != len(xc):
        raise ValueError(f"dimension mismatch: target has {len(ac)}, point has {len(xc)}")
    total = 0
    for ai, xi in zip(ac, xc):
        total += abs(ai - xi)
    return min(total, FITNESS_CEILING)
