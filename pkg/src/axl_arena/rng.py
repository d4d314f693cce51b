"""Counter-based random streams and seed derivation.

Every random draw in the package comes from a :class:`Stream`, which is the
SplitMix64 generator: the k-th output of a stream seeded with ``s`` is
``mix64(s + k * GAMMA)`` (mod 2**64).  The algorithm is fixed and portable,
so a given seed produces the same sequence on every platform and in every
process, which is what makes parallel tournaments reproducible.

Seeds for sub-computations (a match, a repetition's edge sample, a Moran
generation) are derived by folding integer fields into a master seed with the
same avalanche function; they never depend on wall-clock time or scheduling.
"""

from __future__ import annotations

from collections.abc import Sequence

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_TWO_POW_53 = float(1 << 53)


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective 64-bit avalanche."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, *fields: int) -> int:
    """Fold ``fields`` into ``seed``, returning a new 64-bit seed.

    Each step is ``h = mix64(h ^ mix64(field + GAMMA))``.  For a fixed prefix
    every step is a bijection of the field, so seeds that differ in exactly
    one field never collide.  Negative fields are taken modulo 2**64.
    """
    h = mix64(seed & MASK64)
    for field in fields:
        h = mix64(h ^ mix64((field + GAMMA) & MASK64))
    return h


class Stream:
    """A SplitMix64 stream.

    Not thread-safe; every match or process owns its own stream.
    """

    __slots__ = ("seed", "_state")

    def __init__(self, seed: int) -> None:
        self.seed = seed & MASK64
        self._state = self.seed

    def __repr__(self) -> str:
        return f"Stream(seed={self.seed:#018x})"

    def next_u64(self) -> int:
        self._state = (self._state + GAMMA) & MASK64
        return mix64(self._state)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / _TWO_POW_53

    def bernoulli(self, p: float) -> bool:
        """True with probability ``p``; always consumes exactly one draw."""
        return self.random() < p

    def randbelow(self, n: int) -> int:
        """Integer in [0, n) by multiply-shift (bias below n / 2**64)."""
        if n <= 0:
            raise ValueError("n must be positive")
        return (self.next_u64() * n) >> 64

    def weighted_index(self, weights: Sequence[float]) -> int:
        """Index drawn with probability proportional to ``weights``."""
        total = sum(weights)
        if total <= 0:
            raise ValueError("weights must have a positive sum")
        target = self.random() * total
        acc = 0.0
        for i, w in enumerate(weights):
            acc += w
            if target < acc:
                return i
        # Rounding can leave target == acc on the last positive weight.
        return max(i for i, w in enumerate(weights) if w > 0)
