"""Deterministic 64-bit PRNG used by every randomized component.

The generator is SplitMix64 (Steele, Lea, Flood: "Fast splittable
pseudorandom number generators", OOPSLA 2014).  It was chosen because it
is tiny, well documented, splittable, and its output stream depends on
nothing but this file, so identical seeds give identical graphs on every
platform and Python version.  Do not change the algorithm or the
derivation scheme; recorded results depend on it.
"""

from __future__ import annotations

from typing import List, MutableSequence, Sequence, TypeVar

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

T = TypeVar("T")


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective avalanche mix on 64 bits."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, *keys: int) -> int:
    """Derive a child seed from (seed, keys), stable across runs.

    Used to expand one campaign seed into independent per-job seeds.
    """
    h = mix64(seed)
    for k in keys:
        h = mix64(h ^ ((k * _GAMMA) & _MASK64))
    return h


class Rng:
    """SplitMix64 stream with the handful of draws the generators need."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return mix64(self._state)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased via rejection sampling."""
        if n <= 0:
            raise ValueError(f"randrange needs n >= 1, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def shuffle(self, xs: MutableSequence[T]) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(xs) - 1, 0, -1):
            j = self.randrange(i + 1)
            xs[i], xs[j] = xs[j], xs[i]

    def choice(self, xs: Sequence[T]) -> T:
        return xs[self.randrange(len(xs))]

    def sample_indices(self, population: int, k: int) -> List[int]:
        """Uniform k-subset of range(population) by Floyd's algorithm."""
        if not 0 <= k <= population:
            raise ValueError(f"cannot sample {k} of {population}")
        chosen: set[int] = set()
        for t in range(population - k, population):
            r = self.randrange(t + 1)
            chosen.add(t if r in chosen else r)
        return sorted(chosen)

    def split(self) -> "Rng":
        """Independent child stream; advances this stream by one draw."""
        return Rng(self.next_u64())
