"""Portable seeded random streams.

Uniforms come from SplitMix64 (Steele, Lea & Flood 2014), which is a few
lines of 64-bit integer arithmetic and is easy to reproduce in any language.
Normals use the cosine branch of Box-Muller, one normal per two uniforms:

    u = ((next_u64() >> 11) + 0.5) * 2**-53        # in (0, 1)
    normal = sqrt(-2 ln u1) * cos(2 pi u2)

Monte Carlo sample ``i`` under seed ``s`` draws from its own stream whose
initial state is ``mix64(s ^ mix64(i + GOLDEN))`` (all arithmetic mod 2**64),
so samples can be evaluated in any order or in parallel.
"""

from __future__ import annotations

import math

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise TypeError("seed must be an int")
        if not 0 <= seed <= MASK64:
            raise ValueError("seed must be in [0, 2**64)")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def uniform(self) -> float:
        return ((self.next_u64() >> 11) + 0.5) * 2.0**-53

    def normal(self) -> float:
        u1 = self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)


def sample_stream(seed: int, index: int) -> SplitMix64:
    """Independent stream for Monte Carlo sample ``index``."""
    if seed < 0 or index < 0:
        raise ValueError("seed and index must be non-negative")
    return SplitMix64(mix64((seed & MASK64) ^ mix64(index + GOLDEN)))
