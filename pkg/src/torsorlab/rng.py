"""Deterministic portable randomness.

All sampled checks derive from SplitMix64 (Steele-Lea-Flood), a fixed 64-bit
generator with a published closed form, so reports are reproducible across
platforms and Python versions.  Trial i of a run seeded with s uses a fresh
generator seeded with mix64(s + i * GOLDEN), making every trial independent of
execution order (shardable by index range).
"""

from __future__ import annotations

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z):
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next_u64(self):
        self.state = (self.state + GOLDEN) & MASK
        return mix64(self.state)

    def below(self, n):
        """Uniform-ish integer in [0, n); modulo reduction, documented as such."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        return self.next_u64() % n


def trial_rng(seed, index):
    return SplitMix64(mix64((seed + index * GOLDEN) & MASK))
