"""Deterministic Gaussian noise stream, bit-reproducible across platforms.

The generator is fully pinned so golden files survive reimplementation:

* splitmix64 over the seed: state += 0x9E3779B97F4A7C15, then two
  xor-shift-multiply mixes (0xBF58476D1CE4E5B9, 0x94D049BB133111EB) and a
  final xor-shift, all mod 2**64;
* uniforms are the top 53 bits of each word scaled by 2**-53, giving [0, 1);
* normals come from Box-Muller pairs r*cos(phi), r*sin(phi) with
  r = sqrt(-2*ln(1 - u1)) and phi = 2*pi*u2, consumed in that order.
"""

import math

import numpy as np

from .errors import InvalidParameterError

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Minimal splitmix64 word stream."""

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64

    def next_word(self) -> int:
        self._state = (self._state + _GOLDEN_GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_word() >> 11) * 2.0 ** -53


def standard_normals(seed: int, count: int) -> np.ndarray:
    """First `count` standard normals of the stream for `seed`."""
    if count < 0:
        raise InvalidParameterError("count must be >= 0")
    rng = SplitMix64(seed)
    out = np.empty(2 * ((count + 1) // 2))
    for i in range(0, out.shape[0], 2):
        u1 = rng.next_float()
        u2 = rng.next_float()
        radius = math.sqrt(-2.0 * math.log(1.0 - u1))
        angle = 2.0 * math.pi * u2
        out[i] = radius * math.cos(angle)
        out[i + 1] = radius * math.sin(angle)
    return out[:count]


def gaussian_noise(seed: int, count: int, variance: float) -> np.ndarray:
    """Zero-mean draws with the given variance."""
    if variance < 0:
        raise InvalidParameterError("variance must be >= 0")
    return standard_normals(seed, count) * math.sqrt(variance)
