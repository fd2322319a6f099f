"""Deterministic, portable pseudo-random sampling.

Generator identity: SplitMix64.  For a 64-bit seed ``s`` the k-th output
(k = 1, 2, ...) is ``mix64(s + k * GOLDEN_GAMMA) mod 2**64`` where ``mix64``
is the standard xor-shift/multiply finalizer below.  Because the state is a
pure function of (seed, k) the stream can be produced scalar or in batches
and reproduced bit-for-bit in any language.

Unit samples are ``((x >> 11) + 1) * 2**-53``, uniform on (0, 1].  Categorical
draws use the inverse CDF with right-closed intervals: outcome i owns
(c_{i-1}, c_i] where c_i is the cumulative probability, so a zero-probability
outcome owns an empty interval and is never drawn.  The final cumulative
value is pinned to 1.0.
"""

from __future__ import annotations

from bisect import bisect_left

import numpy as np

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB
_MASK64 = (1 << 64) - 1


def mix64(z: int) -> int:
    """The SplitMix64 output finalizer (a bijection on 64-bit words)."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX_1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_2) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Scalar stream view of the generator; the k-th output is mix64(seed + k*gamma)."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & _MASK64
        return mix64(self._state)

    def next_unit(self) -> float:
        """Uniform on (0, 1] with 53-bit resolution."""
        return ((self.next_uint64() >> 11) + 1) * 2.0**-53

    def draw_index(self, cumulative: list[float]) -> int:
        """Inverse-CDF draw with right-closed intervals."""
        return bisect_left(cumulative, self.next_unit())


def batch_uint64(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs start+1 .. start+count of the stream, identical to the scalar view."""
    k = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK64) + k * np.uint64(GOLDEN_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX_1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX_2)
    return z ^ (z >> np.uint64(31))


def batch_units(seed: int, start: int, count: int) -> np.ndarray:
    """Uniform samples on (0, 1] matching SplitMix64.next_unit draw for draw."""
    return ((batch_uint64(seed, start, count) >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0**-53


def cumulative_weights(probs) -> list[float]:
    """Cumulative sums with the final value pinned to exactly 1.0."""
    cum: list[float] = []
    running = 0.0
    for p in probs:
        running += float(p)
        cum.append(running)
    cum[-1] = 1.0
    return cum


def batch_indices(seed: int, start: int, count: int, cumulative: list[float]) -> np.ndarray:
    """Vectorized inverse-CDF draws, identical to SplitMix64.draw_index."""
    u = batch_units(seed, start, count)
    return np.searchsorted(np.asarray(cumulative, dtype=np.float64), u, side="left")
