"""Law-of-large-numbers experiments behind the two entropy readings.

Logical entropy is the chance that a pair of independent draws differs, and
also the long-run average probability of "being different" along one sampled
sequence; Shannon entropy is the long-run bits-per-letter of sampled
messages.  The estimators here check those limits empirically.

Every run is a pure function of its arguments: the stream is SplitMix64 (see
:mod:`logent.rng`), consumed in draw order, so two runs with the same seed
produce bit-identical reports.  Standard errors come from the sample
variance, not from analytic formulas, so they remain honest for arbitrary
user-supplied distributions.  The typical-message check is a sampled one:
real message ensembles only concentrate asymptotically, so membership of an
exact typical set is not tested, only the convergence of the observed
bits-per-letter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .logical import Distribution
from .rng import batch_indices, cumulative_weights
from .shannon import shannon_entropy_dist


@dataclass(frozen=True)
class SampleReport:
    """One estimator run: the estimate, its scale, and what reproduces it."""

    estimate: float
    trials: int
    std_error: float
    seed: int

    def __post_init__(self) -> None:
        if self.std_error < 0:
            raise DomainError("standard error cannot be negative")


def _check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")


def _std_error(values: np.ndarray) -> float:
    if values.size < 2 or values.min() == values.max():
        return 0.0
    return float(np.std(values, ddof=1) / math.sqrt(values.size))


def pair_distinction_rate(p: Distribution, trials: int, seed: int) -> SampleReport:
    """Fraction of independent draw pairs that land on distinct outcomes.

    Unbiased estimator of the logical entropy of ``p``.  Trial t consumes
    stream draws 2t-1 and 2t.
    """
    _check_positive("trials", trials)
    cum = cumulative_weights(p.probs)
    draws = batch_indices(seed, 0, 2 * trials, cum)
    distinct = (draws[0::2] != draws[1::2]).astype(np.float64)
    return SampleReport(
        estimate=float(distinct.mean()),
        trials=trials,
        std_error=_std_error(distinct),
        seed=seed,
    )


def average_difference_rate(p: Distribution, sequence_length: int, seed: int) -> SampleReport:
    """Mean of 1 - Pr(u_j) along one sampled sequence u_1 .. u_N.

    Converges to the logical entropy of ``p`` as the sequence grows; for the
    uniform distribution every term is already 1 - 1/n.
    """
    _check_positive("sequence_length", sequence_length)
    cum = cumulative_weights(p.probs)
    draws = batch_indices(seed, 0, sequence_length, cum)
    probs = np.asarray([float(q) for q in p.probs])
    values = 1.0 - probs[draws]
    return SampleReport(
        estimate=float(values.mean()),
        trials=sequence_length,
        std_error=_std_error(values),
        seed=seed,
    )


def typical_message_stats(
    p: Distribution, message_length: int, samples: int, seed: int
) -> SampleReport:
    """Mean observed bits per letter, -(1/N) log2 Pr(message), over sampled messages.

    Converges to the Shannon entropy of ``p``; for an equiprobable alphabet
    every message gives the same value, so the spread is exactly zero.
    Message s (0-based) consumes stream draws s*N+1 .. (s+1)*N.
    """
    _check_positive("message_length", message_length)
    _check_positive("samples", samples)
    cum = cumulative_weights(p.probs)
    draws = batch_indices(seed, 0, samples * message_length, cum)
    draws = draws.reshape(samples, message_length)
    log_probs = np.log2(np.asarray([float(q) for q in p.probs])[draws])
    per_message = -log_probs.sum(axis=1) / message_length
    return SampleReport(
        estimate=float(per_message.mean()),
        trials=samples,
        std_error=_std_error(per_message),
        seed=seed,
    )


def typical_count_log(p: Distribution, message_length: int) -> float:
    """log2 of the number of typical length-N messages: exactly N * H(p).

    Analytic, no sampling: the typical messages are equiprobable with
    probability prod(p_k**(p_k * N)), so their count is the reciprocal.
    """
    _check_positive("message_length", message_length)
    return message_length * shannon_entropy_dist(p)
