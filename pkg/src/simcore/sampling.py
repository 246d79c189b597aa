"""Projective measurement sampling.

Random numbers come from numpy's ``PCG64`` bit generator. A seed plus a stream
number select an independent, reproducible stream through
``SeedSequence(seed, spawn_key=(stream,))``.
"""

import logging
from typing import Dict, Mapping

import numpy as np

from simcore.statevector import Statevector
from utils.exceptions import UsageError

logger = logging.getLogger(__name__)

SAMPLING_STREAM = 0
INIT_STREAM = 1


def make_rng(seed: int, stream: int = SAMPLING_STREAM) -> np.random.Generator:
    """Seeded PCG64 generator for the given stream."""
    if seed < 0:
        raise UsageError(f"Seed must be non-negative, got {seed}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream,))))


def sample_counts(state: Statevector, shots: int, seed: int) -> Dict[int, int]:
    """Measure every qubit ``shots`` times; return outcome index -> count.

    Only outcomes that occurred appear in the histogram.
    """
    if shots < 1:
        raise UsageError(f"shots must be >= 1, got {shots}")
    if not state.is_normalized():
        raise UsageError(f"Cannot sample an unnormalized state (norm {state.norm():.12f})")

    probs = state.probabilities()
    probs = probs / probs.sum()
    counts = make_rng(seed).multinomial(shots, probs)
    histogram = {int(i): int(c) for i, c in enumerate(counts) if c > 0}
    logger.debug("Sampled %d shots over %d outcomes (%d observed)", shots, len(probs), len(histogram))
    return histogram


def counts_to_array(counts: Mapping[int, int], size: int) -> np.ndarray:
    """Dense count vector of length ``size``."""
    out = np.zeros(size, dtype=np.int64)
    for index, count in counts.items():
        if not 0 <= index < size:
            raise UsageError(f"Outcome {index} outside [0, {size})")
        out[index] = count
    return out


def total_variation(p: np.ndarray, q: np.ndarray) -> float:
    """Half the L1 distance between two discrete distributions."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise UsageError(f"Distributions have different supports: {p.shape} vs {q.shape}")
    return 0.5 * float(np.abs(p - q).sum())
