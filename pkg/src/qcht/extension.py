"""Re-expressing Chebyshev-coefficient states on a larger register."""

import logging

import numpy as np

from chebmath.tau import amplitude_weights
from simcore.statevector import Statevector
from utils.config import ABSOLUTE_MAX_QUBITS, config
from utils.exceptions import ConfigurationError, UsageError
from utils.resources import ResourceManager

logger = logging.getLogger(__name__)


def extend_register(state: Statevector, N_target: int) -> Statevector:
    """Carry the coefficient-basis state ``state`` onto ``N_target`` qubits.

    Amplitude ``k`` multiplies ``w_k T_k(x)`` in the model, with ``w_k`` the
    per-degree weight of the register size. Coefficient ``k`` is rescaled by
    ``w_k(N) / w_k(N_target)`` so the represented polynomial keeps its shape;
    degrees ``k >= 2^N`` are zero and the result is renormalized.
    """
    N = state.n_qubits
    if N_target <= N:
        raise UsageError(f"Target register ({N_target} qubits) must be larger than the source ({N})")
    limit = min(config.max_qubits, ABSOLUTE_MAX_QUBITS)
    if N_target > limit:
        raise ConfigurationError(f"Target register must have at most {limit} qubits, got {N_target}")
    ResourceManager.ensure_statevector_fits(N_target)

    size = 2 ** N
    ratio = amplitude_weights(N) / amplitude_weights(N_target)[:size]
    amplitudes = np.zeros(2 ** N_target, dtype=np.complex128)
    amplitudes[:size] = state.amplitudes * ratio
    logger.debug("Extended %d-qubit coefficient state to %d qubits", N, N_target)
    return Statevector.from_amplitudes(amplitudes, normalize=True)
