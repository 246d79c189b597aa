"""Sampling trained models in the computational basis.

The Chebyshev model state is placed next to a clean ancilla and mapped back
with the inverse Chebyshev transform, so outcome ``j`` occurs with
probability ``|<tau(x_j)|psi>|^2``. The phase model uses the inverse QFT,
whose outcome ``j`` has probability ``|<phi(j / 2^N)|psi>|^2``.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from chebmath.grid import chebyshev_nodes
from dqgm.ansatz import ModelParams
from dqgm.model import basis_amplitudes, model_grid, model_state
from featuremaps.feature_maps import FeatureMapKind
from qcht.circuit import MAX_QCHT_QUBITS, apply_qcht
from qcht.extension import extend_register
from simcore.qft import qft_circuit
from simcore.sampling import counts_to_array, sample_counts
from simcore.statevector import Statevector, apply_circuit
from utils.exceptions import ConfigurationError, UsageError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelSample:
    """Histogram over the node indices of the sampled register."""
    n_qubits: int
    nodes: np.ndarray
    counts: Dict[int, int]
    shots: int
    analytic: np.ndarray

    def count_array(self) -> np.ndarray:
        return counts_to_array(self.counts, len(self.nodes))

    def frequencies(self) -> np.ndarray:
        return self.count_array() / self.shots


def coefficient_state(params: ModelParams, extend_to: Optional[int] = None) -> Statevector:
    """Model state, optionally carried onto a larger coefficient register."""
    if extend_to is not None and extend_to > MAX_QCHT_QUBITS:
        raise ConfigurationError(
            f"Extended registers are sampled through the transform, which supports at most "
            f"{MAX_QCHT_QUBITS} qubits; got {extend_to}"
        )
    psi = model_state(params)
    if extend_to is not None:
        psi = extend_register(psi, extend_to)
    return psi


def sampling_state(params: ModelParams, extend_to: Optional[int] = None,
                   feature_map: FeatureMapKind = FeatureMapKind.CHEBYSHEV) -> Statevector:
    """State measured when sampling; for the Chebyshev model qubit 0 is the ancilla."""
    if FeatureMapKind(feature_map) is FeatureMapKind.PHASE:
        if extend_to is not None:
            raise UsageError("Register extension applies to the Chebyshev model only")
        psi = model_state(params)
        return apply_circuit(psi, qft_circuit(psi.n_qubits).inverse())
    psi = coefficient_state(params, extend_to)
    ancilla_zero = Statevector(np.array([1.0, 0.0]))
    return apply_qcht(ancilla_zero.tensor(psi), inverse=True)


def analytic_node_probabilities(params: ModelParams, extend_to: Optional[int] = None,
                                feature_map: FeatureMapKind = FeatureMapKind.CHEBYSHEV) -> np.ndarray:
    """Exact outcome probabilities ``|<b(x_j)|psi>|^2`` on the sampled grid."""
    if FeatureMapKind(feature_map) is FeatureMapKind.PHASE:
        psi = model_state(params)
    else:
        psi = coefficient_state(params, extend_to)
    n = psi.n_qubits
    return np.abs(basis_amplitudes(feature_map, n, model_grid(feature_map, n)).conj() @ psi.amplitudes) ** 2


def sample_model(params: ModelParams, shots: int, seed: int, extend_to: Optional[int] = None,
                 feature_map: FeatureMapKind = FeatureMapKind.CHEBYSHEV) -> ModelSample:
    """Draw ``shots`` samples of the model; counts are keyed by node index."""
    if shots < 1:
        raise UsageError(f"shots must be >= 1, got {shots}")
    state = sampling_state(params, extend_to, feature_map)
    raw = sample_counts(state, shots, seed)

    if FeatureMapKind(feature_map) is FeatureMapKind.CHEBYSHEV:
        n = state.n_qubits - 1
        size = 2 ** n
        leaked = sum(c for j, c in raw.items() if j >= size)
        if leaked:
            logger.warning("%d of %d shots landed on ancilla 1 and were discarded", leaked, shots)
        counts = {j: c for j, c in raw.items() if j < size}
        nodes = np.asarray(chebyshev_nodes(n).nodes)
    else:
        n = state.n_qubits
        counts = raw
        nodes = model_grid(feature_map, n)

    analytic = analytic_node_probabilities(params, extend_to, feature_map)
    logger.info("Sampled %d shots from the %d-qubit %s register", shots, n, FeatureMapKind(feature_map).value)
    return ModelSample(n_qubits=n, nodes=nodes, counts=counts, shots=shots, analytic=analytic)
