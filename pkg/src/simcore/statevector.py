"""Dense statevectors and their transformations.

Bit ordering: qubit 0 is the most significant bit of the basis-state index.
For three qubits, ``|q0 q1 q2> = |1 0 1>`` is index 5.
"""

import logging
from typing import Union

import numpy as np

from simcore.circuit import Circuit
from simcore.gates import Gate
from simcore.kernels import apply_gate_array
from utils.config import ABSOLUTE_MAX_QUBITS, config
from utils.exceptions import ConfigurationError, UsageError
from utils.resources import ResourceManager

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-8


class Statevector:
    """Dense complex amplitude vector over ``n_qubits`` qubits."""

    def __init__(self, amplitudes: np.ndarray):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        size = amplitudes.shape[0]
        n_qubits = size.bit_length() - 1
        if size < 2 or 2 ** n_qubits != size:
            raise UsageError(f"Amplitude vector length must be a power of two >= 2, got {size}")
        self.n_qubits = n_qubits
        self.amplitudes = amplitudes

    @classmethod
    def from_amplitudes(cls, amplitudes, normalize: bool = False) -> "Statevector":
        """Build a statevector, optionally rescaling to unit norm."""
        state = cls(np.array(amplitudes, dtype=np.complex128, copy=True))
        if normalize:
            norm = state.norm()
            if norm == 0.0:
                raise UsageError("Cannot normalize the zero vector")
            state.amplitudes /= norm
        return state

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol: float = NORM_TOLERANCE) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def probabilities(self) -> np.ndarray:
        """Born-rule probabilities of the computational basis outcomes."""
        return np.abs(self.amplitudes) ** 2

    def copy(self) -> "Statevector":
        return Statevector(self.amplitudes.copy())

    def tensor(self, other: "Statevector") -> "Statevector":
        """``self`` on the leading (more significant) qubits, ``other`` below."""
        return Statevector(np.kron(self.amplitudes, other.amplitudes))

    def __len__(self) -> int:
        return self.amplitudes.shape[0]

    def __repr__(self) -> str:
        return f"Statevector(n_qubits={self.n_qubits}, norm={self.norm():.12f})"


def zero_state(n: int) -> Statevector:
    """``|0...0>`` on ``n`` qubits."""
    limit = min(config.max_qubits, ABSOLUTE_MAX_QUBITS)
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= limit:
        raise ConfigurationError(f"Qubit count must lie in [1, {limit}], got {n}")
    ResourceManager.ensure_statevector_fits(int(n))
    amplitudes = np.zeros(2 ** int(n), dtype=np.complex128)
    amplitudes[0] = 1.0
    return Statevector(amplitudes)


def basis_state(n: int, index: int) -> Statevector:
    """Computational basis state ``|index>`` on ``n`` qubits."""
    state = zero_state(n)
    if not 0 <= index < len(state):
        raise UsageError(f"Basis index {index} outside [0, {len(state)})")
    state.amplitudes[0] = 0.0
    state.amplitudes[index] = 1.0
    return state


def apply_gate(state: Statevector, gate: Gate) -> Statevector:
    """Return a new statevector with ``gate`` applied."""
    if min(gate.qubits) < 0 or gate.max_index() >= state.n_qubits:
        raise UsageError(
            f"Gate {gate.kind.name} on qubits {gate.qubits} is outside a {state.n_qubits}-qubit state"
        )
    return Statevector(apply_gate_array(state.amplitudes, gate, state.n_qubits))


def apply_circuit(state: Statevector, circ: Circuit) -> Statevector:
    """Apply the gates of ``circ`` in list order."""
    if circ.n_qubits != state.n_qubits:
        raise UsageError(
            f"Circuit acts on {circ.n_qubits} qubits but the state has {state.n_qubits}"
        )
    return Statevector(circ.apply_to_array(state.amplitudes))


def inner_product(a: Union[Statevector, np.ndarray], b: Union[Statevector, np.ndarray]) -> complex:
    """``<a|b>`` with conjugation on ``a``."""
    va = a.amplitudes if isinstance(a, Statevector) else np.asarray(a)
    vb = b.amplitudes if isinstance(b, Statevector) else np.asarray(b)
    if va.shape != vb.shape:
        raise UsageError(f"Inner product of mismatched sizes {va.shape} and {vb.shape}")
    return complex(np.vdot(va, vb))


def fidelity(a: Statevector, b: Statevector) -> float:
    """``|<a|b>|^2`` for normalized inputs."""
    return abs(inner_product(a, b)) ** 2
