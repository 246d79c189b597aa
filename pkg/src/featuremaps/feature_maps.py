"""Feature-map circuits embedding a scalar ``x``.

Chebyshev map
-------------
Qubit 0 is the ancilla; system qubit ``q`` (1..N) has weight ``2^(N-q)`` in
the system index ``k``. With ``phi = arccos(x)``:

1. ``H`` on every qubit: ``(|0>+|1>)/sqrt(2) (x) 2^(-N/2) sum_k |k>``.
2. ``P~[1]_l`` with ``l = 2^q`` on system qubit ``q`` gives ``|k>`` the phase
   ``exp(i k phi)``.
3. The same gates with ``s = -2``, controlled on the ancilla, turn the
   ancilla-1 phase into ``exp(-i k phi)``.
4. ``H`` on the ancilla interferes the two branches. The ancilla-0 amplitude
   of ``|k>`` is ``2^(-N/2) cos(k phi) = 2^(-N/2) T_k(x)`` and the ancilla-1
   amplitude is ``i 2^(-N/2) sin(k phi)``, which vanishes for ``k = 0``.
5. A rotation about ``|0...0>`` (an ``RY(pi/2)`` on the ancilla, conditioned
   on the system register being all zeros through ``X`` conjugation) scales
   the ``k = 0`` ancilla-0 amplitude by ``cos(pi/4) = 1/sqrt(2)``. The angle
   does not depend on ``x``.

The ancilla-0 branch is then ``tau(x) / sqrt(2)`` exactly, so post-selection
succeeds with probability ``N(x)^2 / 2``.

Phase map
---------
``H`` on every qubit followed by ``P(2 pi 2^(N-1-j) x)`` on qubit ``j``
prepares ``2^(-N/2) sum_k exp(2 pi i k x) |k>``, orthonormal on ``x = j/2^N``.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from chebmath.polynomials import check_domain
from simcore.circuit import Circuit
from simcore.gates import h, phase, ry, scaled_phase, x as x_gate
from simcore.statevector import Statevector, apply_circuit, zero_state
from utils.exceptions import ConfigurationError, DegenerateInputError, DomainError

logger = logging.getLogger(__name__)

MAX_FEATURE_QUBITS = 10
MIN_SUCCESS_PROBABILITY = 1e-12
ZERO_TERM_ANGLE = np.pi / 2


class FeatureMapKind(str, Enum):
    """Supported feature maps."""
    CHEBYSHEV = "chebyshev"
    PHASE = "phase"


@dataclass(frozen=True)
class FeatureMapSpec:
    """A feature map of a given kind on ``N`` system qubits at point ``x``."""
    kind: FeatureMapKind
    N: int
    x: float

    def __post_init__(self):
        object.__setattr__(self, "kind", FeatureMapKind(self.kind))
        _check_size(self.N)
        if self.kind is FeatureMapKind.CHEBYSHEV:
            check_domain(self.x)
        else:
            _check_phase_domain(self.x)

    def circuit(self) -> Circuit:
        if self.kind is FeatureMapKind.CHEBYSHEV:
            return chebyshev_feature_map_circuit(self.N, self.x)
        return phase_feature_map_circuit(self.N, self.x)


@dataclass(frozen=True)
class PostSelectedState:
    """System state after projecting the ancilla onto ``|0>``."""
    state: Statevector
    success_probability: float

    def unnormalized_branch(self) -> np.ndarray:
        """Ancilla-0 branch amplitudes before renormalization."""
        return np.sqrt(self.success_probability) * self.state.amplitudes


def _check_size(N: int) -> None:
    if not 1 <= N <= MAX_FEATURE_QUBITS:
        raise ConfigurationError(f"Feature map size must lie in [1, {MAX_FEATURE_QUBITS}], got {N}")


def _check_phase_domain(xval: float) -> None:
    if not 0.0 <= xval < 1.0:
        raise DomainError(f"Phase map needs x in [0, 1), got {xval}")


def chebyshev_feature_map_circuit(N: int, x: float) -> Circuit:
    """Circuit on ``N + 1`` qubits whose ancilla-0 branch is ``tau(x)/sqrt(2)``."""
    _check_size(N)
    x = float(check_domain(x))
    ancilla = 0
    system = range(1, N + 1)

    circ = Circuit(N + 1)
    circ.append(h(ancilla))
    circ.extend(h(q) for q in system)
    circ.extend(scaled_phase(q, 1, 2 ** q, x, N) for q in system)
    circ.extend(scaled_phase(q, -2, 2 ** q, x, N, controls=(ancilla,)) for q in system)
    circ.append(h(ancilla))

    # rotation about |0...0> on the system register fixes the T_0 weight
    circ.extend(x_gate(q) for q in system)
    circ.append(ry(ancilla, ZERO_TERM_ANGLE, controls=tuple(system)))
    circ.extend(x_gate(q) for q in system)
    return circ


def prepare_tau_tilde(N: int, x: float) -> PostSelectedState:
    """Run the Chebyshev feature map and post-select the ancilla on ``|0>``."""
    circ = chebyshev_feature_map_circuit(N, x)
    out = apply_circuit(zero_state(N + 1), circ)
    branch = out.amplitudes[: 2 ** N]
    success = float(np.vdot(branch, branch).real)
    if success < MIN_SUCCESS_PROBABILITY:
        raise DegenerateInputError(f"Post-selection probability {success:.3e} at x={x} is degenerate")
    logger.debug("Post-selected tau~(%s) on %d qubits with probability %.6f", x, N, success)
    return PostSelectedState(state=Statevector(branch / np.sqrt(success)), success_probability=success)


def phase_feature_map_circuit(N: int, x: float) -> Circuit:
    """Fourier feature map on ``N`` qubits."""
    _check_size(N)
    _check_phase_domain(x)
    circ = Circuit(N)
    circ.extend(h(q) for q in range(N))
    circ.extend(phase(q, 2 * np.pi * 2 ** (N - 1 - q) * x) for q in range(N))
    return circ


def phase_state_coefficients(N: int, x) -> np.ndarray:
    """Analytic phase-map amplitudes; a trailing axis of length ``2^N`` is added to ``x``."""
    k = np.arange(2 ** N)
    return np.exp(2j * np.pi * np.multiply.outer(np.asarray(x, dtype=float), k)) / 2 ** (N / 2)


def phase_state_derivative(N: int, x) -> np.ndarray:
    """``d/dx`` of the phase-map amplitudes."""
    k = np.arange(2 ** N)
    return 2j * np.pi * k * phase_state_coefficients(N, x)
