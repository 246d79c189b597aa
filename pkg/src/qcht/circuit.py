"""Circuit for the quantum Chebyshev transform.

Qubit 0 is the ancilla, qubits 1..N hold the system index (qubit 1 most
significant). Write ``M = 2^N`` and ``c_k(j) = cos(pi k (j + 1/2) / M)``.
Starting from ``|0>|j>`` the blocks act as follows.

1. ``H`` on the ancilla and a CNOT fan-out from the ancilla to every system
   qubit give the symmetric extension ``(|j> + |2M - 1 - j>) / sqrt(2)`` of
   the ``N + 1`` qubit register.
2. The ``(N+1)``-qubit QFT maps it to
   ``sum_k M^(-1/2) exp(-i pi k / 2M) c_k |k>``. Because
   ``c_{2M-k} = -c_k`` and ``c_M = 0``, index ``2M - k`` carries
   ``M^(-1/2) exp(+i pi k / 2M) c_k``.
3. Phase adjustment: ``RZ(pi / 2^(q+1))`` on system qubit ``q`` and
   ``U1 = P(-pi/2^(N+1)) RZ(-pi (2^N - 1)/2^(N+1))`` on the ancilla. The
   global phases of the ``RZ`` layer and ``U1`` cancel; together they apply
   ``exp(i pi k_sys / 2M)`` and ``-i`` on ancilla 1. Afterwards every
   amplitude is real: ``c_k / sqrt(M)`` on ``|0>|k>`` and on ``|1>|M - k>``
   (``k >= 1``), zero on ``|1>|0>``.
4. Permutation: an ancilla-controlled decrement (an increment conjugated by
   ``X`` on the system qubits) followed by a second CNOT fan-out sends
   ``|1>|m>`` to ``|1>|M - m mod M>``, pairing ``|1>|k>`` with ``|0>|k>``.
5. ``U2 = P(-pi/2) RY(-pi/2)`` on the ancilla folds each pair into
   ``sqrt(2/M) c_k |0>|k>``. For ``k = 0`` it leaves ``(|0> + i|1>)/sqrt(2)``
   on the ancilla, which a multi-controlled ``RX(pi/2)`` (conditioned on the
   system register being all zeros) returns to ``|0>`` with unit weight.

The ancilla-0 output is the DCT-II column ``j`` and the ancilla ends in
``|0>``. Every built circuit is checked against the matrix oracle.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from qcht.oracle import qcht_oracle
from simcore.circuit import Circuit
from simcore.gates import cnot, h, phase, rx, ry, rz, x as x_gate
from simcore.qft import qft_circuit
from simcore.statevector import Statevector, apply_circuit
from utils.exceptions import ConfigurationError, QChTConstructionError, UsageError

logger = logging.getLogger(__name__)

MAX_QCHT_QUBITS = 8
EQUIVALENCE_TOLERANCE = 1e-9
ANCILLA_FIX_ANGLE = np.pi / 2


@dataclass(frozen=True)
class QChTReport:
    """Deviations of a transform circuit from its oracle."""
    N: int
    max_block_deviation: float
    max_ancilla_leakage: float
    gate_count: int

    def passed(self, tol: float = EQUIVALENCE_TOLERANCE) -> bool:
        return self.max_block_deviation < tol and self.max_ancilla_leakage < tol


def _fan_out(circ: Circuit, system: range) -> None:
    circ.extend(cnot(0, q) for q in system)


def _controlled_increment(circ: Circuit, N: int) -> None:
    """``|1>|m> -> |1>|m + 1 mod 2^N>`` with the ancilla as control."""
    # bit position p (0 = least significant) lives on qubit N - p; flip from the top down
    for p in range(N - 1, -1, -1):
        lower = tuple(N - b for b in range(p))
        circ.append(x_gate(N - p, controls=(0,) + lower))


def build_qcht_circuit(N: int) -> Circuit:
    """Assemble the transform circuit without verifying it."""
    if not 1 <= N <= MAX_QCHT_QUBITS:
        raise ConfigurationError(f"QChT circuit size must lie in [1, {MAX_QCHT_QUBITS}], got {N}")
    ancilla = 0
    system = range(1, N + 1)
    circ = Circuit(N + 1)

    circ.append(h(ancilla))
    _fan_out(circ, system)
    circ.compose(qft_circuit(N + 1))

    circ.append(rz(ancilla, -np.pi * (2 ** N - 1) / 2 ** (N + 1)))
    circ.append(phase(ancilla, -np.pi / 2 ** (N + 1)))
    circ.extend(rz(q, np.pi / 2 ** (q + 1)) for q in system)

    circ.extend(x_gate(q) for q in system)
    _controlled_increment(circ, N)
    circ.extend(x_gate(q) for q in system)
    _fan_out(circ, system)

    circ.append(ry(ancilla, -np.pi / 2))
    circ.append(phase(ancilla, -np.pi / 2))
    circ.extend(x_gate(q) for q in system)
    circ.append(rx(ancilla, ANCILLA_FIX_ANGLE, controls=tuple(system)))
    circ.extend(x_gate(q) for q in system)
    return circ


def verify_qcht_circuit(circ: Circuit, N: int) -> QChTReport:
    """Compare the circuit's ancilla-0 inputs against the oracle."""
    m = 2 ** N
    if circ.n_qubits != N + 1:
        raise UsageError(f"Expected an {N + 1}-qubit circuit, got {circ.n_qubits}")
    inputs = np.zeros((2 * m, m), dtype=np.complex128)
    inputs[:m, :] = np.eye(m)
    outputs = circ.apply_to_array(inputs)
    oracle = qcht_oracle(N)
    return QChTReport(
        N=N,
        max_block_deviation=float(np.max(np.abs(outputs[:m, :] - oracle.ancilla_zero_block()))),
        max_ancilla_leakage=float(np.max(np.sum(np.abs(outputs[m:, :]) ** 2, axis=0))),
        gate_count=len(circ),
    )


@lru_cache(maxsize=None)
def _verified_circuit(N: int) -> Circuit:
    circ = build_qcht_circuit(N)
    report = verify_qcht_circuit(circ, N)
    if not report.passed():
        raise QChTConstructionError(
            f"QChT circuit for N={N} deviates from the DCT-II oracle "
            f"(block {report.max_block_deviation:.3e}, leakage {report.max_ancilla_leakage:.3e})"
        )
    logger.info(
        "Built QChT circuit for N=%d: %d gates, max deviation %.2e",
        N, report.gate_count, report.max_block_deviation,
    )
    return circ


def qcht_circuit(N: int) -> Circuit:
    """Verified transform circuit on ``N + 1`` qubits."""
    return _verified_circuit(N).copy()


def apply_qcht(state: Statevector, inverse: bool = False) -> Statevector:
    """Apply the transform (or its adjoint) to an ``(N + 1)``-qubit state."""
    N = state.n_qubits - 1
    if N < 1:
        raise UsageError("The transform needs at least one system qubit plus the ancilla")
    circ = _verified_circuit(N)
    return apply_circuit(state, circ.inverse() if inverse else circ)
