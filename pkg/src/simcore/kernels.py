"""Low-level gate kernels on dense amplitude arrays.

Amplitude arrays have shape ``(2**n, *batch)``. Qubit 0 is the most
significant bit of the basis-state index, so a C-order reshape to
``(2,) * n + batch`` puts qubit ``q`` on axis ``q``.
"""

import numpy as np

from simcore.gates import Gate, GateKind


def apply_gate_array(amplitudes: np.ndarray, gate: Gate, n_qubits: int) -> np.ndarray:
    """Return a new array with ``gate`` applied to every column of ``amplitudes``."""
    batch_shape = amplitudes.shape[1:]
    psi = np.array(amplitudes, dtype=np.complex128, copy=True).reshape((2,) * n_qubits + batch_shape)

    index = [slice(None)] * n_qubits
    for c in gate.controls:
        index[c] = 1
    index = tuple(index)
    sub = psi[index]

    # axis positions inside the control-sliced view
    def axis_of(q: int) -> int:
        return q - sum(1 for c in gate.controls if c < q)

    if gate.kind is GateKind.SWAP:
        a, b = (axis_of(t) for t in gate.targets)
        sub = np.swapaxes(sub, a, b).copy()
    else:
        axis = axis_of(gate.targets[0])
        sub = np.moveaxis(np.tensordot(gate.matrix(), sub, axes=([1], [axis])), 0, axis)

    psi[index] = sub
    return psi.reshape(amplitudes.shape)
