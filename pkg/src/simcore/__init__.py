"""Dense statevector simulation."""

from simcore.circuit import Circuit
from simcore.gates import Gate, GateKind
from simcore.qft import qft_circuit
from simcore.sampling import make_rng, sample_counts, total_variation
from simcore.statevector import (
    Statevector,
    apply_circuit,
    apply_gate,
    basis_state,
    fidelity,
    inner_product,
    zero_state,
)
