"""Tests for the statevector simulator."""

import numpy as np
import pytest

from simcore.circuit import Circuit
from simcore.gates import Gate, GateKind, cnot, h, phase, rx, ry, rz, scaled_phase, swap, unitary, x
from simcore.qft import dft_matrix, qft_circuit
from simcore.sampling import counts_to_array, sample_counts, total_variation
from simcore.statevector import (
    Statevector,
    apply_circuit,
    apply_gate,
    basis_state,
    fidelity,
    inner_product,
    zero_state,
)
from utils.exceptions import ConfigurationError, DomainError, UsageError


def random_state(n, seed=0):
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=2 ** n) + 1j * rng.normal(size=2 ** n)
    return Statevector.from_amplitudes(amps, normalize=True)


def random_circuit(n, length, seed=0):
    rng = np.random.default_rng(seed)
    circ = Circuit(n)
    for _ in range(length):
        q = int(rng.integers(n))
        choice = int(rng.integers(5))
        if choice == 0:
            circ.append(h(q))
        elif choice == 1:
            circ.append(rx(q, rng.uniform(-np.pi, np.pi)))
        elif choice == 2:
            circ.append(ry(q, rng.uniform(-np.pi, np.pi)))
        elif choice == 3:
            circ.append(rz(q, rng.uniform(-np.pi, np.pi)))
        elif n > 1:
            other = int((q + 1 + rng.integers(n - 1)) % n)
            circ.append(cnot(q, other))
    return circ


class TestStatevector:
    def test_zero_state(self):
        state = zero_state(3)
        assert state.n_qubits == 3
        assert len(state) == 8
        assert state.amplitudes[0] == 1
        assert np.count_nonzero(state.amplitudes) == 1

    @pytest.mark.parametrize("n", [0, 25, -1])
    def test_zero_state_out_of_range(self, n):
        with pytest.raises(ConfigurationError):
            zero_state(n)

    def test_qubit_zero_is_most_significant(self):
        state = apply_gate(zero_state(3), x(0))
        assert np.argmax(np.abs(state.amplitudes)) == 4

    def test_basis_state_index_range(self):
        assert basis_state(3, 5).amplitudes[5] == 1
        with pytest.raises(UsageError):
            basis_state(3, 8)

    def test_bell_state(self):
        circ = Circuit(2).append(h(0)).append(cnot(0, 1))
        state = apply_circuit(zero_state(2), circ)
        np.testing.assert_allclose(state.amplitudes, [1 / np.sqrt(2), 0, 0, 1 / np.sqrt(2)], atol=1e-15)

    def test_toffoli_and_swap(self):
        toffoli = Gate(GateKind.X, (2,), (0, 1))
        assert np.argmax(np.abs(apply_gate(basis_state(3, 6), toffoli).amplitudes)) == 7
        assert np.argmax(np.abs(apply_gate(basis_state(3, 4), swap(0, 2)).amplitudes)) == 1

    def test_controlled_swap_only_on_control(self):
        fredkin = swap(1, 2, controls=(0,))
        assert np.argmax(np.abs(apply_gate(basis_state(3, 2), fredkin).amplitudes)) == 2
        assert np.argmax(np.abs(apply_gate(basis_state(3, 6), fredkin).amplitudes)) == 5

    def test_norm_preserved(self):
        state = random_state(6, seed=1)
        out = apply_circuit(state, random_circuit(6, 80, seed=2))
        assert abs(out.norm() - 1.0) < 1e-12

    def test_norm_preserved_over_long_runs(self):
        state = random_state(10, seed=15)
        out = apply_circuit(state, random_circuit(10, 1000, seed=16))
        assert abs(out.norm() - 1.0) < 1e-10

    def test_linearity(self):
        a, b = random_state(4, seed=12), random_state(4, seed=13)
        alpha, beta = 0.3 - 0.2j, 1.1j
        circ = random_circuit(4, 50, seed=14)
        combined = apply_circuit(Statevector(alpha * a.amplitudes + beta * b.amplitudes), circ)
        separate = alpha * apply_circuit(a, circ).amplitudes + beta * apply_circuit(b, circ).amplitudes
        np.testing.assert_allclose(combined.amplitudes, separate, atol=1e-10)

    def test_inner_product_and_fidelity(self):
        a = random_state(4, seed=3)
        assert abs(inner_product(a, a) - 1.0) < 1e-12
        assert abs(fidelity(a, a) - 1.0) < 1e-12
        with pytest.raises(UsageError):
            inner_product(a, random_state(3))

    def test_apply_circuit_size_mismatch(self):
        with pytest.raises(UsageError):
            apply_circuit(zero_state(2), Circuit(3))

    def test_tensor_order(self):
        one = Statevector(np.array([0.0, 1.0]))
        zero = Statevector(np.array([1.0, 0.0]))
        assert np.argmax(np.abs(one.tensor(zero).amplitudes)) == 2


class TestGates:
    @pytest.mark.parametrize("gate", [
        h(0), x(0), phase(0, 0.3), rx(0, 1.1), ry(0, -0.7), rz(0, 2.5),
        scaled_phase(0, -2, 4, 0.3, 3),
    ])
    def test_gate_matrices_unitary(self, gate):
        m = gate.matrix()
        np.testing.assert_allclose(m.conj().T @ m, np.eye(2), atol=1e-12)

    def test_overlapping_control_and_target(self):
        with pytest.raises(UsageError):
            Gate(GateKind.X, (1,), (1,))

    def test_cnot_needs_control(self):
        with pytest.raises(UsageError):
            Gate(GateKind.CNOT, (0,))

    def test_non_unitary_matrix_rejected(self):
        with pytest.raises(UsageError):
            unitary(0, np.array([[1, 1], [0, 1]]))

    def test_scaled_phase_domain(self):
        with pytest.raises(DomainError):
            scaled_phase(0, 1, 2, 1.5, 2)

    def test_scaled_phase_angle(self):
        gate = scaled_phase(0, 1, 2, 0.0, 3)
        # 2^3 * (pi/2) / 2
        np.testing.assert_allclose(gate.matrix()[1, 1], np.exp(1j * 2 * np.pi), atol=1e-12)

    def test_rotation_conventions(self):
        np.testing.assert_allclose(ry(0, np.pi).matrix() @ [1, 0], [0, 1], atol=1e-15)
        np.testing.assert_allclose(rz(0, np.pi).matrix(), np.diag([-1j, 1j]), atol=1e-15)

    def test_dagger(self):
        for gate in (rx(0, 0.4), phase(0, 1.3), scaled_phase(0, 1, 2, 0.2, 2)):
            np.testing.assert_allclose(gate.dagger().matrix() @ gate.matrix(), np.eye(2), atol=1e-12)

    def test_circuit_rejects_out_of_range_qubit(self):
        with pytest.raises(UsageError):
            Circuit(2).append(h(2))


class TestCircuit:
    def test_random_circuit_unitary(self):
        m = random_circuit(6, 60, seed=5).matrix()
        np.testing.assert_allclose(m.conj().T @ m, np.eye(64), atol=1e-10)

    def test_inverse_gives_identity(self):
        circ = random_circuit(4, 40, seed=6)
        full = circ.copy().compose(circ.inverse())
        np.testing.assert_allclose(full.matrix(), np.eye(16), atol=1e-10)

    def test_compose_offset(self):
        circ = Circuit(3).compose(Circuit(1).append(x(0)), offset=2)
        assert circ.gates[0].targets == (2,)

    def test_count_ops(self):
        circ = Circuit(2).append(h(0)).append(cnot(0, 1)).append(h(1))
        assert circ.count_ops() == {"h": 2, "cx": 1}

    @pytest.mark.parametrize("n", range(1, 9))
    def test_qft_matches_dft(self, n):
        np.testing.assert_allclose(qft_circuit(n).matrix(), dft_matrix(n), atol=1e-10)

    def test_qft_two_qubit_column(self):
        np.testing.assert_allclose(dft_matrix(2)[:, 1], np.array([1, 1j, -1, -1j]) / 2, atol=1e-15)

    def test_qft_size_range(self):
        with pytest.raises(ConfigurationError):
            qft_circuit(0)


class TestSampling:
    def test_counts_sum_to_shots(self):
        counts = sample_counts(random_state(3, seed=7), 1000, seed=11)
        assert sum(counts.values()) == 1000
        assert all(c > 0 for c in counts.values())

    def test_deterministic_given_seed(self):
        state = random_state(4, seed=8)
        assert sample_counts(state, 5000, seed=3) == sample_counts(state, 5000, seed=3)

    def test_bell_outcomes(self):
        state = apply_circuit(zero_state(2), Circuit(2).append(h(0)).append(cnot(0, 1)))
        assert set(sample_counts(state, 2000, seed=0)) <= {0, 3}

    def test_statistics(self):
        state = random_state(4, seed=9)
        counts = counts_to_array(sample_counts(state, 1_000_000, seed=1), 16)
        assert total_variation(counts / 1_000_000, state.probabilities()) < 0.005

    def test_statistics_eight_qubits(self):
        circ = Circuit(8).extend(ry(q, 0.6) for q in range(8)).extend(cnot(q, q + 1) for q in range(7))
        state = apply_circuit(zero_state(8), circ)
        counts = counts_to_array(sample_counts(state, 1_000_000, seed=4), 256)
        assert total_variation(counts / 1_000_000, state.probabilities()) < 0.005

    def test_invalid_inputs(self):
        with pytest.raises(UsageError):
            sample_counts(zero_state(2), 0, seed=0)
        with pytest.raises(UsageError):
            sample_counts(Statevector(np.array([1.0, 1.0])), 10, seed=0)

    def test_total_variation(self):
        assert total_variation([0.5, 0.5], [1.0, 0.0]) == pytest.approx(0.5)
        with pytest.raises(UsageError):
            total_variation([1.0], [0.5, 0.5])
