"""Tests for the Chebyshev transform oracle, circuit and register extension."""

import numpy as np
import pytest

from chebmath.dct import dct2_matrix
from chebmath.grid import chebyshev_nodes
from chebmath.tau import tau_coefficients
from featuremaps.feature_maps import chebyshev_feature_map_circuit, prepare_tau_tilde
from qcht.circuit import apply_qcht, build_qcht_circuit, qcht_circuit, verify_qcht_circuit
from qcht.extension import extend_register
from qcht.oracle import qcht_oracle, unitary_completion
from simcore.sampling import counts_to_array, sample_counts, total_variation
from simcore.statevector import Statevector, apply_circuit, basis_state, fidelity, zero_state
from utils.config import config
from utils.exceptions import ConfigurationError, UsageError

ANCILLA_ZERO = Statevector(np.array([1.0, 0.0]))


def random_state(n, seed):
    rng = np.random.default_rng(seed)
    return Statevector.from_amplitudes(rng.normal(size=2 ** n) + 1j * rng.normal(size=2 ** n), normalize=True)


class TestOracle:
    @pytest.mark.parametrize("N", [1, 2, 3, 4])
    def test_unitary(self, N):
        u = qcht_oracle(N).matrix
        np.testing.assert_allclose(u.conj().T @ u, np.eye(2 ** (N + 1)), atol=1e-12)

    @pytest.mark.parametrize("N", [1, 2, 3])
    def test_block_and_cleanliness(self, N):
        oracle = qcht_oracle(N)
        m = oracle.block_size
        np.testing.assert_allclose(oracle.ancilla_zero_block(), dct2_matrix(N), atol=1e-12)
        assert np.max(np.abs(oracle.matrix[m:, :m])) < 1e-10

    def test_column_is_node_state(self):
        oracle = qcht_oracle(2)
        x1 = chebyshev_nodes(2).value(1)
        np.testing.assert_allclose(oracle.matrix[:4, 1], tau_coefficients(2, x1), atol=1e-12)

    def test_uniform_input(self):
        N = 3
        uniform = np.zeros(16)
        uniform[:8] = 1 / np.sqrt(8)
        out = qcht_oracle(N).matrix @ uniform
        expected = tau_coefficients(N, chebyshev_nodes(N).nodes).sum(axis=0) / 2 ** (N / 2)
        np.testing.assert_allclose(out[:8], expected, atol=1e-12)
        assert np.linalg.norm(out) == pytest.approx(1.0, abs=1e-12)

    def test_completion_keeps_given_columns(self):
        cols = np.zeros((4, 1))
        cols[1, 0] = 1.0
        q = unitary_completion(cols)
        np.testing.assert_allclose(q[:, 0], cols[:, 0])
        np.testing.assert_allclose(q.conj().T @ q, np.eye(4), atol=1e-12)

    def test_size_range(self):
        with pytest.raises(ConfigurationError):
            qcht_oracle(11)


class TestCircuit:
    @pytest.mark.parametrize("N", range(1, 7))
    def test_matches_oracle_and_is_clean(self, N):
        report = verify_qcht_circuit(build_qcht_circuit(N), N)
        assert report.max_block_deviation < 1e-9
        assert report.max_ancilla_leakage < 1e-9
        assert report.passed()

    def test_every_ancilla_zero_input(self):
        N = 4
        circ = qcht_circuit(N)
        m = 2 ** N
        for j in range(m):
            out = apply_circuit(basis_state(N + 1, j), circ)
            assert np.sum(np.abs(out.amplitudes[m:]) ** 2) < 1e-9

    @pytest.mark.parametrize("j", [0, 5])
    def test_maps_node_index_to_tau(self, j):
        N = 3
        out = apply_qcht(basis_state(N + 1, j))
        expected = ANCILLA_ZERO.tensor(Statevector(tau_coefficients(N, chebyshev_nodes(N).value(j))))
        assert fidelity(out, expected) == pytest.approx(1.0, abs=1e-9)
        np.testing.assert_allclose(out.amplitudes, expected.amplitudes, atol=1e-9)

    def test_gate_sequence_shape(self):
        ops = build_qcht_circuit(3).count_ops()
        # ancilla H plus the four QFT Hadamards
        assert ops["h"] == 5
        # two fan-outs over three system qubits plus the lowest increment bit
        assert ops["cx"] == 7
        assert ops["ccx"] == 1 and ops["cccx"] == 1
        assert ops["cccrx"] == 1

    def test_inverse_round_trip(self):
        state = random_state(4, seed=3)
        back = apply_qcht(apply_qcht(state), inverse=True)
        np.testing.assert_allclose(back.amplitudes, state.amplitudes, atol=1e-9)

    def test_size_range(self):
        with pytest.raises(ConfigurationError):
            qcht_circuit(9)
        with pytest.raises(UsageError):
            apply_qcht(Statevector(np.array([1.0, 0.0])))

    def test_returns_independent_copies(self):
        a = qcht_circuit(2)
        a.gates.clear()
        assert len(qcht_circuit(2)) > 0

    @pytest.mark.parametrize("N", range(1, 6))
    def test_feature_map_round_trip(self, N):
        nodes = chebyshev_nodes(N).nodes
        m = 2 ** N
        for j, x in enumerate(nodes):
            tau = prepare_tau_tilde(N, x).state
            back = apply_qcht(ANCILLA_ZERO.tensor(tau), inverse=True)
            np.testing.assert_allclose(back.amplitudes, basis_state(N + 1, j).amplitudes, atol=1e-9)

            full = apply_circuit(zero_state(N + 1), chebyshev_feature_map_circuit(N, x))
            branch = apply_qcht(full, inverse=True).amplitudes[:m]
            expected = np.zeros(m)
            expected[j] = 1 / np.sqrt(2)
            np.testing.assert_allclose(branch, expected, atol=1e-9)


class TestSamplingCorrespondence:
    def test_inverse_transform_probabilities(self):
        N = 3
        psi = random_state(N, seed=5)
        out = apply_qcht(ANCILLA_ZERO.tensor(psi), inverse=True)
        analytic = np.abs(tau_coefficients(N, chebyshev_nodes(N).nodes) @ psi.amplitudes) ** 2
        np.testing.assert_allclose(out.probabilities()[:8], analytic, atol=1e-10)
        assert np.sum(out.probabilities()[8:]) < 1e-10

    def test_shot_statistics(self):
        N = 3
        psi = random_state(N, seed=6)
        out = apply_qcht(ANCILLA_ZERO.tensor(psi), inverse=True)
        analytic = np.abs(tau_coefficients(N, chebyshev_nodes(N).nodes) @ psi.amplitudes) ** 2
        counts = counts_to_array(sample_counts(out, 1_000_000, seed=42), 16)
        assert counts[8:].sum() == 0
        assert total_variation(counts[:8] / 1_000_000, analytic) < 0.005


class TestExtension:
    def test_function_shape_preserved(self):
        psi = random_state(2, seed=9)
        extended = extend_register(psi, 8)
        rng = np.random.default_rng(10)
        xs = rng.uniform(-1, 1, 50)
        coarse = np.abs(tau_coefficients(2, xs) @ psi.amplitudes) ** 2
        fine = np.abs(tau_coefficients(8, xs) @ extended.amplitudes) ** 2
        np.testing.assert_allclose(fine, coarse / 2 ** 6, atol=1e-10)

    def test_polynomial_values_up_to_scale(self):
        psi = Statevector.from_amplitudes([0.3, -0.5, 0.2, 0.7], normalize=True)
        extended = extend_register(psi, 5)
        xs = np.linspace(-1, 1, 21)
        coarse = tau_coefficients(2, xs) @ psi.amplitudes
        fine = tau_coefficients(5, xs) @ extended.amplitudes
        np.testing.assert_allclose(fine, coarse * 2 ** -1.5, atol=1e-12)

    def test_zero_padding_and_norm(self):
        psi = random_state(3, seed=11)
        extended = extend_register(psi, 6)
        assert extended.n_qubits == 6
        assert np.all(extended.amplitudes[8:] == 0)
        assert extended.norm() == pytest.approx(1.0, abs=1e-12)

    def test_target_must_grow(self):
        with pytest.raises(UsageError):
            extend_register(random_state(3, seed=1), 3)

    def test_target_respects_qubit_limit(self, monkeypatch):
        monkeypatch.setattr(config, "max_qubits", 10)
        with pytest.raises(ConfigurationError):
            extend_register(random_state(2, seed=1), 20)

    def test_target_respects_memory_budget(self, monkeypatch):
        psi = random_state(2, seed=1)
        monkeypatch.setattr(config, "memory_headroom", 1e-12)
        with pytest.raises(ConfigurationError):
            extend_register(psi, 8)
