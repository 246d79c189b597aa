"""Tests for Chebyshev polynomials, grids, states and derived matrices."""

import numpy as np
import pytest

from chebmath.dct import dct2_matrix
from chebmath.geff import derivative_expansion, g_eff_matrix
from chebmath.grid import chebyshev_nodes
from chebmath.polynomials import (
    chebyshev_derivative_vander,
    chebyshev_T,
    chebyshev_T_derivative,
    chebyshev_vander,
)
from chebmath.tau import (
    amplitude_weights,
    orthogonality_sum,
    overlap_sq_direct,
    overlap_sq_formula,
    tau_coefficients,
    tau_derivative_coeffs,
    tau_norm,
    tau_state,
)
from utils.exceptions import ConfigurationError, DomainError, UsageError


class TestPolynomials:
    def test_matches_trigonometric_form(self):
        x = np.linspace(-0.99, 0.99, 41)
        for k in range(12):
            np.testing.assert_allclose(chebyshev_T(k, x), np.cos(k * np.arccos(x)), atol=1e-12)

    def test_scalar_in_scalar_out(self):
        assert isinstance(chebyshev_T(3, 0.2), float)
        assert chebyshev_T(3, 0.2) == pytest.approx(4 * 0.2 ** 3 - 3 * 0.2)
        assert chebyshev_vander(0.2, 4).shape == (4,)

    def test_endpoints(self):
        assert chebyshev_T(7, 1.0) == pytest.approx(1.0)
        assert chebyshev_T(7, -1.0) == pytest.approx(-1.0)
        assert chebyshev_T_derivative(7, 1.0) == pytest.approx(49.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            chebyshev_T(2, 1.5)
        with pytest.raises(DomainError):
            chebyshev_vander(np.array([0.0, np.nan]), 3)

    def test_derivative_against_finite_difference(self):
        x = np.linspace(-0.9, 0.9, 19)
        h = 1e-6
        fd = (chebyshev_vander(x + h, 16) - chebyshev_vander(x - h, 16)) / (2 * h)
        np.testing.assert_allclose(chebyshev_derivative_vander(x, 16), fd, rtol=1e-6, atol=1e-6)

    def test_derivative_of_constant(self):
        assert chebyshev_T_derivative(0, 0.3) == 0.0


class TestGrid:
    def test_one_qubit_nodes(self):
        grid = chebyshev_nodes(1)
        np.testing.assert_allclose(grid.nodes, [np.sqrt(2) / 2, -np.sqrt(2) / 2], atol=1e-15)

    def test_three_qubit_nodes(self):
        grid = chebyshev_nodes(3)
        assert len(grid) == 8
        assert np.all(np.diff(grid.nodes) < 0)
        j = np.arange(8)
        np.testing.assert_allclose(grid.nodes, np.cos(np.pi * (2 * j + 1) / 16), atol=1e-15)

    def test_antisymmetric(self):
        nodes = chebyshev_nodes(5).nodes
        np.testing.assert_array_equal(nodes, -nodes[::-1])

    def test_nodes_are_zeros_of_t(self):
        for N in range(1, 7):
            np.testing.assert_allclose(chebyshev_T(2 ** N, chebyshev_nodes(N).nodes), 0.0, atol=1e-12)

    def test_index_lookup(self):
        grid = chebyshev_nodes(3)
        assert grid.index_of(grid.value(5)) == 5
        assert grid.is_node(grid.value(2))
        assert not grid.is_node(0.0)
        with pytest.raises(UsageError):
            grid.index_of(0.0)
        with pytest.raises(UsageError):
            grid.value(8)

    def test_positive_nodes(self):
        positive = chebyshev_nodes(5).positive()
        assert positive.shape == (16,)
        assert np.all(positive > 0)

    def test_size_range(self):
        with pytest.raises(ConfigurationError):
            chebyshev_nodes(0)


class TestTauStates:
    def test_weights(self):
        w = amplitude_weights(3)
        assert w[0] == pytest.approx(2 ** -1.5)
        np.testing.assert_allclose(w[1:], 0.5)

    @pytest.mark.parametrize("N", range(1, 9))
    def test_orthonormal_at_nodes(self, N):
        basis = tau_coefficients(N, chebyshev_nodes(N).nodes)
        np.testing.assert_allclose(basis @ basis.T, np.eye(2 ** N), atol=1e-12)

    def test_discrete_orthogonality(self):
        assert orthogonality_sum(3, 0, 0) == pytest.approx(8)
        assert orthogonality_sum(3, 2, 2) == pytest.approx(4)
        assert abs(orthogonality_sum(3, 1, 4)) < 1e-12
        with pytest.raises(UsageError):
            orthogonality_sum(3, 8, 0)

    def test_norm(self):
        for x in (-0.95, -0.3, 0.0, 0.41, 1.0):
            assert tau_norm(4, x) == pytest.approx(np.linalg.norm(tau_coefficients(4, x)), rel=1e-12)
        for node in chebyshev_nodes(4).nodes:
            assert tau_norm(4, node) == pytest.approx(1.0, abs=1e-12)

    def test_normalized_state(self):
        state = tau_state(3, 0.37)
        assert np.linalg.norm(state.normalized()) == pytest.approx(1.0, abs=1e-12)

    def test_derivative_coeffs(self):
        x, h = 0.23, 1e-6
        fd = (tau_coefficients(3, x + h) - tau_coefficients(3, x - h)) / (2 * h)
        np.testing.assert_allclose(tau_derivative_coeffs(3, x), fd, atol=1e-7)

    def test_overlap_formula_random_pairs(self):
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            N = int(rng.integers(2, 7))
            nodes = chebyshev_nodes(N).nodes
            x_prime = nodes[rng.integers(len(nodes))]
            x = rng.uniform(-1, 1)
            assert abs(overlap_sq_formula(N, x_prime, x) - overlap_sq_direct(N, x_prime, x)) < 1e-9

    @pytest.mark.parametrize("N", range(1, 9))
    def test_overlap_formula_next_to_node(self, N):
        for x_prime in chebyshev_nodes(N).nodes:
            for delta in (1e-11, 1e-10, 1e-9, 1e-8, 1e-7, 2e-6, 1e-5):
                for x in (x_prime - delta, x_prime + delta):
                    assert abs(overlap_sq_formula(N, x_prime, x) - overlap_sq_direct(N, x_prime, x)) < 1e-9

    def test_overlap_profile_at_nodes(self):
        nodes = chebyshev_nodes(3).nodes
        x_prime = nodes[7]
        for j, x in enumerate(nodes):
            value = overlap_sq_formula(3, x_prime, x)
            if j == 7:
                assert value == pytest.approx(1.0, abs=1e-12)
            else:
                assert value < 1e-9

    def test_overlap_requires_node(self):
        with pytest.raises(UsageError):
            overlap_sq_formula(3, 0.1, 0.2)


class TestDct:
    @pytest.mark.parametrize("N", range(1, 7))
    def test_columns_are_node_states(self, N):
        nodes = chebyshev_nodes(N).nodes
        np.testing.assert_allclose(dct2_matrix(N), tau_coefficients(N, nodes).T, atol=1e-12)

    def test_orthogonal(self):
        c = dct2_matrix(5)
        np.testing.assert_allclose(c.T @ c, np.eye(32), atol=1e-12)

    def test_two_qubit_entries(self):
        c = dct2_matrix(2)
        assert c[0, 1] == pytest.approx(0.5)
        assert c[1, 1] == pytest.approx(np.sqrt(0.5) * np.cos(3 * np.pi / 8))


class TestGEff:
    def test_expansion_small_degrees(self):
        d = derivative_expansion(4)
        # T1' = T0, T2' = 4 T1, T3' = 3 T0 + 6 T2
        np.testing.assert_array_equal(d[1], [1, 0, 0, 0])
        np.testing.assert_array_equal(d[2], [0, 4, 0, 0])
        np.testing.assert_array_equal(d[3], [3, 0, 6, 0])

    def test_structure(self):
        g = g_eff_matrix(4).entries
        assert np.all(g[0] == 0)
        assert np.all(np.triu(g) == 0)

    @pytest.mark.parametrize("N", range(1, 7))
    def test_maps_tau_to_derivative(self, N):
        x = np.random.default_rng(N).uniform(-1, 1, 100)
        g = g_eff_matrix(N)
        np.testing.assert_allclose(g.apply(tau_coefficients(N, x)), tau_derivative_coeffs(N, x), rtol=1e-10, atol=1e-9)
