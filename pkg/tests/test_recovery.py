import numpy as np
import pytest

from sparsecode.errors import DomainError, EnumerationCapError
from sparsecode.recovery import (
    cs_decode_exhaustive,
    cs_encode,
    unit_circle_nodes,
    uniqueness_certificate,
    vandermonde_matrix,
)


class TestVandermonde:
    def test_dft_case(self):
        nodes = unit_circle_nodes(4)
        m = vandermonde_matrix(nodes, 4)
        # N-th roots of unity with n = N give a scaled unitary matrix
        assert np.allclose(m.conj().T @ m, 4.0 * np.eye(4), atol=1e-12)

    def test_small_real_nodes(self):
        m = vandermonde_matrix(np.array([1.0, 2.0, 3.0]), 2)
        assert np.allclose(m, [[1, 1, 1], [1, 2, 3]])

    def test_rejects_coincident_nodes(self):
        with pytest.raises(DomainError):
            vandermonde_matrix(np.array([1.0, 1.0 + 1e-12]), 2)

    def test_unit_circle_nodes_are_distinct_and_unimodular(self):
        nodes = unit_circle_nodes(8)
        assert np.allclose(np.abs(nodes), 1.0)
        assert len(set(np.round(nodes, 9))) == 8


class TestEncode:
    def test_zero_vector(self):
        m = vandermonde_matrix(unit_circle_nodes(6), 4)
        assert np.allclose(cs_encode(m, np.zeros(6)), 0.0)

    def test_standard_basis(self):
        m = vandermonde_matrix(unit_circle_nodes(6), 4)
        e2 = np.zeros(6)
        e2[2] = 1.0
        assert np.allclose(cs_encode(m, e2), m[:, 2])

    def test_linearity(self):
        rng = np.random.default_rng(61)
        m = vandermonde_matrix(unit_circle_nodes(5), 3)
        x1, x2 = rng.normal(size=5), rng.normal(size=5)
        lhs = cs_encode(m, x1 + x2)
        rhs = cs_encode(m, x1) + cs_encode(m, x2)
        assert np.allclose(lhs, rhs, atol=1e-12)

    def test_shape_validation(self):
        m = vandermonde_matrix(unit_circle_nodes(5), 3)
        with pytest.raises(DomainError):
            cs_encode(m, np.zeros(4))


class TestDecode:
    def test_zero_measurement(self):
        m = vandermonde_matrix(unit_circle_nodes(8), 4)
        result = cs_decode_exhaustive(m, np.zeros(4), 2)
        assert result.success
        assert result.support_found == ()
        assert np.allclose(result.estimate, 0.0)

    def test_constructed_two_sparse_instance(self):
        m = vandermonde_matrix(unit_circle_nodes(8), 4)
        x = np.zeros(8, dtype=complex)
        x[2], x[5] = 1.0, -2.0
        result = cs_decode_exhaustive(m, cs_encode(m, x), 2)
        assert result.success
        assert result.support_found == (2, 5)
        assert np.abs(result.estimate - x).max() <= 1e-9

    def test_inconsistent_measurement_fails_cleanly(self):
        m = vandermonde_matrix(unit_circle_nodes(8), 4)
        rng = np.random.default_rng(62)
        y = rng.normal(size=4) + 1j * rng.normal(size=4)
        result = cs_decode_exhaustive(m, y, 1, tol=1e-12)
        assert not result.success
        assert result.support_found == ()

    def test_cap(self):
        m = vandermonde_matrix(unit_circle_nodes(20), 8)
        with pytest.raises(EnumerationCapError):
            cs_decode_exhaustive(m, np.zeros(8, dtype=complex), 4, cap=100)

    def test_order_range(self):
        m = vandermonde_matrix(unit_circle_nodes(4), 2)
        with pytest.raises(DomainError):
            cs_decode_exhaustive(m, np.zeros(2, dtype=complex), 5)


class TestUniqueness:
    def test_vandermonde_is_identifiable(self):
        m = vandermonde_matrix(unit_circle_nodes(8), 4)
        assert uniqueness_certificate(m, 2)

    def test_too_few_rows(self):
        m = vandermonde_matrix(unit_circle_nodes(8), 3)
        assert not uniqueness_certificate(m, 2)
