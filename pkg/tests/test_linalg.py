import numpy as np
import pytest

from esdsim.linalg import (
    EigensolverError,
    dagger,
    hermitian_eigenvalues,
    is_hermitian,
    kron,
    matmul,
)
from oracles import kron_loops, sturm_eigenvalues


def random_complex(rng, rows, cols):
    return rng.uniform(-1, 1, (rows, cols)) + 1j * rng.uniform(-1, 1, (rows, cols))


def random_hermitian(rng, n):
    m = random_complex(rng, n, n)
    return (m + m.conj().T) / 2


class TestKron:
    def test_identity(self):
        assert np.array_equal(kron(np.eye(2), np.eye(3)), np.eye(6))

    def test_diagonal_extension(self):
        # diag(eta, 1) x I3 = diag(eta, eta, eta, 1, 1, 1)
        eta = 0.7
        got = kron(np.diag([eta, 1.0]), np.eye(3))
        assert np.allclose(got, np.diag([eta, eta, eta, 1, 1, 1]), atol=1e-15)

    def test_matches_index_formula(self):
        rng = np.random.default_rng(1)
        for _ in range(5):
            a = random_complex(rng, 2, 2)
            b = random_complex(rng, 3, 3)
            assert np.allclose(kron(a, b), kron_loops(a, b), atol=1e-15)

    def test_associative_and_distributive(self):
        rng = np.random.default_rng(2)
        a, b, c = (random_complex(rng, 2, 2) for _ in range(3))
        assert np.allclose(kron(kron(a, b), c), kron(a, kron(b, c)), atol=1e-13)
        assert np.allclose(kron(a, b + c), kron(a, b) + kron(a, c), atol=1e-13)


class TestDagger:
    def test_identity(self):
        assert np.array_equal(dagger(np.eye(3)), np.eye(3))

    def test_lowering_operator(self):
        # dagger of sqrt(1-eta^2)|1><0| puts the entry at row 0, col 1
        eta = 0.6
        e1 = np.zeros((2, 2), complex)
        e1[1, 0] = np.sqrt(1 - eta**2)
        d = dagger(e1)
        assert d[0, 1] == pytest.approx(np.sqrt(1 - eta**2))
        assert np.count_nonzero(d) == 1

    def test_involution_and_product_reversal(self):
        rng = np.random.default_rng(3)
        a = random_complex(rng, 3, 3)
        b = random_complex(rng, 3, 3)
        assert np.allclose(dagger(dagger(a)), a, atol=1e-15)
        assert np.allclose(dagger(a @ b), dagger(b) @ dagger(a), atol=1e-14)


class TestMatmul:
    def test_identity(self):
        rng = np.random.default_rng(4)
        m = random_complex(rng, 6, 6)
        assert np.allclose(matmul(np.eye(6), m), m, atol=1e-15)

    def test_damping_pair_completes_at_eta_one(self):
        e0 = np.diag([1.0, 1.0]).astype(complex)  # eta = 1 turns diag(eta, 1) into I
        assert np.allclose(matmul(e0, dagger(e0)), np.eye(2), atol=1e-15)

    def test_associativity(self):
        rng = np.random.default_rng(5)
        a, b, c = (random_complex(rng, 4, 4) for _ in range(3))
        assert np.allclose(matmul(matmul(a, b), c), matmul(a, matmul(b, c)), atol=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            matmul(np.eye(2), np.eye(3))


class TestHermitianEigenvalues:
    def test_diagonal(self):
        assert np.allclose(hermitian_eigenvalues(np.diag([3.0, 1.0, 2.0])), [3, 2, 1])

    def test_damped_partial_transpose_spectrum(self):
        # spectrum {1/2, 1/2, eta^2/2, 0, 0, -eta^2/2} of the 6x6 partial
        # transpose, here at eta = 1
        m = np.zeros((6, 6), complex)
        m[0, 0] = 0.5
        m[1, 3] = m[3, 1] = 0.5
        m[4, 4] = 0.5
        lam = hermitian_eigenvalues(m)
        assert np.allclose(lam, [0.5, 0.5, 0.5, 0, 0, -0.5], atol=1e-12)

    @pytest.mark.parametrize("eta", [0.0, 0.25, 0.5, 0.75, 1.0])
    def test_damped_partial_transpose_family(self, eta):
        m = np.zeros((6, 6), complex)
        m[0, 0] = eta**2 / 2
        m[1, 3] = m[3, 1] = eta / 2
        m[3, 3] = (1 - eta**2) / 2
        m[4, 4] = 0.5
        lam = hermitian_eigenvalues(m)
        expected = np.sort([0.5, 0.5, eta**2 / 2, 0.0, 0.0, -(eta**2) / 2])[::-1]
        assert np.abs(lam - expected).max() < 1e-10

    def test_complex_pauli(self):
        assert np.allclose(hermitian_eigenvalues(np.array([[0, -1j], [1j, 0]])), [1, -1])

    def test_against_charpoly_oracle(self):
        rng = np.random.default_rng(6)
        for _ in range(10):
            h = random_hermitian(rng, 9)
            assert np.abs(hermitian_eigenvalues(h) - sturm_eigenvalues(h)).max() < 1e-8

    def test_against_lapack(self):
        rng = np.random.default_rng(7)
        for n in (2, 3, 4, 6, 9):
            h = random_hermitian(rng, n)
            ref = np.sort(np.linalg.eigvalsh(h))[::-1]
            assert np.abs(hermitian_eigenvalues(h) - ref).max() < 1e-12

    def test_trace_and_norm_consistency(self):
        rng = np.random.default_rng(8)
        h = random_hermitian(rng, 7)
        lam = hermitian_eigenvalues(h)
        assert lam.sum() == pytest.approx(np.trace(h).real, abs=1e-11)
        assert (lam**2).sum() == pytest.approx(np.vdot(h, h).real, abs=1e-11)

    def test_sorted_descending(self):
        rng = np.random.default_rng(9)
        lam = hermitian_eigenvalues(random_hermitian(rng, 8))
        assert (np.diff(lam) <= 0).all()

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            hermitian_eigenvalues(np.zeros((2, 3)))

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_non_finite(self):
        m = np.eye(2, dtype=complex)
        m[0, 0] = np.nan
        with pytest.raises(ValueError, match="finite"):
            hermitian_eigenvalues(m)

    def test_1x1(self):
        assert hermitian_eigenvalues(np.array([[4.0]])) == pytest.approx([4.0])

    def test_error_type_is_runtime_error(self):
        assert issubclass(EigensolverError, RuntimeError)


def test_is_hermitian():
    assert is_hermitian(np.array([[1.0, 2j], [-2j, 0.0]]))
    assert not is_hermitian(np.array([[1.0, 2j], [2j, 0.0]]))
    assert not is_hermitian(np.zeros((2, 3)))
