"""Dense complex matrix helpers and a cyclic Jacobi eigensolver.

Every object in the pipeline (state vectors, Kraus operators, density
matrices, partial transposes) is carried as a dense complex numpy array.
The largest matrix anywhere is 9x9, so an O(n^3)-per-sweep Jacobi
iteration is effectively free and keeps the eigenvalue path fully
self-contained and deterministic.
"""

from __future__ import annotations

import numpy as np

# Default tolerance for accepting a matrix as Hermitian.
HERMITIAN_TOL = 1e-10

# The Jacobi iteration stops once the off-diagonal Frobenius norm drops
# below this target; eigenvalue error is then of the same order.
JACOBI_OFFDIAG_TARGET = 1e-13

_MAX_SWEEPS = 100


class EigensolverError(RuntimeError):
    """Raised when the Jacobi iteration fails its convergence checks."""


def kron(a, b) -> np.ndarray:
    """Kronecker product: entry ((i*bm+k),(j*bn+l)) = a[i,j] * b[k,l]."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a, dtype=complex).conj().T


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def max_abs(a) -> float:
    """Largest entry magnitude (max norm)."""
    a = np.asarray(a)
    return float(np.abs(a).max()) if a.size else 0.0


def frobenius(a) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def is_hermitian(a, tol: float = HERMITIAN_TOL) -> bool:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return max_abs(a - a.conj().T) <= tol


def hermitian_eigenvalues(a, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending.

    Cyclic Jacobi iteration: each sweep annihilates every off-diagonal
    pair (p, q) with a complex plane rotation, converging quadratically.
    The input is symmetrized as (A + A^dagger)/2 first so round-off from
    upstream matrix products cannot poison the rotation angles.

    Raises ValueError for non-square or non-Hermitian (beyond ``tol``)
    input, and EigensolverError if the iteration does not reach the
    off-diagonal target or the resulting spectrum fails the trace /
    Frobenius-norm consistency checks.
    """
    h = np.array(a, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    if h.size and not np.isfinite(h).all():
        raise ValueError("matrix contains non-finite entries")
    deviation = max_abs(h - h.conj().T)
    if deviation > tol:
        raise ValueError(
            f"matrix is not Hermitian within {tol:g} (max deviation {deviation:.3e})"
        )
    n = h.shape[0]
    if n == 1:
        return np.array([h[0, 0].real])

    h = (h + h.conj().T) / 2.0
    trace = np.trace(h).real
    fro_sq = float(np.vdot(h, h).real)

    for _ in range(_MAX_SWEEPS):
        if _offdiag_norm(h) < JACOBI_OFFDIAG_TARGET:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(h, p, q, n)
    else:
        raise EigensolverError(
            f"Jacobi sweep limit reached, off-diagonal norm {_offdiag_norm(h):.3e}"
        )

    lam = np.sort(np.diagonal(h).real)[::-1].copy()
    scale = max(1.0, np.sqrt(fro_sq))
    if abs(lam.sum() - trace) > tol * scale or abs((lam * lam).sum() - fro_sq) > tol * scale * scale:
        raise EigensolverError("spectrum failed trace / Frobenius-norm consistency")
    return lam


def _offdiag_norm(h: np.ndarray) -> float:
    off = h - np.diag(np.diagonal(h))
    return float(np.linalg.norm(off))


def _rotate(h: np.ndarray, p: int, q: int, n: int) -> None:
    """Annihilate h[p, q] with the unitary plane rotation J, h <- J^dagger h J.

    With beta = h[p, q] = |beta| e^{i phi}, the phase diag(1, e^{-i phi})
    makes the (p, q) block real symmetric; the classic rotation angle
    tan(2 theta) = 2|beta| / (h[q,q] - h[p,p]) then zeroes the pair.
    """
    beta = h[p, q]
    ab = abs(beta)
    if ab < JACOBI_OFFDIAG_TARGET / n:
        # Too small to matter for the convergence target.
        return
    phase = beta / ab
    tau = (h[q, q].real - h[p, p].real) / (2.0 * ab)
    if tau >= 0.0:
        t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c

    conj_phase = phase.conjugate()
    col_p = h[:, p].copy()
    col_q = h[:, q].copy()
    h[:, p] = c * col_p - (s * conj_phase) * col_q
    h[:, q] = s * col_p + (c * conj_phase) * col_q
    row_p = h[p, :].copy()
    row_q = h[q, :].copy()
    h[p, :] = c * row_p - (s * phase) * row_q
    h[q, :] = s * row_p + (c * phase) * row_q

    h[p, q] = 0.0
    h[q, p] = 0.0
    h[p, p] = h[p, p].real
    h[q, q] = h[q, q].real
