"""Bipartite pure states and their density matrices.

Basis convention used everywhere in this package: the product basis state
|i, j> of a dim_a x dim_b system sits at flat index i * dim_b + j, i.e.
the second subsystem's index runs fastest.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import max_abs

SUPPORTED_DIMS = (2, 3)
NORMALIZATION_TOL = 1e-12
DENSITY_HERMITIAN_TOL = 1e-12
DENSITY_TRACE_TOL = 1e-12
DENSITY_PSD_TOL = 1e-10


@dataclass(frozen=True)
class BipartiteState:
    """Pure state of a dim_a x dim_b system, amplitudes in |i,j> order."""

    dim_a: int
    dim_b: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.dim_a not in SUPPORTED_DIMS or self.dim_b not in SUPPORTED_DIMS:
            raise ValueError(f"unsupported dimensions ({self.dim_a}, {self.dim_b})")
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != self.dim_a * self.dim_b:
            raise ValueError(
                f"expected {self.dim_a * self.dim_b} amplitudes, got {amps.size}"
            )
        if not np.isfinite(amps).all():
            raise ValueError("amplitudes contain non-finite entries")
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"state is not normalized: sum |a|^2 = {norm_sq!r}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dim_a, self.dim_b)


@dataclass(frozen=True)
class DensityMatrix:
    """Density matrix of a bipartite system with remembered local dims."""

    dim_a: int
    dim_b: int
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        d = self.dim_a * self.dim_b
        if m.shape != (d, d):
            raise ValueError(f"expected a {d}x{d} matrix, got shape {m.shape}")
        if not np.isfinite(m).all():
            raise ValueError("matrix contains non-finite entries")
        if max_abs(m - m.conj().T) > DENSITY_HERMITIAN_TOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > DENSITY_TRACE_TOL or abs(np.trace(m).imag) > DENSITY_TRACE_TOL:
            raise ValueError(f"density matrix trace is {np.trace(m)!r}, expected 1")
        object.__setattr__(self, "matrix", m)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dim_a, self.dim_b)

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    def min_eigenvalue(self) -> float:
        from .linalg import hermitian_eigenvalues

        return float(hermitian_eigenvalues(self.matrix)[-1])

    def validate(self, psd_tol: float = DENSITY_PSD_TOL) -> None:
        """Raise if the matrix is not positive semidefinite within psd_tol.

        Hermiticity and unit trace are already enforced on construction.
        """
        smallest = self.min_eigenvalue()
        if smallest < -psd_tol:
            raise ValueError(f"density matrix has eigenvalue {smallest:.3e}")


def schmidt_state(a: float, dim_a: int, dim_b: int) -> BipartiteState:
    """Two-term Schmidt state a|00> + sqrt(1 - a^2)|11>."""
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"Schmidt coefficient must lie in [0, 1], got {a!r}")
    if dim_a not in SUPPORTED_DIMS or dim_b not in SUPPORTED_DIMS:
        raise ValueError(f"unsupported dimensions ({dim_a}, {dim_b})")
    amps = np.zeros(dim_a * dim_b, dtype=complex)
    amps[0] = a
    amps[dim_b + 1] = np.sqrt(1.0 - a * a)
    return BipartiteState(dim_a, dim_b, amps)


def max_entangled(dim_a: int, dim_b: int) -> BipartiteState:
    """Maximally entangled state: equal weight 1/sqrt(d) on |kk>, d = min dim."""
    if dim_a not in SUPPORTED_DIMS or dim_b not in SUPPORTED_DIMS:
        raise ValueError(f"unsupported dimensions ({dim_a}, {dim_b})")
    if dim_a > dim_b:
        raise ValueError("dim_a must not exceed dim_b")
    d = min(dim_a, dim_b)
    amps = np.zeros(dim_a * dim_b, dtype=complex)
    for k in range(d):
        amps[k * dim_b + k] = 1.0 / np.sqrt(d)
    return BipartiteState(dim_a, dim_b, amps)


def to_density(state: BipartiteState) -> DensityMatrix:
    """Outer product |psi><psi| of a pure state."""
    v = state.amplitudes
    return DensityMatrix(state.dim_a, state.dim_b, np.outer(v, v.conj()))
