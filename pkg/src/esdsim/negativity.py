"""Partial transpose and negativity of bipartite density matrices."""

from __future__ import annotations

import numpy as np

from .linalg import hermitian_eigenvalues
from .states import DensityMatrix

# Partial-transpose eigenvalues above this (negative) cutoff are treated
# as round-off noise at the PPT boundary rather than genuine negativity.
NEGATIVE_EIGENVALUE_CUTOFF = -1e-12


def partial_transpose(rho: DensityMatrix, side: str = "first") -> np.ndarray:
    """Transpose the chosen subsystem's indices.

    For side="first" the entry ((i, j), (k, l)) moves to ((k, j), (i, l));
    for side="second" it moves to ((i, l), (k, j)). The result is again
    Hermitian with unit trace, but generally not positive.
    """
    da, db = rho.dim_a, rho.dim_b
    blocks = rho.matrix.reshape(da, db, da, db)
    if side == "first":
        swapped = blocks.transpose(2, 1, 0, 3)
    elif side == "second":
        swapped = blocks.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"side must be 'first' or 'second', got {side!r}")
    return swapped.reshape(da * db, da * db).copy()


def negativity(rho: DensityMatrix, side: str = "first") -> float:
    """Sum of |eigenvalue| over the negative partial-transpose spectrum.

    Zero for PPT states. The value does not depend on ``side``: the two
    partial transposes are transposes of each other and share a spectrum.
    For 2x3 systems a zero value certifies separability; for 3x3 it only
    means no entanglement is detectable through the partial transpose.
    """
    lam = hermitian_eigenvalues(partial_transpose(rho, side))
    negative = lam[lam < NEGATIVE_EIGENVALUE_CUTOFF]
    return float(-negative.sum()) + 0.0  # "+ 0.0" normalizes -0.0 away
