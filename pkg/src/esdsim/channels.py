"""Kraus operator families for single-subsystem noise.

Four noise models, each available for a qubit (dim 2) and a qutrit
(dim 3), all parameterized by the dimensionless time gamma_t = decay
rate times elapsed time:

    eta = gamma = exp(-gamma_t / 2)     damping / dephasing amplitude
    alpha       = 1 - exp(-gamma_t / 2) depolarizing probability

Conventions worth spelling out:

* The qubit damping pair is oriented so population relaxes toward |1>
  (E0 = diag(eta, 1), E1 = sqrt(1-eta^2) |1><0|), while the qutrit set
  relaxes levels |1>, |2> toward |0>. Negativity of the evolved
  maximally entangled state is insensitive to which basis state is the
  sink, and the generalized variant mixes both orientations anyway.
* Generalized amplitude damping attaches weight sqrt(1-p) to the
  qubit operators damping toward |0> but weight sqrt(p) to the qutrit
  operators damping toward |0>. The p <-> 1-p relabeling is a pure
  basis permutation, and every negativity curve is symmetric about
  p = 1/2, so the asymmetry is harmless; it is kept as is.
* The qutrit depolarizing set uses the shift-and-clock unitaries
  Y |j> = |j-1 mod 3>, Z = diag(1, w, w^2) with w = exp(2 pi i / 3):
  the eight products Y^a Z^b, (a, b) != (0, 0), each with weight
  sqrt(alpha/8).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import max_abs
from .states import DensityMatrix

AMPLITUDE_DAMPING = "ad"
PHASE_DAMPING = "pd"
GENERALIZED_AMPLITUDE_DAMPING = "gad"
DEPOLARIZING = "depolarizing"
NOISE_KINDS = (
    AMPLITUDE_DAMPING,
    PHASE_DAMPING,
    GENERALIZED_AMPLITUDE_DAMPING,
    DEPOLARIZING,
)

SIDES = ("first", "second")

CPTP_TOL = 1e-12

OMEGA = np.exp(2j * np.pi / 3)

WEYL_Y = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=complex)
WEYL_Z = np.diag([1.0, OMEGA, OMEGA**2]).astype(complex)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class NoiseModel:
    """A noise kind plus, for generalized amplitude damping, its mixing p."""

    kind: str
    p: float | None = None

    def __post_init__(self):
        if self.kind not in NOISE_KINDS:
            raise ValueError(f"unknown noise kind {self.kind!r}")
        if self.kind == GENERALIZED_AMPLITUDE_DAMPING:
            if self.p is None:
                raise ValueError("generalized amplitude damping requires p")
            if not 0.0 <= self.p <= 1.0:
                raise ValueError(f"p must lie in [0, 1], got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"p is only meaningful for {GENERALIZED_AMPLITUDE_DAMPING!r}")

    @property
    def label(self) -> str:
        if self.kind == GENERALIZED_AMPLITUDE_DAMPING:
            return f"gad p={self.p:g}"
        return self.kind


@dataclass(frozen=True)
class ChannelAtTime:
    """Kraus operators of one noise model at one point in time."""

    model: NoiseModel
    dim: int
    gamma_t: float
    kraus: tuple


def _embed(dim: int, entries: dict[tuple[int, int], complex]) -> np.ndarray:
    m = np.zeros((dim, dim), dtype=complex)
    for (i, j), v in entries.items():
        m[i, j] = v
    return m


def _qubit_kraus(model: NoiseModel, eta: float, alpha: float) -> list[np.ndarray]:
    decay = np.sqrt(1.0 - eta * eta)
    if model.kind == AMPLITUDE_DAMPING:
        return [
            np.diag([eta, 1.0]).astype(complex),
            _embed(2, {(1, 0): decay}),
        ]
    if model.kind == PHASE_DAMPING:
        return [
            np.diag([1.0, eta]).astype(complex),
            _embed(2, {(1, 1): decay}),
        ]
    if model.kind == GENERALIZED_AMPLITUDE_DAMPING:
        cold = np.sqrt(1.0 - model.p)
        hot = np.sqrt(model.p)
        return [
            cold * np.diag([1.0, eta]).astype(complex),
            cold * _embed(2, {(0, 1): decay}),
            hot * np.diag([eta, 1.0]).astype(complex),
            hot * _embed(2, {(1, 0): decay}),
        ]
    # depolarizing
    return [
        np.sqrt(1.0 - alpha) * np.eye(2, dtype=complex),
        np.sqrt(alpha / 3.0) * PAULI_X,
        np.sqrt(alpha / 3.0) * PAULI_Y,
        np.sqrt(alpha / 3.0) * PAULI_Z,
    ]


def _qutrit_kraus(model: NoiseModel, eta: float, alpha: float) -> list[np.ndarray]:
    decay = np.sqrt(1.0 - eta * eta)
    if model.kind == AMPLITUDE_DAMPING:
        return [
            np.diag([1.0, eta, eta]).astype(complex),
            _embed(3, {(0, 1): decay}),
            _embed(3, {(0, 2): decay}),
        ]
    if model.kind == PHASE_DAMPING:
        return [
            np.diag([1.0, eta, eta]).astype(complex),
            _embed(3, {(1, 1): decay}),
            _embed(3, {(2, 2): decay}),
        ]
    if model.kind == GENERALIZED_AMPLITUDE_DAMPING:
        toward_0 = np.sqrt(model.p)
        toward_2 = np.sqrt(1.0 - model.p)
        return [
            toward_0 * np.diag([1.0, eta, eta]).astype(complex),
            toward_0 * _embed(3, {(0, 1): decay}),
            toward_0 * _embed(3, {(0, 2): decay}),
            toward_2 * np.diag([eta, eta, 1.0]).astype(complex),
            toward_2 * _embed(3, {(2, 1): decay}),
            toward_2 * _embed(3, {(2, 0): decay}),
        ]
    # depolarizing: identity plus the eight non-trivial Weyl unitaries
    ops = [np.sqrt(1.0 - alpha) * np.eye(3, dtype=complex)]
    weight = np.sqrt(alpha / 8.0)
    for a in range(3):
        for b in range(3):
            if a == 0 and b == 0:
                continue
            ops.append(weight * (np.linalg.matrix_power(WEYL_Y, a) @ np.linalg.matrix_power(WEYL_Z, b)))
    return ops


def kraus_set(model: NoiseModel, dim: int, gamma_t: float) -> ChannelAtTime:
    """Kraus operators of ``model`` acting on a ``dim``-level system at gamma_t."""
    if dim not in (2, 3):
        raise ValueError(f"unsupported dimension {dim!r} for model {model.kind!r}")
    if gamma_t < 0.0:
        raise ValueError(f"gamma_t must be non-negative, got {gamma_t!r}")
    eta = float(np.exp(-gamma_t / 2.0))
    alpha = 1.0 - eta
    if dim == 2:
        ops = _qubit_kraus(model, eta, alpha)
    else:
        ops = _qutrit_kraus(model, eta, alpha)
    return ChannelAtTime(model=model, dim=dim, gamma_t=float(gamma_t), kraus=tuple(ops))


def cptp_deviation(channel: ChannelAtTime) -> float:
    """Max-norm deviation of sum_i K_i^dagger K_i from the identity."""
    total = np.zeros((channel.dim, channel.dim), dtype=complex)
    for k in channel.kraus:
        total += k.conj().T @ k
    return max_abs(total - np.eye(channel.dim))


def validate_cptp(channel: ChannelAtTime, tol: float = CPTP_TOL) -> bool:
    """True iff the operator set is trace preserving within ``tol``."""
    if not channel.kraus:
        return False
    return cptp_deviation(channel) <= tol


def apply_local(channel: ChannelAtTime, rho: DensityMatrix, side: str = "first") -> DensityMatrix:
    """Apply the channel to one subsystem: sum_i (K_i x I) rho (K_i x I)^dagger.

    ``side`` selects which subsystem the Kraus operators act on; the
    identity rides on the other factor.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    local_dim = rho.dim_a if side == "first" else rho.dim_b
    if channel.dim != local_dim:
        raise ValueError(
            f"channel dimension {channel.dim} does not match the {side} subsystem "
            f"dimension {local_dim}"
        )
    other = np.eye(rho.dim_b if side == "first" else rho.dim_a, dtype=complex)
    out = np.zeros_like(rho.matrix)
    for k in channel.kraus:
        lifted = np.kron(k, other) if side == "first" else np.kron(other, k)
        out += lifted @ rho.matrix @ lifted.conj().T
    out = (out + out.conj().T) / 2.0
    return DensityMatrix(rho.dim_a, rho.dim_b, out)
