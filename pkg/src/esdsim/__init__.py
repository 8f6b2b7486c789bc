"""Negativity dynamics of maximally entangled states under one-sided noise.

The package simulates amplitude damping, phase damping, generalized
amplitude damping and depolarizing noise acting on a single subsystem of
a maximally entangled qubit-qutrit or qutrit-qutrit state, tracks the
negativity of the partial transpose over time, detects entanglement
sudden death, and cross-checks the numbers against closed-form curves.
"""

from .analytic import NoClosedFormError, analytic_negativity, esd_time_analytic, has_closed_form
from .channels import (
    AMPLITUDE_DAMPING,
    DEPOLARIZING,
    GENERALIZED_AMPLITUDE_DAMPING,
    NOISE_KINDS,
    PHASE_DAMPING,
    ChannelAtTime,
    NoiseModel,
    apply_local,
    cptp_deviation,
    kraus_set,
    validate_cptp,
)
from .dynamics import (
    ASYMPTOTIC,
    FINITE_TIME,
    EsdResult,
    NegativitySeries,
    compare,
    esd_time,
    gad_p_scan,
    negativity_at,
    sweep,
)
from .linalg import EigensolverError, dagger, hermitian_eigenvalues, kron, matmul
from .negativity import negativity, partial_transpose
from .states import BipartiteState, DensityMatrix, max_entangled, schmidt_state, to_density

__version__ = "0.1.0"

__all__ = [
    "AMPLITUDE_DAMPING",
    "ASYMPTOTIC",
    "BipartiteState",
    "ChannelAtTime",
    "DEPOLARIZING",
    "DensityMatrix",
    "EigensolverError",
    "EsdResult",
    "FINITE_TIME",
    "GENERALIZED_AMPLITUDE_DAMPING",
    "NOISE_KINDS",
    "NegativitySeries",
    "NoClosedFormError",
    "NoiseModel",
    "PHASE_DAMPING",
    "analytic_negativity",
    "apply_local",
    "compare",
    "cptp_deviation",
    "dagger",
    "esd_time",
    "esd_time_analytic",
    "gad_p_scan",
    "has_closed_form",
    "hermitian_eigenvalues",
    "kraus_set",
    "kron",
    "matmul",
    "max_entangled",
    "negativity",
    "negativity_at",
    "partial_transpose",
    "schmidt_state",
    "sweep",
    "to_density",
    "validate_cptp",
]
