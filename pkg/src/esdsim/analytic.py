"""Closed-form negativity curves used to cross-check the numeric pipeline.

For one-sided noise on the maximally entangled input state the negativity
admits a closed form for amplitude damping, phase damping and depolarizing
noise (generalized amplitude damping has no closed form here; its curves
are produced numerically). With g = gamma_t:

    dims   model          N(g)
    2x3    ad             exp(-g) / 2
    2x3    pd             exp(-g/2) / 2
    2x3    depolarizing   max(0, (2 exp(-g/2) - 1) / 2)
    3x3    ad             (5/6) exp(-g)            [see note]
    3x3    pd             exp(-g/2) (exp(-g/2) + 2) / 3
    3x3    depolarizing   max(0, (3 exp(-g/2) - 1) / 2)

The raw depolarizing expressions go negative past the sudden-death time
(2 ln 2 for 2x3, 2 ln 3 for 3x3) and are clamped at zero.

Note on the 3x3 amplitude-damping coefficient: the eigenvalue pipeline
measures exp(-g), i.e. coefficient 1, not 5/6 (the evolved partial
transpose has three negative eigenvalues of -exp(-g)/3 each). The 5/6
reference value is kept here unchanged so the disagreement stays visible;
the validation suite reports the measured form and treats the numeric
pipeline as ground truth.
"""

from __future__ import annotations

import math

from .channels import (
    AMPLITUDE_DAMPING,
    DEPOLARIZING,
    PHASE_DAMPING,
)


class NoClosedFormError(ValueError):
    """No closed-form negativity is available for this model and dims."""


_FORMULAS = {
    (AMPLITUDE_DAMPING, (2, 3)): lambda g: math.exp(-g) / 2.0,
    (PHASE_DAMPING, (2, 3)): lambda g: math.exp(-g / 2.0) / 2.0,
    (DEPOLARIZING, (2, 3)): lambda g: (2.0 * math.exp(-g / 2.0) - 1.0) / 2.0,
    (AMPLITUDE_DAMPING, (3, 3)): lambda g: 5.0 / 6.0 * math.exp(-g),
    (PHASE_DAMPING, (3, 3)): lambda g: math.exp(-g / 2.0) * (math.exp(-g / 2.0) + 2.0) / 3.0,
    (DEPOLARIZING, (3, 3)): lambda g: (3.0 * math.exp(-g / 2.0) - 1.0) / 2.0,
}

# Time at which the raw depolarizing expression crosses zero.
_ESD_TIMES = {
    (DEPOLARIZING, (2, 3)): 2.0 * math.log(2.0),
    (DEPOLARIZING, (3, 3)): 2.0 * math.log(3.0),
}


def has_closed_form(kind: str, dims: tuple[int, int]) -> bool:
    return (kind, tuple(dims)) in _FORMULAS


def analytic_negativity(kind: str, dims: tuple[int, int], gamma_t: float) -> float:
    """Evaluate the closed-form curve, clamped below at zero."""
    key = (kind, tuple(dims))
    if key not in _FORMULAS:
        raise NoClosedFormError(f"no closed form for model {kind!r} on dims {dims}")
    if gamma_t < 0.0:
        raise ValueError(f"gamma_t must be non-negative, got {gamma_t!r}")
    return max(0.0, _FORMULAS[key](float(gamma_t)))


def esd_time_analytic(kind: str, dims: tuple[int, int]) -> float | None:
    """Exact disentanglement time, or None when the decay is asymptotic."""
    key = (kind, tuple(dims))
    if key not in _FORMULAS:
        raise NoClosedFormError(f"no closed form for model {kind!r} on dims {dims}")
    return _ESD_TIMES.get(key)
