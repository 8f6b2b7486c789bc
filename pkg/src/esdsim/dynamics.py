"""Negativity time sweeps, sudden-death detection and channel comparisons.

All dynamics start from the maximally entangled state of the requested
dimensions and expose noise on exactly one subsystem. Time is always the
dimensionless gamma_t.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channels import GENERALIZED_AMPLITUDE_DAMPING, NoiseModel, apply_local, kraus_set
from .negativity import negativity
from .states import max_entangled, to_density

# Negativity at or below this is indistinguishable from round-off at
# double precision; it defines "reached zero" for verdict purposes.
ZERO_TOL = 1e-9

# The sudden-death bracket is bisected down to this width.
BISECTION_WIDTH = 1e-8

DEFAULT_T_MAX = 10.0
DEFAULT_STEPS = 401

FINITE_TIME = "FiniteTime"
ASYMPTOTIC = "Asymptotic"


@dataclass(frozen=True)
class NegativitySeries:
    """A sampled negativity-versus-time curve for one channel."""

    model: NoiseModel
    dims: tuple[int, int]
    side: str
    gamma_t: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        grid = np.asarray(self.gamma_t, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        if grid.size == 0 or grid.size != vals.size:
            raise ValueError("series requires matching, non-empty grids")
        if not (np.diff(grid) > 0.0).all():
            raise ValueError("gamma_t grid must be strictly increasing")
        if (vals < 0.0).any():
            raise ValueError("negativity values must be non-negative")
        object.__setattr__(self, "gamma_t", grid)
        object.__setattr__(self, "values", vals)

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.gamma_t.tolist(), self.values.tolist()))

    @property
    def label(self) -> str:
        return self.model.label


@dataclass(frozen=True)
class EsdResult:
    """Verdict of a sudden-death search.

    FiniteTime carries the bracketed crossing time and the final bracket
    width; Asymptotic carries the negativity remaining at t_max. The
    verdict is relative to ZERO_TOL (or the zero_tol passed in): an
    exponential tail that stays above it up to t_max reads as Asymptotic.
    """

    verdict: str
    time: float | None = None
    bracket_width: float | None = None
    final_negativity: float | None = None

    @property
    def is_finite(self) -> bool:
        return self.verdict == FINITE_TIME


def negativity_at(
    model: NoiseModel,
    dims: tuple[int, int],
    gamma_t: float,
    side: str = "first",
) -> float:
    """Negativity of the maximally entangled state after one-sided noise."""
    rho0 = to_density(max_entangled(*dims))
    local_dim = dims[0] if side == "first" else dims[1]
    evolved = apply_local(kraus_set(model, local_dim, gamma_t), rho0, side)
    return negativity(evolved)


def _evaluator(model, dims, side):
    rho0 = to_density(max_entangled(*dims))
    local_dim = dims[0] if side == "first" else dims[1]

    def point(gamma_t: float) -> float:
        return negativity(apply_local(kraus_set(model, local_dim, gamma_t), rho0, side))

    return point


def sweep(
    model: NoiseModel,
    dims: tuple[int, int],
    side: str = "first",
    t_max: float = DEFAULT_T_MAX,
    steps: int = DEFAULT_STEPS,
    workers: int = 1,
) -> NegativitySeries:
    """Sample negativity on a uniform grid over [0, t_max].

    Grid points are independent; with workers > 1 they are evaluated in a
    thread pool. The result is assembled in grid order either way, so the
    output is identical regardless of evaluation order.
    """
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps!r}")
    if t_max <= 0.0:
        raise ValueError(f"t_max must be positive, got {t_max!r}")
    grid = np.linspace(0.0, float(t_max), int(steps))
    point = _evaluator(model, dims, side)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(point, grid))
    else:
        values = [point(t) for t in grid]
    return NegativitySeries(model, tuple(dims), side, grid, np.array(values))


def esd_time(
    model: NoiseModel,
    dims: tuple[int, int],
    side: str = "first",
    t_max: float = 20.0,
    zero_tol: float = ZERO_TOL,
    scan_steps: int = DEFAULT_STEPS,
) -> EsdResult:
    """Locate the time at which negativity reaches zero, if it does.

    A uniform scan over [0, t_max] brackets the first crossing of
    zero_tol; the bracket is then bisected down to BISECTION_WIDTH.
    Bisection is deliberate: the negativity is piecewise smooth but has
    a derivative kink at the death point, and bisection does not care.
    If no crossing occurs the verdict is Asymptotic, with the negativity
    remaining at t_max recorded as evidence.
    """
    if t_max <= 0.0:
        raise ValueError(f"t_max must be positive, got {t_max!r}")
    if zero_tol <= 0.0:
        raise ValueError(f"zero_tol must be positive, got {zero_tol!r}")
    if scan_steps < 2:
        raise ValueError(f"scan_steps must be at least 2, got {scan_steps!r}")
    point = _evaluator(model, dims, side)
    grid = np.linspace(0.0, float(t_max), int(scan_steps))
    values = [point(t) for t in grid]
    if values[0] <= zero_tol:
        return EsdResult(FINITE_TIME, time=0.0, bracket_width=0.0)
    bracket = None
    for i in range(len(grid) - 1):
        if values[i] > zero_tol >= values[i + 1]:
            bracket = (grid[i], grid[i + 1])
            break
    if bracket is None:
        return EsdResult(ASYMPTOTIC, final_negativity=values[-1])
    lo, hi = bracket
    while hi - lo > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        if point(mid) > zero_tol:
            lo = mid
        else:
            hi = mid
    return EsdResult(FINITE_TIME, time=0.5 * (lo + hi), bracket_width=hi - lo)


def compare(
    models: list[NoiseModel],
    dims: tuple[int, int],
    t_max: float = DEFAULT_T_MAX,
    steps: int = DEFAULT_STEPS,
    side: str = "first",
) -> list[NegativitySeries]:
    """Sweep several models on one shared grid for curve-vs-curve plots."""
    if len(models) < 2:
        raise ValueError("compare needs at least two models")
    return [sweep(m, dims, side, t_max, steps) for m in models]


def gad_p_scan(
    dims: tuple[int, int],
    p_values: list[float],
    t_max: float = DEFAULT_T_MAX,
    steps: int = DEFAULT_STEPS,
    side: str = "first",
) -> list[NegativitySeries]:
    """One generalized-amplitude-damping sweep per mixing probability."""
    for p in p_values:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p values must lie in [0, 1], got {p!r}")
    return [
        sweep(NoiseModel(GENERALIZED_AMPLITUDE_DAMPING, p=p), dims, side, t_max, steps)
        for p in p_values
    ]
