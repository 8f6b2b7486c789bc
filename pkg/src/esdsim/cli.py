"""Command-line interface: sweeps, sudden-death detection, channel checks.

Subcommands
    sweep     sample one negativity curve and write it as CSV
    esd       print a one-line verdict: "FiniteTime <t>" or "Asymptotic -"
    validate  report trace preservation and state health for every channel
    figure    write multi-curve CSV data for the four standard figures

Exit codes: 0 success, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .channels import (
    AMPLITUDE_DAMPING,
    DEPOLARIZING,
    GENERALIZED_AMPLITUDE_DAMPING,
    NOISE_KINDS,
    PHASE_DAMPING,
    NoiseModel,
    apply_local,
    cptp_deviation,
    kraus_set,
)
from .dynamics import compare, esd_time, gad_p_scan, sweep
from .linalg import EigensolverError, hermitian_eigenvalues, max_abs
from .states import max_entangled, to_density

SUPPORTED_DIMS = {"2x2": (2, 2), "2x3": (2, 3), "3x3": (3, 3)}

FIGURE_P_VALUES = (0.0, 0.25, 0.5, 0.75, 1.0)

VALIDATE_TIMES = (0.0, 0.5, 1.0, 2.0, 10.0)

PPT_CAVEAT = (
    "note: for 3x3 systems zero negativity only means no entanglement is "
    "detectable through the partial transpose; it does not certify separability"
)


class UsageError(Exception):
    pass


def _format(x: float) -> str:
    return format(float(x), ".12g")


def _write_csv(path: str, header: list[str], columns: list[np.ndarray]) -> None:
    lines = [",".join(header)]
    for row in zip(*columns):
        lines.append(",".join(_format(v) for v in row))
    try:
        with open(path, "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def _parse_dims(text: str) -> tuple[int, int]:
    try:
        return SUPPORTED_DIMS[text]
    except KeyError:
        raise UsageError(
            f"unsupported dims {text!r}; expected one of {', '.join(SUPPORTED_DIMS)}"
        ) from None


def _build_model(args) -> NoiseModel:
    if args.model not in NOISE_KINDS:
        raise UsageError(f"unknown model {args.model!r}; expected one of {', '.join(NOISE_KINDS)}")
    if args.model == GENERALIZED_AMPLITUDE_DAMPING:
        if args.p is None:
            raise UsageError("--p is required for the gad model")
        if not 0.0 <= args.p <= 1.0:
            raise UsageError(f"--p must lie in [0, 1], got {args.p}")
        return NoiseModel(args.model, p=args.p)
    if args.p is not None:
        raise UsageError(f"--p only applies to the gad model, not {args.model!r}")
    return NoiseModel(args.model)


def _check_grid(args) -> None:
    if args.t_max <= 0.0:
        raise UsageError(f"--t-max must be positive, got {args.t_max}")
    if getattr(args, "steps", 2) < 2:
        raise UsageError(f"--steps must be at least 2, got {args.steps}")


def _cmd_sweep(args) -> int:
    model = _build_model(args)
    dims = _parse_dims(args.dims)
    _check_grid(args)
    series = sweep(model, dims, args.side, args.t_max, args.steps)
    _write_csv(args.out, ["gamma_t", f"N({series.label})"], [series.gamma_t, series.values])
    return 0


def _cmd_esd(args) -> int:
    model = _build_model(args)
    dims = _parse_dims(args.dims)
    if args.t_max <= 0.0:
        raise UsageError(f"--t-max must be positive, got {args.t_max}")
    result = esd_time(model, dims, args.side, args.t_max)
    if result.is_finite:
        print(f"{result.verdict} {result.time:.8f}")
        if dims == (3, 3):
            print(PPT_CAVEAT, file=sys.stderr)
    else:
        print(f"{result.verdict} -")
    return 0


def _cmd_validate(args) -> int:
    if args.p is not None and not 0.0 <= args.p <= 1.0:
        raise UsageError(f"--p must lie in [0, 1], got {args.p}")
    gad_p = 0.5 if args.p is None else args.p
    all_ok = True
    print("model          dim  gamma_t  cptp_dev   trace_dev  min_eig      ok")
    for kind in NOISE_KINDS:
        model = NoiseModel(kind, p=gad_p) if kind == GENERALIZED_AMPLITUDE_DAMPING else NoiseModel(kind)
        for dim in (2, 3):
            dims = (2, 3) if dim == 2 else (3, 3)
            rho0 = to_density(max_entangled(*dims))
            for t in VALIDATE_TIMES:
                channel = kraus_set(model, dim, t)
                dev = cptp_deviation(channel)
                evolved = apply_local(channel, rho0, "first")
                trace_dev = abs(np.trace(evolved.matrix) - 1.0)
                min_eig = float(hermitian_eigenvalues(evolved.matrix)[-1])
                herm_dev = max_abs(evolved.matrix - evolved.matrix.conj().T)
                ok = dev <= 1e-12 and trace_dev <= 1e-12 and min_eig >= -1e-10 and herm_dev <= 1e-12
                all_ok = all_ok and ok
                print(
                    f"{model.label:<14} {dim}    {t:<8g} {dev:<10.2e} {trace_dev:<10.2e} "
                    f"{min_eig:< 12.2e} {'yes' if ok else 'NO'}"
                )
    if all_ok:
        print("all channel families trace preserving and positivity preserving")
        return 0
    print("validation FAILED", file=sys.stderr)
    return 3


def _cmd_figure(args) -> int:
    _check_grid(args)
    if args.number in (1, 3):
        dims = (2, 3) if args.number == 1 else (3, 3)
        series = gad_p_scan(dims, list(FIGURE_P_VALUES), args.t_max, args.steps)
        header = ["gamma_t"] + [f"N(p={p:g})" for p in FIGURE_P_VALUES]
    else:
        dims = (2, 3) if args.number == 2 else (3, 3)
        models = [NoiseModel(DEPOLARIZING), NoiseModel(GENERALIZED_AMPLITUDE_DAMPING, p=0.5)]
        series = compare(models, dims, args.t_max, args.steps)
        header = ["gamma_t"] + [f"N({s.label})" for s in series]
    columns = [series[0].gamma_t] + [s.values for s in series]
    _write_csv(args.out, header, columns)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="esdsim",
        description="Negativity decay of maximally entangled states under one-sided noise.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_flags(p, t_max_default):
        p.add_argument("--model", required=True,
                       help="noise model: ad, pd, gad or depolarizing")
        p.add_argument("--dims", required=True, help="system dimensions: 2x2, 2x3 or 3x3")
        p.add_argument("--side", choices=("first", "second"), default="first",
                       help="which subsystem the noise acts on")
        p.add_argument("--p", type=float, default=None,
                       help="mixing probability, required for (and exclusive to) gad")
        p.add_argument("--t-max", dest="t_max", type=float, default=t_max_default,
                       help="end of the gamma_t range")

    p_sweep = sub.add_parser("sweep", help="write one negativity curve as CSV")
    add_model_flags(p_sweep, 10.0)
    p_sweep.add_argument("--steps", type=int, default=401, help="number of grid points")
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_esd = sub.add_parser("esd", help="detect entanglement sudden death")
    add_model_flags(p_esd, 20.0)
    p_esd.set_defaults(func=_cmd_esd)

    p_val = sub.add_parser("validate", help="trace-preservation report for all channels")
    p_val.add_argument("--p", type=float, default=None,
                       help="mixing probability used for the gad rows (default 0.5)")
    p_val.set_defaults(func=_cmd_validate)

    p_fig = sub.add_parser("figure", help="write multi-curve CSV data for figures 1-4")
    p_fig.add_argument("number", type=int, choices=(1, 2, 3, 4))
    p_fig.add_argument("--t-max", dest="t_max", type=float, default=10.0)
    p_fig.add_argument("--steps", type=int, default=401)
    p_fig.add_argument("--out", required=True, help="output CSV path")
    p_fig.set_defaults(func=_cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"esdsim: {exc}", file=sys.stderr)
        return 2
    except EigensolverError as exc:
        print(f"esdsim: numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
