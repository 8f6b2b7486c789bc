"""Render negativity-versus-time curves from esdsim CSV files to PNG.

The input format is what `esdsim sweep` and `esdsim figure` write: a header
row naming gamma_t plus one column per curve, then comma-separated numeric
rows. The renderer plots the columns exactly as parsed, one line per curve,
800x600 pixels, with the y axis pinned at zero from below.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


@dataclass
class FigureSpec:
    csv_path: str
    output_image_path: str
    title: str | None = None
    curve_labels: list[str] | None = None


@dataclass
class RenderedFigure:
    """What was drawn: the parsed grid and curves, exactly as plotted."""

    image_path: str
    gamma_t: list[float]
    curves: dict[str, list[float]] = field(default_factory=dict)


def load_series(csv_path: str) -> tuple[list[str], list[list[float]]]:
    """Parse header and numeric columns; raise ValueError on malformed input."""
    with open(csv_path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{csv_path}: empty file") from None
        if len(header) < 2:
            raise ValueError(f"{csv_path}: expected a gamma_t column plus at least one curve")
        columns: list[list[float]] = [[] for _ in header]
        for line_no, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise ValueError(f"{csv_path}:{line_no}: expected {len(header)} fields, got {len(row)}")
            for col, cell in zip(columns, row):
                try:
                    col.append(float(cell))
                except ValueError:
                    raise ValueError(f"{csv_path}:{line_no}: not a number: {cell!r}") from None
    if not columns[0]:
        raise ValueError(f"{csv_path}: no data rows")
    return header, columns


def render(spec: FigureSpec) -> RenderedFigure:
    """Plot every curve in the CSV and write the PNG."""
    header, columns = load_series(spec.csv_path)
    labels = spec.curve_labels if spec.curve_labels is not None else header[1:]
    if len(labels) != len(header) - 1:
        raise ValueError(f"expected {len(header) - 1} curve labels, got {len(labels)}")

    gamma_t = columns[0]
    fig, ax = plt.subplots(figsize=(8.0, 6.0), dpi=100)
    try:
        for label, values in zip(labels, columns[1:]):
            ax.plot(gamma_t, values, label=label)
        ax.set_xlabel("Γt")
        ax.set_ylabel("negativity")
        ax.set_ylim(bottom=0.0)
        ax.legend()
        if spec.title:
            ax.set_title(spec.title)
        fig.savefig(spec.output_image_path)
    finally:
        plt.close(fig)
    return RenderedFigure(
        image_path=spec.output_image_path,
        gamma_t=gamma_t,
        curves=dict(zip(labels, columns[1:])),
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="esd-plot",
        description="Plot negativity curves from an esdsim CSV file.",
    )
    parser.add_argument("csv_path")
    parser.add_argument("output_image_path")
    parser.add_argument("--title", default=None)
    parser.add_argument("--labels", default=None,
                        help="comma-separated curve labels (default: CSV header names)")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    labels = args.labels.split(",") if args.labels is not None else None
    spec = FigureSpec(args.csv_path, args.output_image_path, title=args.title, curve_labels=labels)
    try:
        render(spec)
    except (OSError, ValueError) as exc:
        print(f"esd-plot: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
