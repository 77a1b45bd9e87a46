from __future__ import annotations

import csv
import os
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "plotkit"  # reproducible SVG ids

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


class MissingColumn(Exception):
    """A referenced column is absent from the input CSV."""


# s(K) thresholds splitting the p-vs-q scatter into green/red/blue bands
BAND_LOW = 0.02
BAND_HIGH = 0.045
BAND_COLORS = ("tab:green", "tab:red", "tab:blue")


@dataclass(frozen=True)
class PlotSpec:
    input_name: str          # CSV file name inside the input directory
    x: str
    y: str
    title: str
    log_x: bool = False
    log_y: bool = False
    band_column: str | None = None          # color points by thresholded column
    band_thresholds: tuple[float, float] = (BAND_LOW, BAND_HIGH)


FIGURES: dict[str, PlotSpec] = {
    "complexity_vs_quotient": PlotSpec(
        "complexity_vs_quotient.csv", "complexity", "quotient",
        "Knot complexity |p|+|q| vs. obstruction quotient"),
    "q_vs_sk": PlotSpec(
        "q_vs_sk.csv", "q", "s_k",
        "|q| vs. obstruction quotient divided by |q|"),
    "p_vs_q_sk": PlotSpec(
        "p_vs_q_sk.csv", "p", "q",
        f"|p| vs. |q|, colored by s(K) at {BAND_LOW} and {BAND_HIGH}",
        band_column="s_k"),
    "complexity_vs_difference": PlotSpec(
        "complexity_vs_difference.csv", "complexity", "difference",
        "Knot complexity |p|+|q| vs. obstruction difference"),
    "minpq_vs_difference": PlotSpec(
        "minpq_vs_difference.csv", "min_pq", "difference",
        "Knot complexity min(|p|,|q|) vs. obstruction difference"),
    "q_vs_difference": PlotSpec(
        "q_vs_difference.csv", "q", "difference",
        "Knot complexity |q| vs. obstruction difference"),
    "q_vs_quotient": PlotSpec(
        "q_vs_quotient.csv", "q", "quotient",
        "Knot complexity |q| vs. obstruction quotient"),
}


def _load_columns(path: str, names: list[str]) -> dict[str, list[float]]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for name in names:
            if name not in header:
                raise MissingColumn(f"{path} has no column {name!r}")
        columns: dict[str, list[float]] = {name: [] for name in names}
        for row in reader:
            for name in names:
                columns[name].append(float(row[name]))
    return columns


def render(spec: PlotSpec, in_dir: str, out_path: str) -> str:
    """Draw one scatter plot and write it to out_path."""
    wanted = [spec.x, spec.y] + ([spec.band_column] if spec.band_column else [])
    data = _load_columns(os.path.join(in_dir, spec.input_name), wanted)
    xs, ys = data[spec.x], data[spec.y]
    fig, ax = plt.subplots(figsize=(7, 5))
    if spec.band_column:
        low, high = spec.band_thresholds
        bands = data[spec.band_column]
        groups = [[], [], []]  # below low / between / above high
        for x, y, s in zip(xs, ys, bands):
            groups[0 if s < low else (1 if s <= high else 2)].append((x, y))
        labels = (f"s(K) < {low}", f"s(K) in ({low}, {high})", f"s(K) > {high}")
        for points, color, label in zip(groups, BAND_COLORS, labels):
            if points:
                ax.scatter(*zip(*points), s=6, color=color, label=label)
        if any(groups):
            ax.legend()
    else:
        ax.scatter(xs, ys, s=6, color="tab:blue")
    if spec.log_x:
        ax.set_xscale("log")
    if spec.log_y:
        ax.set_yscale("log")
    ax.set_xlabel(spec.x)
    ax.set_ylabel(spec.y)
    ax.set_title(spec.title)
    fig.tight_layout()
    metadata = {"Date": None} if out_path.endswith(".svg") else None
    fig.savefig(out_path, metadata=metadata)
    plt.close(fig)
    return out_path


def render_all(in_dir: str, out_dir: str, image_format: str = "png") -> list[str]:
    """Render every known figure from the derived CSVs in in_dir."""
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for name, spec in FIGURES.items():
        out_path = os.path.join(out_dir, f"{name}.{image_format}")
        written.append(render(spec, in_dir, out_path))
    return written
