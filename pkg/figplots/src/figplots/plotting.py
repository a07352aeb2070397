"""Figure assembly from parsed sweep files.

Data fidelity rule: values are plotted exactly as parsed — never
re-normalized, never interpolated across masked gaps — and the peak
markers sit on the rows the file's own metadata names.
"""

import dataclasses
import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import style
from .csvread import SweepCsv, read_sweep_csv


class MissingColumn(Exception):
    def __init__(self, column, path):
        super().__init__(f"column {column!r} not in {path}")
        self.column = column
        self.path = path


@dataclasses.dataclass(frozen=True)
class PlotJob:
    """One rendering request: input sweeps, layout, overlay choice, output."""

    csv_paths: tuple
    out_path: str
    columns: tuple | None = None  # None = every *_norm column per file
    layout: tuple | None = None  # (rows, cols); None = one horizontal row
    image_format: str | None = None  # None = from out_path suffix

    def __post_init__(self):
        if not self.csv_paths:
            raise ValueError("at least one CSV path is required")
        if self.columns is not None and len(self.columns) == 0:
            raise ValueError("empty column list: nothing to plot")
        if self.layout is not None:
            rows, cols = self.layout
            if rows < 1 or cols < 1 or rows * cols < len(self.csv_paths):
                raise ValueError(
                    f"layout {self.layout} cannot hold "
                    f"{len(self.csv_paths)} panels")


def _columns_for(table: SweepCsv, requested) -> list:
    if requested is None:
        chosen = table.norm_columns()
        if not chosen:
            raise MissingColumn("*_norm", table.path)
        return chosen
    for name in requested:
        if name not in table.header:
            raise MissingColumn(name, table.path)
    return list(requested)


def _draw_panel(ax, table: SweepCsv, requested) -> list:
    """Plot one sweep file on one axes; returns peak-marker records."""
    x = table.column(table.swept)
    markers = []
    for k, name in enumerate(_columns_for(table, requested)):
        y = table.column(name)
        color = style.COLORS[k % len(style.COLORS)]
        dashes = style.LINE_STYLES[k % len(style.LINE_STYLES)]
        ax.plot(x, y, color=color, linestyle=dashes, lw=style.LINE_WIDTH,
                label=style.label_for_column(name))
        row = table.argmax_row(name)
        if row is not None and not math.isnan(y[row]):
            ax.scatter([x[row]], [y[row]], s=style.PEAK_MARKER_SIZE,
                       marker=style.PEAK_MARKER, color=color,
                       edgecolor=style.PEAK_MARKER_EDGE, zorder=5)
            markers.append((name, row, x[row], y[row]))
    ax.set_xlabel(style.label_for_axis(table.swept),
                  fontsize=style.FONT_SIZE)
    ax.grid(alpha=style.GRID_ALPHA)
    ax.legend(fontsize=style.LEGEND_SIZE)
    title = table.metadata.get("preset")
    if title:
        ax.set_title(title, fontsize=style.FONT_SIZE)
    return markers


def build_figure(job: PlotJob):
    """Assemble the figure; returns (figure, marker records per panel)."""
    tables = [read_sweep_csv(p) for p in job.csv_paths]
    rows, cols = job.layout if job.layout is not None else (1, len(tables))
    fig, axes = plt.subplots(
        rows, cols,
        figsize=(style.PANEL_WIDTH * cols, style.PANEL_HEIGHT * rows),
        squeeze=False)
    flat = [ax for row in axes for ax in row]
    panel_markers = []
    for ax, table in zip(flat, tables):
        panel_markers.append(_draw_panel(ax, table, job.columns))
    for ax in flat[len(tables):]:
        ax.set_axis_off()
    fig.tight_layout()
    return fig, panel_markers


def render(job: PlotJob) -> str:
    """Write the image for one job; returns the output path."""
    out = job.out_path
    fmt = job.image_format
    if fmt is None:
        suffix = out.rpartition(".")[2].lower() if "." in out else ""
        fmt = suffix if suffix in ("svg", "pdf", "png") else None
    if fmt is None:
        fmt = "svg"  # vector by default
        out = out + ".svg"
    plt.rcParams["svg.hashsalt"] = style.SVG_HASH_SALT
    fig, _ = build_figure(job)
    try:
        # strip the embedded timestamps so identical inputs give
        # identical bytes
        metadata = None
        if fmt == "svg":
            metadata = {"Date": None}
        elif fmt == "pdf":
            metadata = {"CreationDate": None}
        fig.savefig(out, format=fmt, dpi=style.DPI, metadata=metadata)
    finally:
        plt.close(fig)
    return out
