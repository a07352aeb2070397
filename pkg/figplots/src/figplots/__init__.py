"""Figure rendering for parameter-sweep CSV files.

This package consumes the CSV dialect written by the ``eitm`` command line
tool (``# key = value`` metadata comments followed by a header row and data
rows) and turns one or more sweep files into a multi-panel figure.  It never
recomputes or re-normalizes anything: curves are drawn exactly as stored,
masked cells stay as gaps, and peak markers sit on the rows the producer
recorded.
"""

from .csvread import SweepCsv, read_sweep_csv
from .plotting import MissingColumn, PlotJob, build_figure, render

__all__ = [
    "MissingColumn",
    "PlotJob",
    "SweepCsv",
    "build_figure",
    "read_sweep_csv",
    "render",
]

__version__ = "0.1.0"
