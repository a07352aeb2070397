"""Output formats: the scan CSV dialect and the text reports.

CSV dialect (consumed by the separate plotting package, so it is
self-describing and deliberately boring): `#`-prefixed metadata lines,
then a column-name row, then one row per grid point.  Columns are the
swept parameter, each raw quantity, then the max-normalized counterpart
of each quantity with a `_norm` suffix.  Values carry 12 significant
digits; pole-masked points are empty cells, never NaN strings.  Output
is deterministic: same result, same bytes.

The feature and coincidence reports are line-oriented text with one
feature or one pairing per line, for eyeballing and grepping.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .scan import CoincidenceReport, Feature, ScanResult, coincidence

__all__ = [
    "csv_text",
    "write_csv",
    "read_csv",
    "features_text",
    "coincidence_text",
    "renormalize",
]

CSV_DIGITS = 12


def _num(x, digits: int = CSV_DIGITS) -> str:
    if isinstance(x, float) and math.isnan(x):
        return ""
    return f"{x:.{digits}g}"


def csv_text(result: ScanResult, preset_name: str | None = None,
             digits: int = CSV_DIGITS) -> str:
    """Render one scan result in the CSV dialect.

    digits sets the cell precision (significant figures).  The default
    keeps files diff-friendly; pass 17 for exact float round-trips.
    """
    spec = result.spec
    lines = ["# eitm scan"]
    if preset_name:
        lines.append(f"# preset = {preset_name}")
    lines += [
        f"# model = {spec.model.label}",
        f"# swept = {spec.swept}",
        f"# grid_min = {spec.grid_min!r}",
        f"# grid_max = {spec.grid_max!r}",
        f"# points = {spec.points}",
        f"# damping = {spec.damping.value}",
        f"# quantities = {', '.join(spec.quantities)}",
    ]
    for f in dataclasses.fields(spec.params):
        lines.append(f"# param {f.name} = {getattr(spec.params, f.name)!r}")
    for q in spec.quantities:
        lines.append(f"# norm_max {q} = {result.norm_max[q]!r}")
    for q in spec.quantities:
        lines.append(f"# argmax_index {q} = {result.argmax_index[q]}")
    for q in spec.quantities:
        masked = result.masked_indices(q)
        if masked:
            lines.append(f"# masked {q} = {' '.join(str(i) for i in masked)}")

    header = [spec.swept] + list(spec.quantities) + [
        q + "_norm" for q in spec.quantities]
    lines.append(",".join(header))
    for i in range(spec.points):
        row = [_num(float(result.grid[i]), digits)]
        row += [_num(float(result.curves[q][i]), digits)
                for q in spec.quantities]
        row += [_num(float(result.normalized[q][i]), digits)
                for q in spec.quantities]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def write_csv(path, result: ScanResult, preset_name: str | None = None,
              digits: int = CSV_DIGITS) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(csv_text(result, preset_name, digits=digits))


class CsvTable:
    """Parsed CSV dialect: metadata dict + named columns (NaN for gaps)."""

    def __init__(self, metadata, header, columns):
        self.metadata = metadata
        self.header = header
        self.columns = columns

    def column(self, name: str):
        return self.columns[name]


def read_csv(path) -> CsvTable:
    with open(path) as fh:
        text = fh.read()
    metadata = {}
    header = None
    rows = []
    for raw in text.splitlines():
        if not raw.strip():
            continue
        if raw.startswith("#"):
            body = raw[1:].strip()
            if "=" in body:
                key, _, value = body.partition("=")
                metadata[key.strip()] = value.strip()
            continue
        cells = raw.split(",")
        if header is None:
            header = cells
            continue
        rows.append([float(c) if c != "" else math.nan for c in cells])
    if header is None:
        raise ValueError("no column header row found")
    data = np.array(rows, dtype=float)
    columns = {name: data[:, j] for j, name in enumerate(header)}
    return CsvTable(metadata=metadata, header=header, columns=columns)


def renormalize(curve):
    """Max-normalize a raw column the same way the scan engine does."""
    curve = np.asarray(curve, dtype=float)
    peak = float(np.nanmax(np.abs(curve)))
    if peak > 0:
        return curve / peak
    return np.where(np.isnan(curve), np.nan, 0.0)


def _feature_line(quantity: str, f: Feature) -> str:
    return (f"{quantity} {f.kind} index={f.index} "
            f"location={f.location:.{CSV_DIGITS}g} cell={f.cell:.3f} "
            f"value={f.value:.{CSV_DIGITS}g}")


def features_text(result: ScanResult, preset_name: str | None = None) -> str:
    spec = result.spec
    lines = [f"# features{': ' + preset_name if preset_name else ''}",
             f"# swept = {spec.swept} in [{spec.grid_min!r}, {spec.grid_max!r}], "
             f"{spec.points} points"]
    for q in spec.quantities:
        fs = result.features[q]
        found = sorted(fs.all_features(), key=lambda f: (f.cell, f.kind))
        if not found:
            lines.append(f"{q} none")
        for f in found:
            lines.append(_feature_line(q, f))
    return "\n".join(lines) + "\n"


def _pair_line(name_a: str, name_b: str, pair) -> str:
    verdict = "aligned" if pair.aligned else "not-aligned"
    return (f"{name_a} {pair.feature_a.kind}@{pair.feature_a.cell:.3f} ~ "
            f"{name_b} {pair.feature_b.kind}@{pair.feature_b.cell:.3f} "
            f"distance={pair.distance_cells:.3f} {verdict}")


def coincidence_text(result: ScanResult, preset_name: str | None = None) -> str:
    """Pairwise alignment report over all requested quantities."""
    spec = result.spec
    lines = [f"# coincidence{': ' + preset_name if preset_name else ''}",
             f"# tol_cells = {spec.tol_cells}",
             f"# cross_extrema = {'true' if spec.cross_extrema else 'false'}"]
    names = list(spec.quantities)
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            a, b = names[i], names[j]
            report: CoincidenceReport = coincidence(
                result.features[a], result.features[b],
                tol_cells=spec.tol_cells, cross_extrema=spec.cross_extrema)
            if not report.pairs:
                lines.append(f"{a} ~ {b} no pairs")
            for pair in report.pairs:
                lines.append(_pair_line(a, b, pair))
            for f in report.unpaired_a:
                lines.append(f"{a} unpaired {f.kind}@{f.cell:.3f}")
            for f in report.unpaired_b:
                lines.append(f"{b} unpaired {f.kind}@{f.cell:.3f}")
    return "\n".join(lines) + "\n"
