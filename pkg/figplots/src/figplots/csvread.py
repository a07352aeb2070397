"""Reader for the sweep tool's CSV dialect.

The dialect: `#`-prefixed metadata lines (`# key = value`), one
column-name row, then data rows where pole-masked cells are empty.
This module is the only coupling to the producing tool.
"""

import math


class SweepCsv:
    """One parsed sweep file: metadata, column order, float columns."""

    def __init__(self, path, metadata, header, columns):
        self.path = path
        self.metadata = metadata
        self.header = header
        self.columns = columns

    @property
    def swept(self) -> str:
        # first column is always the swept parameter
        return self.header[0]

    def column(self, name):
        return self.columns[name]

    def norm_columns(self):
        return [c for c in self.header if c.endswith("_norm")]

    def argmax_row(self, column: str) -> int | None:
        base = column[:-5] if column.endswith("_norm") else column
        value = self.metadata.get(f"argmax_index {base}")
        return int(value) if value is not None else None


def read_sweep_csv(path) -> SweepCsv:
    metadata = {}
    header = None
    rows = []
    with open(path) as fh:
        for raw in fh:
            line = raw.rstrip("\n")
            if not line.strip():
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                key, sep, value = body.partition("=")
                if sep:
                    metadata[key.strip()] = value.strip()
                continue
            cells = line.split(",")
            if header is None:
                header = cells
                continue
            if len(cells) != len(header):
                raise ValueError(
                    f"{path}: row has {len(cells)} cells, header has "
                    f"{len(header)}")
            rows.append([float(c) if c != "" else math.nan for c in cells])
    if header is None:
        raise ValueError(f"{path}: no column header row found")
    if not rows:
        raise ValueError(f"{path}: no data rows found")
    columns = {name: [row[j] for row in rows]
               for j, name in enumerate(header)}
    return SweepCsv(path=path, metadata=metadata, header=header,
                    columns=columns)
