"""Command line front end: render sweep CSV files to a figure.

Usage::

    render --csv sweep_a.csv [--csv sweep_b.csv ...] --out panel.svg
           [--columns name1,name2,...]

Each ``--csv`` file becomes one panel in a horizontal strip.  By default
every pre-normalized column (``*_norm``) in a file is drawn; ``--columns``
restricts all panels to the named columns instead.

Exit codes follow the producer's convention: 0 on success, 2 for a bad
request (unknown column, empty column list, malformed CSV), 4 when a file
cannot be read or the image cannot be written.
"""

from __future__ import annotations

import argparse
import sys

from .plotting import MissingColumn, PlotJob, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render parameter-sweep CSV files to a figure.",
    )
    parser.add_argument(
        "--csv",
        action="append",
        required=True,
        metavar="FILE",
        help="sweep CSV to plot; repeat for a multi-panel figure",
    )
    parser.add_argument(
        "--out",
        required=True,
        metavar="IMG",
        help="output image path (.svg, .pdf, or .png)",
    )
    parser.add_argument(
        "--columns",
        metavar="LIST",
        help=(
            "comma-separated column names to draw in every panel "
            "(default: each file's *_norm columns)"
        ),
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    columns: tuple[str, ...] | None = None
    if args.columns is not None:
        columns = tuple(c.strip() for c in args.columns.split(",") if c.strip())
        if not columns:
            print("render: --columns given but names no columns", file=sys.stderr)
            return 2

    try:
        job = PlotJob(
            csv_paths=tuple(args.csv),
            out_path=args.out,
            columns=columns,
        )
        out = render(job)
    except MissingColumn as exc:
        print(f"render: column '{exc.column}' not found in {exc.path}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"render: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"render: {exc}", file=sys.stderr)
        return 4

    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
