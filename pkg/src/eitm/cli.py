"""Command line for running sweeps and writing CSV/report files.

Exactly one of --preset or --config selects the sweep; grid and quantity
flags override single fields.  Results land in the output directory as
<name>.csv, <name>.features.txt and <name>.coincidence.txt where <name>
is the preset name or the config file stem.  The directory comes from
--out, else the EITM_OUT environment variable, else the working
directory.

Exit codes: 0 success, 2 bad configuration, 3 every-point-masked scans,
4 I/O failure.  Diagnostics are single lines on stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

from .atoms import DampingMode
from .csvio import coincidence_text, csv_text, features_text
from .errors import (AllPoles, DegenerateInput, InvalidConfig, InvalidSpec,
                     StepTooLarge)
from .presets import catalog, get_preset, spec_from_config
from .scan import run_scan

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_ALL_POLES = 3
EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eitm",
        description="Sweep a driven-atom medium and report statistical "
                    "speeds, susceptibilities and curve features.")
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--preset", metavar="NAME",
                        help="built-in sweep name (see --list-presets)")
    source.add_argument("--config", metavar="FILE",
                        help="key=value sweep description file")
    parser.add_argument("--out", metavar="DIR", default=None,
                        help="output directory (default: $EITM_OUT or .)")
    parser.add_argument("--points", type=int, metavar="N",
                        help="override the grid resolution")
    parser.add_argument("--range", dest="range_", metavar="MIN:MAX",
                        help="override the sweep window")
    parser.add_argument("--damping", choices=("on", "off"),
                        help="override the damping mode")
    parser.add_argument("--quantities", metavar="LIST",
                        help="comma-separated quantity columns to evaluate")
    parser.add_argument("--tol-cells", type=int, metavar="K",
                        help="alignment tolerance for coincidence reports")
    parser.add_argument("--list-presets", action="store_true",
                        help="print the preset table and exit")
    parser.add_argument("--model",
                        help="filter --list-presets by model label; a label "
                             "matching no preset prints only the header")
    return parser


def _print_preset_table(model_filter: str | None) -> None:
    rows = [p for p in catalog().values()
            if model_filter is None or p.spec.model.label == model_filter]
    print(f"{'name':<8}{'model':<13}{'swept':<10}{'window':<19}"
          f"{'damping':<9}description")
    for p in rows:
        window = f"[{p.spec.grid_min:g}, {p.spec.grid_max:g}]"
        print(f"{p.name:<8}{p.spec.model.label:<13}{p.spec.swept:<10}"
              f"{window:<19}{p.spec.damping.value:<9}"
              f"{p.title} ({p.inherited_note})")


def _resolve_spec(args):
    if args.preset:
        preset = get_preset(args.preset)
        return preset.spec, preset.name
    if args.config:
        # an unreadable file is an IO failure; only parse problems are
        # config errors
        with open(args.config) as fh:
            text = fh.read()
        name = os.path.splitext(os.path.basename(args.config))[0]
        return spec_from_config(text), name
    raise InvalidConfig("one of --preset or --config is required")


def _apply_overrides(spec, args):
    changes = {}
    if args.points is not None:
        changes["points"] = args.points
    if args.range_ is not None:
        lo, sep, hi = args.range_.partition(":")
        if not sep:
            raise InvalidConfig("--range expects MIN:MAX")
        try:
            changes["grid_min"], changes["grid_max"] = float(lo), float(hi)
        except ValueError:
            raise InvalidConfig(f"bad --range value {args.range_!r}") from None
    if args.damping is not None:
        changes["damping"] = DampingMode(args.damping)
    if args.quantities is not None:
        quantities = tuple(q.strip() for q in args.quantities.split(",")
                           if q.strip())
        if not quantities:
            raise InvalidConfig("--quantities list is empty")
        changes["quantities"] = quantities
    if args.tol_cells is not None:
        changes["tol_cells"] = args.tol_cells
    return dataclasses.replace(spec, **changes) if changes else spec


def _write_outputs(result, name: str, out_dir: str) -> None:
    if not os.path.isdir(out_dir):
        raise OSError(f"output directory {out_dir!r} does not exist")
    outputs = {
        os.path.join(out_dir, name + ".csv"): csv_text(result, name),
        os.path.join(out_dir, name + ".features.txt"):
            features_text(result, name),
        os.path.join(out_dir, name + ".coincidence.txt"):
            coincidence_text(result, name),
    }
    written = []
    try:
        for path, text in outputs.items():
            with open(path, "w", newline="\n") as fh:
                fh.write(text)
            written.append(path)
    except OSError:
        for path in written:
            try:
                os.unlink(path)
            except OSError:
                pass
        raise
    print(f"wrote {', '.join(sorted(outputs))}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.list_presets:
            _print_preset_table(args.model)
            return EXIT_OK
        spec, name = _resolve_spec(args)
        spec = _apply_overrides(spec, args)
        result = run_scan(spec)
        out_dir = args.out or os.environ.get("EITM_OUT") or "."
        _write_outputs(result, name, out_dir)
        return EXIT_OK
    except (InvalidConfig, InvalidSpec, StepTooLarge, DegenerateInput) as exc:
        print(f"eitm: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except AllPoles as exc:
        print(f"eitm: error: {exc}", file=sys.stderr)
        return EXIT_ALL_POLES
    except OSError as exc:
        print(f"eitm: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
