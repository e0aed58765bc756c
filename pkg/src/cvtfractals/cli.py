"""Command-line front end: one subcommand per pipeline.

Exit codes: 0 on success, 2 for argument errors, 1 for runtime errors.
Results go to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

import numpy as np

from . import dimension, melody, overlay, radix, raster, table
from .errors import CvtError, DegenerateSeriesError, InsufficientDataError


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be an integer >= {minimum}, got {value}")
        return value

    return parse


def _int_in_range(lo: int, hi: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(f"must be in [{lo}, {hi}], got {value}")
        return value

    return parse


_base_arg = _int_at_least(2)
_nonneg_arg = _int_at_least(0)
_pos_arg = _int_at_least(1)


def _cmd_cvt(args) -> int:
    carry = radix.cvt(args.a, args.b, args.base)
    residue = radix.sum_without_carry(args.a, args.b, args.base)
    total = args.a + args.b
    ok = carry + residue == total
    print(f"CVT({args.a}, {args.b}) in base {args.base} = {carry}")
    print(f"carry-free sum = {residue}")
    print(f"decomposition: {args.a} + {args.b} = {total} = {carry} + {residue}"
          f" [{'ok' if ok else 'MISMATCH'}]")
    return 0 if ok else 1


def _cmd_table(args) -> int:
    tab = table.build_table(args.base, args.digits, max_extent=args.max_extent)
    print(f"CV table base {args.base}, {args.digits} digit(s):"
          f" extent {tab.extent}, max carry value {int(tab.values.max())}")
    if args.csv:
        table.write_table_csv(tab, args.csv)
        print(f"wrote {args.csv}")
    if args.pgm:
        raster.write_pnm(raster.render_table(tab, zoom=args.zoom), args.pgm)
        print(f"wrote {args.pgm}")
    return 0


def _cmd_fractal(args) -> int:
    if args.value is not None:
        if args.depth < 1:
            print("error: --value needs --depth >= 1", file=sys.stderr)
            return 2
        tab = table.build_table(args.base, args.depth, max_extent=args.max_extent)
        cells = table.value_cells(tab, args.value)
        label = f"carry value {args.value}"
    else:
        cells = table.zero_carry_set(args.base, args.depth, max_extent=args.max_extent)
        label = "carry value 0"
    print(f"pattern of {label} in base {args.base}, depth {args.depth}:"
          f" {len(cells)} cells on a {cells.extent}x{cells.extent} grid")
    if args.pbm:
        raster.write_pnm(raster.render_cellset(cells, zoom=args.zoom), args.pbm)
        print(f"wrote {args.pbm}")
    if args.cells:
        table.write_cells_csv(cells, args.cells)
        print(f"wrote {args.cells}")
    return 0


def _cmd_dimension(args) -> int:
    closed = dimension.similarity_dimension(args.base)
    print(f"similarity dimension (base {args.base}) = {closed:.6f}")
    print(f"gap below plane dimension 2 = {dimension.dimension_gap(args.base):.6f}")
    if args.report and not args.estimate:
        print("error: --report requires --estimate", file=sys.stderr)
        return 2
    if args.estimate:
        if args.depth is None:
            print("error: --estimate requires --depth", file=sys.stderr)
            return 2
        cells = table.zero_carry_set(args.base, args.depth, max_extent=args.max_extent)
        est = dimension.estimate_dimension(cells)
        print(f"box-count estimate (depth {args.depth}) = {est.slope:.6f}"
              f" (fit quality {est.fit_quality:.6f})")
        if args.report:
            dimension.write_dimension_csv(est, args.report, extent=cells.extent)
            print(f"wrote {args.report}")
    return 0


def _cmd_target_base(args) -> int:
    base, achieved = dimension.base_for_target_dimension(args.dimension)
    print(f"base {base} achieves dimension {achieved:.6f} for target {args.dimension:.6f}")
    if base == dimension.SEARCH_CAP:
        print(f"note: search capped at base {dimension.SEARCH_CAP}", file=sys.stderr)
    return 0


def _cmd_overlay(args) -> int:
    report = overlay.analyze_overlay(args.small, args.depth, max_extent=args.max_extent)
    print(report.to_text())
    if args.report:
        overlay.write_overlay_report(report, args.report)
        print(f"wrote {args.report}")
    if args.csv:
        overlay.write_overlay_scales_csv(report, args.csv)
        print(f"wrote {args.csv}")
    return 0


def _cmd_music(args) -> int:
    cells = table.zero_carry_set(args.base, args.depth, max_extent=args.max_extent)
    notes = melody.cells_to_notes(
        cells,
        scale=args.scale,
        base_pitch=args.base_pitch,
        ticks_per_cell=args.ticks,
        velocity=args.velocity,
    )
    print(f"zero-carry pattern base {args.base} depth {args.depth}: {len(notes)} notes")
    melody.write_midi(notes, ticks_per_quarter=args.division, tempo_bpm=args.tempo, path=args.midi)
    print(f"wrote {args.midi}")
    if args.csv:
        melody.write_notes_csv(notes, args.csv)
        print(f"wrote {args.csv}")
    if args.spectrum:
        # the melody is a valid artifact even when its top voice is constant
        # or too short to analyze; report that instead of failing the run
        series = melody.pitch_series(notes)
        try:
            _print_spectrum(melody.spectral_exponent(series))
        except (DegenerateSeriesError, InsufficientDataError) as exc:
            print(f"spectral exponent: undefined ({exc})")
    return 0


def _print_spectrum(report) -> None:
    print(f"spectral exponent beta = {report.beta:.4f}"
          f" (fit quality {report.fit_quality:.4f},"
          f" {report.frequencies_used} bins, {report.series_length} samples)")


def _cmd_spectrum(args) -> int:
    if args.selftest:
        rng = np.random.default_rng(args.seed)
        white = rng.uniform(size=args.length)
        walk = np.cumsum(white)
        for name, series in (("white noise", white), ("random walk", walk)):
            report = melody.spectral_exponent(series)
            print(f"{name} (seed {args.seed}, length {args.length}):"
                  f" beta = {report.beta:.4f} (fit quality {report.fit_quality:.4f})")
        return 0
    series = melody.read_series_csv(args.series)
    _print_spectrum(melody.spectral_exponent(series))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvtfractals",
        description="Carry-value fractals: patterns, dimensions, images, melodies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cvt", help="carry value and carry-free sum of two integers")
    p.add_argument("--base", type=_base_arg, required=True)
    p.add_argument("a", type=_nonneg_arg)
    p.add_argument("b", type=_nonneg_arg)
    p.set_defaults(func=_cmd_cvt)

    p = sub.add_parser("table", help="build a carry-value table")
    p.add_argument("--base", type=_base_arg, required=True)
    p.add_argument("--digits", type=_pos_arg, required=True)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--pgm", metavar="PATH")
    p.add_argument("--zoom", type=_pos_arg, default=1)
    p.add_argument("--max-extent", type=_pos_arg, default=table.MAX_TABLE_EXTENT)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("fractal", help="extract a carry-value pattern")
    p.add_argument("--base", type=_base_arg, required=True)
    p.add_argument("--depth", type=_nonneg_arg, required=True)
    p.add_argument("--value", type=_nonneg_arg, help="carry value to select (default 0)")
    p.add_argument("--pbm", metavar="PATH")
    p.add_argument("--cells", metavar="PATH")
    p.add_argument("--zoom", type=_pos_arg, default=1)
    p.add_argument("--max-extent", type=_pos_arg, default=table.MAX_SPARSE_EXTENT)
    p.set_defaults(func=_cmd_fractal)

    p = sub.add_parser("dimension", help="closed-form dimension, optional box-count estimate")
    p.add_argument("--base", type=_base_arg, required=True)
    p.add_argument("--estimate", action="store_true")
    p.add_argument("--depth", type=_int_at_least(2))
    p.add_argument("--report", metavar="PATH")
    p.add_argument("--max-extent", type=_pos_arg, default=table.MAX_SPARSE_EXTENT)
    p.set_defaults(func=_cmd_dimension)

    p = sub.add_parser("target-base", help="base whose dimension is nearest a target")
    p.add_argument("--dimension", type=float, required=True)
    p.set_defaults(func=_cmd_target_base)

    p = sub.add_parser("overlay", help="overflow generator of consecutive bases")
    p.add_argument("--small", type=_base_arg, required=True)
    p.add_argument("--depth", type=_pos_arg, required=True)
    p.add_argument("--report", metavar="PATH")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--max-extent", type=_pos_arg, default=table.MAX_SPARSE_EXTENT)
    p.set_defaults(func=_cmd_overlay)

    p = sub.add_parser("music", help="render a zero-carry pattern as a MIDI melody")
    p.add_argument("--base", type=_base_arg, required=True)
    p.add_argument("--depth", type=_nonneg_arg, required=True)
    p.add_argument("--scale", choices=sorted(melody.SCALES), default="major")
    p.add_argument("--base-pitch", type=_int_in_range(0, 127), default=60)
    p.add_argument("--ticks", type=_pos_arg, default=120, help="ticks per grid cell")
    p.add_argument("--tempo", type=_pos_arg, default=120, help="beats per minute")
    p.add_argument("--division", type=_int_in_range(24, 960), default=480,
                   help="MIDI ticks per quarter note")
    p.add_argument("--velocity", type=_int_in_range(1, 127), default=100)
    p.add_argument("--midi", metavar="PATH", required=True)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--spectrum", action="store_true",
                   help="also fit the pitch series' spectral exponent")
    p.add_argument("--max-extent", type=_pos_arg, default=table.MAX_SPARSE_EXTENT)
    p.set_defaults(func=_cmd_music)

    p = sub.add_parser("spectrum", help="spectral exponent of a series")
    p.add_argument("--in", dest="series", metavar="SERIES.csv",
                   help="CSV with one value per line (optional header)")
    p.add_argument("--selftest", action="store_true",
                   help="fit seeded white-noise and random-walk series instead")
    p.add_argument("--seed", type=_nonneg_arg, default=0)
    p.add_argument("--length", type=_int_at_least(melody.MIN_SPECTRUM_LENGTH), default=4096)
    p.set_defaults(func=_cmd_spectrum)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "spectrum" and bool(args.series) == bool(args.selftest):
        print("error: spectrum needs exactly one of --in or --selftest", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (CvtError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
