#!/usr/bin/env python3
"""Regenerate the headline artifacts in one run.

Writes, under the chosen output directory:
  - carry-pattern images fractal_base{n}.pbm for bases 2..5
  - gray table images table_base{n}.pgm for the same bases
  - overlay_{k}_to_{k+1}.txt reports for k = 2, 3
  - demo.mid plus demo_notes.csv for a base-2 melody

and prints a closed-form vs box-count dimension table to stdout.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from cvtfractals import (
    analyze_overlay,
    build_table,
    cells_to_notes,
    estimate_dimension,
    render_cellset,
    render_table,
    similarity_dimension,
    write_midi,
    write_notes_csv,
    write_overlay_report,
    write_pnm,
    zero_carry_set,
)


@dataclass
class Config:
    outdir: Path = Path("out")
    bases: tuple[int, ...] = (2, 3, 4, 5)
    # depths chosen so every image stays near 256..625 pixels per side
    depth_by_base: dict[int, int] = field(
        default_factory=lambda: {2: 8, 3: 5, 4: 4, 5: 4}
    )
    table_digits: int = 2
    overlay_small_bases: tuple[int, ...] = (2, 3)
    overlay_depth: int = 6
    melody_base: int = 2
    melody_depth: int = 6
    melody_base_pitch: int = 36


def dimension_table(cfg: Config) -> None:
    print(f"{'base':>4} {'closed form':>12} {'box count':>12} {'fit':>8} {'cells':>8}")
    for base in cfg.bases:
        depth = cfg.depth_by_base[base]
        cells = zero_carry_set(base, depth)
        est = estimate_dimension(cells)
        print(
            f"{base:>4} {similarity_dimension(base):>12.6f}"
            f" {est.slope:>12.6f} {est.fit_quality:>8.4f} {len(cells):>8}"
        )


def render_patterns(cfg: Config) -> None:
    for base in cfg.bases:
        depth = cfg.depth_by_base[base]
        pbm = cfg.outdir / f"fractal_base{base}.pbm"
        write_pnm(render_cellset(zero_carry_set(base, depth)), pbm)
        pgm = cfg.outdir / f"table_base{base}.pgm"
        zoom = max(1, 256 // base**cfg.table_digits)
        write_pnm(render_table(build_table(base, cfg.table_digits), zoom=zoom), pgm)
        print(f"wrote {pbm} and {pgm}")


def overlay_reports(cfg: Config) -> None:
    for small in cfg.overlay_small_bases:
        report = analyze_overlay(small, cfg.overlay_depth)
        path = cfg.outdir / f"overlay_{small}_to_{small + 1}.txt"
        write_overlay_report(report, path)
        print(
            f"overlay {small}->{small + 1}: claimed {report.claimed_increment:.6f},"
            f" measured {report.measured.slope:.6f} -> {path}"
        )


def demo_melody(cfg: Config) -> None:
    cells = zero_carry_set(cfg.melody_base, cfg.melody_depth)
    notes = cells_to_notes(cells, base_pitch=cfg.melody_base_pitch)
    midi = cfg.outdir / "demo.mid"
    write_midi(notes, ticks_per_quarter=480, tempo_bpm=110, path=midi)
    write_notes_csv(notes, cfg.outdir / "demo_notes.csv")
    print(f"melody: {len(notes)} notes -> {midi}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=Path, default=Config.outdir)
    args = parser.parse_args(argv)
    cfg = Config(outdir=args.outdir)
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    dimension_table(cfg)
    render_patterns(cfg)
    overlay_reports(cfg)
    demo_melody(cfg)
    return 0


if __name__ == "__main__":
    sys.exit(main())
