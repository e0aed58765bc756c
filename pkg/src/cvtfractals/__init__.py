"""Carry-value fractals: radix-generic carry patterns, their dimensions,
raster images, and melodic renderings."""

from .dimension import (
    SEARCH_CAP,
    DimensionEstimate,
    base_for_target_dimension,
    box_count,
    dimension_gap,
    estimate_dimension,
    similarity_dimension,
    write_dimension_csv,
)
from .errors import (
    CvtError,
    DegenerateSeriesError,
    DimensionRangeError,
    EmptyInputError,
    InsufficientDataError,
    InsufficientScalesError,
    InvalidBaseError,
    InvalidPairError,
    InvalidScaleError,
    SizeLimitError,
)
from .melody import (
    SCALES,
    NoteEvent,
    SpectralReport,
    cells_to_notes,
    pitch_series,
    read_series_csv,
    resolve_scale,
    spectral_exponent,
    write_midi,
    write_notes_csv,
)
from .overlay import (
    CLAIMED_INCREMENT,
    OverlayReport,
    analyze_overlay,
    iterate_overflow_fractal,
    overflow_generator,
    write_overlay_report,
    write_overlay_scales_csv,
)
from .radix import RadixNumber, cvt, from_digits, sum_without_carry, to_digits
from .raster import BILEVEL, GRAY, RasterImage, render_cellset, render_table, write_pnm
from .table import (
    MAX_SPARSE_EXTENT,
    MAX_TABLE_EXTENT,
    CellSet,
    CvTable,
    build_table,
    value_cells,
    write_cells_csv,
    write_table_csv,
    zero_carry_set,
)

__version__ = "0.1.0"

__all__ = [
    "BILEVEL",
    "CLAIMED_INCREMENT",
    "CellSet",
    "CvTable",
    "CvtError",
    "DegenerateSeriesError",
    "DimensionEstimate",
    "DimensionRangeError",
    "EmptyInputError",
    "GRAY",
    "InsufficientDataError",
    "InsufficientScalesError",
    "InvalidBaseError",
    "InvalidPairError",
    "InvalidScaleError",
    "MAX_SPARSE_EXTENT",
    "MAX_TABLE_EXTENT",
    "NoteEvent",
    "OverlayReport",
    "RadixNumber",
    "RasterImage",
    "SCALES",
    "SEARCH_CAP",
    "SizeLimitError",
    "SpectralReport",
    "analyze_overlay",
    "base_for_target_dimension",
    "box_count",
    "build_table",
    "cells_to_notes",
    "cvt",
    "dimension_gap",
    "estimate_dimension",
    "from_digits",
    "iterate_overflow_fractal",
    "overflow_generator",
    "pitch_series",
    "read_series_csv",
    "render_cellset",
    "render_table",
    "resolve_scale",
    "similarity_dimension",
    "spectral_exponent",
    "sum_without_carry",
    "to_digits",
    "value_cells",
    "write_cells_csv",
    "write_dimension_csv",
    "write_midi",
    "write_notes_csv",
    "write_overlay_report",
    "write_overlay_scales_csv",
    "write_pnm",
    "write_table_csv",
    "zero_carry_set",
]
