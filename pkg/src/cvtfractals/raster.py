"""Bit-exact portable bitmap/graymap rendering of tables and cell patterns."""

from __future__ import annotations

import operator
from dataclasses import dataclass

import numpy as np

from .errors import SizeLimitError
from .table import CellSet, CvTable

MAX_SIDE = 1 << 14

BILEVEL = "bilevel"
GRAY = "gray"


@dataclass(frozen=True, eq=False)
class RasterImage:
    """Row-major pixel grid; bilevel pixels are 0/1, gray pixels 0..255."""

    pixels: np.ndarray
    mode: str

    def __post_init__(self) -> None:
        if self.mode not in (BILEVEL, GRAY):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.pixels.ndim != 2:
            raise ValueError("pixels must be a 2D array")
        self.pixels.setflags(write=False)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]


def _check_zoom(extent: int, zoom: int, max_side: int) -> int:
    zoom = operator.index(zoom)
    if zoom < 1:
        raise ValueError(f"zoom must be >= 1, got {zoom}")
    if extent * zoom > max_side:
        raise SizeLimitError(f"image side {extent * zoom} exceeds limit {max_side}")
    return zoom


def _zoomed(pixels: np.ndarray, zoom: int) -> np.ndarray:
    if zoom == 1:
        return pixels
    return np.kron(pixels, np.ones((zoom, zoom), dtype=np.uint8))


def render_cellset(cells: CellSet, zoom: int = 1, max_side: int = MAX_SIDE) -> RasterImage:
    """Bilevel image of a pattern: one zoom x zoom block of 1s per cell."""
    zoom = _check_zoom(cells.extent, zoom, max_side)
    pixels = np.zeros((cells.extent, cells.extent), dtype=np.uint8)
    if cells.cells:
        arr = cells.to_array()
        pixels[arr[:, 0], arr[:, 1]] = 1
    return RasterImage(_zoomed(pixels, zoom), BILEVEL)


def render_table(table: CvTable, zoom: int = 1, max_side: int = MAX_SIDE) -> RasterImage:
    """Gray image of a table, intensities normalized to the maximum carry value.

    Intensity is 255 * value / max, rounded half up; an all-zero table renders
    all black.
    """
    zoom = _check_zoom(table.extent, zoom, max_side)
    max_value = int(table.values.max())
    if max_value == 0:
        pixels = np.zeros((table.extent, table.extent), dtype=np.uint8)
    else:
        pixels = np.floor(table.values * 255.0 / max_value + 0.5).astype(np.uint8)
    return RasterImage(_zoomed(pixels, zoom), GRAY)


def _encode_pnm(image: RasterImage) -> bytes:
    if image.mode == BILEVEL:
        header = f"P1\n{image.width} {image.height}\n"
    else:
        header = f"P2\n{image.width} {image.height}\n255\n"
    rows = "".join(
        " ".join(str(int(v)) for v in row) + "\n" for row in image.pixels
    )
    return (header + rows).encode("ascii")


def write_pnm(image: RasterImage, path) -> None:
    """Write ASCII PBM (P1) for bilevel images, ASCII PGM (P2) for gray.

    Layout: magic line, "width height" line (plus "255" maxval for PGM), then
    one line per pixel row with single-space separators and no comments. The
    byte stream is fully determined by the image.
    """
    with open(path, "wb") as fh:
        fh.write(_encode_pnm(image))
