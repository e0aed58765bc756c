"""Carry-value tables over [0, n^k)^2 and sparse carry-value patterns.

A CvTable holds cvt(a, b, base) for every pair below n^k; a CellSet is the
sparse set of grid cells sharing one carry value. The zero-carry set is the
canonical fractal: its depth-1 generator is the triangle x + y < n, and each
deeper level substitutes that generator into every retained cell.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

import numpy as np

from .errors import SizeLimitError
from .radix import _check_base

MAX_TABLE_EXTENT = 4096
MAX_SPARSE_EXTENT = 1 << 20
MAX_CELLS = 1 << 24


@dataclass(frozen=True, eq=False)
class CvTable:
    """Dense grid of carry values; row index is the augend, column the addend."""

    base: int
    digits_k: int
    values: np.ndarray

    def __post_init__(self) -> None:
        extent = self.extent
        if self.values.shape != (extent, extent):
            raise ValueError(f"values must be {extent}x{extent}, got {self.values.shape}")
        self.values.setflags(write=False)

    @property
    def extent(self) -> int:
        return self.base**self.digits_k

    def value(self, row: int, col: int) -> int:
        return int(self.values[row, col])


@dataclass(frozen=True)
class CellSet:
    """Sparse set of (row, col) cells on a base**depth grid.

    Cells are normalized on construction: sorted lexicographically with
    duplicates removed. Accepts any iterable of pairs, including numpy arrays.
    """

    base: int
    depth: int
    cells: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        if operator.index(self.depth) < 0:
            raise ValueError(f"depth must be >= 0, got {self.depth}")
        extent = self.extent
        raw = self.cells
        if isinstance(raw, np.ndarray):
            if raw.size and (raw.ndim != 2 or raw.shape[1] != 2):
                raise ValueError(f"cell array must have shape (n, 2), got {raw.shape}")
            if raw.size and ((raw < 0).any() or (raw >= extent).any()):
                raise ValueError(f"cell coordinates out of range for extent {extent}")
            pairs = [tuple(rc) for rc in raw.tolist()]
        else:
            pairs = []
            for r, c in raw:
                r, c = operator.index(r), operator.index(c)
                if not (0 <= r < extent and 0 <= c < extent):
                    raise ValueError(f"cell ({r}, {c}) out of range for extent {extent}")
                pairs.append((r, c))
        object.__setattr__(self, "cells", tuple(sorted(set(pairs))))

    @property
    def extent(self) -> int:
        return self.base**self.depth

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def to_array(self) -> np.ndarray:
        """Cells as an (n, 2) int64 array (shape (0, 2) when empty)."""
        if not self.cells:
            return np.empty((0, 2), dtype=np.int64)
        return np.array(self.cells, dtype=np.int64)


def build_table(base: int, digits_k: int, max_extent: int = MAX_TABLE_EXTENT) -> CvTable:
    """Populate the full carry-value table for operands below base**digits_k."""
    base = _check_base(base)
    digits_k = operator.index(digits_k)
    if digits_k < 1:
        raise ValueError(f"digits_k must be >= 1, got {digits_k}")
    extent = base**digits_k
    if extent > max_extent:
        raise SizeLimitError(f"table extent {extent} exceeds limit {max_extent}")
    values = np.zeros((extent, extent), dtype=np.int64)
    quotients = np.arange(extent, dtype=np.int64)
    place = base
    for _ in range(digits_k):
        digit = quotients % base
        # carry digit at this position is 1 exactly when the digit sum reaches base
        values += ((digit[:, None] + digit[None, :]) >= base) * place
        quotients //= base
        place *= base
    return CvTable(base, digits_k, values)


def value_cells(table: CvTable, v: int) -> CellSet:
    """All cells of the table holding carry value v (possibly empty)."""
    v = operator.index(v)
    return CellSet(table.base, table.digits_k, np.argwhere(table.values == v))


def _substitute(generator: np.ndarray, modulus: int, depth: int) -> np.ndarray:
    """Replace every retained cell by a scaled copy of the generator, depth times."""
    cells = np.zeros((1, 2), dtype=np.int64)
    for _ in range(depth):
        cells = (cells[:, None, :] * modulus + generator[None, :, :]).reshape(-1, 2)
    return cells


def _check_pattern_size(extent: int, predicted_cells: int, max_extent: int) -> None:
    if extent > max_extent:
        raise SizeLimitError(f"pattern extent {extent} exceeds limit {max_extent}")
    if predicted_cells > MAX_CELLS:
        raise SizeLimitError(f"pattern would hold {predicted_cells} cells, limit {MAX_CELLS}")


def zero_carry_set(base: int, depth: int, max_extent: int = MAX_SPARSE_EXTENT) -> CellSet:
    """Cells with carry value 0 over [0, base**depth)^2, built by substitution.

    The depth-1 generator is the triangle {(x, y): x + y < base}; a cell
    survives at depth k exactly when every one of its digit pairs stays below
    the base, so the set has (base*(base+1)/2)**depth cells.
    """
    base = _check_base(base)
    depth = operator.index(depth)
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    _check_pattern_size(base**depth, (base * (base + 1) // 2) ** depth, max_extent)
    generator = np.array(
        [(x, y) for x in range(base) for y in range(base) if x + y < base],
        dtype=np.int64,
    )
    return CellSet(base, depth, _substitute(generator, base, depth))


def write_table_csv(table: CvTable, path) -> None:
    """CSV dump with a header row and column of the integers 0..extent-1.

    The top-left corner cell is left empty; body cells are decimal carry values.
    """
    extent = table.extent
    header = "," + ",".join(str(i) for i in range(extent))
    lines = [header]
    for row in range(extent):
        lines.append(f"{row}," + ",".join(str(int(v)) for v in table.values[row]))
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def write_cells_csv(cells: CellSet, path) -> None:
    """One "row,col" line per cell, in the set's sorted order."""
    with open(path, "w", encoding="ascii", newline="") as fh:
        for row, col in cells:
            fh.write(f"{row},{col}\n")
