"""Similarity dimension in closed form plus an independent box-count estimator.

The base-n zero-carry fractal consists of n(n+1)/2 self-similar copies at
scale 1/n, so its similarity dimension is

    log(n(n+1)/2) / log(n)

which grows strictly with n and approaches the plane dimension 2 from below.
Box counting over power-of-base scales provides an empirical check that does
not rely on the closed form.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionRangeError,
    EmptyInputError,
    InsufficientScalesError,
    InvalidScaleError,
)
from .radix import _check_base
from .table import CellSet

SEARCH_CAP = 10**6


@dataclass(frozen=True)
class DimensionEstimate:
    """Box counts per scale and the fitted log-log slope."""

    scales: tuple[int, ...]
    counts: tuple[int, ...]
    slope: float
    fit_quality: float


def similarity_dimension(base: int) -> float:
    """Closed-form dimension log(n(n+1)/2) / log(n) of the base-n fractal."""
    base = _check_base(base)
    return math.log(base * (base + 1) // 2) / math.log(base)


def dimension_gap(base: int) -> float:
    """Distance 2 - similarity_dimension(base), as log(2n/(n+1)) / log(n).

    The rearranged form stays accurate when the gap is small at large bases.
    """
    base = _check_base(base)
    return math.log(2 * base / (base + 1)) / math.log(base)


def base_for_target_dimension(target: float, search_cap: int = SEARCH_CAP) -> tuple[int, float]:
    """Base whose dimension is nearest the target, ties broken toward smaller.

    The dimension is strictly increasing in the base, so a binary search over
    [2, search_cap] suffices. Targets above the cap's dimension return the cap
    itself as a best effort.
    """
    target = float(target)
    lower = similarity_dimension(2)
    if not lower <= target < 2.0:
        raise DimensionRangeError(f"target must lie in [{lower:.6f}, 2), got {target}")
    if similarity_dimension(search_cap) < target:
        return search_cap, similarity_dimension(search_cap)
    lo, hi = 2, search_cap
    while lo < hi:
        mid = (lo + hi) // 2
        if similarity_dimension(mid) >= target:
            hi = mid
        else:
            lo = mid + 1
    candidates = [lo] if lo == 2 else [lo - 1, lo]
    best = min(candidates, key=lambda n: (abs(similarity_dimension(n) - target), n))
    return best, similarity_dimension(best)


def box_count(cells: CellSet, box_size: int) -> int:
    """Number of aligned box_size x box_size boxes containing at least one cell."""
    box_size = operator.index(box_size)
    extent = cells.extent
    if box_size < 1 or extent % box_size != 0:
        raise InvalidScaleError(f"box size {box_size} does not divide extent {extent}")
    if not cells.cells:
        return 0
    arr = cells.to_array() // box_size
    boxes_across = extent // box_size
    keys = arr[:, 0] * boxes_across + arr[:, 1]
    return int(np.unique(keys).size)


def estimate_dimension(cells: CellSet) -> DimensionEstimate:
    """Box-count dimension over the scales base**0 .. base**(depth-1).

    Fits log(count) against log(extent / box_size) by ordinary least squares;
    the slope is the estimate and fit_quality is the coefficient of
    determination. Sets whose counts do not vary across scales carry no
    scaling information and are rejected.
    """
    if not cells.cells:
        raise EmptyInputError("cannot estimate the dimension of an empty cell set")
    scales = tuple(cells.base**j for j in range(cells.depth))
    if len(scales) < 2:
        raise InsufficientScalesError(f"need at least 2 scales, have {len(scales)}")
    counts = tuple(box_count(cells, s) for s in scales)
    x = np.log(cells.extent / np.asarray(scales, dtype=float))
    y = np.log(np.asarray(counts, dtype=float))
    x_mean, y_mean = x.mean(), y.mean()
    ss_tot = float(((y - y_mean) ** 2).sum())
    if ss_tot == 0.0:
        raise InsufficientScalesError("box counts are constant across scales")
    slope = float(((x - x_mean) * (y - y_mean)).sum() / ((x - x_mean) ** 2).sum())
    residual = y - (y_mean + slope * (x - x_mean))
    fit_quality = 1.0 - float((residual**2).sum()) / ss_tot
    return DimensionEstimate(scales, counts, slope, fit_quality)


def write_dimension_csv(estimate: DimensionEstimate, path, extent: int | None = None) -> None:
    """CSV of scale, count, log-scale, log-count rows plus slope/fit footers.

    The log_scale column holds the fit's abscissa log(extent / scale); when
    the extent is not supplied it is taken as the largest scale times the
    scale ratio, i.e. the full grid width of the originating cell set.
    """
    if extent is None:
        ratio = estimate.scales[1] // estimate.scales[0] if len(estimate.scales) > 1 else 1
        extent = estimate.scales[-1] * ratio
    lines = ["scale,count,log_scale,log_count"]
    for scale, count in zip(estimate.scales, estimate.counts):
        lines.append(f"{scale},{count},{math.log(extent / scale):.6f},{math.log(count):.6f}")
    lines.append(f"slope,{estimate.slope:.6f}")
    lines.append(f"fit_quality,{estimate.fit_quality:.6f}")
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
