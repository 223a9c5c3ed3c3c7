# ks2/exact_stable.py
"""
P2 = Prob[D >= d] by the stable recursion on the outside-path proportion C.

    C(i, j) = 1                                   if (i, j) is outside
            = 0                                   if inside and (i == 0 or j == 0)
            = (C(i-1, j) * i + C(i, j-1) * j) / (i + j)   otherwise

Every interior cell is a convex combination of two values in [0, 1], so small
P2 are reached by scaling, never by cancellation against 1. C(m, n) = P2.

Only a band of w = floor(2c/m) + 2 columns per row is stored; columns left or
right of the band are outside the corridor and read as 1.0.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import numpy as np

from ks2.config import get_settings
from ks2.corridor import CorridorSpec, band_start, band_width
from ks2.errors import TableTooLarge

logger = logging.getLogger(__name__)


@dataclass
class BandRow:
    """One rolling row: values[k] is the cell value at column start_j + k."""

    start_j: int
    values: np.ndarray

    @property
    def width(self) -> int:
        return int(self.values.size)

    def value_at(self, j: int, default: float = 1.0) -> float:
        k = j - self.start_j
        if 0 <= k < self.values.size:
            return float(self.values[k])
        return default


def _canonical(spec: CorridorSpec) -> CorridorSpec:
    # rows over the smaller sample: (m+1) * w ~ 2c + 2m cells
    return spec.swapped() if spec.m > spec.n else spec


def _banded_sweep(spec: CorridorSpec, outside: float, axis: float) -> float:
    """
    Rolling-row sweep over rows i = 0..m, returning the value at (m, n).

    outside/axis are the boundary values of the recursion: (1, 0) gives C,
    (0, 1) gives the normalized path count A / binom(i + j, i) = 1 - C.
    Requires 0 < c <= m*n.
    """
    m, n, c = spec.m, spec.n, spec.c
    w = band_width(spec)

    last = BandRow(start_j=0, values=np.full(w, outside))
    row = BandRow(start_j=0, values=np.full(w, outside))

    for i in range(m + 1):
        start = band_start(i, spec, w)
        prev = last.values.tolist()
        prev_start = last.start_j
        i_n = i * n

        buf = [outside] * w
        left = outside  # (i, start - 1) lies left of the corridor
        for jj in range(w):
            j = start + jj
            if abs(i_n - j * m) >= c:
                val = outside
            elif i == 0 or j == 0:
                val = axis
            else:
                k = j - prev_start
                up = prev[k] if 0 <= k < w else outside
                val = (up * i + left * j) / (i + j)
            buf[jj] = val
            left = val

        row.start_j = start
        row.values[:] = buf
        last, row = row, last

    return last.value_at(n, default=outside)


def p2_stable(spec: CorridorSpec) -> float:
    """
    Two-sided tail probability C(m, n) in double precision.

    Memory O(w), time O(m * w). Degenerate thresholds are resolved before the
    sweep: c <= 0 -> 1.0, c > m*n -> 0.0.
    """
    if spec.everything_outside:
        return 1.0
    if spec.nothing_outside:
        return 0.0

    started = time.perf_counter()
    canon = _canonical(spec)
    p = _banded_sweep(canon, outside=1.0, axis=0.0)

    logger.debug(
        "p2_stable evaluated",
        extra={
            "m": spec.m,
            "n": spec.n,
            "c": spec.c,
            "band_width": band_width(canon),
            "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
        },
    )
    return p


def p2_complement_float(spec: CorridorSpec) -> float:
    """
    Classical inside method in doubles: 1 - A(m, n) / binom(m + n, m).

    Kept for comparison only. When 1 - P2 rounds to 1.0 the result is exactly
    0.0 even though P2 > 0.
    """
    if spec.everything_outside:
        return 1.0
    if spec.nothing_outside:
        return 0.0
    inside_fraction = _banded_sweep(_canonical(spec), outside=0.0, axis=1.0)
    return 1.0 - inside_fraction


def p2_stable_full(spec: CorridorSpec) -> float:
    """
    Same recursion over the full (m+1) x (n+1) table, no banding.

    Filled by anti-diagonals (cells with i + j = s depend only on s - 1), each
    cell with the same floating-point operations as the banded sweep.

    Raises:
        TableTooLarge: m*n exceeds KS2_MAX_FULL_TABLE
    """
    limit = get_settings().max_full_table
    if spec.mn > limit:
        raise TableTooLarge(f"full table needs m*n={spec.mn} cells, limit is {limit}")

    table = _full_table(_canonical(spec))
    return float(table[-1, -1])


def _full_table(spec: CorridorSpec) -> np.ndarray:
    m, n, c = spec.m, spec.n, spec.c

    ii = np.arange(m + 1, dtype=np.int64)[:, None]
    jj = np.arange(n + 1, dtype=np.int64)[None, :]
    outside = np.abs(ii * n - jj * m) >= c

    table = np.empty((m + 1, n + 1), dtype=np.float64)
    for s in range(m + n + 1):
        i = np.arange(max(0, s - n), min(m, s) + 1, dtype=np.int64)
        j = s - i
        out = outside[i, j]
        vals = np.where(out, 1.0, 0.0)
        interior = ~out & (i > 0) & (j > 0)
        if interior.any():
            ia, ja = i[interior], j[interior]
            vals[interior] = (table[ia - 1, ja] * ia + table[ia, ja - 1] * ja) / (ia + ja)
        table[i, j] = vals

    return table
