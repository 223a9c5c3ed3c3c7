# ks2/asymptotic.py
"""
Smirnov limiting distribution of the scaled two-sample statistic.

    Prob[sqrt(mn/(m+n)) * D >= x] -> 2 * sum_{k>=1} (-1)^(k-1) * exp(-2 k^2 x^2)

Used only for comparison with the exact evaluators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from ks2.corridor import CorridorSpec
from ks2.statistic import KsStatistic

# below this the series needs too many terms; the true tail exceeds 1 - 1e-10
SMALL_X_CLAMP = 0.05
REL_TOL = 1e-16
ABS_FLOOR = 1e-300


@dataclass(frozen=True)
class ScaledStatistic:
    x: float

    def __post_init__(self):
        if not math.isfinite(self.x) or self.x < 0:
            raise ValueError(f"scaled statistic must be finite and >= 0, got {self.x!r}")


def scale_statistic(stat: Union[KsStatistic, CorridorSpec]) -> ScaledStatistic:
    """x = sqrt(m*n / (m+n)) * c / (m*n), no continuity correction."""
    m, n = stat.m, stat.n
    c = max(stat.c, 0)
    return ScaledStatistic(x=math.sqrt(m * n / (m + n)) * c / (m * n))


def threshold_for_scaled(m: int, n: int, x: float) -> int:
    """Integer c whose scaled statistic is nearest to x."""
    if not math.isfinite(x) or x < 0:
        raise ValueError(f"x must be finite and >= 0, got {x!r}")
    return int(math.floor(x * math.sqrt((m + n) * m * n) + 0.5))


def _alternating_series(xv: float) -> tuple[float, int]:
    """Partial sum of (-1)^(k-1) exp(-2 k^2 x^2) and the index of the first omitted term."""
    total = 0.0
    sign = 1.0
    k = 1
    while True:
        term = math.exp(-2.0 * k * k * xv * xv)
        if term < max(REL_TOL * abs(total), ABS_FLOOR):
            break
        total += sign * term
        sign = -sign
        k += 1
    return total, k


def smirnov_tail(x: Union[ScaledStatistic, float]) -> float:
    """
    Limiting tail probability, truncated once the next term is below
    1e-16 of the partial sum (or below 1e-300); clamped to [0, 1].
    """
    xv = x.x if isinstance(x, ScaledStatistic) else ScaledStatistic(float(x)).x
    if xv <= SMALL_X_CLAMP:
        return 1.0
    total, _ = _alternating_series(xv)
    return min(1.0, max(0.0, 2.0 * total))
