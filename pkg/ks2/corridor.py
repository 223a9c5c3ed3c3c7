# ks2/corridor.py
"""
Corridor geometry shared by the stable sweep and the exact oracle.

Grid point (i, j), 0 <= i <= m, 0 <= j <= n, is OUTSIDE iff |i*n - j*m| >= c.
All tests are exact integer comparisons; no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Union

from ks2.errors import InvalidThreshold
from ks2.statistic import KsStatistic


@dataclass(frozen=True)
class CorridorSpec:
    m: int
    n: int
    c: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be >= 1, got m={self.m}, n={self.n}")

    @classmethod
    def from_statistic(cls, stat: KsStatistic) -> "CorridorSpec":
        return cls(m=stat.m, n=stat.n, c=stat.c)

    @property
    def mn(self) -> int:
        return self.m * self.n

    @property
    def everything_outside(self) -> bool:
        return self.c <= 0

    @property
    def nothing_outside(self) -> bool:
        return self.c > self.mn

    def swapped(self) -> "CorridorSpec":
        return CorridorSpec(m=self.n, n=self.m, c=self.c)


def corridor_outside(i: int, j: int, spec: CorridorSpec) -> bool:
    return abs(i * spec.n - j * spec.m) >= spec.c


def row_bounds(i: int, spec: CorridorSpec) -> tuple[int, int]:
    """
    Column interval of row i that can hold in-corridor points.

    In-corridor j satisfy i*n - c < j*m < i*n + c, so
        j_min = floor((i*n - c) / m) + 1,  j_max = ceil((i*n + c) / m) - 1,
    clamped to [0, n]. The interval is empty (j_min > j_max) when no multiple
    of m falls strictly within c of i*n.
    """
    m, n, c = spec.m, spec.n, spec.c
    j_min = (i * n - c) // m + 1
    j_max = -(-(i * n + c) // m) - 1
    return max(0, j_min), min(n, j_max)


def band_width(spec: CorridorSpec) -> int:
    # open interval of length 2c/m holds at most floor(2c/m) + 1 integers; +1 sentinel
    return max(1, min(spec.n + 1, 2 * spec.c // spec.m + 2))


def band_start(i: int, spec: CorridorSpec, width: int) -> int:
    j_min, _ = row_bounds(i, spec)
    return max(0, min(j_min, spec.n + 1 - width))


def parse_decimal_threshold(d: Union[str, Decimal]) -> Decimal:
    """
    Parse a decimal literal ("0.5", "1e-3"). Ratio syntax and non-finite values are rejected.

    Only the digits and the exponent are read, so "1e-300000000" costs nothing.
    """
    if isinstance(d, Decimal):
        value = d
    elif isinstance(d, str):
        try:
            value = Decimal(d.strip())
        except (InvalidOperation, ValueError) as exc:
            raise InvalidThreshold(f"invalid decimal threshold {d!r}: {type(exc).__name__}") from None
    else:
        raise InvalidThreshold(f"threshold must be a decimal string, got {type(d).__name__}")
    if not value.is_finite():
        raise InvalidThreshold(f"invalid decimal threshold {d!r}: not finite")
    return value


def threshold_from_decimal(d: Union[str, Decimal, Fraction, int], m: int, n: int) -> int:
    """
    Smallest integer c with c / (m*n) >= d, clamped to [0, m*n + 1].

    d is parsed as an exact base-10 rational, never through a float:
    "0.1" stays 1/10 and "0.5" with m = n = 500 gives exactly 125000.
    Every c <= 0 gives P2 = 1 and every c > m*n gives P2 = 0, hence the clamp.
    """
    mn = m * n
    if isinstance(d, float):
        raise InvalidThreshold("threshold must be given as a decimal string, not a float")
    if isinstance(d, (Fraction, int)):
        q = Fraction(d)
    else:
        value = parse_decimal_threshold(d)
        if value <= 0:
            return 0
        if value > 1:
            return mn + 1
        # 0 < d < 10**(adjusted + 1) <= 1/(m*n)
        if value.adjusted() < -len(str(mn)):
            return 1
        q = Fraction(value)

    if q <= 0:
        return 0
    if q > 1:
        return mn + 1
    return -((-q.numerator * mn) // q.denominator)
