# ks2/exact_oracle.py
"""
Ground-truth evaluators for P2 in exact rational arithmetic.

  * p2_classical_exact: classical path-count recursion A(i, j) on Python ints,
    banded with the same corridor geometry as the stable sweep;
  * brute_force_p2: enumeration of every lattice path for tiny (m, n).

Both are for validation and the `exact-rational` / `brute-force` CLI methods;
the production evaluator is ks2.exact_stable.p2_stable.
"""

from __future__ import annotations

import logging
import math
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, NamedTuple

from ks2.config import get_settings
from ks2.corridor import CorridorSpec, band_start, band_width
from ks2.errors import ResourceLimit, TooManyPaths

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExactP:
    """Probability as a reduced fraction numerator / denominator in [0, 1]."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if not (0 <= self.numerator <= self.denominator):
            raise ValueError(f"{self.numerator}/{self.denominator} is not in [0, 1]")
        if math.gcd(self.numerator, self.denominator) != 1:
            raise ValueError(f"{self.numerator}/{self.denominator} is not in lowest terms")

    @classmethod
    def from_fraction(cls, q: Fraction) -> "ExactP":
        return cls(numerator=q.numerator, denominator=q.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def complement(self) -> "ExactP":
        return ExactP.from_fraction(1 - self.as_fraction())

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


class DoubleConversion(NamedTuple):
    value: float
    underflow: bool


def to_double_flagged(p: ExactP) -> DoubleConversion:
    # int / int is correctly rounded (round-half-even), subnormals included
    value = p.numerator / p.denominator
    return DoubleConversion(value=value, underflow=(value == 0.0 and p.numerator != 0))


def to_double(p: ExactP) -> float:
    return to_double_flagged(p).value


# =========================
# Classical A-recursion
# =========================
@dataclass(frozen=True)
class PathCountTable:
    """
    Banded A(i, j): number of paths (0,0) -> (i,j) that stay inside the corridor.

    rows[i][k] is A(i, starts[i] + k); columns outside the band are outside
    the corridor, where A = 0.
    """

    spec: CorridorSpec
    starts: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def count(self, i: int, j: int) -> int:
        k = j - self.starts[i]
        row = self.rows[i]
        return row[k] if 0 <= k < len(row) else 0


def _a_rows(spec: CorridorSpec) -> Iterator[tuple[int, int, list[int]]]:
    m, n, c = spec.m, spec.n, spec.c
    w = band_width(spec)
    prev: list[int] = [0] * w
    prev_start = 0

    for i in range(m + 1):
        start = band_start(i, spec, w)
        i_n = i * n
        row = [0] * w
        left = 0
        for jj in range(w):
            j = start + jj
            if abs(i_n - j * m) >= c:
                val = 0
            elif i == 0 or j == 0:
                val = 1
            else:
                k = j - prev_start
                up = prev[k] if 0 <= k < w else 0
                val = up + left
            row[jj] = val
            left = val
        yield i, start, row
        prev, prev_start = row, start


def path_count_table(spec: CorridorSpec) -> PathCountTable:
    starts: list[int] = []
    rows: list[tuple[int, ...]] = []
    for _i, start, row in _a_rows(spec):
        starts.append(start)
        rows.append(tuple(row))
    return PathCountTable(spec=spec, starts=tuple(starts), rows=tuple(rows))


def _check_exact_budget(spec: CorridorSpec) -> None:
    limit = get_settings().max_mn
    if spec.m + spec.n > limit:
        raise ResourceLimit(
            f"exact rational evaluation needs m+n <= {limit} (KS2_MAX_MN), got {spec.m + spec.n}"
        )


def p2_classical_exact(spec: CorridorSpec) -> ExactP:
    """
    P2 = 1 - A(m, n) / binom(m + n, m) as an exact rational.

    Raises:
        ResourceLimit: m + n exceeds KS2_MAX_MN
    """
    _check_exact_budget(spec)
    if spec.everything_outside:
        return ExactP(1, 1)
    if spec.nothing_outside:
        return ExactP(0, 1)

    started = time.perf_counter()
    last_start, last_row = 0, [0]
    for _i, start, row in _a_rows(spec):
        last_start, last_row = start, row

    k = spec.n - last_start
    inside = last_row[k] if 0 <= k < len(last_row) else 0
    total = math.comb(spec.m + spec.n, spec.m)
    p = ExactP.from_fraction(Fraction(total - inside, total))

    logger.debug(
        "p2_classical_exact evaluated",
        extra={
            "m": spec.m,
            "n": spec.n,
            "c": spec.c,
            "denominator_bits": p.denominator.bit_length(),
            "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
        },
    )
    return p


# =========================
# Brute force
# =========================
def _check_enumeration_budget(m: int, n: int) -> None:
    limit = get_settings().max_brute_force_mn
    if m + n > limit:
        raise TooManyPaths(
            f"enumeration of binom({m + n}, {m}) paths refused: m+n must be <= {limit}"
        )


@lru_cache(maxsize=256)
def _path_statistic_counts(m: int, n: int) -> tuple[tuple[int, int], ...]:
    total = m + n
    counts: Counter[int] = Counter()
    for x_positions in combinations(range(total), m):
        is_x = [False] * total
        for pos in x_positions:
            is_x[pos] = True
        i = j = 0
        best = 0
        for step in is_x:
            if step:
                i += 1
            else:
                j += 1
            v = abs(i * n - j * m)
            if v > best:
                best = v
        counts[best] += 1
    return tuple(sorted(counts.items()))


def path_statistic_distribution(m: int, n: int) -> dict[int, int]:
    """
    Map max |i*n - j*m| along a path -> number of paths with that maximum.

    Raises:
        TooManyPaths: m + n exceeds KS2_MAX_BRUTE_FORCE_MN
    """
    if m < 1 or n < 1:
        raise ValueError(f"m and n must be >= 1, got m={m}, n={n}")
    _check_enumeration_budget(m, n)
    return dict(_path_statistic_counts(m, n))


def brute_force_p2(spec: CorridorSpec) -> ExactP:
    """
    Share of all binom(m+n, m) paths that touch a point with |i*n - j*m| >= c.

    A path touches such a point iff its own maximum reaches c.
    """
    dist = path_statistic_distribution(spec.m, spec.n)
    hits = sum(cnt for value, cnt in dist.items() if value >= spec.c)
    return ExactP.from_fraction(Fraction(hits, math.comb(spec.m + spec.n, spec.m)))
