# ks2/statistic.py
"""
Exact two-sample KS statistic.

D = sup_x |F_m(x) - G_n(x)| is kept as an integer numerator c over m*n, so
corridor membership downstream is decided by integer comparison only.

[PUBLIC API]:
  Sample, KsStatistic, TiePolicy, compute_statistic, has_cross_ties
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from ks2.errors import EmptySample, NonFiniteValue, TieRejected

logger = logging.getLogger(__name__)


class TiePolicy(str, Enum):
    REJECT = "reject"
    RESOLVE = "resolve"


@dataclass(frozen=True, eq=False)
class Sample:
    """Non-empty, finite, sorted ascending; the array is read-only."""

    values: np.ndarray

    @classmethod
    def from_values(cls, values: Union[Iterable[float], np.ndarray]) -> "Sample":
        if isinstance(values, Sample):
            return values
        if isinstance(values, np.ndarray):
            arr = np.array(values, dtype=np.float64).ravel()
        else:
            arr = np.array(list(values), dtype=np.float64).ravel()

        if arr.size == 0:
            raise EmptySample("sample must contain at least one value")

        bad = np.flatnonzero(~np.isfinite(arr))
        if bad.size:
            pos = int(bad[0])
            raise NonFiniteValue(float(arr[pos]), position=pos)

        arr.sort(kind="mergesort")
        arr.setflags(write=False)
        return cls(values=arr)

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class KsStatistic:
    m: int
    n: int
    c: int
    ties_detected: bool = False

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"sample sizes must be positive, got m={self.m}, n={self.n}")
        if not (0 <= self.c <= self.m * self.n):
            raise ValueError(f"c must lie in [0, m*n], got c={self.c} for m*n={self.m * self.n}")

    @property
    def d(self) -> Fraction:
        return Fraction(self.c, self.m * self.n)

    def swapped(self) -> "KsStatistic":
        return KsStatistic(m=self.n, n=self.m, c=self.c, ties_detected=self.ties_detected)


SampleLike = Union[Sample, Iterable[float], np.ndarray]


def _as_sample(values: SampleLike) -> Sample:
    return values if isinstance(values, Sample) else Sample.from_values(values)


def has_cross_ties(xs: SampleLike, ys: SampleLike) -> bool:
    return bool(np.intersect1d(_as_sample(xs).values, _as_sample(ys).values).size)


def compute_statistic(
    xs: SampleLike,
    ys: SampleLike,
    policy: TiePolicy = TiePolicy.RESOLVE,
) -> KsStatistic:
    """
    Compute (m, n, c) with c = max |i*n - j*m| over the merged sequence.

    i and j count the x- and y-values <= each distinct observed value, i.e. the
    ECDFs are evaluated at their jump points (searchsorted, side="right").
    Without cross-sample ties this is exactly the maximum over the lattice path.

    Raises:
        EmptySample, NonFiniteValue: invalid input
        TieRejected: policy is REJECT and a value occurs in both samples
    """
    sx, sy = _as_sample(xs), _as_sample(ys)
    x, y = sx.values, sy.values
    m, n = x.size, y.size

    ties = has_cross_ties(sx, sy)
    if ties:
        tied = np.intersect1d(x, y)
        if TiePolicy(policy) is TiePolicy.REJECT:
            raise TieRejected(tied.tolist())
        logger.warning(
            "Cross-sample ties resolved at ECDF jump points",
            extra={"m": m, "n": n, "tied_values": int(tied.size)},
        )

    grid = np.union1d(x, y)
    i = np.searchsorted(x, grid, side="right").astype(np.int64)
    j = np.searchsorted(y, grid, side="right").astype(np.int64)
    c = int(np.abs(i * n - j * m).max())

    logger.debug("KS statistic computed", extra={"m": m, "n": n, "c": c})
    return KsStatistic(m=int(m), n=int(n), c=c, ties_detected=ties)
