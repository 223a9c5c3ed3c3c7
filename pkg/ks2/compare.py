# ks2/compare.py
"""
Stable vs exact-rational sweep over a grid of (m, n, c) cells.

The harness measures runtimes and relative errors; it asserts nothing.
Thresholds per (m, n) pair are all of 0..m*n+1, or a seeded sample of them.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np
import pandas as pd

from ks2.asymptotic import scale_statistic, smirnov_tail
from ks2.config import get_settings
from ks2.corridor import CorridorSpec
from ks2.errors import ResourceLimit
from ks2.exact_oracle import p2_classical_exact, to_double
from ks2.exact_stable import p2_stable
from ks2.schemas import CompareParams

logger = logging.getLogger(__name__)

BASE_COLUMNS = ["m", "n", "c", "p_stable", "p_exact", "rel_err", "t_stable_ms", "t_exact_ms"]
ASYMPTOTIC_COLUMNS = ["x", "p_asymptotic", "asym_abs_err"]


@dataclass(frozen=True)
class CompareCell:
    m: int
    n: int
    c: int
    with_asymptotic: bool = False


def thresholds_for_pair(m: int, n: int, samples: int | None, seed: int) -> List[int]:
    """All c in 0..m*n+1, or `samples` of them drawn without replacement, sorted."""
    upper = m * n + 2
    if samples is None or samples >= upper:
        return list(range(upper))
    # seeded per pair: the same cell set regardless of sweep order
    rng = np.random.default_rng([seed, m, n])
    return sorted(int(c) for c in rng.choice(upper, size=samples, replace=False))


def plan_cells(params: CompareParams) -> List[CompareCell]:
    settings = get_settings()
    if params.m_max > settings.compare_max or params.n_max > settings.compare_max:
        raise ResourceLimit(
            f"compare grid limited to m, n <= {settings.compare_max} (KS2_COMPARE_MAX)"
        )
    cells: List[CompareCell] = []
    for m in range(params.m_min, params.m_max + 1):
        for n in range(params.n_min, params.n_max + 1):
            for c in thresholds_for_pair(m, n, params.samples, params.seed):
                cells.append(CompareCell(m=m, n=n, c=c, with_asymptotic=params.with_asymptotic))
    return cells


def relative_error(value: float, reference: float) -> float:
    diff = abs(value - reference)
    return diff / reference if reference > 0 else diff


def evaluate_cell(cell: CompareCell) -> Dict[str, Any]:
    spec = CorridorSpec(m=cell.m, n=cell.n, c=cell.c)

    t0 = time.perf_counter()
    p_stable = p2_stable(spec)
    t1 = time.perf_counter()
    p_exact = to_double(p2_classical_exact(spec))
    t2 = time.perf_counter()

    row: Dict[str, Any] = {
        "m": cell.m,
        "n": cell.n,
        "c": cell.c,
        "p_stable": p_stable,
        "p_exact": p_exact,
        "rel_err": relative_error(p_stable, p_exact),
        "t_stable_ms": (t1 - t0) * 1000,
        "t_exact_ms": (t2 - t1) * 1000,
    }
    if cell.with_asymptotic:
        x = scale_statistic(spec)
        p_asym = smirnov_tail(x)
        row.update({"x": x.x, "p_asymptotic": p_asym, "asym_abs_err": abs(p_asym - p_exact)})
    return row


def run_compare(params: CompareParams) -> pd.DataFrame:
    """
    Evaluate every planned cell; output rows keep the planned order.

    Raises:
        ResourceLimit: grid above KS2_COMPARE_MAX or a cell above KS2_MAX_MN
    """
    cells = plan_cells(params)
    max_mn = get_settings().max_mn
    too_big = next((cl for cl in cells if cl.m + cl.n > max_mn), None)
    if too_big is not None:
        raise ResourceLimit(
            f"cell m={too_big.m}, n={too_big.n} exceeds the exact-rational cap m+n <= {max_mn} (KS2_MAX_MN)"
        )

    started = time.perf_counter()
    if params.workers > 1 and len(cells) > 1:
        chunk = max(1, len(cells) // (params.workers * 8))
        with ProcessPoolExecutor(max_workers=params.workers) as pool:
            rows = list(pool.map(evaluate_cell, cells, chunksize=chunk))
    else:
        rows = [evaluate_cell(cl) for cl in cells]

    columns = BASE_COLUMNS + (ASYMPTOTIC_COLUMNS if params.with_asymptotic else [])
    df = pd.DataFrame(rows, columns=columns)

    logger.info(
        "compare sweep finished",
        extra={
            "cells": len(cells),
            "workers": params.workers,
            "max_rel_err": float(df["rel_err"].max()) if len(df) else 0.0,
            "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
        },
    )
    return df
