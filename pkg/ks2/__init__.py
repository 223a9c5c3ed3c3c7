"""Exact p-values for the two-sided two-sample Kolmogorov-Smirnov test."""

from ks2.asymptotic import ScaledStatistic, scale_statistic, smirnov_tail, threshold_for_scaled
from ks2.corridor import CorridorSpec, corridor_outside, row_bounds, threshold_from_decimal
from ks2.exact_oracle import ExactP, brute_force_p2, p2_classical_exact, to_double
from ks2.exact_stable import BandRow, p2_complement_float, p2_stable, p2_stable_full
from ks2.statistic import KsStatistic, Sample, TiePolicy, compute_statistic

__version__ = "1.0.0"

__all__ = [
    "BandRow",
    "CorridorSpec",
    "ExactP",
    "KsStatistic",
    "Sample",
    "ScaledStatistic",
    "TiePolicy",
    "brute_force_p2",
    "compute_statistic",
    "corridor_outside",
    "p2_classical_exact",
    "p2_complement_float",
    "p2_stable",
    "p2_stable_full",
    "row_bounds",
    "scale_statistic",
    "smirnov_tail",
    "threshold_for_scaled",
    "threshold_from_decimal",
    "to_double",
]
