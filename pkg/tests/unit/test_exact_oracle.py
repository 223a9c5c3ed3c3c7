# tests/unit/test_exact_oracle.py
import math
from fractions import Fraction
from itertools import combinations

import pytest

from ks2.corridor import CorridorSpec, band_width, corridor_outside, row_bounds
from ks2.errors import ResourceLimit, TooManyPaths
from ks2.exact_oracle import (
    ExactP,
    brute_force_p2,
    p2_classical_exact,
    path_count_table,
    path_statistic_distribution,
    to_double,
    to_double_flagged,
)
from ks2.exact_stable import p2_stable


def _paths_to(i: int, j: int):
    """Все пути (0,0) -> (i,j) как списки точек."""
    for x_positions in combinations(range(i + j), i):
        xs = set(x_positions)
        a = b = 0
        pts = [(0, 0)]
        for step in range(i + j):
            if step in xs:
                a += 1
            else:
                b += 1
            pts.append((a, b))
        yield pts


# =============================================================================
# ExactP / to_double
# =============================================================================
@pytest.mark.unit
def test_exact_p_invariants():
    p = ExactP.from_fraction(Fraction(2, 6))
    assert (p.numerator, p.denominator) == (1, 3)
    assert str(p) == "1/3"
    assert p.complement().as_fraction() == Fraction(2, 3)
    with pytest.raises(ValueError):
        ExactP(2, 4)
    with pytest.raises(ValueError):
        ExactP(5, 3)
    with pytest.raises(ValueError):
        ExactP(0, 0)


@pytest.mark.unit
def test_to_double_rounds_to_nearest():
    assert to_double(ExactP(1, 3)) == 1 / 3
    assert to_double(ExactP(1, 2)) == 0.5
    assert to_double(ExactP(0, 1)) == 0.0
    assert to_double(ExactP(1, 1)) == 1.0


@pytest.mark.unit
def test_to_double_underflow_flag():
    tiny = ExactP(1, 10**400)
    value, underflow = to_double_flagged(tiny)
    assert value == 0.0
    assert underflow is True

    small = ExactP(1, 10**300)
    value, underflow = to_double_flagged(small)
    assert value == pytest.approx(1e-300, rel=1e-15)
    assert underflow is False


# =============================================================================
# Classical A-recursion
# =============================================================================
@pytest.mark.unit
def test_classical_examples():
    assert p2_classical_exact(CorridorSpec(1, 1, 1)).as_fraction() == 1
    assert p2_classical_exact(CorridorSpec(2, 2, 4)).as_fraction() == Fraction(1, 3)
    assert p2_classical_exact(CorridorSpec(3, 3, 9)).as_fraction() == Fraction(1, 10)
    assert p2_classical_exact(CorridorSpec(4, 4, 0)).as_fraction() == 1
    assert p2_classical_exact(CorridorSpec(4, 4, 17)).as_fraction() == 0


@pytest.mark.unit
def test_classical_respects_resource_cap(set_env):
    set_env("KS2_MAX_MN", "20")
    p2_classical_exact(CorridorSpec(10, 10, 30))
    with pytest.raises(ResourceLimit):
        p2_classical_exact(CorridorSpec(10, 11, 30))


@pytest.mark.unit
def test_path_counts_match_per_point_enumeration():
    """A(i, j) = число путей в (i, j), не касающихся внешних точек (m + n <= 12)."""
    for m, n, c in [(3, 4, 5), (5, 5, 10), (6, 6, 12), (4, 8, 12), (2, 7, 6)]:
        spec = CorridorSpec(m, n, c)
        table = path_count_table(spec)
        for i in range(m + 1):
            for j in range(n + 1):
                expected = sum(
                    1 for pts in _paths_to(i, j) if not any(corridor_outside(a, b, spec) for a, b in pts)
                )
                assert table.count(i, j) == expected, (m, n, c, i, j)


@pytest.mark.unit
def test_path_count_table_zero_outside_and_row_sums_bounded():
    spec = CorridorSpec(9, 7, 20)
    table = path_count_table(spec)
    w = band_width(spec)
    assert table.count(0, 0) == 1
    for i in range(spec.m + 1):
        for j in range(spec.n + 1):
            if corridor_outside(i, j, spec):
                assert table.count(i, j) == 0
        _, j_max = row_bounds(i, spec)
        assert sum(table.rows[i]) <= math.comb(i + max(j_max, 0), i) * w


@pytest.mark.unit
def test_classical_monotone_in_threshold_and_in_unit_interval():
    m, n = 7, 9
    values = [p2_classical_exact(CorridorSpec(m, n, c)).as_fraction() for c in range(0, m * n + 2)]
    assert all(0 <= v <= 1 for v in values)
    assert all(a >= b for a, b in zip(values, values[1:]))


@pytest.mark.unit
def test_complement_identity():
    spec = CorridorSpec(6, 9, 20)
    table = path_count_table(spec)
    p = p2_classical_exact(spec).as_fraction()
    assert p == 1 - Fraction(table.count(6, 9), math.comb(15, 6))


# =============================================================================
# Brute force
# =============================================================================
@pytest.mark.unit
def test_brute_force_examples():
    assert brute_force_p2(CorridorSpec(1, 1, 1)).as_fraction() == 1
    assert brute_force_p2(CorridorSpec(1, 1, 2)).as_fraction() == 0
    assert brute_force_p2(CorridorSpec(3, 3, 9)).as_fraction() == Fraction(1, 10)


@pytest.mark.unit
def test_path_statistic_distribution_counts_every_path():
    dist = path_statistic_distribution(4, 6)
    assert sum(dist.values()) == math.comb(10, 4)
    assert max(dist) == 24


@pytest.mark.unit
def test_brute_force_guard(set_env):
    with pytest.raises(TooManyPaths):
        brute_force_p2(CorridorSpec(12, 11, 5))
    set_env("KS2_MAX_BRUTE_FORCE_MN", "6")
    with pytest.raises(TooManyPaths):
        brute_force_p2(CorridorSpec(4, 3, 5))


@pytest.mark.unit
def test_brute_force_equals_classical_exactly_for_small_grids():
    for m in range(1, 9):
        for n in range(1, 9):
            for c in range(0, m * n + 2):
                spec = CorridorSpec(m, n, c)
                assert brute_force_p2(spec) == p2_classical_exact(spec), (m, n, c)


@pytest.mark.unit
def test_classical_matches_stable_for_m12_n13():
    for c in range(0, 12 * 13 + 2):
        spec = CorridorSpec(12, 13, c)
        exact = to_double(p2_classical_exact(spec))
        got = p2_stable(spec)
        assert abs(got - exact) <= 1e-12 * max(exact, 1e-3), (c, got, exact)


@pytest.mark.unit
def test_saturation_witness_exists():
    """P2 > 0, но 1 - to_double(1 - P2) == 0: дополнение насыщается до 1.0."""
    spec = CorridorSpec(60, 60, 3240)  # d = 0.9
    p = p2_classical_exact(spec)
    assert p.numerator > 0
    assert to_double(p.complement()) == 1.0
    assert 1.0 - to_double(p.complement()) == 0.0
    assert to_double(p) > 0.0
