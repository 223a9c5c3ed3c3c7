# tests/unit/test_statistic.py
from fractions import Fraction

import numpy as np
import pytest

import ks2.statistic
from ks2.errors import EmptySample, NonFiniteValue, TieRejected
from ks2.statistic import KsStatistic, Sample, TiePolicy, compute_statistic, has_cross_ties


def _direct_sup(xs, ys) -> Fraction:
    """Независимая реализация: двойной цикл по всем точкам скачка ECDF."""
    m, n = len(xs), len(ys)
    best = Fraction(0)
    for t in sorted(set(xs) | set(ys)):
        fx = Fraction(sum(1 for v in xs if v <= t), m)
        gy = Fraction(sum(1 for v in ys if v <= t), n)
        best = max(best, abs(fx - gy))
    return best


@pytest.mark.unit
def test_disjoint_supports_give_d_one():
    stat = compute_statistic([1, 2], [3, 4])
    assert (stat.m, stat.n, stat.c) == (2, 2, 4)
    assert stat.d == 1


@pytest.mark.unit
def test_identical_single_values_resolve_to_zero():
    stat = compute_statistic([1], [1], TiePolicy.RESOLVE)
    assert (stat.m, stat.n, stat.c) == (1, 1, 0)
    assert stat.ties_detected is True


@pytest.mark.unit
def test_interleaved_samples():
    """x y x y: |i*n - j*m| по префиксам = 2, 0, 2, 0."""
    stat = compute_statistic([1, 3], [2, 4])
    assert (stat.m, stat.n, stat.c) == (2, 2, 2)
    assert stat.d == Fraction(1, 2)
    assert stat.ties_detected is False


@pytest.mark.unit
def test_reject_policy_raises_on_cross_tie():
    with pytest.raises(TieRejected) as excinfo:
        compute_statistic([1.0, 2.0], [2.0, 3.0], TiePolicy.REJECT)
    assert excinfo.value.tied_values == [2.0]
    assert excinfo.value.exit_code == 3


@pytest.mark.unit
def test_reject_policy_allows_duplicates_within_one_sample():
    stat = compute_statistic([1.0, 1.0, 2.0], [3.0, 4.0], TiePolicy.REJECT)
    assert stat.c == stat.m * stat.n


@pytest.mark.unit
def test_policy_accepts_plain_strings():
    with pytest.raises(TieRejected):
        compute_statistic([5.0], [5.0], "reject")


@pytest.mark.unit
def test_empty_sample_raises():
    with pytest.raises(EmptySample):
        compute_statistic([], [1.0])


@pytest.mark.unit
@pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
def test_non_finite_value_raises(bad):
    with pytest.raises(NonFiniteValue) as excinfo:
        Sample.from_values([0.5, bad])
    assert excinfo.value.position == 1


@pytest.mark.unit
def test_sample_is_sorted_and_read_only():
    s = Sample.from_values([3.0, -1.0, 2.0])
    assert s.values.tolist() == [-1.0, 2.0, 3.0]
    assert len(s) == 3
    with pytest.raises(ValueError):
        s.values[0] = 10.0


@pytest.mark.unit
def test_ks_statistic_validates_range():
    with pytest.raises(ValueError):
        KsStatistic(m=2, n=2, c=5)
    with pytest.raises(ValueError):
        KsStatistic(m=0, n=2, c=0)


@pytest.mark.unit
def test_has_cross_ties():
    assert has_cross_ties([1, 2], [2, 3])
    assert not has_cross_ties([1, 2], [3])


@pytest.mark.unit
def test_compute_statistic_detects_ties_through_has_cross_ties(mocker):
    spy = mocker.spy(ks2.statistic, "has_cross_ties")

    stat = compute_statistic([1, 2], [2, 3])
    assert stat.ties_detected is True
    assert spy.call_count == 1
    assert spy.spy_return is True

    assert compute_statistic([1, 2], [3, 4]).ties_detected is False
    assert spy.spy_return is False


@pytest.mark.unit
def test_agrees_with_direct_double_loop_and_is_rank_invariant():
    """
    1000 случайных пар (m, n <= 50): совпадение с прямым sup по точкам скачка,
    инвариантность к перестановкам, строго возрастающим преобразованиям и обмену выборок.
    """
    rng = np.random.default_rng(20240611)
    for case in range(1000):
        m = int(rng.integers(1, 51))
        n = int(rng.integers(1, 51))
        # целые значения: бывают совпадения (политика Resolve), а кубическое
        # преобразование остаётся точным в double
        xs = rng.integers(-40, 40, size=m).astype(float).tolist()
        ys = rng.integers(-40, 40, size=n).astype(float).tolist()

        stat = compute_statistic(xs, ys)
        assert 0 <= stat.c <= m * n
        assert stat.d == _direct_sup(xs, ys), f"case {case}"

        shuffled = list(rng.permutation(xs))
        assert compute_statistic(shuffled, ys).c == stat.c

        def tr(v):
            return 2 * v**3 + v + 5

        assert compute_statistic([tr(v) for v in xs], [tr(v) for v in ys]).c == stat.c

        swapped = compute_statistic(ys, xs)
        assert (swapped.m, swapped.n) == (n, m)
        assert swapped.d == stat.d


@pytest.mark.unit
def test_continuous_samples_match_direct_sup():
    rng = np.random.default_rng(7)
    for _ in range(200):
        xs = rng.normal(size=int(rng.integers(1, 30))).tolist()
        ys = rng.normal(0.3, 1.2, size=int(rng.integers(1, 30))).tolist()
        stat = compute_statistic(xs, ys, TiePolicy.REJECT)
        assert stat.d == _direct_sup(xs, ys)
