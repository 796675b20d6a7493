"""
Testes unitários para o censo exaustivo das famílias.
"""

import pytest

from src.enumeration.census import (
    census_memory_bytes, census_vs_formula, check_census_budget, decode_gop_key,
    enumerate_family, filter_census,
)
from src.enumeration.families import FamilySpec
from src.gop.pattern import Gop
from src.utils.exceptions import ResourceBudgetError

L1_TOTALS = [1, 4, 17, 68, 259, 950, 3387, 11814, 40503, 136946]


def test_l1_small_counts(serial):
    stats = enumerate_family(FamilySpec.l1(4), threads=serial)
    assert stats.total_functions == 68
    assert stats.count(Gop((1,))) == 26
    assert stats.count(Gop((2,))) == 18
    assert stats.count(Gop((2, 2))) == 1

    stats = enumerate_family(FamilySpec.l1(5), threads=serial)
    assert stats.total_functions == 259
    assert stats.count(Gop((2,))) == 70
    assert stats.count(Gop((2, 1))) == 12
    assert stats.count(Gop((1, 2))) == 6


def test_l1_totals(serial):
    totals = [
        enumerate_family(FamilySpec.l1(n), threads=serial).total_functions
        for n in range(1, 11)
    ]
    assert totals == L1_TOTALS


def test_l1_max_period_is_at_most_two(serial):
    for n in range(1, 11):
        assert enumerate_family(FamilySpec.l1(n), threads=serial).max_period <= 2


def test_full_family(serial):
    stats = enumerate_family(FamilySpec.full(3), threads=serial)
    assert stats.total_functions == 27
    assert stats.distinct_gop == 7


def test_census_matches_formula(serial):
    for n in range(1, 7):
        checks = census_vs_formula(n, threads=serial)
        assert len(checks) == 2 ** n - 1
        assert all(c.matches for c in checks)


def test_census_matches_filter(serial):
    """Confere o censo podado contra a filtragem direta de F_N."""
    specs = [FamilySpec.l1(n) for n in range(1, 7)]
    specs += [
        FamilySpec.lalpha(6, (3, 1), q, mode)
        for q in (0, 3, 4, 7) for mode in ('full_window', 'truncated')
    ]
    for spec in specs:
        assert enumerate_family(spec, threads=serial).counts == filter_census(spec).counts


def test_parallel_census_is_deterministic():
    spec = FamilySpec.l1(8)
    single = enumerate_family(spec, threads=1)
    split = enumerate_family(spec, threads=3)
    assert single.counts == split.counts


def test_counts_are_sorted(serial):
    stats = enumerate_family(FamilySpec.full(4), threads=serial)
    gops = list(stats.counts)
    assert gops == sorted(gops)


def test_summary(serial):
    summary = enumerate_family(FamilySpec.l1(3), threads=serial).summary()
    assert summary['family'] == 'l1'
    assert summary['total_functions'] == 17
    assert summary['max_period'] == 2


def test_decode_gop_key():
    # bits nas somas parciais 2, 3, 6, 8
    assert decode_gop_key((1 << 2) | (1 << 3) | (1 << 6) | (1 << 8)) == Gop((2, 1, 3, 2))
    assert decode_gop_key(1 << 1) == Gop((1,))


def test_budget_refusal():
    with pytest.raises(ResourceBudgetError) as info:
        check_census_budget(FamilySpec.full(12))
    assert info.value.estimate == 12 ** 12
    with pytest.raises(ResourceBudgetError):
        check_census_budget(FamilySpec.l1(17), max_n=30)
    check_census_budget(FamilySpec.l1(16), max_n=16)
    with pytest.raises(ResourceBudgetError):
        filter_census(FamilySpec.full(8))


def test_count_vectors_are_charged_against_memory_budget():
    """Uma família pequena com N grande é recusada antes de alocar os vetores."""
    spec = FamilySpec.lalpha(24, (1,), 0)
    assert census_memory_bytes(spec, 4) == 4 * 2 ** 25 * 8
    with pytest.raises(ResourceBudgetError) as info:
        enumerate_family(spec, threads=4, max_n=24, budget_mb=512)
    assert info.value.estimate == 4 * 2 ** 25 * 8
    with pytest.raises(ResourceBudgetError):
        check_census_budget(FamilySpec.l1(10), workers=2, budget_mb=0)
    check_census_budget(FamilySpec.l1(10), workers=2, budget_mb=1)


@pytest.mark.slow
def test_l1_n10_table_values(serial):
    stats = enumerate_family(FamilySpec.l1(10), threads=serial)
    assert stats.count(Gop((2,))) == 39364
    assert stats.count(Gop((2, 1))) == 7072
    assert stats.count(Gop((1, 2))) == 4508
    assert stats.count(Gop((2, 2))) == 3356
    assert stats.count(Gop((2, 2, 1))) == 770
    ones = [stats.count(Gop((1,) * k)) for k in range(1, 11)]
    assert ones == [47064, 22806, 7896, 2520, 754, 216, 60, 16, 4, 1]


@pytest.mark.slow
def test_l1_n13():
    stats = enumerate_family(FamilySpec.l1(13))
    assert stats.total_functions == 4979777
    assert stats.count(Gop((2,))) == 1445258
    assert stats.count(Gop((2, 1))) == 265548
    assert stats.count(Gop((1, 2))) == 173298
    assert stats.count(Gop((2, 2))) == 132104
    assert stats.count(Gop((2, 2, 1))) == 29659
