"""
Testes unitários para a estrutura completa e amostrada de ciclos e bacias.
"""

import numpy as np
import pytest

from src.core.dynamics import Endofunction, decompose
from src.discretized.maps import GridDiscretization, MapSpec, grid_discretize
from src.discretized.orbit_structure import (
    BINARY64, COMPLETE, GRID, REFERENCE_STRUCTURES, SAMPLED, CycleRecord,
    OrbitStructureReport, attempt_reference_match, compare_with_reference,
    full_orbit_structure, sampled_orbit_structure,
)
from src.utils.exceptions import DomainError, ResourceBudgetError


def grid(family, n, rounding='nearest_half_away'):
    return grid_discretize(MapSpec(family), GridDiscretization(n, rounding))


def test_doubling_collapses_to_zero():
    report = full_orbit_structure(grid('doubling', 8))
    assert report.mode == COMPLETE
    assert [(c.period, c.basin_size, c.least_cycle_point) for c in report.cycles] == [
        (1, 8, 0)
    ]
    assert report.cycles[0].relative_size == 1.0
    assert report.metadata['cycles_verified']


def test_permutation_has_no_tails():
    rng = np.random.default_rng(7)
    images = rng.permutation(500)
    report = full_orbit_structure(images)
    assert sum(c.period for c in report.cycles) == 500
    assert all(c.period == c.basin_size for c in report.cycles)


def test_matches_decomposition():
    """O conjunto de ciclos e bacias coincide com decompose em funções aleatórias."""
    rng = np.random.default_rng(11)
    for n in (1, 2, 37, 1000):
        f = Endofunction(n, tuple(int(v) for v in rng.integers(0, n, size=n)))
        report = full_orbit_structure(f)
        expected = {
            (c.order, min(c.cycle), len(c.members)) for c in decompose(f).components
        }
        computed = {(c.period, c.least_cycle_point, c.basin_size) for c in report.cycles}
        assert computed == expected
        assert report.cycle_set() == {
            (c.order, min(c.cycle)) for c in decompose(f).components
        }


def test_basins_partition_the_grid():
    for family in ('circle_cubic', 'circle_quadratic', 'folded_logistic'):
        for rounding in ('nearest_half_away', 'nearest_ties_even'):
            report = full_orbit_structure(grid(family, 4096, rounding))
            assert report.total_basin == 4096
            sizes = [c.basin_size for c in report.cycles]
            assert sizes == sorted(sizes, reverse=True)


def test_lazy_and_materialized_agree():
    g = grid('circle_cubic', 3000)
    lazy = full_orbit_structure(g)
    table = full_orbit_structure(g.materialize_array())
    assert lazy.cycles == table.cycles


def test_invalid_table():
    with pytest.raises(DomainError):
        full_orbit_structure(np.array([0, 3, 1]))


def test_memory_budget():
    with pytest.raises(ResourceBudgetError):
        full_orbit_structure(grid('identity', 2 ** 20), budget_mb=1)


def test_sampling_all_points_reproduces_complete_mode():
    n = 2 ** 16
    complete = full_orbit_structure(grid('circle_quadratic', n))
    sampled = sampled_orbit_structure(MapSpec('circle_quadratic'), GRID, n=n,
                                      seeds=n, threads=1)
    assert sampled.mode == SAMPLED
    assert [(c.period, c.basin_size, c.least_cycle_point) for c in sampled.cycles] == [
        (c.period, c.basin_size, c.least_cycle_point) for c in complete.cycles
    ]


def test_sampling_identity():
    report = sampled_orbit_structure(MapSpec('identity'), GRID, n=1000, seeds=100,
                                     threads=1)
    assert report.total_basin == 100
    assert all(c.period == 1 for c in report.cycles)

    report = sampled_orbit_structure(MapSpec('identity'), BINARY64, seeds=100,
                                     threads=1)
    assert report.n is None
    assert report.cycle_count == 100
    assert all(c.period == 1 and c.basin_size == 1 for c in report.cycles)


def test_sampling_is_deterministic():
    spec = MapSpec('folded_logistic')
    first = sampled_orbit_structure(spec, BINARY64, seeds=50, rng_seed=3, threads=1,
                                    max_iterations=10 ** 6)
    second = sampled_orbit_structure(spec, BINARY64, seeds=50, rng_seed=3, threads=1,
                                     max_iterations=10 ** 6)
    assert first.cycles == second.cycles
    assert first.metadata == second.metadata


def test_unresolved_seeds_are_counted():
    report = sampled_orbit_structure(MapSpec('circle_cubic'), GRID, n=2 ** 16,
                                     seeds=200, max_iterations=1, threads=1)
    assert report.metadata['unresolved'] > 0
    assert report.total_basin + report.metadata['unresolved'] == 200


def test_sampling_errors():
    with pytest.raises(DomainError):
        sampled_orbit_structure(MapSpec('identity'), GRID, n=None, seeds=10)
    with pytest.raises(DomainError):
        sampled_orbit_structure(MapSpec('identity'), GRID, n=10, seeds=0)
    with pytest.raises(DomainError):
        sampled_orbit_structure(MapSpec('identity'), 'decimal', seeds=10)


def test_compare_with_reference():
    report = OrbitStructureReport(10, [
        CycleRecord(5, 8, 0.8, 0), CycleRecord(1, 2, 0.2, 9)
    ], COMPLETE)
    rows = compare_with_reference(report, [(5, 8), (2, 2)])
    assert [r['matches'] for r in rows] == [True, False]
    rows = compare_with_reference(report, [(5, 8)])
    assert rows[1]['reference_period'] is None


def test_reference_requires_known_order():
    with pytest.raises(DomainError):
        attempt_reference_match(1000)


@pytest.mark.slow
def test_reference_attempt_runs_for_both_roundings():
    outcome = attempt_reference_match(2 ** 23)
    assert set(outcome) == {'nearest_half_away', 'nearest_ties_even'}
    for rows in outcome.values():
        assert len(rows) >= len(REFERENCE_STRUCTURES[2 ** 23])


@pytest.mark.slow
def test_circle_cubic_large_grid_shape():
    """Poucos ciclos, bacia dominante e períodos longos na grade de 2^24 pontos."""
    n = 2 ** 24
    report = full_orbit_structure(grid('circle_cubic', n))
    assert report.total_basin == n
    assert report.cycle_count <= 20
    assert report.dominant_share > 0.5
    assert 10 ** 2 <= report.longest_period <= 10 ** 5
