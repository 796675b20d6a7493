"""
Testes unitários para órbitas, componentes e gop de endofunções.
"""

import itertools

import pytest

from src.core.dynamics import (
    ComponentNature, Endofunction, decompose, decompose_naive, gop_of, is_periodic,
    iterate, orbit_of, order_of, periodic_points,
)
from src.gop.pattern import Gop
from src.utils.exceptions import DomainError, LiteralParseError


def test_iterate(orbit_example):
    """Testa f^k(x), incluindo k = 0 e pontos fixos."""
    assert iterate(orbit_example, 2, 2) == 9
    assert iterate(orbit_example, 7, 0) == 7
    assert iterate(Endofunction.identity(5), 3, 100) == 3
    # 2 -> 5 -> 9 -> 7 -> 5 ...
    assert iterate(orbit_example, 2, 10 ** 12) == [5, 9, 7][(10 ** 12 - 1) % 3]


def test_iterate_out_of_range(orbit_example):
    with pytest.raises(DomainError):
        iterate(orbit_example, 10, 1)
    with pytest.raises(DomainError):
        iterate(orbit_example, 0, -1)


def test_orbit_of(orbit_example):
    """Testa a separação entre parte transiente e ciclo."""
    trace = orbit_of(orbit_example, 2)
    assert trace.tail == (2,)
    assert trace.cycle == (5, 9, 7)
    assert trace.order == 3

    fixed = orbit_of(orbit_example, 1)
    assert fixed.tail == ()
    assert fixed.cycle == (1,)
    assert fixed.is_periodic

    constant = orbit_of(Endofunction.constant(3), 2)
    assert constant.tail == (2,)
    assert constant.cycle == (0,)


def test_order_and_periodicity(orbit_example):
    assert order_of(orbit_example, 3) == 2
    assert is_periodic(orbit_example, 5)
    assert not is_periodic(orbit_example, 2)
    assert periodic_points(orbit_example) == [0, 1, 4, 5, 6, 7, 8, 9]


def test_decompose_components(components_example):
    """Testa componentes, ciclos e natureza atrativa/repulsiva."""
    decomposition = decompose(components_example)
    summary = [
        (c.members, c.cycle, c.order, c.nature) for c in decomposition.components
    ]
    assert summary == [
        ((0, 6), (0, 6), 2, ComponentNature.REPULSIVE),
        ((1, 7, 8), (8,), 1, ComponentNature.ATTRACTIVE),
        ((2, 4, 5), (2, 4, 5), 3, ComponentNature.REPULSIVE),
        ((3, 9), (3, 9), 2, ComponentNature.REPULSIVE),
    ]
    assert decomposition.component_count == 4
    assert decomposition.periodic_point_count == 8


def test_decompose_identity():
    decomposition = decompose(Endofunction.identity(3))
    assert [c.members for c in decomposition.components] == [(0,), (1,), (2,)]
    assert all(c.nature is ComponentNature.REPULSIVE for c in decomposition.components)


def test_decompose_two_components(gop_214):
    decomposition = decompose(gop_214)
    assert [c.members for c in decomposition.components] == [
        (0, 1, 2), (3,), (4, 5, 6, 7)
    ]
    assert decomposition.components[0].nature is ComponentNature.ATTRACTIVE
    assert decomposition.gop == Gop((2, 1, 4))


def test_decompose_to_dict(components_example):
    data = decompose(components_example).to_dict()
    assert data['n'] == 10
    assert data['components'][1] == {
        'rep': 1, 'members': [1, 7, 8], 'cycle': [8], 'order': 1, 'nature': 'attractive'
    }


def test_gop_of(gop_2132, gop_214, orbit_example):
    assert gop_of(gop_2132) == Gop((2, 1, 3, 2))
    assert gop_of(gop_214) == Gop((2, 1, 4))
    assert gop_of(orbit_example) == Gop((2, 1, 3, 2))
    assert gop_of(Endofunction.identity(6)) == Gop((1,) * 6)


def test_fast_and_naive_decompositions_agree():
    """Compara a decomposição O(N) com a de referência em todo F_5."""
    for images in itertools.product(range(5), repeat=5):
        f = Endofunction(5, images)
        assert decompose(f) == decompose_naive(f)


def test_endofunction_validation():
    with pytest.raises(DomainError):
        Endofunction(3, (0, 1))
    with pytest.raises(DomainError):
        Endofunction(3, (0, 1, 3))
    with pytest.raises(DomainError):
        Endofunction(0, ())


def test_literal_parsing():
    f = Endofunction.from_literal("4,1,5,4,0,9,8,5,6,7")
    assert f.size == 10
    assert f.to_literal() == "4,1,5,4,0,9,8,5,6,7"
    assert Endofunction.from_literal("[1, 0]").images == (1, 0)
    for bad in ("", "1,,2", "a,b", "0,3,1"):
        with pytest.raises(LiteralParseError):
            Endofunction.from_literal(bad)
