"""
Testes unitários para a descrição das famílias e o predicado de pertinência.
"""

import pytest

from src.core.dynamics import Endofunction
from src.enumeration.families import FamilyKind, FamilySpec, WindowMode, family_contains
from src.utils.exceptions import DomainError

ALPHA = (20, 10, 5, 3, 1)


def test_l1_membership():
    f = Endofunction.from_images([4, 1, 5, 4, 0, 9, 8, 5, 6, 7])
    assert not family_contains(FamilySpec.l1(10), f)
    assert family_contains(FamilySpec.l1(10), Endofunction.identity(10))
    assert family_contains(FamilySpec.l1(3), Endofunction.from_images([1, 0, 1]))
    assert not family_contains(FamilySpec.l1(3), Endofunction.from_images([0, 2, 2]))


def test_lalpha_constant_functions():
    for mode in WindowMode:
        spec = FamilySpec.lalpha(10, ALPHA, 0, mode.value)
        assert family_contains(spec, Endofunction.constant(10, 7))
        assert not family_contains(spec, Endofunction.identity(10))


def test_full_family_contains_everything():
    assert family_contains(FamilySpec.full(4), Endofunction.from_images([3, 0, 2, 1]))


def test_backward_window_at_last_point():
    """Em p=9 a restrição reversa soma os cinco termos: 20+10+5+3+1 = 39."""
    f = Endofunction.from_images([0, 0, 0, 0, 0, 0, 0, 0, 0, 1])
    for mode in WindowMode:
        assert family_contains(FamilySpec.lalpha(10, ALPHA, 39, mode.value), f)
        assert not family_contains(FamilySpec.lalpha(10, ALPHA, 38, mode.value), f)


def test_size_mismatch():
    with pytest.raises(DomainError):
        family_contains(FamilySpec.l1(4), Endofunction.identity(5))


def test_spec_validation():
    with pytest.raises(DomainError):
        FamilySpec.full(0)
    with pytest.raises(DomainError):
        FamilySpec(FamilyKind.LALPHA, 5)
    with pytest.raises(DomainError):
        FamilySpec.lalpha(5, (1, 0), 3)
    with pytest.raises(DomainError):
        FamilySpec.lalpha(5, (2, 1), -1)


def test_constraint_and_radius():
    assert FamilySpec.l1(5).constraint() == ((1,), 1, True)
    assert FamilySpec.full(5).constraint() == ((), 0, True)
    spec = FamilySpec.lalpha(10, ALPHA, 47)
    assert spec.t == 5
    assert spec.step_radius()[1:] == [2] * 9
    assert FamilySpec.l1(6).step_radius()[1:] == [1] * 5
    assert FamilySpec.l1(6).estimated_size() == 6 * 3 ** 5


def test_describe():
    assert str(FamilySpec.l1(7)) == "L1_7"
    info = FamilySpec.lalpha(10, ALPHA, 35, 'truncated').describe()
    assert info == {
        'family': 'lalpha', 'n': 10, 'alpha': list(ALPHA), 't': 5, 'q': 35,
        'window_mode': 'truncated',
    }
