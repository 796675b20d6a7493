"""
Fixtures compartilhadas pelos testes.
"""

import pytest

from src.core.dynamics import Endofunction


@pytest.fixture
def orbit_example():
    """Função de N=10 com componentes {1} repulsiva e {2,5,9,7} atrativa."""
    return Endofunction.from_images([4, 1, 5, 4, 0, 9, 8, 5, 6, 7])


@pytest.fixture
def components_example():
    """Função de N=10 com quatro componentes, gop [2,1,3,2]."""
    return Endofunction.from_images([6, 8, 4, 9, 5, 2, 0, 1, 8, 3])


@pytest.fixture
def gop_2132():
    return Endofunction.from_images([9, 6, 9, 8, 3, 7, 6, 5, 4, 2])


@pytest.fixture
def gop_214():
    return Endofunction.from_images([1, 0, 0, 3, 5, 6, 7, 4])


@pytest.fixture
def serial():
    """Número de processos usado nos censos dos testes."""
    return 1
