"""
Mapas suaves do intervalo e sua discretização na grade {j/N : 0 <= j < N}.

O mapa discretizado é g(j) = round(N * F(j/N)) mod N, com F avaliado em
binary64. A avaliação é preguiçosa: nenhuma tabela de imagens é guardada a
menos que seja pedida explicitamente.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

import numpy as np
from numba import njit

from config import settings
from src.core.dynamics import Endofunction
from src.utils.debug_monitor import check_memory_budget
from src.utils.exceptions import DomainError


class MapFamily(str, Enum):
    FOLDED_LOGISTIC = 'folded_logistic'
    CIRCLE_CUBIC = 'circle_cubic'
    CIRCLE_QUADRATIC = 'circle_quadratic'
    TENT_POWER = 'tent_power'
    IDENTITY = 'identity'
    DOUBLING = 'doubling'


class Representation(str, Enum):
    UNIT_INTERVAL = 'unit_interval'
    SHIFTED = 'shifted_to_[1,2]'


class Rounding(str, Enum):
    NEAREST_HALF_AWAY = 'nearest_half_away'
    NEAREST_TIES_EVEN = 'nearest_ties_even'


# códigos usados dentro dos kernels numba
_FAMILY_CODES = {
    MapFamily.FOLDED_LOGISTIC: 0,
    MapFamily.CIRCLE_CUBIC: 1,
    MapFamily.CIRCLE_QUADRATIC: 2,
    MapFamily.TENT_POWER: 3,
    MapFamily.IDENTITY: 4,
    MapFamily.DOUBLING: 5,
}
_ROUNDING_CODES = {
    Rounding.NEAREST_HALF_AWAY: 0,
    Rounding.NEAREST_TIES_EVEN: 1,
}


@dataclass(frozen=True)
class MapSpec:
    family: MapFamily
    ell: Optional[float] = None
    representation: Representation = Representation.UNIT_INTERVAL

    def __post_init__(self):
        object.__setattr__(self, 'family', MapFamily(self.family))
        object.__setattr__(self, 'representation', Representation(self.representation))
        if self.family is MapFamily.TENT_POWER:
            if self.ell is None or not 1.0 <= float(self.ell) <= 2.0:
                raise DomainError(f"tent_power exige ell em [1, 2] (recebido {self.ell})")
            object.__setattr__(self, 'ell', float(self.ell))

    @property
    def code(self) -> int:
        return _FAMILY_CODES[self.family]

    @property
    def shifted(self) -> bool:
        return self.representation is Representation.SHIFTED

    @property
    def ell_value(self) -> float:
        return 1.0 if self.ell is None else self.ell

    def __call__(self, x: float) -> float:
        """F na forma do intervalo unitário."""
        return float(unit_map(self.code, self.ell_value, float(x)))

    def describe(self) -> Dict:
        info = {'family': self.family.value, 'representation': self.representation.value}
        if self.family is MapFamily.TENT_POWER:
            info['ell'] = self.ell
        return info


@dataclass(frozen=True)
class GridDiscretization:
    order: int
    rounding: Rounding = Rounding(settings.DEFAULT_ROUNDING)

    def __post_init__(self):
        if self.order < 1:
            raise DomainError("A ordem da discretização deve ser positiva")
        object.__setattr__(self, 'rounding', Rounding(self.rounding))

    @property
    def rounding_code(self) -> int:
        return _ROUNDING_CODES[self.rounding]


@njit(cache=True)
def unit_map(code, ell, x):
    if code == 0:
        return abs(1.0 - 2.0 * x * x)
    if code == 1:
        y = 2.0 * x + 0.5 * x * (1.0 - x) * (1.0 + x)
        return y - np.floor(y)
    if code == 2:
        y = 2.0 * x + 0.5 * x * (1.0 - x)
        return y - np.floor(y)
    if code == 3:
        return 1.0 - abs(1.0 - 2.0 * x) ** ell
    if code == 4:
        return x
    y = 2.0 * x
    return y - np.floor(y)


@njit(cache=True)
def shifted_map(code, ell, y):
    """Mesma dinâmica no intervalo [1, 2]; o mapa cúbico usa sua forma nativa."""
    if code == 1:
        z = 2.0 * y + 0.5 * y * (y - 1.0) * (2.0 - y)
        return 1.0 + (z - np.floor(z))
    return 1.0 + unit_map(code, ell, y - 1.0)


@njit(cache=True)
def round_nearest(value, rounding):
    if rounding == 0:
        return np.floor(value + 0.5)
    low = np.floor(value)
    diff = value - low
    if diff > 0.5:
        return low + 1.0
    if diff < 0.5:
        return low
    if low % 2.0 == 0.0:
        return low
    return low + 1.0


@njit(cache=True)
def grid_image(code, ell, n, rounding, j):
    y = n * unit_map(code, ell, j / n)
    return np.int64(round_nearest(y, rounding)) % n


@njit(cache=True)
def _materialize(code, ell, n, rounding, start, stop, out):
    for j in range(start, stop):
        out[j - start] = grid_image(code, ell, n, rounding, j)


class GridFunction:
    """Endofunção preguiçosa j -> round(N F(j/N)) mod N."""

    def __init__(self, map_spec: MapSpec, grid: GridDiscretization):
        self.map_spec = map_spec
        self.grid = grid

    @property
    def size(self) -> int:
        return self.grid.order

    def __call__(self, j: int) -> int:
        if not 0 <= j < self.size:
            raise DomainError(f"Ponto {j} fora da grade de ordem {self.size}")
        return int(grid_image(self.map_spec.code, self.map_spec.ell_value,
                              self.size, self.grid.rounding_code, j))

    def kernel_args(self) -> tuple:
        return (self.map_spec.code, self.map_spec.ell_value, self.size,
                self.grid.rounding_code)

    def materialize_array(self, chunk_size: int = 1 << 20,
                          budget_mb: Optional[int] = None) -> np.ndarray:
        """Tabela int32 completa, preenchida em blocos."""
        check_memory_budget(self.size * settings.STATE_LABEL_BYTES, budget_mb)
        images = np.empty(self.size, dtype=np.int32)
        code, ell, n, rounding = self.kernel_args()
        for start in range(0, n, chunk_size):
            stop = min(start + chunk_size, n)
            _materialize(code, ell, n, rounding, start, stop, images[start:stop])
        return images

    def to_endofunction(self) -> Endofunction:
        return Endofunction(self.size, tuple(int(v) for v in self.materialize_array()))

    def metadata(self) -> Dict:
        return {
            'n': self.size,
            **self.map_spec.describe(),
            'rounding': self.grid.rounding.value,
            'evaluation': 'smooth map evaluated in binary64 before rounding',
        }


def grid_discretize(map_spec: MapSpec, grid: GridDiscretization) -> GridFunction:
    """
    Discretiza o mapa na grade j/N.

    A representação deslocada para [1, 2] é uma conjugação na grade e tem a
    mesma estrutura de órbitas; a grade usa sempre a forma do intervalo unitário.
    """
    return GridFunction(map_spec, grid)
