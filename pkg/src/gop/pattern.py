"""
Tipo de valor Gop (global orbit pattern) e a ordem total entre gops.
"""

import functools
import re
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator, Tuple

from src.utils.exceptions import InvalidGopError, LiteralParseError

_GOP_LITERAL = re.compile(r'^\s*\[?\s*(\d+(\s*,\s*\d+)*)\s*\]?\s*$')


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@functools.total_ordering
@dataclass(frozen=True)
class Gop:
    """
    Sequência de ordens de ciclos [w1, ..., wp], listadas pelo menor elemento
    de cada componente em ordem crescente.
    """

    lengths: Tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(int(w) for w in self.lengths)
        if not lengths:
            raise InvalidGopError("Gop vazio")
        if any(w < 1 for w in lengths):
            raise InvalidGopError(f"Ordens devem ser positivas: {list(lengths)}")
        object.__setattr__(self, 'lengths', lengths)

    @classmethod
    def parse(cls, text: str) -> 'Gop':
        """
        Lê um literal de gop, com ou sem colchetes: "[2,1,3,2]" ou "2,1,3,2".

        Raises:
            LiteralParseError: Se o literal for mal formado
        """
        match = _GOP_LITERAL.match(text or '')
        if not match:
            raise LiteralParseError(f"Literal de gop inválido: {text!r}")
        try:
            return cls(tuple(int(part) for part in match.group(1).split(',')))
        except InvalidGopError as e:
            raise LiteralParseError(f"Literal de gop inválido: {text!r} ({e})") from e

    @property
    def modulus(self) -> int:
        return sum(self.lengths)

    @property
    def first(self) -> int:
        return self.lengths[0]

    @property
    def max_order(self) -> int:
        return max(self.lengths)

    def validate_for(self, n: int) -> 'Gop':
        """Confere que o gop pertence a G(F_N), isto é, módulo <= N."""
        if self.modulus > n:
            raise InvalidGopError(
                f"Módulo de {self} ({self.modulus}) maior que N={n}"
            )
        return self

    def sort_key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return (self.lengths[0], self.modulus, self.lengths)

    def __lt__(self, other: 'Gop') -> bool:
        if not isinstance(other, Gop):
            return NotImplemented
        return compare_gop(self, other) is Ordering.LESS

    def __len__(self) -> int:
        return len(self.lengths)

    def __iter__(self) -> Iterator[int]:
        return iter(self.lengths)

    def __getitem__(self, index):
        return self.lengths[index]

    def __str__(self) -> str:
        return '[' + ','.join(str(w) for w in self.lengths) + ']'


def modulus(gop: Gop) -> int:
    """Retorna |A| = soma das ordens."""
    return gop.modulus


def compare_gop(a: Gop, b: Gop) -> Ordering:
    """
    Compara dois gops.

    Primeiro pela ordem w1; em seguida pelo módulo; por fim lexicograficamente.
    Com módulos iguais nenhum gop é prefixo do outro, então a comparação de
    tuplas equivale ao preenchimento virtual com zeros.
    """
    ka, kb = a.sort_key(), b.sort_key()
    if ka < kb:
        return Ordering.LESS
    if ka > kb:
        return Ordering.GREATER
    return Ordering.EQUAL
