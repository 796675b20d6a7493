"""
Enumeração de G(F_N), bijeção de posto e construção da função limiar.
"""

from typing import Iterator, List, NamedTuple, Optional

from config import settings
from src.core.dynamics import Endofunction
from src.gop.pattern import Gop
from src.utils.exceptions import DomainError, ResourceBudgetError
from src.utils.logger import get_logger

logger = get_logger(__name__)

Rank = int


class OrderRow(NamedTuple):
    gop: Gop
    modulus: int
    tail_modulus: int  # módulo - w1


def iter_gops(n: int) -> Iterator[Gop]:
    """
    Gera todas as composições de s, para 1 <= s <= N, sem ordenar.

    Cada composição de s corresponde a um subconjunto dos s-1 pontos de corte.
    """
    if n < 1:
        raise DomainError("N deve ser um inteiro positivo")
    for s in range(1, n + 1):
        for mask in range(1 << (s - 1)):
            parts = []
            run = 1
            for bit in range(s - 1):
                if mask >> bit & 1:
                    parts.append(run)
                    run = 1
                else:
                    run += 1
            parts.append(run)
            yield Gop(tuple(parts))


def enumerate_gops(n: int, max_n: Optional[int] = None) -> List[Gop]:
    """
    Retorna G(F_N) ordenado por compare_gop; são exatamente 2^N - 1 gops.

    Raises:
        ResourceBudgetError: Se N exceder o limite de materialização
    """
    limit = settings.GOP_ENUMERATION_MAX_N if max_n is None else max_n
    if n > limit:
        raise ResourceBudgetError(
            f"Enumeração de 2^{n}-1 gops excede o limite N <= {limit}",
            estimate=2 ** n - 1,
            limit=2 ** limit - 1,
        )
    gops = sorted(iter_gops(n), key=Gop.sort_key)
    logger.debug(f"G(F_{n}) materializado com {len(gops)} gops")
    return gops


def order_table(n: int) -> List[OrderRow]:
    """Tabela ordenada (gop, módulo, módulo - w1) usada na ordem pseudo-decimal."""
    return [OrderRow(g, g.modulus, g.modulus - g.first) for g in enumerate_gops(n)]


def threshold_function(gop: Gop, n: int) -> Endofunction:
    """
    Constrói Tr(A), a função de menor posto na classe de A.

    O w1-ciclo canônico ocupa [0, w1-1]; as posições [w1, N-s+w1-1] recebem 0;
    os ciclos canônicos w2, ..., wp são empacotados em sequência a partir de
    N-s+w1, terminando em N-1.
    """
    gop.validate_for(n)
    s = gop.modulus
    w1 = gop.first
    images = [0] * n
    _place_canonical_cycle(images, 0, w1)
    start = n - s + w1
    for w in gop.lengths[1:]:
        _place_canonical_cycle(images, start, w)
        start += w
    return Endofunction(n, tuple(images))


def _place_canonical_cycle(images: List[int], start: int, length: int) -> None:
    for j in range(start, start + length - 1):
        images[j] = j + 1
    images[start + length - 1] = start


def rank_of(f: Endofunction) -> Rank:
    """n = soma f(k) N^(N-1-k) + 1, em inteiros de precisão arbitrária."""
    n = f.size
    value = 0
    for digit in f.images:
        value = value * n + digit
    return value + 1


def function_of_rank(rank: Rank, n: int) -> Endofunction:
    """
    Inverte rank_of: os dígitos de rank-1 na base N, com f(0) o mais significativo.

    Raises:
        DomainError: Se rank estiver fora de [1, N^N]
    """
    if n < 1:
        raise DomainError("N deve ser um inteiro positivo")
    if not 1 <= rank <= n ** n:
        raise DomainError(f"Posto {rank} fora de [1, {n}^{n}]")
    value = rank - 1
    images = [0] * n
    for i in range(n - 1, -1, -1):
        value, images[i] = divmod(value, n)
    return Endofunction(n, tuple(images))
