"""
Fórmulas fechadas para a cardinalidade das classes de gop em F_N.

Toda a aritmética é feita com inteiros de precisão arbitrária; nenhuma
operação de ponto flutuante participa das contagens.
"""

from decimal import Decimal
from math import comb, factorial
from typing import List, NamedTuple, Optional, Sequence, Tuple

from config import settings
from src.gop.algebra import iter_gops
from src.gop.pattern import Gop
from src.utils.exceptions import ConsistencyError, DomainError, ResourceBudgetError
from src.utils.logger import get_logger

logger = get_logger(__name__)

BigCount = int


class CorollarySplit(NamedTuple):
    left: BigCount
    right: BigCount
    split_gop: Gop
    factor: int

    @property
    def holds(self) -> bool:
        return self.left == self.right


def _exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ConsistencyError(
            f"Divisão inexata: {numerator} / {denominator} deixa resto {remainder}"
        )
    return quotient


def _suffix_product(lengths: Sequence[int]) -> int:
    """Produto, para k = 2..p, das somas w_k + ... + w_p."""
    product = 1
    suffix = 0
    for w in reversed(lengths[1:]):
        suffix += w
        product *= suffix
    return product


def count_class(n: int, gop: Gop) -> BigCount:
    """
    #A_N = (N-1)! N^(N-s) / ((N-s)! * prod_{k=2..p} sum_{j>=k} w_j), s = |A|.

    Para p = 1 o produto é vazio e a fórmula coincide com #[k]_N.

    Raises:
        InvalidGopError: Se |A| > N
        ConsistencyError: Se a divisão não for exata
    """
    gop.validate_for(n)
    s = gop.modulus
    numerator = factorial(n - 1) * n ** (n - s)
    return _exact_div(numerator, factorial(n - s) * _suffix_product(gop.lengths))


def total_over_gops(n: int, max_n: Optional[int] = None) -> BigCount:
    """
    Soma count_class(N, A) sobre G(F_N); deve valer N^N.

    Raises:
        ResourceBudgetError: Se N exceder o limite (2^N - 1 parcelas)
    """
    if n < 1:
        raise DomainError("N deve ser um inteiro positivo")
    limit = settings.TOTAL_OVER_GOPS_MAX_N if max_n is None else max_n
    if n > limit:
        raise ResourceBudgetError(
            f"Soma sobre 2^{n}-1 classes excede o limite N <= {limit}",
            estimate=2 ** n - 1,
            limit=2 ** limit - 1,
        )
    head = factorial(n - 1)
    numerators = [head * n ** (n - s) for s in range(n + 1)]
    tail_factorials = [factorial(n - s) for s in range(n + 1)]
    total = 0
    for gop in iter_gops(n):
        s = gop.modulus
        total += _exact_div(
            numerators[s], tail_factorials[s] * _suffix_product(gop.lengths)
        )
    if total != n ** n:
        raise ConsistencyError(f"Soma das classes ({total}) difere de {n}^{n}")
    return total


def split_gop(gop: Gop, j: int, h: int) -> Gop:
    """Substitui w_j por (w_j - h, h); j é indexado a partir de 1."""
    if not 1 <= j <= len(gop):
        raise DomainError(f"Índice j={j} fora de [1, {len(gop)}]")
    w = gop[j - 1]
    if not 1 <= h <= w - 1:
        raise DomainError(f"h={h} deve estar em [1, {w - 1}] para w_j={w}")
    lengths = gop.lengths
    return Gop(lengths[:j - 1] + (w - h, h) + lengths[j:])


def corollary_split(n: int, gop: Gop, j: int, h: int) -> CorollarySplit:
    """
    #[..., w_j, ...] = #[..., w_j - h, h, ...] * (h + w_{j+1} + ... + w_p).

    Returns:
        CorollarySplit: lado esquerdo, lado direito, gop dividido e o fator
    """
    gop.validate_for(n)
    split = split_gop(gop, j, h)
    factor = h + sum(gop.lengths[j:])
    left = count_class(n, gop)
    right = count_class(n, split) * factor
    if left != right:
        logger.warning(f"Identidade de divisão falhou para {gop}_{n} (j={j}, h={h})")
    return CorollarySplit(left=left, right=right, split_gop=split, factor=factor)


def count_all_fixed(n: int, k: int) -> BigCount:
    """#[1,...,1]_N com k componentes: C(N-1, N-k) N^(N-k)."""
    _check_range(n, k)
    return comb(n - 1, n - k) * n ** (n - k)


def count_single_cycle(n: int, k: int) -> BigCount:
    """#[k]_N = (N-1)! N^(N-k) / (N-k)!."""
    _check_range(n, k)
    return _exact_div(factorial(n - 1) * n ** (n - k), factorial(n - k))


def count_two_cycles(n: int, p: int, q: int) -> BigCount:
    """#[p,q]_N = (N-1)! N^(N-p-q) / ((N-p-q)! q), para p + q <= N."""
    if p < 1 or q < 1:
        raise DomainError("Ordens devem ser positivas")
    _check_range(n, p + q)
    s = p + q
    return _exact_div(factorial(n - 1) * n ** (n - s), factorial(n - s) * q)


def _check_range(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise DomainError(f"k={k} fora de [1, {n}]")


def format_scientific(count: BigCount, digits: int = None) -> str:
    """Representação aproximada apenas para exibição, ex.: '1.24e+62'."""
    digits = settings.SCIENTIFIC_DIGITS if digits is None else digits
    return format(Decimal(count), f'.{max(digits - 1, 0)}e')


def specialization_checks(n: int) -> List[Tuple[str, BigCount, BigCount]]:
    """Compara as fórmulas especializadas com a fórmula geral para um N."""
    rows = []
    for k in range(1, n + 1):
        ones, single = Gop((1,) * k), Gop((k,))
        rows.append((str(ones), count_all_fixed(n, k), count_class(n, ones)))
        rows.append((str(single), count_single_cycle(n, k), count_class(n, single)))
    for p in range(1, n):
        for q in range(1, n - p + 1):
            pair = Gop((p, q))
            rows.append((str(pair), count_two_cycles(n, p, q), count_class(n, pair)))
    return rows
