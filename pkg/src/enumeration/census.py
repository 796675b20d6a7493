"""
Censo exaustivo de famílias de funções por busca em profundidade com poda.

As imagens f(0), ..., f(N-1) são atribuídas em ordem num único buffer mutável
por processo; cada folha tem seu gop calculado e contado. Um gop de módulo s é
codificado como o inteiro com bits nas somas parciais w1, w1+w2, ..., s, o que
permite contar em um vetor denso de 2^(N+1) posições. Cada processo devolve só
as chaves não nulas do seu vetor; o orçamento de memória cobre um vetor denso
por processo ativo.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np
from numba import njit

from config import settings
from src.core.dynamics import Endofunction, gop_of
from src.counting.formulas import count_class
from src.enumeration.families import FamilyKind, FamilySpec, family_contains
from src.gop.algebra import enumerate_gops
from src.gop.pattern import Gop
from src.utils.debug_monitor import check_memory_budget, time_it
from src.utils.exceptions import DomainError, ResourceBudgetError
from src.utils.logger import get_logger
from src.utils.parallel import map_chunks, resolve_threads

logger = get_logger(__name__)


@dataclass(frozen=True)
class GopStatistics:
    family: FamilySpec
    counts: Dict[Gop, int]

    @property
    def total_functions(self) -> int:
        return sum(self.counts.values())

    @property
    def distinct_gop(self) -> int:
        return len(self.counts)

    @property
    def max_modulus(self) -> int:
        return max((g.modulus for g in self.counts), default=0)

    @property
    def max_period(self) -> int:
        return max((g.max_order for g in self.counts), default=0)

    def count(self, gop: Gop) -> int:
        return self.counts.get(gop, 0)

    def summary(self) -> Dict:
        return {
            **self.family.describe(),
            'total_functions': self.total_functions,
            'distinct_gop': self.distinct_gop,
            'max_modulus': self.max_modulus,
            'max_period': self.max_period,
        }


class FormulaCheck(NamedTuple):
    gop: Gop
    census: int
    formula: int

    @property
    def matches(self) -> bool:
        return self.census == self.formula


@njit(cache=True)
def _admissible(f, p, alpha, q, truncated, n):
    t = alpha.shape[0]
    # janelas diretas que terminam em p (somas parciais, todas não negativas)
    for r0 in range(1, t + 1):
        pp = p - r0
        if pp < 0:
            break
        if not truncated and pp > n - 1 - t:
            continue
        total = 0
        for r in range(1, r0 + 1):
            total += alpha[r - 1] * abs(f[pp] - f[pp + r])
        if total > q:
            return False
    # janela reversa em p
    if t > 0 and (truncated or p >= t):
        total = 0
        for r in range(1, t + 1):
            if p - r < 0:
                break
            total += alpha[r - 1] * abs(f[p] - f[p - r])
        if total > q:
            return False
    return True


@njit(cache=True)
def _gop_key(f, n, state):
    for i in range(n):
        state[i] = 0
    key = np.int64(0)
    cum = 0
    for x in range(n):
        if state[x] != 0:
            continue
        stamp = x + 1
        y = x
        while state[y] == 0:
            state[y] = stamp
            y = f[y]
        if state[y] == stamp:
            length = 1
            z = f[y]
            while z != y:
                length += 1
                z = f[z]
            cum += length
            key |= np.int64(1) << cum
    return key


@njit(cache=True)
def _census_kernel(n, alpha, q, truncated, radius, prefix):
    counts = np.zeros(1 << (n + 1), dtype=np.int64)
    f = np.zeros(n, dtype=np.int64)
    cur = np.zeros(n, dtype=np.int64)
    hi = np.zeros(n, dtype=np.int64)
    state = np.zeros(n, dtype=np.int64)
    npre = prefix.shape[0]
    if npre > 0:
        cur[0] = prefix[0]
        hi[0] = prefix[0]
    else:
        cur[0] = 0
        hi[0] = n - 1
    depth = 0
    while depth >= 0:
        if cur[depth] > hi[depth]:
            depth -= 1
            continue
        v = cur[depth]
        cur[depth] += 1
        f[depth] = v
        if not _admissible(f, depth, alpha, q, truncated, n):
            continue
        if depth == n - 1:
            counts[_gop_key(f, n, state)] += 1
            continue
        depth += 1
        if depth < npre:
            cur[depth] = prefix[depth]
            hi[depth] = prefix[depth]
        else:
            cur[depth] = max(f[depth - 1] - radius[depth], 0)
            hi[depth] = min(f[depth - 1] + radius[depth], n - 1)
    return counts


def decode_gop_key(key: int) -> Gop:
    """Inverte a codificação por somas parciais."""
    lengths = []
    previous = 0
    position = 0
    while key:
        if key & 1 and position:
            lengths.append(position - previous)
            previous = position
        key >>= 1
        position += 1
    return Gop(tuple(lengths))


def _census_worker(args: Tuple) -> Tuple[np.ndarray, np.ndarray]:
    n, alpha, q, truncated, radius, prefix = args
    counts = _census_kernel(
        n,
        np.asarray(alpha, dtype=np.int64),
        q,
        truncated,
        np.asarray(radius, dtype=np.int64),
        np.asarray(prefix, dtype=np.int64),
    )
    keys = np.flatnonzero(counts)
    return keys, counts[keys]


def _prefixes(spec: FamilySpec, threads: int) -> List[Tuple[int, ...]]:
    """Particiona a busca fixando f(0) ou (f(0), f(1))."""
    n = spec.n
    if threads <= 1:
        return [()]
    if n < 2 or n >= 2 * threads:
        return [(a,) for a in range(n)]
    radius = spec.step_radius()[1]
    return [
        (a, b) for a in range(n)
        for b in range(max(a - radius, 0), min(a + radius, n - 1) + 1)
    ]


def census_memory_bytes(spec: FamilySpec, workers: int) -> int:
    """Bytes dos vetores densos de contagem vivos ao mesmo tempo (um por processo)."""
    return max(1, workers) * (1 << (spec.n + 1)) * np.dtype(np.int64).itemsize


def check_census_budget(spec: FamilySpec, max_n: Optional[int] = None,
                        workers: int = 1, budget_mb: Optional[int] = None) -> None:
    """
    Recusa censos acima do limite de N da família ou do orçamento de memória.

    Raises:
        ResourceBudgetError: Se N exceder o limite da família ou se os vetores
            de contagem não couberem no orçamento
    """
    limit = spec.default_max_n() if max_n is None else max_n
    if spec.kind is FamilyKind.L1:
        limit = min(limit, max(settings.L1_OPT_IN_MAX_N, spec.default_max_n()))
    limit = min(limit, settings.CENSUS_KEY_MAX_N)
    if spec.n > limit:
        raise ResourceBudgetError(
            f"Censo de {spec} recusado: N={spec.n} excede o limite {limit} "
            f"(estimativa de até {spec.estimated_size()} funções)",
            estimate=spec.estimated_size(),
            limit=limit,
        )
    check_memory_budget(census_memory_bytes(spec, workers), budget_mb)


@time_it
def enumerate_family(spec: FamilySpec, threads: Optional[int] = None,
                     progress: bool = False, max_n: Optional[int] = None,
                     budget_mb: Optional[int] = None) -> GopStatistics:
    """
    Censo exato de uma família, com contagens por gop.

    O resultado não depende do número de processos: as contagens de cada
    subárvore são somadas à medida que os lotes terminam.

    Args:
        spec: Família a censar
        threads: Número de processos (padrão: settings.MAX_THREADS)
        progress: Exibe barra de progresso em stderr
        max_n: Limite de N (padrão: limite da família)
        budget_mb: Orçamento de memória em MB (padrão: settings.MEMORY_BUDGET_MB)

    Returns:
        GopStatistics: Contagens por gop
    """
    threads = resolve_threads(threads)
    alpha, q, truncated = spec.constraint()
    radius = spec.step_radius()
    chunks = [
        (spec.n, alpha, q, truncated, radius, prefix)
        for prefix in _prefixes(spec, threads)
    ]
    check_census_budget(spec, max_n, min(threads, len(chunks)), budget_mb)
    logger.info(f"Iniciando censo de {spec} em {len(chunks)} lotes")
    merged: Dict[int, int] = {}
    for keys, values in map_chunks(_census_worker, chunks, threads, progress,
                                   desc=f"censo {spec}"):
        for key, value in zip(keys.tolist(), values.tolist()):
            merged[key] = merged.get(key, 0) + value
    counts = {decode_gop_key(key): value for key, value in merged.items()}
    stats = GopStatistics(spec, _sorted_counts(counts))
    logger.info(
        f"Censo de {spec}: {stats.total_functions} funções, {stats.distinct_gop} gops",
        extra={'performance': True},
    )
    return stats


def filter_census(spec: FamilySpec) -> GopStatistics:
    """Censo lento de referência: filtra F_N inteiro com family_contains."""
    if spec.n > 7:
        raise ResourceBudgetError(
            f"Censo por filtro de F_{spec.n} é restrito a N <= 7",
            estimate=spec.n ** spec.n,
            limit=7 ** 7,
        )
    counts: Dict[Gop, int] = {}
    for images in itertools.product(range(spec.n), repeat=spec.n):
        f = Endofunction(spec.n, images)
        if family_contains(spec, f):
            gop = gop_of(f)
            counts[gop] = counts.get(gop, 0) + 1
    return GopStatistics(spec, _sorted_counts(counts))


def _sorted_counts(counts: Dict[Gop, int]) -> Dict[Gop, int]:
    return dict(sorted(counts.items(), key=lambda item: item[0].sort_key()))


def census_vs_formula(n: int, threads: Optional[int] = None,
                      max_n: Optional[int] = None) -> List[FormulaCheck]:
    """Compara o censo de F_N com count_class para cada gop de G(F_N)."""
    if n < 1:
        raise DomainError("N deve ser um inteiro positivo")
    stats = enumerate_family(FamilySpec.full(n), threads=threads, max_n=max_n)
    return [
        FormulaCheck(gop, stats.count(gop), count_class(n, gop))
        for gop in enumerate_gops(n)
    ]
