"""
Verificações de consistência entre fórmulas, censos e a ordem dos gops.
"""

import itertools
from typing import List, NamedTuple, Optional

from src.core.dynamics import Endofunction, gop_of
from src.counting.formulas import total_over_gops
from src.enumeration.census import GopStatistics, census_vs_formula, enumerate_family
from src.enumeration.families import FamilySpec
from src.enumeration.l1_tables import L1_REFERENCE_COUNTS, compare_l1_reference
from src.gop.algebra import enumerate_gops, rank_of, threshold_function
from src.utils.logger import get_logger

logger = get_logger(__name__)


class CheckResult(NamedTuple):
    check: str
    n: int
    holds: bool
    detail: str = ''


def check_formula_vs_census(n: int, threads: Optional[int] = None) -> CheckResult:
    checks = census_vs_formula(n, threads=threads)
    mismatches = [c for c in checks if not c.matches]
    distinct = sum(1 for c in checks if c.census)
    holds = not mismatches and distinct == 2 ** n - 1
    detail = f"{distinct} gops; {len(mismatches)} divergências"
    return CheckResult('formula_vs_census', n, holds, detail)


def check_completeness(n: int) -> CheckResult:
    total = total_over_gops(n)
    return CheckResult('total_over_gops', n, total == n ** n, str(total))


def check_threshold_minimality(n: int) -> CheckResult:
    """Tr(gop(f)) tem posto <= posto de f, com igualdade só quando f = Tr."""
    cache = {}
    failures = 0
    for images in itertools.product(range(n), repeat=n):
        f = Endofunction(n, images)
        gop = gop_of(f)
        if gop not in cache:
            cache[gop] = threshold_function(gop, n)
        tr = cache[gop]
        rank_tr, rank_f = rank_of(tr), rank_of(f)
        if rank_tr > rank_f or (rank_tr == rank_f and tr != f):
            failures += 1
    return CheckResult('threshold_minimality', n, failures == 0, f"{failures} falhas")


def check_threshold_soundness(n: int) -> CheckResult:
    failures = [g for g in enumerate_gops(n) if gop_of(threshold_function(g, n)) != g]
    return CheckResult('threshold_soundness', n, not failures, f"{len(failures)} falhas")


def check_order_consistency(n: int) -> CheckResult:
    """A ordem de compare_gop coincide com a ordem dos postos das funções limiar."""
    ranks = [rank_of(threshold_function(g, n)) for g in enumerate_gops(n)]
    holds = all(a < b for a, b in zip(ranks, ranks[1:]))
    return CheckResult('order_consistency', n, holds)


def check_l1_periods(n: int, threads: Optional[int] = None,
                     stats: Optional[GopStatistics] = None) -> CheckResult:
    if stats is None:
        stats = enumerate_family(FamilySpec.l1(n), threads=threads)
    return CheckResult('l1_max_period', n, stats.max_period <= 2,
                       f"período máximo {stats.max_period}")


def check_l1_reference(n: int, threads: Optional[int] = None,
                       stats: Optional[GopStatistics] = None) -> CheckResult:
    """Tabela de L_{1,N} linha a linha contra as contagens de referência."""
    deltas = compare_l1_reference(n, threads=threads, stats=stats)
    mismatches = [d for d in deltas if not d.matches]
    typos = [str(d.gop) for d in deltas if d.corrected is not None]
    detail = f"{len(deltas)} linhas; {len(mismatches)} divergências"
    if typos:
        detail += f"; erros de digitação conhecidos: {', '.join(typos)}"
    return CheckResult('l1_reference', n, not mismatches, detail)


def run_verification(up_to: int, threads: Optional[int] = None) -> List[CheckResult]:
    """
    Executa todas as verificações para N <= up_to, respeitando limites por tipo.
    """
    results: List[CheckResult] = []
    for n in range(1, up_to + 1):
        if n <= 7:
            results.append(check_formula_vs_census(n, threads))
        if n <= 20:
            results.append(check_completeness(n))
        if n <= 6:
            results.append(check_threshold_minimality(n))
        if n <= 12:
            results.append(check_threshold_soundness(n))
        if n <= 8:
            results.append(check_order_consistency(n))
        if n <= 13:
            stats = enumerate_family(FamilySpec.l1(n), threads=threads)
            results.append(check_l1_periods(n, threads, stats))
            if n in L1_REFERENCE_COUNTS:
                results.append(check_l1_reference(n, threads, stats))
    failed = [r for r in results if not r.holds]
    if failed:
        logger.error(f"{len(failed)} verificações falharam: {failed}")
    else:
        logger.info(f"{len(results)} verificações concluídas sem falhas")
    return results
