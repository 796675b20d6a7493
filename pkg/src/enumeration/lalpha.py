"""
Varredura em q da família L_{alpha,q,N} e a estrutura de intervalos I_r, I_{r,s}.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from config import settings
from src.enumeration.census import enumerate_family
from src.enumeration.families import FamilySpec, WindowMode
from src.utils.exceptions import DomainError
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Linhas de referência para N=10, alpha=(20,10,5,3,1):
# q -> (período máximo, módulo, número de gops, número de funções)
REFERENCE_ALPHA = (20, 10, 5, 3, 1)
REFERENCE_ROWS: Dict[int, tuple] = {
    35: (2, 2, 3, 9992),
    41: (2, 3, 6, 21764),
    48: (3, 3, 7, 63408),
    51: (3, 4, 9, 122316),
    54: (4, 4, 15, 258910),
    58: (4, 5, 19, 497106),
    60: (4, 5, 25, 696586),
    61: (4, 10, 37, 818000),
    62: (4, 10, 44, 921698),
    63: (4, 10, 46, 1022184),
    68: (5, 10, 50, 1604518),
    70: (6, 10, 60, 1837088),
    72: (6, 10, 61, 2124974),
    73: (6, 10, 88, 2352560),
    76: (6, 10, 98, 3514608),
    77: (6, 10, 99, 4001306),
    81: (6, 10, 100, 6499244),
    82: (6, 10, 104, 7230576),
    83: (7, 10, 109, 8113212),
    84: (8, 10, 117, 9126054),
    85: (8, 10, 130, 10184542),
    86: (8, 10, 131, 11244702),
    87: (8, 10, 145, 12311866),
    88: (8, 10, 161, 13485506),
    89: (8, 10, 175, 14692658),
    90: (8, 10, 176, 15984782),
    92: (8, 10, 182, 18775284),
    93: (8, 10, 188, 20252084),
    94: (8, 10, 193, 21640666),
    95: (8, 10, 195, 23021112),
    96: (8, 10, 242, 24479312),
    97: (8, 10, 298, 26163582),
    98: (8, 10, 335, 28285274),
    99: (9, 10, 377, 30861396),
    100: (10, 10, 463, 34086310),
    101: (10, 10, 484, 37553504),
}


@dataclass(frozen=True)
class LAlphaRow:
    q: int
    max_period: int
    max_modulus: int
    gop_number: int
    functions_number: int

    def values(self) -> tuple:
        return (self.max_period, self.max_modulus, self.gop_number, self.functions_number)


@dataclass(frozen=True)
class QInterval:
    """Sequência maximal de valores de q varridos com o mesmo rótulo."""

    max_period: int
    q_start: int
    q_end: int
    gop_number: Optional[int] = None


@dataclass
class LAlphaScan:
    n: int
    alpha: tuple
    window_mode: WindowMode
    rows: List[LAlphaRow] = field(default_factory=list)

    def period_intervals(self) -> List[QInterval]:
        """I_r: faixas de q em que o período máximo é r."""
        return _runs(self.rows, lambda row: (row.max_period,))

    def gop_intervals(self) -> List[QInterval]:
        """I_{r,s}: subfaixas de I_r em que o número de gops é constante."""
        return _runs(self.rows, lambda row: (row.max_period, row.gop_number))

    def is_monotone(self) -> bool:
        """Confere que todas as colunas são não decrescentes em q."""
        return all(
            a <= b
            for prev, cur in zip(self.rows, self.rows[1:])
            for a, b in zip(prev.values(), cur.values())
        )

    def metadata(self) -> Dict:
        return {
            'n': self.n,
            'alpha': list(self.alpha),
            't': len(self.alpha),
            'window_mode': self.window_mode.value,
        }


def _runs(rows: Sequence[LAlphaRow], label) -> List[QInterval]:
    runs: List[QInterval] = []
    for row in rows:
        key = label(row)
        gop_number = key[1] if len(key) > 1 else None
        if runs and (runs[-1].max_period, runs[-1].gop_number) == (key[0], gop_number):
            last = runs[-1]
            runs[-1] = QInterval(last.max_period, last.q_start, row.q, gop_number)
        else:
            runs.append(QInterval(key[0], row.q, row.q, gop_number))
    return runs


def lalpha_scan(n: int, alpha: Sequence[int], q_list: Sequence[int],
                window_mode: str = settings.DEFAULT_WINDOW_MODE,
                t: Optional[int] = None, threads: Optional[int] = None,
                progress: bool = False, max_n: Optional[int] = None) -> LAlphaScan:
    """
    Uma linha (q, período máximo, módulo máximo, nº de gops, nº de funções) por q.

    Raises:
        DomainError: Se t diferir do número de pesos ou q_list estiver vazia
    """
    alpha = tuple(alpha)
    if t is not None and t != len(alpha):
        raise DomainError(f"t={t} difere do número de pesos ({len(alpha)})")
    if not q_list:
        raise DomainError("Lista de q vazia")
    scan = LAlphaScan(n, alpha, WindowMode(window_mode))
    for q in sorted(set(q_list)):
        spec = FamilySpec.lalpha(n, alpha, q, window_mode)
        stats = enumerate_family(spec, threads=threads, progress=progress, max_n=max_n)
        scan.rows.append(LAlphaRow(
            q=q,
            max_period=stats.max_period,
            max_modulus=stats.max_modulus,
            gop_number=stats.distinct_gop,
            functions_number=stats.total_functions,
        ))
        logger.debug(f"q={q}: {scan.rows[-1]}")
    if not scan.is_monotone():
        logger.warning("Colunas da varredura não são monótonas em q")
    return scan


@dataclass(frozen=True)
class CalibrationRow:
    q: int
    window_mode: str
    computed: tuple
    reference: tuple

    @property
    def matches(self) -> bool:
        return self.computed == self.reference

    @property
    def functions_delta(self) -> int:
        return self.computed[3] - self.reference[3]


def calibrate_window_mode(q_list: Optional[Sequence[int]] = None,
                          threads: Optional[int] = None, progress: bool = False,
                          max_n: Optional[int] = None) -> List[CalibrationRow]:
    """
    Compara as duas leituras da janela com as linhas de referência.

    Nenhuma das leituras reproduz os rótulos de q de referência; o relatório traz
    as diferenças por linha para cada modo.
    """
    q_list = sorted(REFERENCE_ROWS) if q_list is None else list(q_list)
    unknown = [q for q in q_list if q not in REFERENCE_ROWS]
    if unknown:
        raise DomainError(f"Sem linha de referência para q={unknown}")
    report = []
    for mode in WindowMode:
        scan = lalpha_scan(10, REFERENCE_ALPHA, q_list, mode.value,
                           threads=threads, progress=progress, max_n=max_n)
        for row in scan.rows:
            report.append(CalibrationRow(row.q, mode.value, row.values(),
                                         REFERENCE_ROWS[row.q]))
    for mode in WindowMode:
        hits = sum(r.matches for r in report if r.window_mode == mode.value)
        logger.info(f"Modo {mode.value}: {hits}/{len(q_list)} linhas coincidem")
    return report
