"""
Estrutura completa ou amostrada de ciclos e bacias de mapas discretizados.

O modo completo percorre a grade uma única vez com marcação de caminho sobre
um vetor int32 de rótulos (0 = não visitado, -(x+1) = no caminho iniciado em
x, c >= 1 = bacia do ciclo c). O modo amostrado usa o algoritmo de Brent, com
memória constante por semente.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np
from numba import njit

from config import settings
from src.core.dynamics import Endofunction
from src.discretized.maps import GridDiscretization, GridFunction, MapSpec, Rounding
from src.discretized.maps import grid_image, shifted_map, unit_map
from src.utils.debug_monitor import check_memory_budget, time_it
from src.utils.exceptions import ConsistencyError, DomainError
from src.utils.logger import get_logger
from src.utils.parallel import map_chunks, resolve_threads

logger = get_logger(__name__)

COMPLETE = 'complete'
SAMPLED = 'sampled'
GRID = 'grid'
BINARY64 = 'binary64'

# Estruturas de referência para o mapa circular cúbico: N -> [(período, bacia)]
REFERENCE_STRUCTURES: Dict[int, List[Tuple[int, int]]] = {
    2 ** 23: [(4898, 5441432), (1746, 2946734), (13, 205), (6, 132), (30, 96),
              (4, 8), (1, 1)],
    2 ** 24: [(5300, 16777214), (1, 2)],
    2 ** 24 - 1: [(3081, 7502907), (699, 3047369), (3469, 2905844), (1012, 2774926),
                  (563, 290733), (2159, 221294), (138, 21610), (421, 12477),
                  (9, 54), (1, 1)],
    2 ** 25: [(4094, 32114650), (621, 918519), (283, 516985), (126, 2937),
              (6, 887), (55, 433), (4, 20), (1, 1)],
}


@dataclass(frozen=True)
class CycleRecord:
    period: int
    basin_size: int
    relative_size: float
    least_cycle_point: Union[int, float]


@dataclass
class OrbitStructureReport:
    n: Optional[int]
    cycles: List[CycleRecord]
    mode: str
    seeds: Optional[int] = None
    metadata: Dict = field(default_factory=dict)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def total_basin(self) -> int:
        return sum(c.basin_size for c in self.cycles)

    @property
    def dominant_share(self) -> float:
        return self.cycles[0].relative_size if self.cycles else 0.0

    @property
    def longest_period(self) -> int:
        return max((c.period for c in self.cycles), default=0)

    def cycle_set(self) -> Set[Tuple[int, int]]:
        """Pares (período, menor ponto do ciclo)."""
        return {(c.period, c.least_cycle_point) for c in self.cycles}


@njit(cache=True)
def _step(code, ell, n, rounding, use_table, table, y):
    if use_table:
        return np.int64(table[y])
    return grid_image(code, ell, n, rounding, y)


@njit(cache=True)
def _full_scan(code, ell, n, rounding, use_table, table):
    state = np.zeros(n, dtype=np.int32)
    capacity = 64
    periods = np.zeros(capacity, dtype=np.int64)
    least = np.zeros(capacity, dtype=np.int64)
    basins = np.zeros(capacity, dtype=np.int64)
    ncycles = 0
    for x in range(n):
        if state[x] != 0:
            continue
        stamp = -(x + 1)
        y = np.int64(x)
        while state[y] == 0:
            state[y] = stamp
            y = _step(code, ell, n, rounding, use_table, table, y)
        if state[y] == stamp:
            if ncycles == capacity:
                capacity *= 2
                grown = np.zeros(capacity, dtype=np.int64)
                grown[:ncycles] = periods[:ncycles]
                periods = grown
                grown = np.zeros(capacity, dtype=np.int64)
                grown[:ncycles] = least[:ncycles]
                least = grown
                grown = np.zeros(capacity, dtype=np.int64)
                grown[:ncycles] = basins[:ncycles]
                basins = grown
            period = 1
            low = y
            z = _step(code, ell, n, rounding, use_table, table, y)
            while z != y:
                period += 1
                if z < low:
                    low = z
                z = _step(code, ell, n, rounding, use_table, table, z)
            periods[ncycles] = period
            least[ncycles] = low
            ncycles += 1
            label = ncycles
        else:
            label = state[y]
        z = np.int64(x)
        while state[z] == stamp:
            state[z] = label
            basins[label - 1] += 1
            z = _step(code, ell, n, rounding, use_table, table, z)
    return periods[:ncycles], least[:ncycles], basins[:ncycles]


@njit(cache=True)
def _verify_cycles(code, ell, n, rounding, use_table, table, periods, least):
    ok = np.ones(periods.shape[0], dtype=np.bool_)
    for c in range(periods.shape[0]):
        y = least[c]
        for k in range(periods[c]):
            y = _step(code, ell, n, rounding, use_table, table, y)
            if y == least[c] and k < periods[c] - 1:
                ok[c] = False
                break
            if y < least[c]:
                ok[c] = False
                break
        if y != least[c]:
            ok[c] = False
    return ok


@njit(cache=True)
def _brent_grid(code, ell, n, rounding, seeds, max_iterations):
    """Período e menor ponto do ciclo de cada semente (período 0 = não resolvido)."""
    periods = np.zeros(seeds.shape[0], dtype=np.int64)
    least = np.zeros(seeds.shape[0], dtype=np.int64)
    for i in range(seeds.shape[0]):
        power = 1
        lam = 1
        tortoise = seeds[i]
        hare = grid_image(code, ell, n, rounding, tortoise)
        steps = 1
        while tortoise != hare and steps <= max_iterations:
            if power == lam:
                tortoise = hare
                power *= 2
                lam = 0
            hare = grid_image(code, ell, n, rounding, hare)
            lam += 1
            steps += 1
        if tortoise != hare:
            continue
        low = hare
        z = grid_image(code, ell, n, rounding, hare)
        while z != hare:
            if z < low:
                low = z
            z = grid_image(code, ell, n, rounding, z)
        periods[i] = lam
        least[i] = low
    return periods, least


@njit(cache=True)
def _float_step(code, ell, shifted, x):
    if shifted:
        return shifted_map(code, ell, x)
    return unit_map(code, ell, x)


@njit(cache=True)
def _brent_float(code, ell, shifted, seeds, max_iterations):
    periods = np.zeros(seeds.shape[0], dtype=np.int64)
    least = np.zeros(seeds.shape[0], dtype=np.float64)
    for i in range(seeds.shape[0]):
        power = 1
        lam = 1
        tortoise = seeds[i]
        hare = _float_step(code, ell, shifted, tortoise)
        steps = 1
        while tortoise != hare and steps <= max_iterations:
            if power == lam:
                tortoise = hare
                power *= 2
                lam = 0
            hare = _float_step(code, ell, shifted, hare)
            lam += 1
            steps += 1
        if tortoise != hare:
            continue
        low = hare
        z = _float_step(code, ell, shifted, hare)
        while z != hare:
            if z < low:
                low = z
            z = _float_step(code, ell, shifted, z)
        periods[i] = lam
        least[i] = low
    return periods, least


def _table_args(g: Union[Endofunction, GridFunction, np.ndarray]) -> Tuple:
    """Argumentos do kernel: mapa preguiçoso da grade ou tabela explícita."""
    if isinstance(g, GridFunction):
        code, ell, n, rounding = g.kernel_args()
        return code, ell, n, rounding, False, np.zeros(1, dtype=np.int32)
    images = np.asarray(g.images if isinstance(g, Endofunction) else g, dtype=np.int32)
    n = images.shape[0]
    if n < 1 or images.min() < 0 or images.max() >= n:
        raise DomainError("Tabela de imagens fora de [0, N-1]")
    return 0, 1.0, n, 0, True, images


def _sorted_cycles(periods, least, basins, denominator) -> List[CycleRecord]:
    cycles = [
        CycleRecord(int(p), int(b), float(b) / denominator, lo.item())
        for p, lo, b in zip(periods, least, basins)
    ]
    cycles.sort(key=lambda c: (-c.basin_size, c.least_cycle_point))
    return cycles


@time_it
def full_orbit_structure(g: Union[Endofunction, GridFunction, np.ndarray],
                         budget_mb: Optional[int] = None) -> OrbitStructureReport:
    """
    Todos os ciclos e o tamanho exato de suas bacias, em O(N).

    Raises:
        ResourceBudgetError: Se o vetor de rótulos exceder o orçamento de memória
        ConsistencyError: Se algum ciclo falhar na verificação
    """
    args = _table_args(g)
    n = args[2]
    required = n * settings.STATE_LABEL_BYTES
    if args[4]:
        required += args[5].nbytes
    check_memory_budget(required, budget_mb)
    logger.info(f"Varredura completa da grade de ordem {n}", extra={'performance': True})

    periods, least, basins = _full_scan(*args)
    if int(basins.sum()) != n:
        raise ConsistencyError(f"Soma das bacias ({int(basins.sum())}) difere de N={n}")
    verified = _verify_cycles(*args, periods, least)
    if not verified.all():
        raise ConsistencyError(
            f"{int((~verified).sum())} ciclos falharam na verificação"
        )
    metadata = g.metadata() if isinstance(g, GridFunction) else {'n': n}
    metadata.update({'mode': COMPLETE, 'cycles_verified': True})
    report = OrbitStructureReport(n, _sorted_cycles(periods, least, basins, n),
                                  COMPLETE, metadata=metadata)
    logger.info(
        f"{report.cycle_count} ciclos; maior bacia {report.dominant_share:.2%}",
        extra={'performance': True},
    )
    return report


def _grid_sample_worker(args: Tuple) -> Tuple[np.ndarray, np.ndarray]:
    code, ell, n, rounding, seeds, max_iterations = args
    return _brent_grid(code, ell, n, rounding, seeds, max_iterations)


def _float_sample_worker(args: Tuple) -> Tuple[np.ndarray, np.ndarray]:
    code, ell, shifted, seeds, max_iterations = args
    return _brent_float(code, ell, shifted, seeds, max_iterations)


@time_it
def sampled_orbit_structure(map_spec: MapSpec, precision: str = GRID,
                            n: Optional[int] = None,
                            seeds: int = settings.DEFAULT_SAMPLING_SEEDS,
                            rng_seed: int = settings.DEFAULT_RNG_SEED,
                            rounding: str = settings.DEFAULT_ROUNDING,
                            max_iterations: int = settings.SAMPLING_MAX_ITERATIONS,
                            threads: Optional[int] = None,
                            progress: bool = False) -> OrbitStructureReport:
    """
    Amostra a estrutura de órbitas a partir de sementes aleatórias.

    Na grade, ``seeds >= N`` usa cada ponto exatamente uma vez, reproduzindo as
    bacias do modo completo. Em binary64 o mapa suave é iterado diretamente;
    sementes cujo ciclo não se fecha em ``max_iterations`` passos são contadas
    como não resolvidas nos metadados.
    """
    if seeds < 1:
        raise DomainError("O número de sementes deve ser positivo")
    threads = resolve_threads(threads)
    rng = np.random.default_rng(rng_seed)
    metadata: Dict = {**map_spec.describe(), 'mode': SAMPLED, 'precision': precision,
                      'rng_seed': rng_seed}

    if precision == GRID:
        if n is None or n < 1:
            raise DomainError("Amostragem na grade exige N positivo")
        grid = GridDiscretization(n, Rounding(rounding))
        if seeds >= n:
            points = np.arange(n, dtype=np.int64)
        else:
            points = rng.integers(0, n, size=seeds, dtype=np.int64)
        chunks = [
            (map_spec.code, map_spec.ell_value, n, grid.rounding_code, part, max_iterations)
            for part in np.array_split(points, threads) if part.size
        ]
        worker = _grid_sample_worker
        metadata.update({'n': n, 'rounding': grid.rounding.value})
    elif precision == BINARY64:
        points = rng.random(seeds)
        if map_spec.shifted:
            points = points + 1.0
        chunks = [
            (map_spec.code, map_spec.ell_value, map_spec.shifted, part, max_iterations)
            for part in np.array_split(points, threads) if part.size
        ]
        worker = _float_sample_worker
        metadata['evaluation'] = 'smooth map iterated in binary64'
    else:
        raise DomainError(f"Precisão desconhecida: {precision!r}")

    results = map_chunks(worker, chunks, threads, progress, desc='amostragem')
    periods = np.concatenate([r[0] for r in results])
    least = np.concatenate([r[1] for r in results])
    resolved = periods > 0
    unresolved = int((~resolved).sum())
    if unresolved:
        logger.warning(f"{unresolved} sementes sem ciclo em {max_iterations} passos")

    keys, first_index, counts = np.unique(
        least[resolved], return_index=True, return_counts=True
    )
    cycle_periods = periods[resolved][first_index]
    total = int(points.shape[0])
    metadata.update({'seeds': total, 'unresolved': unresolved})
    return OrbitStructureReport(
        n if precision == GRID else None,
        _sorted_cycles(cycle_periods, keys, counts, total),
        SAMPLED,
        seeds=total,
        metadata=metadata,
    )


def compare_with_reference(report: OrbitStructureReport,
                           reference: Sequence[Tuple[int, int]]) -> List[Dict]:
    """Compara (período, bacia) linha a linha, na ordem de bacia decrescente."""
    rows = []
    size = max(len(report.cycles), len(reference))
    for i in range(size):
        computed = report.cycles[i] if i < len(report.cycles) else None
        expected = reference[i] if i < len(reference) else None
        rows.append({
            'rank': i + 1,
            'period': computed.period if computed else None,
            'basin_size': computed.basin_size if computed else None,
            'reference_period': expected[0] if expected else None,
            'reference_basin': expected[1] if expected else None,
            'matches': bool(computed and expected
                            and (computed.period, computed.basin_size) == tuple(expected)),
        })
    return rows


def attempt_reference_match(n: int, budget_mb: Optional[int] = None) -> Dict[str, List[Dict]]:
    """
    Tenta reproduzir a estrutura de referência do mapa circular cúbico em cada
    convenção de arredondamento.
    """
    if n not in REFERENCE_STRUCTURES:
        raise DomainError(f"Sem estrutura de referência para N={n}")
    outcome = {}
    for rounding in Rounding:
        g = GridFunction(MapSpec('circle_cubic'), GridDiscretization(n, rounding))
        report = full_orbit_structure(g, budget_mb=budget_mb)
        rows = compare_with_reference(report, REFERENCE_STRUCTURES[n])
        outcome[rounding.value] = rows
        if all(r['matches'] for r in rows):
            logger.info(f"Estrutura de referência reproduzida com {rounding.value}")
    return outcome
