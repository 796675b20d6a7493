"""
Superfície de linha de comando do Orbit Pattern Lab.

Os dados vão para a saída padrão; diagnósticos e progresso vão para stderr.
Códigos de saída: 0 sucesso, 1 falha de verificação ou erro interno,
2 erro de validação, 3 recusa por orçamento.
"""

import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from config import settings
from src.analysis import report_tables as tables
from src.analysis.verification import run_verification
from src.core.dynamics import Endofunction, decompose, gop_of
from src.counting.formulas import count_class, format_scientific
from src.discretized.maps import GridDiscretization, MapSpec, grid_discretize
from src.discretized.orbit_structure import (
    BINARY64, GRID, attempt_reference_match, full_orbit_structure,
    sampled_orbit_structure,
)
from src.enumeration.census import census_vs_formula, enumerate_family
from src.enumeration.families import FamilySpec
from src.enumeration.l1_tables import l1_report, summarize_statements, verify_statements
from src.enumeration.lalpha import calibrate_window_mode, lalpha_scan
from src.gop.algebra import function_of_rank, order_table, rank_of, threshold_function
from src.gop.pattern import Gop
from src.utils.exceptions import DomainError, OrbitLabError, ResourceBudgetError
from src.utils.logger import OrbitLabLogger, get_logger
from src.utils.validation import (
    parse_int_list, parse_q_list, parse_rank_literal, validate_request,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_VALIDATION = 2
EXIT_BUDGET = 3

SUBCOMMANDS = (
    'analyze', 'gop', 'count', 'order', 'threshold', 'rank', 'enumerate',
    'l1-table', 'statements', 'lalpha-scan', 'discretize', 'verify',
)


@dataclass
class CommandRequest:
    subcommand: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    output_format: str = settings.DEFAULT_OUTPUT_FORMAT

    @property
    def threads(self) -> Optional[int]:
        return self.parameters.get('threads')

    @property
    def max_n(self) -> Optional[int]:
        return self.parameters.get('max_n')


@dataclass
class CommandResult:
    exit_code: int
    output: str = ''


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=tables.FORMATS,
                        default=settings.DEFAULT_OUTPUT_FORMAT, dest='output_format')
    common.add_argument('--threads', type=int, default=None,
                        help='processos (padrão: ORBITLAB_THREADS ou nº de CPUs)')
    common.add_argument('--max-n', type=int, default=None,
                        help='limite de N para censos e enumerações')
    common.add_argument('--memory-mb', type=int, default=None,
                        help='orçamento de memória para os mapas discretizados')
    common.add_argument('--progress', action='store_true',
                        help='barra de progresso em stderr')
    common.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])

    parser = argparse.ArgumentParser(
        prog='orbitlab',
        description='Padrões globais de órbitas de funções em conjuntos finitos',
    )
    sub = parser.add_subparsers(dest='subcommand', required=True)

    p = sub.add_parser('analyze', parents=[common], help='componentes e gop de f')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--f', required=True, help='imagens "a0,a1,...,a(N-1)"')

    p = sub.add_parser('gop', parents=[common], help='gop de f')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--f', required=True)

    p = sub.add_parser('count', parents=[common], help='cardinalidade de uma classe')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--gop', required=True)
    p.add_argument('--expect', default=None, help='valor decimal esperado')
    p.add_argument('--scientific', action='store_true')

    p = sub.add_parser('order', parents=[common], help='G(F_N) ordenado')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--with-modulus', action='store_true')

    p = sub.add_parser('threshold', parents=[common], help='função limiar Tr(A)')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--gop', required=True)

    p = sub.add_parser('rank', parents=[common], help='posto de f ou função de um posto')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--f', default=None)
    p.add_argument('--value', default=None)

    p = sub.add_parser('enumerate', parents=[common], help='censo de uma família')
    p.add_argument('--family', choices=['full', 'l1', 'lalpha'], required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--alpha', default=None)
    p.add_argument('--q', type=int, default=0)
    p.add_argument('--window-mode', choices=['full_window', 'truncated'],
                   default=settings.DEFAULT_WINDOW_MODE)
    p.add_argument('--check-formula', action='store_true')

    p = sub.add_parser('l1-table', parents=[common], help='tabela de gops de L_{1,N}')
    p.add_argument('--n', type=int, required=True)

    p = sub.add_parser('statements', parents=[common], help='enunciados 1 a 5')
    p.add_argument('--n-from', type=int, default=1)
    p.add_argument('--n-to', type=int, required=True)

    p = sub.add_parser('lalpha-scan', parents=[common], help='varredura em q')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--alpha', required=True)
    p.add_argument('--t', type=int, default=None)
    p.add_argument('--q', required=True, help='"35,48" ou "35-101"')
    p.add_argument('--window-mode', choices=['full_window', 'truncated'],
                   default=settings.DEFAULT_WINDOW_MODE)
    p.add_argument('--show', default='rows',
                   choices=['rows', 'period-intervals', 'gop-intervals', 'calibration'])

    p = sub.add_parser('discretize', parents=[common], help='ciclos e bacias na grade')
    p.add_argument('--family', required=True,
                   choices=['folded_logistic', 'circle_cubic', 'circle_quadratic',
                            'tent_power', 'identity', 'doubling'])
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--ell', type=float, default=None)
    p.add_argument('--rounding', default=settings.DEFAULT_ROUNDING,
                   choices=['nearest_half_away', 'nearest_ties_even'])
    p.add_argument('--representation', default=settings.DEFAULT_REPRESENTATION,
                   choices=['unit_interval', 'shifted_to_[1,2]'])
    p.add_argument('--mode', choices=['complete', 'sampled'], default='complete')
    p.add_argument('--precision', choices=[GRID, BINARY64], default=GRID)
    p.add_argument('--seeds', type=int, default=settings.DEFAULT_SAMPLING_SEEDS)
    p.add_argument('--rng-seed', type=int, default=settings.DEFAULT_RNG_SEED)
    p.add_argument('--max-iterations', type=int,
                   default=settings.SAMPLING_MAX_ITERATIONS)
    p.add_argument('--compare-reference', action='store_true')

    p = sub.add_parser('verify', parents=[common], help='verificações de consistência')
    p.add_argument('--up-to', type=int, required=True)
    return parser


def parse_request(argv: Optional[List[str]] = None) -> CommandRequest:
    args = build_parser().parse_args(argv)
    params = vars(args).copy()
    subcommand = params.pop('subcommand')
    output_format = params.pop('output_format')
    return CommandRequest(subcommand, params, output_format)


def _analyze(request: CommandRequest) -> CommandResult:
    f = Endofunction.from_literal(request.parameters['f'])
    decomposition = decompose(f)
    if request.output_format == 'json':
        payload = {'gop': str(decomposition.gop), **decomposition.to_dict()}
        return CommandResult(EXIT_OK, tables.render_value(
            payload['components'], 'json', 'components',
            {'n': payload['n'], 'gop': payload['gop']},
        ))
    frame = tables.decomposition_frame(decomposition)
    return CommandResult(EXIT_OK, tables.render(
        frame, request.output_format, {'gop': str(decomposition.gop)}
    ))


def _gop(request: CommandRequest) -> CommandResult:
    f = Endofunction.from_literal(request.parameters['f'])
    return CommandResult(EXIT_OK, tables.render_value(
        str(gop_of(f)), request.output_format, 'gop'
    ))


def _count(request: CommandRequest) -> CommandResult:
    params = request.parameters
    gop = Gop.parse(params['gop'])
    value = count_class(params['n'], gop)
    metadata: Dict[str, Any] = {}
    if params.get('expect'):
        expected = parse_rank_literal(params['expect'])
        metadata['matches'] = expected == value
        if expected != value:
            logger.warning(
                f"Valor esperado difere da fórmula para {gop}_{params['n']}: "
                f"esperado {expected} ({len(str(expected))} dígitos), "
                f"calculado {value} ({len(str(value))} dígitos)"
            )
    if params.get('scientific'):
        metadata['scientific'] = format_scientific(value)
    if request.output_format == 'plain':
        lines = [str(value)]
        if 'scientific' in metadata:
            lines.append(metadata['scientific'])
        if 'matches' in metadata:
            lines.append(f"matches: {str(metadata['matches']).lower()}")
        return CommandResult(EXIT_OK, '\n'.join(lines))
    return CommandResult(EXIT_OK, tables.render_value(
        value, request.output_format, 'count', metadata
    ))


def _order(request: CommandRequest) -> CommandResult:
    rows = order_table(request.parameters['n'])
    if request.output_format == 'plain' and not request.parameters.get('with_modulus'):
        return CommandResult(EXIT_OK, '\n'.join(str(r.gop) for r in rows))
    frame = tables.order_frame(rows, request.parameters.get('with_modulus', False))
    return CommandResult(EXIT_OK, tables.render(frame, request.output_format))


def _threshold(request: CommandRequest) -> CommandResult:
    params = request.parameters
    f = threshold_function(Gop.parse(params['gop']), params['n'])
    metadata = {'rank': str(rank_of(f))}
    return CommandResult(EXIT_OK, tables.render_value(
        f.to_literal(), request.output_format, 'f', metadata
    ))


def _rank(request: CommandRequest) -> CommandResult:
    params = request.parameters
    if params.get('f'):
        value = rank_of(Endofunction.from_literal(params['f']))
        return CommandResult(EXIT_OK, tables.render_value(
            str(value), request.output_format, 'rank'
        ))
    f = function_of_rank(parse_rank_literal(params['value']), params['n'])
    return CommandResult(EXIT_OK, tables.render_value(
        f.to_literal(), request.output_format, 'f'
    ))


def _family_spec(params: Dict[str, Any]) -> FamilySpec:
    if params['family'] == 'full':
        return FamilySpec.full(params['n'])
    if params['family'] == 'l1':
        return FamilySpec.l1(params['n'])
    if not params.get('alpha'):
        raise DomainError("A família lalpha exige --alpha")
    alpha = parse_int_list(params['alpha'], 'alpha')
    return FamilySpec.lalpha(params['n'], alpha, params['q'], params['window_mode'])


def _enumerate(request: CommandRequest) -> CommandResult:
    params = request.parameters
    spec = _family_spec(params)
    if params.get('check_formula'):
        if params['family'] != 'full':
            raise DomainError("--check-formula só se aplica à família full")
        checks = census_vs_formula(params['n'], request.threads, request.max_n)
        frame = tables.formula_check_frame(checks)
        code = EXIT_OK if all(c.matches for c in checks) else EXIT_FAILURE
        return CommandResult(code, tables.render(frame, request.output_format))
    stats = enumerate_family(spec, request.threads, params.get('progress', False),
                             request.max_n, params.get('memory_mb'))
    return CommandResult(EXIT_OK, tables.render(
        tables.gop_counts_frame(stats), request.output_format, stats.summary()
    ))


def _l1_table(request: CommandRequest) -> CommandResult:
    n = request.parameters['n']
    stats = enumerate_family(FamilySpec.l1(n), request.threads,
                             request.parameters.get('progress', False), request.max_n,
                             request.parameters.get('memory_mb'))
    rows = l1_report(n, stats=stats)
    frame = tables.l1_frame(rows, total=stats.total_functions)
    return CommandResult(EXIT_OK, tables.render(frame, request.output_format, {'n': n}))


def _statements(request: CommandRequest) -> CommandResult:
    params = request.parameters
    checks = verify_statements(params['n_to'], params['n_from'], request.threads,
                               params.get('progress', False), request.max_n)
    summary = summarize_statements(checks)
    for message in summary.get_formatted_messages():
        logger.info(message)
    return CommandResult(EXIT_OK, tables.render(
        tables.statements_frame(checks), request.output_format
    ))


def _lalpha_scan(request: CommandRequest) -> CommandResult:
    params = request.parameters
    alpha = parse_int_list(params['alpha'], 'alpha')
    q_list = parse_q_list(params['q'])
    progress = params.get('progress', False)
    if params['show'] == 'calibration':
        rows = calibrate_window_mode(q_list, request.threads, progress, request.max_n)
        return CommandResult(EXIT_OK, tables.render(
            tables.calibration_frame(rows), request.output_format
        ))
    scan = lalpha_scan(params['n'], alpha, q_list, params['window_mode'], params['t'],
                       request.threads, progress, request.max_n)
    if params['show'] == 'period-intervals':
        frame = tables.intervals_frame(scan.period_intervals())
    elif params['show'] == 'gop-intervals':
        frame = tables.intervals_frame(scan.gop_intervals())
    else:
        frame = tables.lalpha_frame(scan)
    return CommandResult(EXIT_OK, tables.render(
        frame, request.output_format, scan.metadata()
    ))


def _discretize(request: CommandRequest) -> CommandResult:
    params = request.parameters
    map_spec = MapSpec(params['family'], params.get('ell'), params['representation'])
    budget = params.get('memory_mb')
    if params.get('compare_reference'):
        outcome = attempt_reference_match(params['n'], budget)
        frames = []
        for rounding, rows in outcome.items():
            frame = tables.pd.DataFrame(rows)
            frame.insert(0, 'rounding', rounding)
            frames.append(frame)
        return CommandResult(EXIT_OK, tables.render(
            tables.pd.concat(frames, ignore_index=True), request.output_format
        ))
    if params['mode'] == 'complete':
        g = grid_discretize(map_spec, GridDiscretization(params['n'], params['rounding']))
        report = full_orbit_structure(g, budget_mb=budget)
    else:
        report = sampled_orbit_structure(
            map_spec, params['precision'], n=params['n'], seeds=params['seeds'],
            rng_seed=params['rng_seed'], rounding=params['rounding'],
            max_iterations=params['max_iterations'], threads=request.threads,
            progress=params.get('progress', False),
        )
    metadata = dict(report.metadata)
    metadata['cycles'] = report.cycle_count
    return CommandResult(EXIT_OK, tables.render(
        tables.orbit_frame(report), request.output_format, metadata
    ))


def _verify(request: CommandRequest) -> CommandResult:
    results = run_verification(request.parameters['up_to'], request.threads)
    frame = tables.pd.DataFrame([r._asdict() for r in results],
                                columns=['check', 'n', 'holds', 'detail'])
    code = EXIT_OK if all(r.holds for r in results) else EXIT_FAILURE
    return CommandResult(code, tables.render(frame, request.output_format))


HANDLERS: Dict[str, Callable[[CommandRequest], CommandResult]] = {
    'analyze': _analyze,
    'gop': _gop,
    'count': _count,
    'order': _order,
    'threshold': _threshold,
    'rank': _rank,
    'enumerate': _enumerate,
    'l1-table': _l1_table,
    'statements': _statements,
    'lalpha-scan': _lalpha_scan,
    'discretize': _discretize,
    'verify': _verify,
}


def run(request: CommandRequest) -> CommandResult:
    """
    Valida e executa uma requisição.

    Returns:
        CommandResult: Código de saída e texto para a saída padrão
    """
    if request.subcommand not in HANDLERS:
        logger.error(f"Subcomando desconhecido: {request.subcommand!r}")
        return CommandResult(EXIT_VALIDATION)
    if request.parameters.get('log_level'):
        OrbitLabLogger().set_level(request.parameters['log_level'])

    validation = validate_request(request.subcommand, request.parameters)
    if not validation.passed:
        for message in validation.get_formatted_messages():
            logger.error(message)
        return CommandResult(EXIT_VALIDATION)

    try:
        return HANDLERS[request.subcommand](request)
    except ResourceBudgetError as e:
        logger.error(f"Recusado por orçamento: {e}")
        return CommandResult(EXIT_BUDGET)
    except MemoryError:
        logger.error(f"Memória esgotada em '{request.subcommand}'")
        return CommandResult(EXIT_BUDGET)
    except DomainError as e:
        logger.error(f"Erro de validação: {e}")
        return CommandResult(EXIT_VALIDATION)
    except OrbitLabError as e:
        logger.error(f"Erro em '{request.subcommand}': {e}", exc_info=True)
        return CommandResult(EXIT_FAILURE)
