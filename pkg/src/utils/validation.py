"""
Validação de literais e de parâmetros de requisições do Orbit Pattern Lab.
"""

from typing import Any, Dict, List, Optional

from src.core.dynamics import Endofunction
from src.gop.pattern import Gop
from src.utils.exceptions import DomainError, LiteralParseError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class ValidationResult:
    def __init__(self):
        self.passed = True
        self.messages = []
        self.details = {}

    def add_error(self, message: str, details: dict = None):
        self.passed = False
        self.messages.append({"type": "error", "message": message})
        if details:
            self.details.update(details)

    def add_warning(self, message: str, details: dict = None):
        self.messages.append({"type": "warning", "message": message})
        if details:
            self.details.update(details)

    def add_info(self, message: str, details: dict = None):
        self.messages.append({"type": "info", "message": message})
        if details:
            self.details.update(details)

    def merge(self, other: 'ValidationResult'):
        self.passed = self.passed and other.passed
        self.messages.extend(other.messages)
        self.details.update(other.details)

    def errors(self) -> List[str]:
        return [m['message'] for m in self.messages if m['type'] == 'error']

    def get_formatted_messages(self) -> List[str]:
        formatted = []
        for msg in self.messages:
            prefix = {
                "error": "Erro",
                "warning": "Aviso",
                "info": "Info"
            }.get(msg["type"], "")
            formatted.append(f"{prefix}: {msg['message']}")
        return formatted


def parse_rank_literal(text: str) -> int:
    """Lê um posto em decimal, de tamanho arbitrário."""
    cleaned = (text or '').strip().replace('_', '').replace(',', '')
    if not cleaned.isdigit():
        raise LiteralParseError(f"Literal de posto inválido: {text!r}")
    return int(cleaned)


def parse_int_list(text: str, name: str) -> List[int]:
    """Lê uma lista "a,b,c" de inteiros não negativos (pesos, valores de q)."""
    parts = [p.strip() for p in (text or '').strip().strip('[]()').split(',')]
    if not parts or any(not p.isdigit() for p in parts):
        raise LiteralParseError(f"Lista inválida para {name}: {text!r}")
    return [int(p) for p in parts]


def parse_q_list(text: str) -> List[int]:
    """Aceita "35,48,61" e faixas "35-101"."""
    values: List[int] = []
    for part in (text or '').split(','):
        part = part.strip()
        if '-' in part:
            low, _, high = part.partition('-')
            if not (low.strip().isdigit() and high.strip().isdigit()):
                raise LiteralParseError(f"Faixa de q inválida: {part!r}")
            values.extend(range(int(low), int(high) + 1))
        elif part.isdigit():
            values.append(int(part))
        else:
            raise LiteralParseError(f"Valor de q inválido: {part!r}")
    return sorted(set(values))


def _require_positive(result: ValidationResult, params: Dict[str, Any],
                      key: str) -> Optional[int]:
    value = params.get(key)
    if value is None:
        result.add_error(f"Parâmetro obrigatório ausente: --{key.replace('_', '-')}")
        return None
    if value < 1:
        result.add_error(f"--{key.replace('_', '-')} deve ser positivo (recebido {value})")
    return value


def validate_request(subcommand: str, params: Dict[str, Any]) -> ValidationResult:
    """
    Confere parâmetros de uma requisição antes de qualquer cálculo.

    Args:
        subcommand: Nome do subcomando
        params: Parâmetros já convertidos pelo parser

    Returns:
        ValidationResult: Resultado da validação
    """
    result = ValidationResult()
    needs_n = {
        'analyze', 'gop', 'count', 'order', 'threshold', 'rank',
        'enumerate', 'l1-table', 'lalpha-scan', 'discretize',
    }
    if subcommand in needs_n:
        _require_positive(result, params, 'n')
    n = params.get('n')

    try:
        if subcommand in ('analyze', 'gop') or (subcommand == 'rank' and params.get('f')):
            f = Endofunction.from_literal(params.get('f') or '')
            if n is not None and f.size != n:
                result.add_error(f"A função tem {f.size} imagens, mas --n={n}")
        if subcommand in ('count', 'threshold'):
            gop = Gop.parse(params.get('gop') or '')
            if n is not None and gop.modulus > n:
                result.add_error(f"Módulo de {gop} ({gop.modulus}) maior que N={n}")
        if subcommand == 'rank' and not params.get('f'):
            if params.get('value') is None:
                result.add_error("Informe --f ou --value")
            else:
                parse_rank_literal(params['value'])
        if subcommand == 'count' and params.get('expect'):
            parse_rank_literal(params['expect'])
        if subcommand == 'lalpha-scan':
            alpha = parse_int_list(params.get('alpha') or '', 'alpha')
            if any(a < 1 for a in alpha):
                result.add_error("Pesos alpha devem ser positivos")
            if params.get('t') is not None and params['t'] != len(alpha):
                result.add_error(
                    f"--t={params['t']} difere do número de pesos ({len(alpha)})"
                )
            parse_q_list(params.get('q') or '')
        if subcommand == 'statements':
            low = _require_positive(result, params, 'n_from')
            high = _require_positive(result, params, 'n_to')
            if low is not None and high is not None and low > high:
                result.add_error(f"Intervalo vazio: --n-from {low} > --n-to {high}")
        if subcommand == 'verify':
            _require_positive(result, params, 'up_to')
        if subcommand == 'discretize' and params.get('family') == 'tent_power':
            ell = params.get('ell')
            if ell is None or not 1.0 <= ell <= 2.0:
                result.add_error(f"tent_power exige --ell em [1, 2] (recebido {ell})")
        if subcommand == 'discretize' and params.get('seeds') is not None:
            if params['seeds'] < 1:
                result.add_error("--seeds deve ser positivo")
    except (LiteralParseError, DomainError) as e:
        result.add_error(str(e))

    for message in result.errors():
        logger.debug(f"Validação de '{subcommand}': {message}")
    return result
