"""
Configurações globais do Orbit Pattern Lab.

Todos os valores podem ser sobrescritos por variáveis de ambiente (ou por um
arquivo ``.env`` na raiz do projeto, lido com python-dotenv).
"""

import os
from pathlib import Path

from dotenv import load_dotenv

from src.utils.exceptions import ConfigurationError

# Diretório raiz do projeto
ROOT_DIR = Path(__file__).parent.parent

load_dotenv(ROOT_DIR / '.env')


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    """Lê um inteiro do ambiente, validando o valor mínimo."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigurationError(f"Valor inválido para {name}: {raw!r}") from e
    if value < minimum:
        raise ConfigurationError(f"{name} deve ser >= {minimum} (recebido {value})")
    return value


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    if raw.strip().lower() in ('1', 'true', 'yes', 'on', 'sim'):
        return True
    if raw.strip().lower() in ('0', 'false', 'no', 'off', 'nao', 'não'):
        return False
    raise ConfigurationError(f"Valor booleano inválido para {name}: {raw!r}")


# Configurações de Paralelismo
MAX_THREADS = _env_int('ORBITLAB_THREADS', os.cpu_count() or 1, minimum=1)

# Configurações de Orçamento (censos e materialização)
FULL_FAMILY_MAX_N = _env_int('ORBITLAB_FULL_MAX_N', 9, minimum=1)
L1_DEFAULT_MAX_N = _env_int('ORBITLAB_L1_MAX_N', 14, minimum=1)
L1_OPT_IN_MAX_N = 16
LALPHA_MAX_N = _env_int('ORBITLAB_LALPHA_MAX_N', 12, minimum=1)
CENSUS_KEY_MAX_N = 60  # chaves de gop em int64; o orçamento de memória limita antes
GOP_ENUMERATION_MAX_N = _env_int('ORBITLAB_GOP_MAX_N', 24, minimum=1)
TOTAL_OVER_GOPS_MAX_N = 30
MEMORY_BUDGET_MB = _env_int('ORBITLAB_MEMORY_MB', 512, minimum=1)

# Configurações dos Mapas Discretizados
DEFAULT_ROUNDING = 'nearest_half_away'
DEFAULT_REPRESENTATION = 'unit_interval'
DEFAULT_SAMPLING_SEEDS = 1000
DEFAULT_RNG_SEED = 42
SAMPLING_MAX_ITERATIONS = _env_int('ORBITLAB_MAX_ITERATIONS', 10**9, minimum=1)
STATE_LABEL_BYTES = 4  # rótulos int32 por ponto da grade

# Configurações da Família L_alpha
DEFAULT_WINDOW_MODE = 'full_window'

# Configurações de Saída
DEFAULT_OUTPUT_FORMAT = 'plain'
SCIENTIFIC_DIGITS = 3

# Configurações de Logging
LOG_DIR = os.path.join(ROOT_DIR, 'logs')
LOG_FILE = os.path.join(LOG_DIR, 'orbitlab.log')
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(module)s:%(lineno)d - %(message)s'
LOG_FILE_MAX_BYTES = 10 * 1024 * 1024  # 10MB
LOG_FILE_BACKUP_COUNT = 5
LOG_LEVEL = os.getenv('ORBITLAB_LOG_LEVEL', 'INFO').upper()
LOG_TO_FILE = _env_bool('ORBITLAB_LOG_TO_FILE', False)
LOGGER_NAME = 'OrbitPatternLab'
