"""
Monitoramento de desempenho e orçamento de memória.
"""

import functools
import time
from typing import Callable, Dict, Optional

import psutil

from config import settings
from src.utils.exceptions import ResourceBudgetError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class PerformanceMonitor:
    """Monitora o desempenho do processo."""

    def __init__(self):
        self.process = psutil.Process()
        self.start_time = time.time()
        self.function_times: Dict[str, float] = {}

    def get_memory_usage(self) -> float:
        """Retorna o uso de memória em MB."""
        return self.process.memory_info().rss / 1024 / 1024

    def get_cpu_usage(self) -> float:
        """Retorna o uso de CPU em porcentagem."""
        return self.process.cpu_percent()

    def get_available_memory(self) -> int:
        """Retorna a memória disponível na máquina, em bytes."""
        return psutil.virtual_memory().available

    def log_performance(self):
        """Registra métricas de performance no log."""
        uptime = time.time() - self.start_time
        logger.debug(
            f"Tempo de execução acumulado: {uptime:.2f} s",
            extra={'performance': True},
        )
        for func_name, exec_time in self.function_times.items():
            logger.debug(f"{func_name}: {exec_time:.4f} segundos")


def time_it(func: Callable) -> Callable:
    """Decorator para medir o tempo de execução de funções."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.time()
        try:
            result = func(*args, **kwargs)
            execution_time = time.time() - start_time
            logger.debug(f"{func.__name__} executada em {execution_time:.4f} segundos")
            monitor.function_times[func.__name__] = execution_time
            return result
        except Exception as e:
            execution_time = time.time() - start_time
            logger.error(
                f"Erro em {func.__name__} após {execution_time:.4f} segundos: {str(e)}"
            )
            raise
    return wrapper


def check_memory_budget(required_bytes: int, budget_mb: Optional[int] = None) -> None:
    """
    Recusa uma alocação acima do orçamento ou da memória disponível.

    Args:
        required_bytes: Bytes necessários para a operação
        budget_mb: Orçamento em MB (padrão: settings.MEMORY_BUDGET_MB)

    Raises:
        ResourceBudgetError: Se o orçamento for excedido
    """
    budget_mb = settings.MEMORY_BUDGET_MB if budget_mb is None else budget_mb
    limit = budget_mb * 1024 * 1024
    if required_bytes > limit:
        raise ResourceBudgetError(
            f"Memória necessária ({required_bytes / 1024 / 1024:.1f} MB) excede o "
            f"orçamento de {budget_mb} MB",
            estimate=required_bytes,
            limit=limit,
        )
    available = monitor.get_available_memory()
    if required_bytes > available:
        raise ResourceBudgetError(
            f"Memória necessária ({required_bytes / 1024 / 1024:.1f} MB) excede a "
            f"memória disponível ({available / 1024 / 1024:.1f} MB)",
            estimate=required_bytes,
            limit=available,
        )


# Criar instância global do monitor de performance
monitor = PerformanceMonitor()


def start_monitoring():
    """Inicia o monitoramento da aplicação."""
    logger.debug("Iniciando monitoramento do Orbit Pattern Lab")
    monitor.log_performance()


def stop_monitoring():
    """Finaliza o monitoramento e registra estatísticas finais."""
    logger.debug("Finalizando monitoramento do Orbit Pattern Lab")
    monitor.log_performance()
