"""
Módulo centralizado de logging do Orbit Pattern Lab.

Os logs vão sempre para o canal de erro (stderr); a saída padrão fica reservada
aos dados. Opcionalmente, um arquivo com rotação é mantido em ``logs/``.
"""

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Optional

from config import settings


class OrbitLabLogger:
    """
    Gerenciador centralizado de logs do Orbit Pattern Lab.
    Implementa um sistema de logging com:
    - Saída em stderr
    - Rotação de arquivos (opcional)
    - Captura de exceções não tratadas
    """

    _instance: Optional['OrbitLabLogger'] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not hasattr(self, 'initialized'):
            self.initialized = True
            self._setup_logging()

    def _setup_logging(self):
        """Configura o sistema de logging."""
        formatter = logging.Formatter(settings.LOG_FORMAT)
        logger = self.get_logger()

        # Remover handlers existentes para evitar duplicação
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        if settings.LOG_TO_FILE:
            log_dir = Path(settings.LOG_DIR)
            log_dir.mkdir(exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                settings.LOG_FILE,
                maxBytes=settings.LOG_FILE_MAX_BYTES,
                backupCount=settings.LOG_FILE_BACKUP_COUNT,
                encoding='utf-8'
            )
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        logger.setLevel(settings.LOG_LEVEL)

        # Configurar captura de exceções não tratadas
        sys.excepthook = self._handle_uncaught_exception

    def _handle_uncaught_exception(self, exc_type, exc_value, exc_traceback):
        """Handler para exceções não tratadas."""
        if issubclass(exc_type, KeyboardInterrupt):
            sys.__excepthook__(exc_type, exc_value, exc_traceback)
            return

        self.get_logger().critical(
            "Exceção não tratada", exc_info=(exc_type, exc_value, exc_traceback)
        )

    def get_logger(self) -> logging.Logger:
        """Retorna a instância do logger raiz do projeto."""
        return logging.getLogger(settings.LOGGER_NAME)

    def set_level(self, level: str) -> None:
        """Altera o nível de log em tempo de execução (ex.: ``--log-level``)."""
        self.get_logger().setLevel(level.upper())


class LoggerAdapter(logging.LoggerAdapter):
    """
    Adapter para adicionar contexto extra aos logs.
    """
    def process(self, msg, kwargs):
        # Adicionar informações de memória e CPU quando relevante
        if kwargs.get('extra', {}).get('performance', False):
            from src.utils.debug_monitor import monitor
            mem_usage = monitor.get_memory_usage()
            cpu_usage = monitor.get_cpu_usage()
            msg = f"{msg} [Memória: {mem_usage:.1f}MB, CPU: {cpu_usage:.1f}%]"
        return msg, kwargs


def get_logger(name: str = None) -> LoggerAdapter:
    """
    Obtém um logger configurado com o adapter.

    Args:
        name: Nome do logger (opcional)

    Returns:
        LoggerAdapter: Logger configurado
    """
    logger = OrbitLabLogger().get_logger()
    if name:
        logger = logger.getChild(name)
    return LoggerAdapter(logger, {})
