"""
Exceções personalizadas do Orbit Pattern Lab.
"""

from typing import Optional


class OrbitLabError(Exception):
    """Classe base para exceções do Orbit Pattern Lab."""
    pass


class DomainError(OrbitLabError):
    """Elemento, posto ou índice fora do domínio."""
    pass


class InvalidGopError(DomainError):
    """Gop vazio, com ordem não positiva ou módulo maior que N."""
    pass


class LiteralParseError(DomainError):
    """Literal de função, gop ou posto mal formado."""
    pass


class ResourceBudgetError(OrbitLabError):
    """Operação recusada por exceder o orçamento configurado."""

    def __init__(self, message: str, estimate: Optional[int] = None,
                 limit: Optional[int] = None):
        super().__init__(message)
        self.estimate = estimate
        self.limit = limit


class ConsistencyError(OrbitLabError):
    """Invariante interna violada (divisão inexata, ciclo inconsistente)."""
    pass


class ConfigurationError(OrbitLabError):
    """Erro de configuração."""
    pass
