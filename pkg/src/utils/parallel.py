"""
Execução de lotes independentes em processos, com progresso opcional em stderr.
"""

import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

from config import settings
from src.utils.logger import get_logger

logger = get_logger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def resolve_threads(threads: Optional[int]) -> int:
    """Número de processos efetivo (padrão: settings.MAX_THREADS)."""
    if threads is None:
        return settings.MAX_THREADS
    return max(1, int(threads))


def map_chunks(worker: Callable[[T], R], chunks: Sequence[T],
               threads: Optional[int] = None, progress: bool = False,
               desc: str = '') -> List[R]:
    """
    Aplica ``worker`` a cada lote e devolve os resultados na ordem dos lotes.

    ``worker`` precisa ser uma função de nível de módulo para poder ser enviada
    aos processos filhos.
    """
    threads = resolve_threads(threads)
    workers = min(threads, len(chunks))
    if workers <= 1:
        iterator = map(worker, chunks)
        return list(tqdm(iterator, total=len(chunks), desc=desc,
                         disable=not progress, file=sys.stderr))
    logger.debug(f"Distribuindo {len(chunks)} lotes em {workers} processos")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        # map preserva a ordem de entrada
        iterator = executor.map(worker, chunks)
        return list(tqdm(iterator, total=len(chunks), desc=desc,
                         disable=not progress, file=sys.stderr))
