"""
Orbit Pattern Lab - Ponto de entrada

Linha de comando para padrões globais de órbitas (gops) de funções em
conjuntos finitos: decomposição, contagens exatas, ordem de gops, censos de
famílias e discretizações de mapas do intervalo.
"""

import sys
import os

# Adiciona o diretório raiz ao PYTHONPATH
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.cli.commands import EXIT_FAILURE, EXIT_VALIDATION, parse_request, run
from src.utils.debug_monitor import start_monitoring, stop_monitoring, logger


def main(argv=None) -> int:
    """
    Função principal: interpreta os argumentos, executa e imprime o resultado.

    Returns:
        int: Código de saída do processo
    """
    try:
        request = parse_request(argv)
    except SystemExit as e:
        # argparse já escreveu a mensagem em stderr
        return EXIT_VALIDATION if e.code else 0

    try:
        start_monitoring()
        logger.debug(f"Executando '{request.subcommand}' com {request.parameters}")
        result = run(request)
        if result.output:
            print(result.output)
        return result.exit_code
    except Exception as e:
        logger.error(f"Erro fatal: {str(e)}")
        logger.error("Stacktrace:", exc_info=True)
        return EXIT_FAILURE
    finally:
        stop_monitoring()


if __name__ == "__main__":
    sys.exit(main())
