import argparse
import logging
import sys

from pydantic import ValidationError

from src.core.config import Config
from src.core.exceptions import EXIT_INTERNAL, EXIT_USAGE, RepWordsError
from src.routers.commands import run
from src.schemas.run_schemas import RunConfig

logger = logging.getLogger(__name__)


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input_path", nargs="?", metavar="graph", help="Arquivo com lista de arestas ou graph6")
    parser.add_argument("--edges", help='Arestas inline, por exemplo "1-2,2-3"')
    parser.add_argument("--graph-name", help="Grafo nomeado: twin-house, fig-hook, cycle:5, ...")
    parser.add_argument("--n", type=int, help="Número de vértices (com --edges)")


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-n", type=int, default=Config.MAX_N, help="Maior n aceito pela busca exaustiva")
    parser.add_argument("--max-occurrences", type=int, default=Config.MAX_OCCURRENCES,
                        help="Ocorrências máximas por letra na busca")
    parser.add_argument("--time-cap", type=float, default=Config.TIME_CAP, help="Limite de tempo por busca, em segundos")


def _add_census_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="Número de vértices")
    parser.add_argument("--patterns", "--pattern", dest="patterns", help="Padrões separados por vírgula, ex. 121,231")
    parser.add_argument("--jobs", type=int, help="Processos paralelos (REPWORDS_JOBS tem prioridade)")
    parser.add_argument("--timings", action="store_true", help="Inclui wall_time_ms na saída")
    parser.add_argument("--format", dest="output_format", default="json", choices=["json", "text", "csv"])
    _add_budget(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repwords",
        description="Grafos 12-representáveis por palavras que evitam padrões",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("check", "Decide se o grafo rotulado é representável evitando o padrão"),
        ("represent", "Constrói um representante que evita o padrão"),
    ):
        command = subparsers.add_parser(name, help=help_text)
        _add_graph_source(command)
        command.add_argument("--pattern", default="none", help="Seletor de padrão, ex. 123 ou set:121+212")
        command.add_argument("--oracle", action="store_true", help="Permite a busca exaustiva como último recurso")
        command.add_argument("--format", dest="output_format", default="json", choices=["json", "text"])
        _add_budget(command)

    census = subparsers.add_parser("census", help="Conta grafos representáveis por padrão")
    _add_census_options(census)

    crossvalidate = subparsers.add_parser("crossvalidate", help="Compara caracterizações com a busca exaustiva")
    _add_census_options(crossvalidate)
    crossvalidate.add_argument("--unlabeled", action="store_true",
                               help="Também verifica as equivalências de classe em grafos não rotulados")

    model = subparsers.add_parser("model", help="Emite modelos geométricos (MPT, ganchos, intervalos)")
    _add_graph_source(model)
    model.add_argument("--kind", default="hook", choices=["mpt", "hook", "interval"])
    model.add_argument("--format", dest="output_format", default="json", choices=["json", "svg", "tikz"])

    selftest = subparsers.add_parser("selftest", help="Roda os exemplos de referência e os teoremas negativos")
    selftest.add_argument("--seed", type=int, default=Config.SEED)
    _add_budget(selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=Config.LOG_LEVEL,
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors, which is reserved for unknown results
        return EXIT_USAGE if e.code else 0
    options = {key: value for key, value in vars(args).items() if value is not None}

    try:
        config = RunConfig(**options)
    except ValidationError as e:
        for error in e.errors():
            print(f"Erro: {error['msg']}", file=sys.stderr)
        return EXIT_USAGE

    try:
        result = run(config)
    except RepWordsError as e:
        logger.warning(f"{type(e).__name__}: {e.detail}")
        print(f"Erro: {e.detail}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.error(f"Erro inesperado: {e}", exc_info=True)
        return EXIT_INTERNAL

    sys.stdout.write(result.output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
