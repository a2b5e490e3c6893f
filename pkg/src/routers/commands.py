"""Command handlers behind the `repwords` CLI.

Each handler takes a validated RunConfig and returns a CommandResult; the
entry point only prints `output` and exits with `exit_code`.
"""

import json
import logging
import random
from dataclasses import dataclass
from typing import Callable

from src.core.config import Config
from src.core.exceptions import (
    EXIT_REFUTED,
    EXIT_REPRESENTED,
    EXIT_UNKNOWN,
    ForbiddenPatternError,
    RepWordsError,
)
from src.core.models import LabeledGraph, format_word
from src.core.words import avoids, twelve_represents
from src.repositories.census_repository import CensusRepository
from src.repositories.graph_repository import GraphRepository
from src.schemas.census_schemas import SearchBudget
from src.schemas.certificate_schemas import Certificate
from src.schemas.model_schemas import hook_entries, interval_entries, mpt_entries
from src.schemas.run_schemas import RunConfig
from src.services import figure_service, geometry
from src.services.census_service import ASSERTED, CensusService, parse_patterns
from src.services.constructors import RepresentationService, descending_clique_check
from src.services.oracle import enumerate_labeled_graphs, search_labelings
from src.services.pattern_matcher import find_any, is_12_labeled
from src.utils import graph_generators
from src.utils.pattern_catalog import FP132, pattern_by_name

logger = logging.getLogger(__name__)

_STATUS_EXIT = {"represented": EXIT_REPRESENTED, "refuted": EXIT_REFUTED, "unknown": EXIT_UNKNOWN}


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    output: str


def load_graph(config: RunConfig) -> LabeledGraph:
    repository = GraphRepository()
    if config.input_path is not None:
        return repository.load(config.input_path)
    if config.edges is not None:
        return repository.parse_inline(config.edges, config.n)
    return graph_generators.by_name(config.graph_name)


def budget_from(config: RunConfig) -> SearchBudget:
    return SearchBudget(max_n=config.max_n, max_occurrences=config.max_occurrences, time_cap=config.time_cap)


def representation_service(config: RunConfig) -> RepresentationService:
    return RepresentationService(budget_from(config), use_oracle=config.oracle)


def census_service(config: RunConfig) -> CensusService:
    return CensusService(budget_from(config), jobs=Config.jobs(config.jobs), timings=config.timings)


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _certificate_text(certificate: Certificate) -> str:
    lines = [f"status: {certificate.status}", f"método: {certificate.method}"]
    if certificate.word is not None:
        lines.append(f"palavra: {format_word(certificate.word)}")
        lines.append(f"evita: {', '.join(certificate.avoided_patterns or ())}")
    if certificate.witness is not None:
        vertices = " ".join(str(v) for v in certificate.witness.vertices)
        lines.append(f"testemunha: {certificate.witness.pattern} em {vertices}")
        lines.append(f"padrão: {pattern_by_name(certificate.witness.pattern).describe()}")
    if certificate.relabeling is not None:
        mapping = " ".join(f"{old}->{new}" for old, new in sorted(certificate.relabeling.items()))
        lines.append(f"reetiquetagem: {mapping}")
        lines.append(f"palavra reetiquetada: {format_word(certificate.relabeled_word)}")
    if certificate.reason:
        lines.append(f"motivo: {certificate.reason}")
    return "\n".join(lines) + "\n"


def _render_certificate(certificate: Certificate, output_format: str) -> str:
    if output_format == "text":
        return _certificate_text(certificate)
    return _dump(certificate.to_json_dict())


def cmd_check(config: RunConfig) -> CommandResult:
    graph = load_graph(config)
    certificate = representation_service(config).represent(graph, config.pattern)
    return CommandResult(_STATUS_EXIT[certificate.status], _render_certificate(certificate, config.output_format))


def cmd_represent(config: RunConfig) -> CommandResult:
    """Like check, but only a word counts as success; text output is the bare word."""
    graph = load_graph(config)
    certificate = representation_service(config).represent(graph, config.pattern)
    if not certificate.is_represented:
        logger.warning(f"Nenhum representante para {graph} com padrão {config.pattern}: {certificate.status}")
        return CommandResult(_STATUS_EXIT[certificate.status], _render_certificate(certificate, config.output_format))
    if config.output_format == "text":
        return CommandResult(EXIT_REPRESENTED, format_word(certificate.word) + "\n")
    return CommandResult(EXIT_REPRESENTED, _dump(certificate.to_json_dict()))


def _census_output(rows, disagreements, output_format: str) -> str:
    repository = CensusRepository()
    if output_format == "csv":
        return repository.to_csv(rows)
    if output_format == "text":
        return repository.to_text(rows)
    return repository.to_json(rows, disagreements)


def cmd_census(config: RunConfig) -> CommandResult:
    patterns = parse_patterns(config.patterns or ",".join(ASSERTED))
    rows = census_service(config).census(config.n, patterns)
    failed = [row.pattern for row in rows if row.agree is False]
    if failed:
        logger.error(f"Censo n={config.n}: divergência entre padrão e oráculo em {', '.join(failed)}")
    return CommandResult(EXIT_REFUTED if failed else EXIT_REPRESENTED, _census_output(rows, (), config.output_format))


def cmd_crossvalidate(config: RunConfig) -> CommandResult:
    service = census_service(config)
    patterns = parse_patterns(config.patterns or ",".join(ASSERTED))
    rows, disagreements = service.cross_validate(config.n, patterns)
    output = _census_output(rows, disagreements, config.output_format)
    mismatches = service.class_equivalences(config.n) if config.unlabeled else []
    for mismatch in mismatches:
        logger.error(f"Equivalência de classe violada: {mismatch}")
    failed = bool(disagreements or mismatches)
    logger.info(f"Validação cruzada n={config.n}: {len(disagreements)} divergências rotuladas")
    return CommandResult(EXIT_REFUTED if failed else EXIT_REPRESENTED, output)


def cmd_model(config: RunConfig) -> CommandResult:
    """Geometric models: hook/mpt for the 123 pipeline, interval for the 132 pipeline."""
    graph = load_graph(config)
    service = representation_service(config)
    try:
        if config.kind == "interval":
            model, word = service.interval_model(graph)
            renderers = {"svg": figure_service.interval_svg, "tikz": figure_service.interval_tikz}
            payload = {"kind": "interval", "model": interval_entries(model), "word": format_word(word)}
        else:
            pipeline = service.hook_models(graph)
            if config.kind == "hook":
                model = pipeline.hooks
                renderers = {"svg": figure_service.hook_svg, "tikz": figure_service.hook_tikz}
                payload = {"kind": "hook", "model": hook_entries(model), "word": format_word(pipeline.word)}
            else:
                model = pipeline.unit_mpt
                renderers = {"svg": figure_service.mpt_svg, "tikz": figure_service.mpt_tikz}
                payload = {
                    "kind": "mpt",
                    "model": mpt_entries(pipeline.mpt),
                    "unit_model": mpt_entries(pipeline.unit_mpt),
                    "word": format_word(pipeline.word),
                }
    except ForbiddenPatternError as e:
        return CommandResult(EXIT_REFUTED, _dump(Certificate.refuted(e.witness).to_json_dict()))
    if config.output_format in renderers:
        return CommandResult(EXIT_REPRESENTED, renderers[config.output_format](model))
    return CommandResult(EXIT_REPRESENTED, _dump(payload))


Check = tuple[str, Callable[[], bool]]

# 654436235112 represents the interval example but contains 132 at positions 3 6 9
INTERVAL_EXAMPLE_WORD = (6, 5, 4, 4, 3, 6, 2, 3, 5, 1, 1, 2)


def _golden_checks(service: RepresentationService) -> list[Check]:
    word_graph = graph_generators.figure_word_example()
    interval_graph = graph_generators.figure_interval_example()

    def interval_example_refuted() -> bool:
        certificate = service.represent(interval_graph, "132")
        return (
            certificate.is_refuted
            and certificate.witness.pattern == "FP132.b"
            and certificate.witness.vertices == (2, 3, 5, 6)
        )

    def raw_interval_model() -> bool:
        model = geometry.build_co132_interval_model(interval_graph, check_patterns=False)
        word = geometry.co132_word(model)
        return model.left_indices == (1, 1, 2, 4, 2, 3) and word == INTERVAL_EXAMPLE_WORD

    return [
        ("4624153 representa o grafo de exemplo", lambda: twelve_represents((4, 6, 2, 4, 1, 5, 3), word_graph)),
        (
            "representante 123 do exemplo de ganchos = 432152",
            lambda: service.represent(graph_generators.figure_hook_example(), "123").word == (4, 3, 2, 1, 5, 2),
        ),
        ("exemplo de intervalos contém FP132.b em 2 3 5 6", interval_example_refuted),
        ("modelo bruto do exemplo de intervalos: âncoras 1 1 2 4 2 3, palavra 654436235112", raw_interval_model),
        (
            "654436235112 representa o exemplo de intervalos mas contém 132",
            lambda: twelve_represents(INTERVAL_EXAMPLE_WORD, interval_graph)
            and not avoids(INTERVAL_EXAMPLE_WORD, (1, 3, 2)),
        ),
        (
            "representante 211 da aresta 13 = 2312",
            lambda: service.represent(graph_generators.edge_13(), "211").word == (2, 3, 1, 2),
        ),
    ]


def _negative_checks(budget: SearchBudget) -> list[Check]:
    twin = graph_generators.twin_house()
    return [
        ("C5 sem rotulagem 12-representável", lambda: search_labelings(graph_generators.cycle(5), is_12_labeled) is None),
        ("C6 sem rotulagem 12-representável", lambda: search_labelings(graph_generators.cycle(6), is_12_labeled) is None),
        (
            "casa gêmea contém FP132 em todas as rotulagens",
            lambda: search_labelings(twin, lambda g: find_any(g, FP132) is None) is None,
        ),
        ("K3 sem representante que evita 321", lambda: descending_clique_check(3, budget)),
        ("K4 sem representante que evita 4321", lambda: descending_clique_check(4, budget)),
    ]


def _run_checks(checks: list[Check]) -> list[tuple[str, bool]]:
    """Each check runs on its own; an error fails that check only."""
    results = []
    for name, check in checks:
        try:
            passed = bool(check())
        except RepWordsError as e:
            logger.error(f"Verificação '{name}' falhou: {e.detail}")
            passed = False
        results.append((name, passed))
    return results


def _random_checks(seed: int, samples: int = 25) -> list[tuple[str, bool]]:
    """Constructors on random labeled graphs; every produced word is re-verified inside the builder."""
    rng = random.Random(seed)
    graphs = list(enumerate_labeled_graphs(5))
    service = RepresentationService(use_oracle=False)
    checks = []
    for graph in rng.sample(graphs, samples):
        for selector in ASSERTED:
            try:
                service.represent(graph, selector)
            except RepWordsError as e:
                logger.error(f"Falha em {selector} para {graph}: {e.detail}")
                checks.append((f"construtor {selector} em {graph}", False))
    checks.append((f"construtores em {samples} grafos aleatórios (semente {seed})", not checks))
    return checks


def cmd_selftest(config: RunConfig) -> CommandResult:
    budget = budget_from(config)
    service = RepresentationService(budget, use_oracle=False)
    checks = _run_checks(_golden_checks(service) + _negative_checks(budget)) + _random_checks(config.seed)
    lines = [f"{'ok' if passed else 'FALHA'}  {name}" for name, passed in checks]
    failures = sum(1 for _, passed in checks if not passed)
    lines.append(f"{len(checks) - failures}/{len(checks)} verificações passaram")
    return CommandResult(EXIT_REFUTED if failures else EXIT_REPRESENTED, "\n".join(lines) + "\n")


COMMANDS = {
    "check": cmd_check,
    "represent": cmd_represent,
    "census": cmd_census,
    "crossvalidate": cmd_crossvalidate,
    "model": cmd_model,
    "selftest": cmd_selftest,
}


def run(config: RunConfig) -> CommandResult:
    logger.info(f"Executando {config.command}")
    return COMMANDS[config.command](config)
