"""Fixtures de grafos, orçamento do oráculo e ambiente limpo para cada teste."""

import logging
import sys
from pathlib import Path

import pytest

# Adicionar diretório raiz ao path para importações
root_dir = Path(__file__).parent.parent
sys.path.insert(0, str(root_dir))

from src.core.models import LabeledGraph  # noqa: E402
from src.schemas.census_schemas import SearchBudget  # noqa: E402
from src.utils import graph_generators  # noqa: E402


@pytest.fixture(autouse=True)
def reset_environment(monkeypatch):
    """Remove variáveis REPWORDS_* que mudariam paralelismo, limites ou semente."""
    for name in ("REPWORDS_JOBS", "REPWORDS_TIME_CAP", "REPWORDS_SEED"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("REPWORDS_LOG_LEVEL", "INFO")


@pytest.fixture(autouse=True)
def configure_test_logging(caplog):
    """Logs de decisão ficam disponíveis em caplog."""
    caplog.set_level(logging.INFO)


@pytest.fixture
def budget():
    """Orçamento padrão da busca exaustiva (n <= 5, até duas ocorrências por letra)."""
    return SearchBudget(max_n=5, max_occurrences=2)


@pytest.fixture
def word_example_graph() -> LabeledGraph:
    """Grafo representado pela palavra 4624153."""
    return graph_generators.figure_word_example()


@pytest.fixture
def hook_example_graph() -> LabeledGraph:
    """Grafo cujo representante que evita 123 é 432152."""
    return graph_generators.figure_hook_example()


@pytest.fixture
def interval_example_graph() -> LabeledGraph:
    """Grafo representado por 654436235112; contém FP132.b em 2 3 5 6."""
    return graph_generators.figure_interval_example()


@pytest.fixture
def twin_house() -> LabeledGraph:
    return graph_generators.twin_house()


@pytest.fixture
def cycle():
    """Fábrica de ciclos C_n."""
    return graph_generators.cycle


def pytest_collection_modifyitems(config, items):
    """
    Adiciona marcadores automaticamente baseado no caminho do arquivo.
    """
    for item in items:
        if "unit" in str(item.fspath):
            item.add_marker(pytest.mark.unit)
        if "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)


# Hook para relatório de testes
def pytest_report_header(config):
    """
    Adiciona informação extra ao cabeçalho do relatório de testes.
    """
    return [
        "Projeto: repwords - grafos 12-representáveis por palavras que evitam padrões",
        "Módulos testados: src/core, src/services, src/repositories, src/schemas, cli_app",
    ]
