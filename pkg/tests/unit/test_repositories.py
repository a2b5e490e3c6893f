import json

import pytest

from src.core.exceptions import GraphParseError
from src.repositories.census_repository import CENSUS_FIELDS, CensusRepository
from src.repositories.graph_repository import GraphRepository
from src.schemas.census_schemas import CensusRow, Disagreement
from src.utils import graph_generators


@pytest.fixture
def repository():
    return GraphRepository()


@pytest.fixture
def rows():
    return [
        CensusRow(n=3, pattern="21", labeled_total=8, labeled_count_pattern=1, labeled_count_oracle=1,
                  unlabeled_count=1, unlabeled_total=4, agree=True),
        CensusRow(n=3, pattern="112", labeled_total=8, labeled_count_oracle=5, unlabeled_total=4),
    ]


class TestGraphRepository:
    """Leitura de listas de arestas, arestas inline e graph6."""

    def test_edge_list_with_comments(self, repository):
        graph = repository.parse_edge_list("3\n1 2\n# comentário\n2 3  # fim\n")
        assert graph == graph_generators.path(3)

    def test_edge_list_errors(self, repository):
        with pytest.raises(GraphParseError):
            repository.parse_edge_list("")
        with pytest.raises(GraphParseError):
            repository.parse_edge_list("x\n1 2\n")
        with pytest.raises(GraphParseError):
            repository.parse_edge_list("3\n1 2 3\n")

    def test_inline(self, repository):
        assert repository.parse_inline("1-2,2-3") == graph_generators.path(3)
        assert repository.parse_inline("", n=4) == graph_generators.empty(4)

    @pytest.mark.parametrize("text,n", [("1-5", 3), ("1x2", None), ("1-a", None)])
    def test_inline_errors(self, repository, text, n):
        with pytest.raises(GraphParseError):
            repository.parse_inline(text, n)

    def test_graph6_round_trip(self, repository, twin_house):
        encoded = repository.to_graph6(twin_house)
        assert repository.parse_graph6(encoded) == twin_house
        assert repository.parse(">>graph6<<" + encoded) == twin_house

    def test_invalid_graph6(self, repository):
        with pytest.raises(GraphParseError):
            repository.parse_graph6("A")

    def test_auto_detect_edge_list(self, repository):
        assert repository.parse("# cabeçalho\n2\n1 2\n") == graph_generators.complete(2)

    def test_load_file(self, repository, tmp_path, hook_example_graph):
        path = tmp_path / "grafo.txt"
        path.write_text(repository.to_edge_list(hook_example_graph), encoding="ascii")
        assert repository.load(path) == hook_example_graph

    def test_load_missing_file(self, repository, tmp_path):
        with pytest.raises(GraphParseError):
            repository.load(tmp_path / "inexistente.txt")


class TestCensusRepository:
    """Serialização determinística de linhas do censo."""

    def test_csv(self, rows):
        lines = CensusRepository().to_csv(rows).splitlines()
        assert lines[0] == ",".join(CENSUS_FIELDS)
        assert lines[1] == "3,21,1,1,8,1,4,true,"
        assert lines[2] == "3,112,,5,8,,4,,"

    def test_json(self, rows):
        disagreement = Disagreement(n=3, pattern="21", edges="1-2", pattern_decision=True, oracle_decision=False)
        payload = json.loads(CensusRepository().to_json(rows, [disagreement]))
        assert payload["rows"][0]["labeled_count_pattern"] == 1
        assert payload["rows"][1]["agree"] is None
        assert payload["disagreements"][0]["edges"] == "1-2"

    def test_json_is_stable(self, rows):
        repository = CensusRepository()
        assert repository.to_json(rows) == repository.to_json(list(rows))

    def test_text(self, rows):
        text = CensusRepository().to_text(rows)
        assert "padrão" in text.splitlines()[0]
        assert len(text.splitlines()) == 3
