import logging
from pathlib import Path

import networkx as nx

from src.core.exceptions import GraphParseError
from src.core.models import LabeledGraph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


class GraphRepository:
    """Reads and writes labeled graphs as edge lists, inline edge specs or graph6."""

    def parse_edge_list(self, text: str) -> LabeledGraph:
        """First line `n`, then one `i j` pair per line; `#` starts a comment."""
        lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
        lines = [line for line in lines if line]
        if not lines:
            raise GraphParseError("Lista de arestas vazia")
        try:
            n = int(lines[0])
        except ValueError:
            raise GraphParseError(f"Primeira linha deve conter n, recebido '{lines[0]}'") from None
        edges = []
        for number, line in enumerate(lines[1:], start=2):
            tokens = line.replace(",", " ").split()
            if len(tokens) != 2:
                raise GraphParseError(f"Linha {number}: esperado 'i j', recebido '{line}'")
            try:
                edges.append((int(tokens[0]), int(tokens[1])))
            except ValueError:
                raise GraphParseError(f"Linha {number}: vértices devem ser inteiros") from None
        return LabeledGraph.from_edges(n, edges)

    def parse_inline(self, text: str, n: int | None = None) -> LabeledGraph:
        """`"1-2,2-3"`; n defaults to the largest label mentioned."""
        edges = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                continue
            parts = token.split("-")
            if len(parts) != 2:
                raise GraphParseError(f"Aresta inválida '{token}', use o formato i-j")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise GraphParseError(f"Aresta inválida '{token}'") from None
        largest = max((max(edge) for edge in edges), default=0)
        if n is None:
            n = largest
        elif largest > n:
            raise GraphParseError(f"Aresta com vértice {largest} acima de n={n}")
        return LabeledGraph.from_edges(n, edges)

    def parse_graph6(self, text: str) -> LabeledGraph:
        line = text.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        try:
            graph = nx.from_graph6_bytes(line.encode("ascii"))
        except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
            raise GraphParseError(f"graph6 inválido '{line}': {e}") from e
        return LabeledGraph.from_networkx(graph)

    def parse(self, text: str) -> LabeledGraph:
        """Auto-detect by the first byte: digits and `#` mean edge list, anything else graph6."""
        stripped = text.lstrip()
        if not stripped:
            raise GraphParseError("Entrada vazia")
        if stripped[0].isdigit() or stripped[0] == "#":
            return self.parse_edge_list(stripped)
        return self.parse_graph6(stripped.splitlines()[0])

    def load(self, path: str | Path) -> LabeledGraph:
        path = Path(path)
        try:
            text = path.read_text(encoding="ascii")
        except (OSError, UnicodeDecodeError) as e:
            raise GraphParseError(f"Não foi possível ler {path}: {e}") from e
        graph = self.parse(text)
        logger.info(f"Grafo carregado de {path}: {graph}")
        return graph

    def to_graph6(self, graph: LabeledGraph) -> str:
        return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()

    def to_edge_list(self, graph: LabeledGraph) -> str:
        lines = [str(graph.n)] + [f"{i} {j}" for i, j in graph.edge_list()]
        return "\n".join(lines) + "\n"
