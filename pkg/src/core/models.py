from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from src.core.exceptions import GraphParseError, WordError

Word = tuple[int, ...]
Pattern = tuple[int, ...]


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on {1..n}; labels are the vertices."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise GraphParseError(f"Número de vértices inválido: {self.n}")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise GraphParseError(f"Aresta inválida {i}-{j} para n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "LabeledGraph":
        normalized = set()
        for edge in edges:
            i, j = edge
            if i == j:
                raise GraphParseError(f"Laço no vértice {i} não é permitido")
            normalized.add((min(i, j), max(i, j)))
        return cls(n, frozenset(normalized))

    @classmethod
    def from_bitmask(cls, n: int, mask: int) -> "LabeledGraph":
        """Bit k of `mask` selects the k-th pair of combinations(1..n, 2)."""
        pairs = list(combinations(range(1, n + 1), 2))
        return cls(n, frozenset(pair for k, pair in enumerate(pairs) if mask >> k & 1))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "LabeledGraph":
        order = sorted(graph.nodes())
        index = {node: position + 1 for position, node in enumerate(order)}
        return cls.from_edges(len(order), ((index[u], index[v]) for u, v in graph.edges()))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    def to_bitmask(self) -> int:
        pairs = combinations(range(1, self.n + 1), 2)
        return sum(1 << k for k, pair in enumerate(pairs) if pair in self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, v: int) -> list[int]:
        return [u for u in self.vertices if self.has_edge(u, v)]

    def is_isolated(self, v: int) -> bool:
        return not any(self.has_edge(u, v) for u in self.vertices)

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices if self.is_isolated(v)]

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def complement(self) -> "LabeledGraph":
        pairs = combinations(self.vertices, 2)
        return LabeledGraph(self.n, frozenset(pair for pair in pairs if pair not in self.edges))

    def supplement(self) -> "LabeledGraph":
        """c(G): every label i becomes n+1-i."""
        return self.relabel({v: self.n + 1 - v for v in self.vertices})

    def relabel(self, mapping: dict[int, int]) -> "LabeledGraph":
        if sorted(mapping.values()) != list(self.vertices):
            raise GraphParseError("A reetiquetagem deve ser uma permutação de {1..n}")
        return LabeledGraph.from_edges(self.n, ((mapping[i], mapping[j]) for i, j in self.edges))

    def induced(self, subset: Iterable[int]) -> "LabeledGraph":
        """Induced subgraph on `subset`, relabeled order-isomorphically to {1..k}."""
        kept = sorted(set(subset))
        index = {v: position + 1 for position, v in enumerate(kept)}
        return LabeledGraph.from_edges(
            len(kept),
            ((index[i], index[j]) for i, j in self.edges if i in index and j in index),
        )

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def is_edgeless(self) -> bool:
        return not self.edges

    def __str__(self) -> str:
        edges = ",".join(f"{i}-{j}" for i, j in self.edge_list())
        return f"G(n={self.n}; {edges or '-'})"


def parse_word(text: str) -> Word:
    """Space- or comma-separated integers; a bare digit string is read one letter per digit."""
    cleaned = text.replace(",", " ").strip()
    if not cleaned:
        raise WordError("Palavra vazia")
    try:
        if " " in cleaned:
            letters = tuple(int(token) for token in cleaned.split())
        else:
            letters = tuple(int(ch) for ch in cleaned)
    except ValueError as e:
        raise WordError(f"Palavra inválida '{text}': {e}") from e
    if any(letter < 1 for letter in letters):
        raise WordError(f"Letras devem ser inteiros positivos: '{text}'")
    return letters


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(letter) for letter in word)


def compact_word(word: Sequence[int]) -> str:
    """Digit string when every letter is below 10, otherwise the spaced form."""
    if all(letter < 10 for letter in word):
        return "".join(str(letter) for letter in word)
    return format_word(word)
