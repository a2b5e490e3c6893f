"""Brute-force ground truth: word search, labeling search, small-graph enumeration."""

import logging
import time
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb
from typing import Callable, Iterable, Iterator, Sequence

import networkx as nx

from src.core.exceptions import BudgetExceededError, InvariantViolation
from src.core.models import LabeledGraph, Word
from src.core.words import contains_pattern_ending_at, reduce, twelve_represents
from src.schemas.census_schemas import SearchBudget
from src.services.pattern_matcher import find_any
from src.utils.pattern_catalog import (
    BIPARTITE_PERMUTATION,
    INTERVAL,
    PERMUTATION,
    TRIVIALLY_PERFECT,
)

logger = logging.getLogger(__name__)

# atlas of all graphs up to 7 vertices
ATLAS_MAX_N = 7
_CLOCK_EVERY = 1024


class _WordSearch:
    """Depth-first search over words with bounded letter multiplicities.

    Letters are tried in ascending order and multiplicity vectors in
    lexicographic order, so the first word found is reproducible.
    """

    def __init__(self, graph: LabeledGraph, avoid: Sequence[tuple[int, ...]], budget: SearchBudget):
        self.graph = graph
        self.avoid = avoid
        self.budget = budget
        self.deadline = time.monotonic() + budget.time_cap if budget.time_cap else None
        self.nodes = 0
        n = graph.n
        # a first copy of i needs every larger neighbor finished
        self.larger_neighbors = [[j for j in range(i + 1, n + 1) if graph.has_edge(i, j)] for i in range(n + 1)]
        # a last copy of j needs every smaller non-neighbor started
        self.smaller_non_neighbors = [[i for i in range(1, j) if not graph.has_edge(i, j)] for j in range(n + 1)]

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            raise BudgetExceededError(f"Busca excedeu o limite de {self.budget.max_nodes} nós")
        if self.deadline is not None and self.nodes % _CLOCK_EVERY == 0 and time.monotonic() > self.deadline:
            raise BudgetExceededError(f"Busca excedeu o limite de tempo de {self.budget.time_cap}s")

    def run(self) -> Word | None:
        n = self.graph.n
        for counts in product(range(1, self.budget.max_occurrences + 1), repeat=n):
            logger.debug(f"Multiplicidades {counts} para {self.graph}")
            remaining = [0, *counts]
            placed = [0] * (n + 1)
            word: list[int] = []
            if self._extend(word, remaining, placed, sum(counts)):
                return tuple(word)
        return None

    def _extend(self, word: list[int], remaining: list[int], placed: list[int], total: int) -> bool:
        if len(word) == total:
            if not twelve_represents(word, self.graph):
                raise InvariantViolation(f"Busca produziu palavra inválida {word} para {self.graph}")
            return True
        self._tick()
        for letter in range(1, self.graph.n + 1):
            if remaining[letter] == 0:
                continue
            if placed[letter] == 0 and any(remaining[j] for j in self.larger_neighbors[letter]):
                continue
            if remaining[letter] == 1 and any(placed[i] == 0 for i in self.smaller_non_neighbors[letter]):
                continue
            word.append(letter)
            remaining[letter] -= 1
            placed[letter] += 1
            if not any(contains_pattern_ending_at(word, pattern) for pattern in self.avoid):
                if self._extend(word, remaining, placed, total):
                    return True
            word.pop()
            remaining[letter] += 1
            placed[letter] -= 1
        return False


def brute_force_representant(
    graph: LabeledGraph,
    avoid: Iterable[Sequence[int]] = (),
    budget: SearchBudget | None = None,
) -> Word | None:
    """Some representant of `graph` avoiding every pattern in `avoid`, or None when none exists."""
    budget = budget or SearchBudget()
    if graph.n > budget.max_n:
        raise BudgetExceededError(f"n={graph.n} excede o limite da busca exaustiva (max_n={budget.max_n})")
    patterns = []
    for pattern in avoid:
        pattern = tuple(pattern)
        if reduce(pattern) != pattern:
            raise ValueError(f"Padrão não reduzido: {pattern}")
        patterns.append(pattern)
    if graph.n == 0:
        return ()
    search = _WordSearch(graph, patterns, budget)
    word = search.run()
    logger.debug(f"Busca em {graph} evitando {patterns}: {word} ({search.nodes} nós)")
    return word


def search_labelings(
    graph: LabeledGraph,
    predicate: Callable[[LabeledGraph], bool],
) -> dict[int, int] | None:
    """First relabeling (old vertex -> new label), in lexicographic order, whose graph satisfies `predicate`."""
    for labels in permutations(graph.vertices):
        mapping = {vertex: label for vertex, label in zip(graph.vertices, labels)}
        if predicate(graph.relabel(mapping)):
            return mapping
    return None


def canonical_form(graph: LabeledGraph) -> int:
    """Smallest edge bitmask over all relabelings."""
    return min(
        graph.relabel({vertex: label for vertex, label in zip(graph.vertices, labels)}).to_bitmask()
        for labels in permutations(graph.vertices)
    )


def enumerate_labeled_graphs(n: int) -> Iterator[LabeledGraph]:
    for mask in range(1 << comb(n, 2)):
        yield LabeledGraph.from_bitmask(n, mask)


def enumerate_unlabeled_graphs(n: int) -> list[LabeledGraph]:
    if n > ATLAS_MAX_N:
        raise BudgetExceededError(f"Atlas de grafos cobre apenas n <= {ATLAS_MAX_N}")
    return [LabeledGraph.from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


def is_representable_unlabeled(
    graph: LabeledGraph,
    avoid: Iterable[Sequence[int]] = (),
    budget: SearchBudget | None = None,
) -> bool:
    patterns = [tuple(p) for p in avoid]
    return search_labelings(graph, lambda g: brute_force_representant(g, patterns, budget) is not None) is not None


@dataclass(frozen=True)
class ClassFlags:
    permutation: bool
    trivially_perfect: bool
    bipartite_permutation: bool
    interval_complementable: bool


def _has_labeling_avoiding(graph: LabeledGraph, patterns) -> bool:
    return search_labelings(graph, lambda g: find_any(g, patterns) is None) is not None


def is_p4_c4_free(graph: LabeledGraph) -> bool:
    nx_graph = graph.to_networkx()
    path, cycle = nx.path_graph(4), nx.cycle_graph(4)
    for subset in combinations(graph.vertices, 4):
        induced = nx_graph.subgraph(subset)
        if induced.number_of_edges() in (3, 4) and (
            nx.is_isomorphic(induced, path) or nx.is_isomorphic(induced, cycle)
        ):
            return False
    return True


def class_oracles(graph: LabeledGraph) -> ClassFlags:
    flags = ClassFlags(
        permutation=_has_labeling_avoiding(graph, PERMUTATION),
        trivially_perfect=_has_labeling_avoiding(graph, TRIVIALLY_PERFECT),
        bipartite_permutation=_has_labeling_avoiding(graph, BIPARTITE_PERMUTATION),
        interval_complementable=_has_labeling_avoiding(graph.complement(), INTERVAL),
    )
    if flags.trivially_perfect != is_p4_c4_free(graph):
        raise InvariantViolation(f"Oráculos de trivialmente perfeito discordam em {graph}")
    if flags.bipartite_permutation != (flags.permutation and nx.is_bipartite(graph.to_networkx())):
        raise InvariantViolation(f"Oráculos de permutação bipartida discordam em {graph}")
    return flags
