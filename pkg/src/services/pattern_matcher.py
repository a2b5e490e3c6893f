import logging
from typing import Iterable

from src.core.models import LabeledGraph
from src.utils.pattern_catalog import (
    BIPARTITE_PERMUTATION,
    FP12,
    FP211,
    GROUNDED_L,
    INTERVAL,
    MPT,
    PERMUTATION,
    TRIVIALLY_PERFECT,
    OrderedPattern,
    PairConstraint,
    PatternWitness,
)

logger = logging.getLogger(__name__)


def _satisfies(graph: LabeledGraph, value: PairConstraint, u: int, v: int) -> bool:
    if value is PairConstraint.EDGE:
        return graph.has_edge(u, v)
    if value is PairConstraint.NONEDGE:
        return not graph.has_edge(u, v)
    return True


def find_pattern(graph: LabeledGraph, pattern: OrderedPattern) -> PatternWitness | None:
    """Lexicographically smallest increasing vertex tuple that matches `pattern`.

    Slots are filled left to right; every constrained pair that closes at the
    new slot is checked immediately, so dead prefixes are cut early.
    """
    # constraints grouped by their later slot
    closing: list[list[tuple[int, PairConstraint]]] = [[] for _ in range(pattern.arity)]
    for a, b, value in pattern.constrained_pairs():
        closing[b].append((a, value))

    chosen: list[int] = []

    def walk(start: int) -> bool:
        slot = len(chosen)
        if slot == pattern.arity:
            return True
        remaining = pattern.arity - slot - 1
        for v in range(start, graph.n + 1 - remaining):
            if all(_satisfies(graph, value, chosen[a], v) for a, value in closing[slot]):
                chosen.append(v)
                if walk(v + 1):
                    return True
                chosen.pop()
        return False

    if walk(1):
        return PatternWitness(pattern.name, tuple(chosen))
    return None


def find_any(graph: LabeledGraph, patterns: Iterable[OrderedPattern]) -> PatternWitness | None:
    """First witness over `patterns`, scanned in the given order."""
    for pattern in patterns:
        witness = find_pattern(graph, pattern)
        if witness is not None:
            logger.debug(f"{pattern.name} encontrado em {witness.vertices} de {graph}")
            return witness
    return None


def umbrellas(graph: LabeledGraph) -> list[tuple[int, int, int]]:
    """Triples a < b < c with ab, bc non-edges and ac an edge."""
    found = []
    for a in graph.vertices:
        for c in range(a + 2, graph.n + 1):
            if not graph.has_edge(a, c):
                continue
            for b in range(a + 1, c):
                if not graph.has_edge(a, b) and not graph.has_edge(b, c):
                    found.append((a, b, c))
    return sorted(found)


def b_vertices(graph: LabeledGraph) -> list[int]:
    return sorted({b for _, b, _ in umbrellas(graph)})


def is_permutation_labeled(graph: LabeledGraph) -> bool:
    return find_any(graph, PERMUTATION) is None


def is_trivially_perfect_labeled(graph: LabeledGraph) -> bool:
    return find_any(graph, TRIVIALLY_PERFECT) is None


def is_bipartite_permutation_labeled(graph: LabeledGraph) -> bool:
    return find_any(graph, BIPARTITE_PERMUTATION) is None


def is_interval_labeled(graph: LabeledGraph) -> bool:
    return find_any(graph, INTERVAL) is None


def is_12_labeled(graph: LabeledGraph) -> bool:
    return find_any(graph, FP12) is None


def is_mpt_labeled(graph: LabeledGraph) -> bool:
    return find_any(graph, MPT) is None


def is_grounded_l_labeled(graph: LabeledGraph) -> bool:
    return find_any(graph, GROUNDED_L) is None


def is_211_labeled(graph: LabeledGraph) -> bool:
    return find_any(graph, FP211) is None
