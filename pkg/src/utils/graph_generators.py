"""Small named graphs used by tests, the census and the CLI `--graph-name` option."""

from typing import Callable

from src.core.exceptions import GraphParseError
from src.core.models import LabeledGraph


def path(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> LabeledGraph:
    if n < 3:
        raise GraphParseError(f"Ciclo exige n >= 3, recebido {n}")
    return LabeledGraph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def empty(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, ())


def star(n: int) -> LabeledGraph:
    """Vertex 1 joined to 2..n."""
    return LabeledGraph.from_edges(n, ((1, j) for j in range(2, n + 1)))


def twin_house() -> LabeledGraph:
    # a..f -> 1..6; square a-b-c-f, roofs d and e over c-f
    return LabeledGraph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 6), (3, 6), (3, 5), (5, 6), (1, 6)])


def figure_word_example() -> LabeledGraph:
    """Graph represented by 4624153."""
    return LabeledGraph.from_edges(6, [(1, 2), (1, 4), (1, 6), (2, 6), (3, 4), (3, 5), (3, 6), (5, 6)])


def figure_hook_example() -> LabeledGraph:
    """Graph whose 123-avoiding representant is 432152."""
    return LabeledGraph.from_edges(5, [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def figure_interval_example() -> LabeledGraph:
    """Raw interval formula gives 654436235112, which represents it but contains 132 (FP132.b at 2 3 5 6)."""
    return LabeledGraph.from_edges(6, [(1, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 6), (3, 4)])


def edge_13() -> LabeledGraph:
    """Three vertices with the single edge 13; its 211-avoiding representant is 2312."""
    return LabeledGraph.from_edges(3, [(1, 3)])


SIZED: dict[str, Callable[[int], LabeledGraph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "star": star,
}

FIXED: dict[str, Callable[[], LabeledGraph]] = {
    "twin-house": twin_house,
    "fig-word": figure_word_example,
    "fig-hook": figure_hook_example,
    "fig-interval": figure_interval_example,
    "edge-13": edge_13,
}


def by_name(name: str) -> LabeledGraph:
    """`cycle:5`, `path:4`, `twin-house`, ..."""
    family, _, size = name.partition(":")
    if family in FIXED and not size:
        return FIXED[family]()
    if family in SIZED and size:
        try:
            n = int(size)
        except ValueError:
            raise GraphParseError(f"Tamanho inválido em '{name}'") from None
        if n < 0:
            raise GraphParseError(f"Tamanho negativo em '{name}'")
        return SIZED[family](n)
    known = sorted(FIXED) + [f"{family}:n" for family in sorted(SIZED)]
    raise GraphParseError(f"Grafo nomeado desconhecido '{name}'; use um de {', '.join(known)}")
