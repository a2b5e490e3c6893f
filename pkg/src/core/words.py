"""Word primitives: reduction, pattern containment, 12-representation, duality."""

from collections import Counter
from typing import Iterable, Sequence

from src.core.exceptions import WordError
from src.core.models import LabeledGraph, Pattern, Word


def reduce(word: Sequence[int]) -> Pattern:
    """red(w): the i-th smallest letter becomes i."""
    if not word:
        raise WordError("Não é possível reduzir uma palavra vazia")
    rank = {letter: position + 1 for position, letter in enumerate(sorted(set(word)))}
    return tuple(rank[letter] for letter in word)


def _check_pattern(pattern: Sequence[int]) -> Pattern:
    pattern = tuple(pattern)
    if not pattern or reduce(pattern) != pattern:
        raise WordError(f"Padrão não está na forma reduzida: {pattern}")
    return pattern


def _sign(a: int, b: int) -> int:
    return (a > b) - (a < b)


def _extend(word: Word, pattern: Pattern, chosen: list[int], start: int, stop: int) -> bool:
    slot = len(chosen)
    if slot == len(pattern):
        return True
    for index in range(start, stop):
        letter = word[index]
        if all(_sign(pattern[s], pattern[slot]) == _sign(word[chosen[s]], letter) for s in range(slot)):
            chosen.append(index)
            if _extend(word, pattern, chosen, index + 1, stop):
                return True
            chosen.pop()
    return False


def contains_pattern(word: Sequence[int], pattern: Sequence[int]) -> tuple[int, ...] | None:
    """Lexicographically smallest 1-based occurrence of `pattern` in `word`, or None."""
    pattern = _check_pattern(pattern)
    word = tuple(word)
    chosen: list[int] = []
    if _extend(word, pattern, chosen, 0, len(word)):
        return tuple(index + 1 for index in chosen)
    return None


def contains_pattern_ending_at(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """True when some occurrence uses the last position of `word` as its last slot."""
    word = tuple(word)
    if len(word) < len(pattern):
        return False
    last = len(word) - 1
    k = len(pattern)
    for chosen_prefix in _prefix_occurrences(word, pattern[:-1], last):
        letter = word[last]
        if all(_sign(pattern[s], pattern[k - 1]) == _sign(word[chosen_prefix[s]], letter) for s in range(k - 1)):
            return True
    return False


def _prefix_occurrences(word: Word, prefix: Sequence[int], stop: int):
    # all occurrences of the order type of `prefix` among word[:stop]
    chosen: list[int] = []

    def walk(start: int):
        slot = len(chosen)
        if slot == len(prefix):
            yield tuple(chosen)
            return
        for index in range(start, stop):
            if all(_sign(prefix[s], prefix[slot]) == _sign(word[chosen[s]], word[index]) for s in range(slot)):
                chosen.append(index)
                yield from walk(index + 1)
                chosen.pop()

    yield from walk(0)


def avoids(word: Sequence[int], pattern: Sequence[int]) -> bool:
    return contains_pattern(word, pattern) is None


def avoids_all(word: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return all(avoids(word, pattern) for pattern in patterns)


def occurrence_bounds(word: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """First and last 0-based positions of every letter 1..n."""
    first = [-1] * (n + 1)
    last = [-1] * (n + 1)
    for position, letter in enumerate(word):
        if not 1 <= letter <= n:
            raise WordError(f"Letra {letter} fora do alfabeto {{1..{n}}}")
        if first[letter] < 0:
            first[letter] = position
        last[letter] = position
    missing = [letter for letter in range(1, n + 1) if first[letter] < 0]
    if missing:
        raise WordError(f"A palavra não contém as letras {missing}")
    return first, last


def twelve_represents(word: Sequence[int], graph: LabeledGraph) -> bool:
    """ij (i<j) is an edge iff every j occurs before every i."""
    first, last = occurrence_bounds(word, graph.n)
    for i in range(1, graph.n + 1):
        for j in range(i + 1, graph.n + 1):
            if (last[j] < first[i]) != graph.has_edge(i, j):
                return False
    return True


def graph_from_word(word: Sequence[int], n: int | None = None) -> LabeledGraph:
    n = max(word) if n is None else n
    first, last = occurrence_bounds(word, n)
    return LabeledGraph.from_edges(
        n,
        ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if last[j] < first[i]),
    )


def normalize_at_most_twice(word: Sequence[int], graph: LabeledGraph) -> Word:
    """Keep only the first and last copy of every letter."""
    if not twelve_represents(word, graph):
        raise WordError("A palavra não 12-representa o grafo informado")
    first, last = occurrence_bounds(word, graph.n)
    return tuple(letter for position, letter in enumerate(word) if position in (first[letter], last[letter]))


def reverse_word(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


def complement_word(word: Sequence[int], n: int | None = None) -> Word:
    """c(w): every letter x becomes n+1-x."""
    n = max(word) if n is None else n
    return tuple(n + 1 - letter for letter in word)


def dual_word(word: Sequence[int], n: int | None = None) -> Word:
    """c(r(w))."""
    return complement_word(reverse_word(word), n)


def dual_pattern(pattern: Sequence[int]) -> Pattern:
    return dual_word(pattern, max(pattern))


def supplement_graph(graph: LabeledGraph) -> LabeledGraph:
    """c(G): vertex i relabeled n+1-i."""
    return graph.supplement()


def restrict_word(word: Sequence[int], subset: Iterable[int]) -> Word:
    """w_S reduced together with the labels of S."""
    kept = set(subset)
    return reduce([letter for letter in word if letter in kept])


def multiplicities(word: Sequence[int]) -> Counter:
    return Counter(word)
