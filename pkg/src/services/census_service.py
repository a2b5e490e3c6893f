import logging
import time
from itertools import permutations
from math import comb
from multiprocessing import Pool
from typing import Callable, Sequence

from src.core.exceptions import BudgetExceededError
from src.core.models import LabeledGraph
from src.schemas.census_schemas import CensusRow, Disagreement, SearchBudget
from src.services.constructors import pattern_label, represent_length_two, represent_pattern
from src.services.oracle import (
    brute_force_representant,
    canonical_form,
    class_oracles,
    enumerate_unlabeled_graphs,
    is_representable_unlabeled,
)
from src.services.pattern_matcher import is_12_labeled

logger = logging.getLogger(__name__)

# patterns whose labeled decision comes from a forbidden-pattern characterization
PATTERN_DECIDED = ("111", "121", "212", "231", "312", "123", "132", "213", "211", "221")
# agreement with the oracle is a hard requirement for these
ASSERTED = ("121", "231", "123", "132", "211")


def parse_patterns(text: str) -> list[tuple[int, ...]]:
    return [tuple(int(ch) for ch in token.strip()) for token in text.split(",") if token.strip()]


def pattern_decision(graph: LabeledGraph, pattern: Sequence[int]) -> bool | None:
    """Labeled decision from the pattern characterizations alone, or None when there is none."""
    label = pattern_label(pattern)
    if len(pattern) == 2:
        certificate = represent_length_two(graph, pattern)
    elif label == "111":
        return is_12_labeled(graph)
    elif label in PATTERN_DECIDED:
        certificate = represent_pattern(graph, label, use_oracle=False)
    else:
        return None
    if certificate.status == "unknown":
        return None
    return certificate.is_represented


def oracle_decision(graph: LabeledGraph, pattern: Sequence[int], budget: SearchBudget) -> bool | None:
    try:
        return brute_force_representant(graph, [tuple(pattern)], budget) is not None
    except BudgetExceededError:
        return None


def _classify(item: tuple) -> list[tuple[bool | None, bool | None]]:
    n, mask, patterns, budget, with_oracle = item
    graph = LabeledGraph.from_bitmask(n, mask)
    return [
        (pattern_decision(graph, pattern), oracle_decision(graph, pattern, budget) if with_oracle else None)
        for pattern in patterns
    ]


def _run_parallel(func: Callable, items: list, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with Pool(processes=min(jobs, len(items))) as pool:
            return pool.map(func, items)
    return [func(item) for item in items]


def _unlabeled_count(n: int, decided: dict[int, bool | None]) -> int | None:
    """Number of isomorphism classes with at least one accepted labeling."""
    if any(value is None for value in decided.values()):
        return None
    count = 0
    for graph in enumerate_unlabeled_graphs(n):
        for labels in permutations(graph.vertices):
            mapping = dict(zip(graph.vertices, labels))
            if decided[graph.relabel(mapping).to_bitmask()]:
                count += 1
                break
    return count


def _classify_all(n, patterns, budget, jobs, with_oracle):
    masks = range(1 << comb(n, 2))
    work = [(n, mask, tuple(patterns), budget, with_oracle) for mask in masks]
    results = _run_parallel(_classify, work, jobs)
    return list(masks), results


def census(
    n: int,
    patterns: Sequence[Sequence[int]],
    budget: SearchBudget | None = None,
    jobs: int = 1,
    timings: bool = False,
    with_oracle: bool = True,
) -> list[CensusRow]:
    budget = budget or SearchBudget()
    use_oracle = with_oracle and n <= budget.max_n
    if with_oracle and not use_oracle:
        logger.warning(f"n={n} acima de max_n={budget.max_n}; contagens do oráculo omitidas")
    start = time.monotonic()
    masks, results = _classify_all(n, patterns, budget, jobs, use_oracle)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return _rows(n, patterns, masks, results, use_oracle, elapsed_ms if timings else None)


def _rows(n, patterns, masks, results, use_oracle: bool, elapsed_ms: int | None) -> list[CensusRow]:
    unlabeled_total = len(enumerate_unlabeled_graphs(n))
    rows = []
    for index, pattern in enumerate(patterns):
        by_pattern = {mask: result[index][0] for mask, result in zip(masks, results)}
        by_oracle = {mask: result[index][1] for mask, result in zip(masks, results)}
        count_pattern = None if any(v is None for v in by_pattern.values()) else sum(by_pattern.values())
        count_oracle = None if not use_oracle or any(v is None for v in by_oracle.values()) else sum(by_oracle.values())
        agree = None
        if count_pattern is not None and count_oracle is not None:
            agree = by_pattern == by_oracle
        reference = by_pattern if count_pattern is not None else by_oracle
        row = CensusRow(
            n=n,
            pattern=pattern_label(pattern),
            labeled_total=len(masks),
            labeled_count_pattern=count_pattern,
            labeled_count_oracle=count_oracle,
            unlabeled_count=_unlabeled_count(n, reference),
            unlabeled_total=unlabeled_total,
            agree=agree,
            wall_time_ms=elapsed_ms,
        )
        logger.info(
            f"Censo n={n} p={row.pattern}: padrão={row.labeled_count_pattern} "
            f"oráculo={row.labeled_count_oracle} não rotulados={row.unlabeled_count}/{unlabeled_total}"
        )
        rows.append(row)
    return rows


def cross_validate(
    n: int,
    patterns: Sequence[Sequence[int]],
    budget: SearchBudget | None = None,
    jobs: int = 1,
    timings: bool = False,
) -> tuple[list[CensusRow], list[Disagreement]]:
    """Census plus the list of labeled graphs on which pattern and oracle decisions differ."""
    budget = budget or SearchBudget()
    if n > budget.max_n:
        raise BudgetExceededError(f"Validação cruzada exige n <= {budget.max_n}")
    start = time.monotonic()
    masks, results = _classify_all(n, patterns, budget, jobs, True)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    disagreements = []
    for index, pattern in enumerate(patterns):
        for mask, result in zip(masks, results):
            decided, searched = result[index]
            if decided is None or searched is None or decided == searched:
                continue
            graph = LabeledGraph.from_bitmask(n, mask)
            disagreements.append(Disagreement(
                n=n,
                pattern=pattern_label(pattern),
                edges=",".join(f"{i}-{j}" for i, j in graph.edge_list()),
                pattern_decision=decided,
                oracle_decision=searched,
                canonical=canonical_form(graph),
            ))
    rows = _rows(n, patterns, masks, results, True, elapsed_ms if timings else None)
    for disagreement in disagreements:
        logger.error(f"Divergência: {disagreement.model_dump()}")
    return rows, disagreements


# unlabeled word classes against the graph-class oracles
CLASS_EQUIVALENCES = {
    "121": "permutation",
    "231": "trivially_perfect",
    "321": "bipartite_permutation",
}


def class_equivalences(n: int, budget: SearchBudget | None = None) -> list[str]:
    """Mismatches between word-representability and the class oracles over unlabeled graphs."""
    budget = budget or SearchBudget()
    mismatches = []
    for graph in enumerate_unlabeled_graphs(n):
        flags = class_oracles(graph)
        for label, flag in CLASS_EQUIVALENCES.items():
            pattern = tuple(int(ch) for ch in label)
            if is_representable_unlabeled(graph, [pattern], budget) != getattr(flags, flag):
                mismatches.append(f"{graph}: {label} vs {flag}")
        representable = is_representable_unlabeled(graph, [], budget)
        if representable != is_representable_unlabeled(graph, [(1, 1, 1)], budget):
            mismatches.append(f"{graph}: 111 vs 12-representável")
    logger.info(f"Equivalências de classe n={n}: {len(mismatches)} divergências")
    return mismatches


class CensusService:
    """Census, cross-validation and class checks sharing one budget and worker count."""

    def __init__(self, budget: SearchBudget | None = None, jobs: int = 1, timings: bool = False):
        self.budget = budget or SearchBudget()
        self.jobs = jobs
        self.timings = timings

    def census(self, n: int, patterns: Sequence[Sequence[int]]) -> list[CensusRow]:
        return census(n, patterns, budget=self.budget, jobs=self.jobs, timings=self.timings)

    def cross_validate(self, n: int, patterns: Sequence[Sequence[int]]) -> tuple[list[CensusRow], list[Disagreement]]:
        return cross_validate(n, patterns, budget=self.budget, jobs=self.jobs, timings=self.timings)

    def class_equivalences(self, n: int) -> list[str]:
        return class_equivalences(n, self.budget)
