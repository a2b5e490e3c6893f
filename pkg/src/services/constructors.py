"""Constructive representant builders.

Each builder checks the relevant forbidden-pattern catalog on the given
labeling and either returns a verified representant or the witness that
refutes it.  Builders without a pattern characterization fall back to the
brute-force oracle and say so in the certificate.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

import networkx as nx

from src.core.exceptions import BudgetExceededError, ForbiddenPatternError, InvariantViolation, WordError
from src.core.geometry_models import Co132IntervalModel, HookModel, MptModel
from src.core.models import LabeledGraph, Word, compact_word
from src.core.words import (
    avoids,
    avoids_all,
    dual_pattern,
    dual_word,
    multiplicities,
    normalize_at_most_twice,
    supplement_graph,
    twelve_represents,
)
from src.schemas.census_schemas import SearchBudget
from src.schemas.certificate_schemas import Certificate
from src.services import geometry
from src.services.oracle import brute_force_representant, search_labelings
from src.services.pattern_matcher import b_vertices, find_any, find_pattern, umbrellas
from src.utils.pattern_catalog import (
    BIPARTITE_PERMUTATION,
    FP12,
    FP123,
    FP132,
    FP211,
    FP_COMP,
    PERMUTATION,
    TRIVIALLY_PERFECT,
    PatternWitness,
)

logger = logging.getLogger(__name__)

P111 = (1, 1, 1)
P121 = (1, 2, 1)
P212 = (2, 1, 2)
P231 = (2, 3, 1)
P321 = (3, 2, 1)
P123 = (1, 2, 3)
P132 = (1, 3, 2)
P211 = (2, 1, 1)
P221 = (2, 2, 1)

PATTERN_SELECTORS = (
    "111", "121", "212", "231", "312", "321", "123", "132", "213", "211", "221", "112", "122",
    "set:121+212", "set:211+221", "none",
)
# decided on the supplement c(G) through c(r(p))
DUAL_SELECTORS = {"212": "121", "312": "231", "213": "132", "221": "211"}
ORACLE_ONLY_SELECTORS = ("112", "122")


def pattern_label(pattern: Sequence[int]) -> str:
    return compact_word(pattern)


def selector_patterns(selector: str) -> tuple[tuple[int, ...], ...]:
    """Patterns a certificate for `selector` must avoid."""
    if selector == "none":
        return ()
    names = selector[len("set:"):].split("+") if selector.startswith("set:") else [selector]
    return tuple(tuple(int(ch) for ch in name) for name in names)


def _verified(graph: LabeledGraph, word: Sequence[int], patterns: Sequence[Sequence[int]],
              method: str = "pattern", reason: str | None = None) -> Certificate:
    word = tuple(word)
    if not twelve_represents(word, graph):
        raise InvariantViolation(f"Palavra {compact_word(word)} não 12-representa {graph}")
    if not avoids_all(word, patterns):
        found = ", ".join(pattern_label(p) for p in patterns if not avoids(word, p))
        raise InvariantViolation(f"Palavra {compact_word(word)} contém o padrão {found}")
    return Certificate.represented(word, [pattern_label(p) for p in patterns], method=method, reason=reason)


def _oracle_certificate(graph: LabeledGraph, patterns: Sequence[Sequence[int]],
                        budget: SearchBudget | None, use_oracle: bool, reason: str) -> Certificate:
    if not use_oracle:
        return Certificate.unknown(f"{reason}; busca exaustiva desabilitada", method="pattern")
    budget = budget or SearchBudget()
    try:
        word = brute_force_representant(graph, patterns, budget)
    except BudgetExceededError as e:
        logger.warning(f"Oráculo sem resposta para {graph}: {e.detail}")
        return Certificate.unknown(e.detail, budget=budget)
    if word is None:
        return Certificate.refuted_by_oracle(budget, reason=f"{reason}; nenhuma palavra encontrada")
    return _verified(graph, word, patterns, method="oracle", reason=reason)


def orientation(graph: LabeledGraph) -> nx.DiGraph:
    """Tournament with i -> j for a non-edge ij (i < j) and j -> i for an edge."""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(graph.vertices)
    for i in graph.vertices:
        for j in range(i + 1, graph.n + 1):
            if graph.has_edge(i, j):
                digraph.add_edge(j, i)
            else:
                digraph.add_edge(i, j)
    return digraph


def permutation_representant(graph: LabeledGraph) -> Certificate:
    witness = find_any(graph, PERMUTATION)
    if witness is not None:
        return Certificate.refuted(witness)
    digraph = orientation(graph)
    try:
        order = list(nx.topological_sort(digraph))
    except nx.NetworkXUnfeasible as e:
        raise InvariantViolation(f"Orientação cíclica sem padrão proibido em {graph}") from e
    # an acyclic tournament has exactly one topological order
    for first, second in zip(order, order[1:]):
        if not digraph.has_edge(first, second):
            raise InvariantViolation(f"Ordem topológica não é única em {graph}")
    return _verified(graph, order, [(1, 1)])


def represent_111(graph: LabeledGraph, budget: SearchBudget | None = None, use_oracle: bool = True) -> Certificate:
    certificate = permutation_representant(graph)
    if certificate.is_represented:
        return _verified(graph, certificate.word, [P111])
    witness = find_any(graph, FP12)
    if witness is not None:
        return Certificate.refuted(witness)
    return _oracle_certificate(graph, [P111], budget, use_oracle, "grafo 12-representável sem permutação")


def represent_121(graph: LabeledGraph) -> Certificate:
    certificate = permutation_representant(graph)
    if not certificate.is_represented:
        return certificate
    return _verified(graph, certificate.word, [P121])


def represent_231(graph: LabeledGraph) -> Certificate:
    witness = find_any(graph, TRIVIALLY_PERFECT)
    if witness is not None:
        return Certificate.refuted(witness)
    certificate = permutation_representant(graph)
    if not certificate.is_represented:
        raise InvariantViolation(f"Sem FP_INT/FP_COMP mas sem permutação em {graph}")
    return _verified(graph, certificate.word, [P231])


def _core(graph: LabeledGraph) -> tuple[list[int], LabeledGraph]:
    core_vertices = [v for v in graph.vertices if not graph.is_isolated(v)]
    return core_vertices, graph.induced(core_vertices)


def _core_witness(graph: LabeledGraph, patterns) -> PatternWitness | None:
    """Witness found on the non-isolated part, reported with the original labels."""
    core_vertices, core = _core(graph)
    witness = find_any(core, patterns)
    if witness is None:
        return None
    return PatternWitness(witness.pattern, tuple(core_vertices[v - 1] for v in witness.vertices))


@dataclass(frozen=True)
class IsolatedLift:
    mapping: dict[int, int]
    graph: LabeledGraph
    word: Word


def permutation_after_isolated_lift(graph: LabeledGraph) -> IsolatedLift:
    """Relabel isolated vertices to the top labels and represent the result by a permutation.

    Non-isolated vertices keep their relative order and take labels 1..m; the
    isolated ones follow in ascending order and are appended to the word.
    """
    core_vertices, core = _core(graph)
    isolated = graph.isolated_vertices()
    mapping = {v: position for position, v in enumerate(core_vertices + isolated, start=1)}
    lifted = graph.relabel(mapping)
    certificate = permutation_representant(core)
    if not certificate.is_represented:
        witness = PatternWitness(
            certificate.witness.pattern,
            tuple(core_vertices[v - 1] for v in certificate.witness.vertices),
        )
        raise ForbiddenPatternError(f"Núcleo de {graph} contém {witness.pattern}", witness)
    word = certificate.word + tuple(range(len(core_vertices) + 1, graph.n + 1))
    if not twelve_represents(word, lifted):
        raise InvariantViolation(f"Palavra após reetiquetagem não representa {lifted}")
    return IsolatedLift(mapping, lifted, word)


def _lifted_fallback(graph: LabeledGraph, patterns: Sequence[Sequence[int]], budget: SearchBudget | None,
                     use_oracle: bool) -> Certificate:
    """Oracle answer on the original labels, carrying the verified word of the lifted labeling."""
    lift = permutation_after_isolated_lift(graph)
    _verified(lift.graph, lift.word, patterns)
    logger.info(f"Reetiquetagem dos isolados de {graph}: {lift.mapping} -> {compact_word(lift.word)}")
    certificate = _oracle_certificate(graph, patterns, budget, use_oracle, "vértices isolados exigem busca exaustiva")
    return certificate.with_relabeling(lift.mapping, lift.word)


def represent_321(graph: LabeledGraph, budget: SearchBudget | None = None, use_oracle: bool = True) -> Certificate:
    witness = _core_witness(graph, BIPARTITE_PERMUTATION)
    if witness is not None:
        return Certificate.refuted(witness, reason="padrão no subgrafo sem vértices isolados")
    certificate = permutation_representant(graph)
    if certificate.is_represented and avoids(certificate.word, P321):
        return _verified(graph, certificate.word, [P321])
    if not graph.isolated_vertices():
        raise InvariantViolation(f"Grafo sem isolados e sem padrão deveria ter permutação 321-livre: {graph}")
    return _lifted_fallback(graph, [P321], budget, use_oracle)


@dataclass(frozen=True)
class HookPipeline:
    mpt: MptModel
    unit_mpt: MptModel
    hooks: HookModel
    word: Word


def hook_pipeline(graph: LabeledGraph) -> HookPipeline:
    """Models of the complement of `graph` leading to its 123-avoiding representant."""
    complement = graph.complement()
    try:
        mpt = geometry.build_mpt_model(complement)
    except ForbiddenPatternError as e:
        raise InvariantViolation(f"Complemento de grafo sem FP123 contém {e.witness.pattern}") from e
    geometry.check_proper_family(mpt)
    unit_mpt = geometry.attach_isolated_sticks(geometry.unit_adjust(mpt))
    if not geometry.validate_mpt(unit_mpt, complement):
        raise InvariantViolation(f"Modelo unitário não representa o complemento de {graph}")
    hooks = geometry.mpt_to_hook(unit_mpt)
    if not hooks.unit:
        raise InvariantViolation(f"Modelo de ganchos não é unitário para {graph}")
    if geometry.hook_intersection_graph(hooks) != complement:
        raise InvariantViolation(f"Grafo de interseção dos ganchos difere do complemento de {graph}")
    return HookPipeline(mpt, unit_mpt, hooks, geometry.hook_word(hooks))


def represent_123(graph: LabeledGraph) -> Certificate:
    witness = find_any(graph, FP123)
    if witness is not None:
        return Certificate.refuted(witness)
    return _verified(graph, hook_pipeline(graph).word, [P123])


def represent_132(graph: LabeledGraph) -> Certificate:
    witness = find_any(graph, FP132)
    if witness is not None:
        return Certificate.refuted(witness)
    model = geometry.build_co132_interval_model(graph)
    return _verified(graph, geometry.co132_word(model), [P132])


def closure_sequence(graph: LabeledGraph) -> list[LabeledGraph]:
    """G_1 = G, ..., G_n: G_i adds ij for every umbrella (k, i, j) of G_{i-1}."""
    stages = [graph]
    current = graph
    for i in range(2, graph.n + 1):
        added = [
            (i, j)
            for j in range(i + 1, graph.n + 1)
            if not current.has_edge(i, j)
            and any(current.has_edge(k, j) and not current.has_edge(k, i) for k in range(1, i))
        ]
        following = LabeledGraph(graph.n, current.edges | frozenset(added))
        if not set(b_vertices(following)) <= set(b_vertices(current)):
            raise InvariantViolation(f"Fecho criou novo b-vértice no passo {i} de {graph}")
        if find_pattern(current, FP_COMP) is None and find_pattern(following, FP_COMP) is not None:
            raise InvariantViolation(f"Fecho criou FP_COMP no passo {i} de {graph}")
        stages.append(following)
        current = following
    return stages


def represent_211(graph: LabeledGraph) -> Certificate:
    witness = find_any(graph, FP211)
    if witness is not None:
        return Certificate.refuted(witness)
    closed = closure_sequence(graph)[-1]
    if umbrellas(closed):
        raise InvariantViolation(f"Fecho de {graph} ainda tem guarda-chuvas")
    certificate = permutation_representant(closed)
    if not certificate.is_represented:
        raise InvariantViolation(f"Fecho de {graph} não é grafo de permutação")
    prefix = tuple(b_vertices(graph))
    return _verified(graph, prefix + certificate.word, [P211])


def canonicalize_211(word: Sequence[int], graph: LabeledGraph) -> Word:
    """Rewrite a 211-avoiding representant as s + pi (s = ascending doubled letters)."""
    word = tuple(word)
    if not twelve_represents(word, graph) or not avoids(word, P211):
        raise WordError("A palavra deve ser um representante de G que evita 211")
    normalized = normalize_at_most_twice(word, graph)
    counts = multiplicities(normalized)
    doubled = sorted(letter for letter, count in counts.items() if count == 2)
    seen: set[int] = set()
    tail = []
    for letter in normalized:
        if counts[letter] == 2 and letter not in seen:
            seen.add(letter)
            continue
        tail.append(letter)
    result = tuple(doubled) + tuple(tail)
    if not twelve_represents(result, graph) or not avoids(result, P211):
        raise InvariantViolation(f"Forma canônica {compact_word(result)} inválida para {graph}")
    return result


def represent_set(graph: LabeledGraph, selector: str, budget: SearchBudget | None = None,
                  use_oracle: bool = True) -> Certificate:
    if selector not in ("set:121+212", "set:211+221"):
        raise WordError(f"Conjunto de padrões não suportado: {selector}")
    patterns = selector_patterns(selector)
    certificate = permutation_representant(graph)
    if certificate.is_represented:
        return _verified(graph, certificate.word, patterns)
    if selector == "set:121+212":
        return certificate
    witness = _core_witness(graph, PERMUTATION)
    if witness is not None:
        return Certificate.refuted(witness, reason="padrão no subgrafo sem vértices isolados")
    return _lifted_fallback(graph, patterns, budget, use_oracle)


def descending_clique_check(k: int, budget: SearchBudget | None = None) -> bool:
    """True when K_k has no representant avoiding k(k-1)...1."""
    if k < 2:
        raise WordError("k deve ser pelo menos 2")
    budget = budget or SearchBudget()
    if k > budget.max_n:
        raise BudgetExceededError(f"k={k} excede o limite da busca exaustiva (max_n={budget.max_n})")
    clique = LabeledGraph.from_edges(k, ((i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)))
    return brute_force_representant(clique, [tuple(range(k, 0, -1))], budget) is None


def represent_length_two(graph: LabeledGraph, pattern: Sequence[int]) -> Certificate:
    """Patterns 11, 12 and 21: permutations, complete graphs and edgeless graphs."""
    pattern = tuple(pattern)
    if pattern == (1, 1):
        return permutation_representant(graph)
    if pattern == (1, 2):
        if graph.is_complete():
            return _verified(graph, tuple(range(graph.n, 0, -1)), [pattern])
        return Certificate.refuted(None, reason="apenas grafos completos evitam 12")
    if pattern == (2, 1):
        if graph.is_edgeless():
            return _verified(graph, tuple(graph.vertices), [pattern])
        return Certificate.refuted(None, reason="apenas grafos sem arestas evitam 21")
    raise WordError(f"Padrão de comprimento 2 inválido: {pattern}")


def _transport(graph: LabeledGraph, selector: str, certificate: Certificate) -> Certificate:
    """Map a certificate for c(G) and c(r(p)) back to G and p."""
    n = graph.n
    if certificate.is_represented:
        word = dual_word(certificate.word, n)
        return _verified(graph, word, selector_patterns(selector), method=certificate.method,
                         reason=f"dualidade com {DUAL_SELECTORS[selector]}")
    if certificate.witness is not None:
        witness = PatternWitness(
            f"{certificate.witness.pattern}.rev",
            tuple(sorted(n + 1 - v for v in certificate.witness.vertices)),
        )
        return Certificate.refuted(witness, reason=f"dualidade com {DUAL_SELECTORS[selector]}")
    return certificate


_DIRECT: dict[str, Callable[..., Certificate]] = {
    "121": lambda g, budget, use_oracle: represent_121(g),
    "231": lambda g, budget, use_oracle: represent_231(g),
    "123": lambda g, budget, use_oracle: represent_123(g),
    "132": lambda g, budget, use_oracle: represent_132(g),
    "211": lambda g, budget, use_oracle: represent_211(g),
    "111": represent_111,
    "none": represent_111,
    "321": represent_321,
}


def represent_pattern(graph: LabeledGraph, selector: str, budget: SearchBudget | None = None,
                      use_oracle: bool = True) -> Certificate:
    """Dispatch a pattern selector to its builder."""
    if selector not in PATTERN_SELECTORS:
        raise WordError(f"Seletor de padrão inválido: {selector}")
    if selector in _DIRECT:
        certificate = _DIRECT[selector](graph, budget, use_oracle)
    elif selector in DUAL_SELECTORS:
        dual = represent_pattern(supplement_graph(graph), DUAL_SELECTORS[selector], budget, use_oracle)
        certificate = _transport(graph, selector, dual)
    elif selector.startswith("set:"):
        certificate = represent_set(graph, selector, budget, use_oracle)
    else:
        certificate = _oracle_certificate(graph, selector_patterns(selector), budget, use_oracle,
                                          f"padrão {selector} sem caracterização conhecida")
    logger.info(f"Padrão {selector} em {graph}: {certificate.status} ({certificate.method})")
    return certificate


def dual_selector(selector: str) -> str:
    """Selector of c(r(p)) for a single-pattern selector."""
    return pattern_label(dual_pattern(tuple(int(ch) for ch in selector)))


def _general_position(lefts: Sequence[Fraction]) -> list[Fraction]:
    """Nudge touching unit intervals inward so no two endpoints coincide."""
    ordered = sorted(Fraction(t) for t in lefts)
    if len(set(ordered)) != len(ordered):
        raise WordError("Extremidades esquerdas devem ser distintas")
    gaps = [abs((b - a) - 1) for a, b in combinations(ordered, 2) if b - a != 1]
    gaps += [b - a for a, b in zip(ordered, ordered[1:])]
    step = min(gaps, default=Fraction(1)) / (2 * len(ordered) + 2)
    return [t - index * step for index, t in enumerate(ordered)]


def unit_interval_word(lefts: Sequence[Fraction]) -> tuple[LabeledGraph, Word]:
    """Unit interval graph of `lefts` (ascending labels) and the 123-avoiding word of its complement."""
    graph = geometry.unit_interval_graph(lefts)
    hooks = geometry.unit_interval_to_hooks(_general_position(lefts))
    if geometry.hook_intersection_graph(hooks) != graph:
        raise InvariantViolation(f"Ganchos unitários não reproduzem o grafo de intervalos {graph}")
    certificate = _verified(graph.complement(), geometry.hook_word(hooks), [P123])
    return graph, certificate.word


def co_trivially_perfect_word(graph: LabeledGraph) -> tuple[dict[int, int], Certificate]:
    """Labeling of the complement of a trivially perfect graph and its 132-avoiding representant."""
    complement = graph.complement()
    mapping = search_labelings(complement, lambda h: find_any(h, FP132) is None)
    if mapping is None:
        witness = find_any(complement, FP132)
        raise ForbiddenPatternError(f"Nenhuma rotulagem do complemento de {graph} evita FP132", witness)
    return mapping, represent_132(complement.relabel(mapping))


class RepresentationService:
    """Builders and geometric models behind one search budget and oracle policy."""

    def __init__(self, budget: SearchBudget | None = None, use_oracle: bool = True):
        self.budget = budget or SearchBudget()
        self.use_oracle = use_oracle

    def represent(self, graph: LabeledGraph, selector: str) -> Certificate:
        return represent_pattern(graph, selector, self.budget, self.use_oracle)

    def hook_models(self, graph: LabeledGraph) -> HookPipeline:
        witness = find_any(graph, FP123)
        if witness is not None:
            raise ForbiddenPatternError(f"Grafo contém o padrão {witness.pattern} em {witness.vertices}", witness)
        return hook_pipeline(graph)

    def interval_model(self, graph: LabeledGraph) -> tuple[Co132IntervalModel, Word]:
        model = geometry.build_co132_interval_model(graph)
        word = geometry.co132_word(model)
        _verified(graph, word, [P132])
        return model, word
