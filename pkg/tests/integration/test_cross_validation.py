"""Exhaustive agreement between the pattern characterizations, the geometry and the brute-force search."""

from fractions import Fraction
from itertools import combinations, product

import pytest

from src.core.words import avoids, contains_pattern, dual_pattern, dual_word, graph_from_word, twelve_represents
from src.schemas.census_schemas import SearchBudget
from src.services import geometry
from src.services.census_service import ASSERTED, class_equivalences, cross_validate, parse_patterns
from src.services.constructors import DUAL_SELECTORS, co_trivially_perfect_word, represent_pattern, unit_interval_word
from src.services.oracle import (
    class_oracles,
    enumerate_labeled_graphs,
    enumerate_unlabeled_graphs,
    search_labelings,
)
from src.services.pattern_matcher import find_any, is_mpt_labeled
from src.utils.pattern_catalog import CFP123, FP123, FP211, GROUNDED_L

PATTERNS = [(1, 2, 1), (2, 3, 1), (1, 2, 3), (1, 3, 2), (2, 1, 1), (1, 1, 2), (3, 2, 1), (1, 1, 1)]


def labeled_graphs(max_n: int):
    for n in range(1, max_n + 1):
        yield from enumerate_labeled_graphs(n)


@pytest.fixture
def search_budget():
    return SearchBudget(max_n=5, max_occurrences=2)


class TestPatternVersusOracle:
    """Caracterizações por padrões proibidos contra a busca exaustiva."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_no_disagreement(self, n, search_budget):
        _, disagreements = cross_validate(n, parse_patterns(",".join(ASSERTED)), search_budget)
        assert disagreements == []

    @pytest.mark.slow
    def test_no_disagreement_n5(self, search_budget):
        _, disagreements = cross_validate(5, parse_patterns(",".join(ASSERTED)), search_budget, jobs=2)
        assert disagreements == []

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_class_equivalences(self, n, search_budget):
        assert class_equivalences(n, search_budget) == []

    @pytest.mark.slow
    def test_class_equivalences_n5(self, search_budget):
        assert class_equivalences(5, search_budget) == []


class TestDuality:
    """Simetria c(r(.)) entre palavras, padrões e grafos."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_words_and_patterns(self, n):
        for length in range(n, n + 3):
            for word in product(range(1, n + 1), repeat=length):
                if set(word) != set(range(1, n + 1)):
                    continue
                dual = dual_word(word, n)
                assert graph_from_word(dual, n) == graph_from_word(word, n).supplement()
                for pattern in PATTERNS:
                    assert (contains_pattern(word, pattern) is None) == (
                        contains_pattern(dual, dual_pattern(pattern)) is None
                    )

    def test_dual_selectors_agree(self):
        for graph in labeled_graphs(4):
            for selector, dual in DUAL_SELECTORS.items():
                direct = represent_pattern(graph, selector, use_oracle=False)
                mirrored = represent_pattern(graph.supplement(), dual, use_oracle=False)
                assert direct.status == mirrored.status


class TestConstructorSoundness:
    """Todo certificado positivo traz uma palavra verificada."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow),
                                   pytest.param(6, marks=pytest.mark.slow)])
    @pytest.mark.parametrize("selector", ASSERTED + tuple(DUAL_SELECTORS))
    def test_certificates(self, selector, n):
        pattern = tuple(int(ch) for ch in selector)
        for graph in enumerate_labeled_graphs(n):
            certificate = represent_pattern(graph, selector, use_oracle=False)
            assert certificate.status in ("represented", "refuted")
            if certificate.is_represented:
                assert twelve_represents(certificate.word, graph)
                assert avoids(certificate.word, pattern)
            else:
                assert certificate.witness is not None


class TestGeometryContracts:
    """Modelos MPT, ajuste unitário e ganchos para todo H sem CFP123."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow),
                                   pytest.param(6, marks=pytest.mark.slow)])
    def test_pipeline_on_every_small_graph(self, n):
        checked = 0
        for graph in enumerate_labeled_graphs(n):
            if find_any(graph, CFP123) is not None:
                continue
            model = geometry.build_mpt_model(graph)
            assert geometry.validate_mpt(model, graph)
            geometry.check_proper_family(model)
            assert geometry.hook_to_mpt(geometry.mpt_to_hook(model)) == model

            unit = geometry.attach_isolated_sticks(geometry.unit_adjust(model))
            assert geometry.validate_mpt(unit, graph)
            hooks = geometry.mpt_to_hook(unit)
            assert hooks.unit
            assert geometry.hook_intersection_graph(hooks) == graph

            word = geometry.hook_word(hooks)
            assert twelve_represents(word, graph.complement())
            assert avoids(word, (1, 2, 3))
            checked += 1
        assert checked > 0


class TestSubclassGuarantees:
    """Subclasses com representantes garantidos."""

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_bipartite_permutation_complements_avoid_123(self, n):
        for graph in enumerate_unlabeled_graphs(n):
            if class_oracles(graph).bipartite_permutation:
                complement = graph.complement()
                assert search_labelings(complement, lambda g: find_any(g, FP123) is None) is not None

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_trivially_perfect_complements_avoid_132(self, n):
        for graph in enumerate_unlabeled_graphs(n):
            if class_oracles(graph).trivially_perfect:
                mapping, certificate = co_trivially_perfect_word(graph)
                assert certificate.is_represented
                assert avoids(certificate.word, (1, 3, 2))
                assert twelve_represents(certificate.word, graph.complement().relabel(mapping))

    def test_unit_interval_complements(self):
        grid = [Fraction(k, 2) for k in range(7)]
        for size in (2, 3, 4, 5):
            for lefts in combinations(grid, size):
                graph, word = unit_interval_word(list(lefts))
                assert twelve_represents(word, graph.complement())
                assert avoids(word, (1, 2, 3))

    def test_211_free_graphs_are_grounded_l_free(self):
        for graph in labeled_graphs(5):
            if find_any(graph, FP211) is None:
                assert find_any(graph, GROUNDED_L) is None

    def test_123_representable_complements_have_no_mpt_obstruction(self):
        for graph in labeled_graphs(5):
            if find_any(graph, FP123) is None:
                assert is_mpt_labeled(graph.complement())
