import pytest

from src.core.exceptions import BudgetExceededError
from src.core.models import LabeledGraph
from src.core.words import avoids, twelve_represents
from src.schemas.census_schemas import SearchBudget
from src.services.oracle import (
    brute_force_representant,
    canonical_form,
    class_oracles,
    enumerate_labeled_graphs,
    enumerate_unlabeled_graphs,
    is_p4_c4_free,
    is_representable_unlabeled,
    search_labelings,
)
from src.services.pattern_matcher import find_any, is_permutation_labeled
from src.utils import graph_generators
from src.utils.pattern_catalog import FP132


class TestWordSearch:
    """Busca exaustiva de representantes."""

    def test_word_example_has_a_representant(self, word_example_graph):
        word = brute_force_representant(word_example_graph, [], SearchBudget(max_n=6))
        assert word is not None
        assert twelve_represents(word, word_example_graph)

    def test_cycle_has_no_representant(self, cycle, budget):
        assert brute_force_representant(cycle(5), [], budget) is None

    def test_triangle_avoiding_321(self, budget):
        assert brute_force_representant(graph_generators.complete(3), [(3, 2, 1)], budget) is None

    def test_found_word_avoids_patterns(self, budget):
        word = brute_force_representant(graph_generators.edge_13(), [(2, 1, 1)], budget)
        assert word is not None
        assert avoids(word, (2, 1, 1))
        assert twelve_represents(word, graph_generators.edge_13())

    def test_search_is_reproducible(self, budget):
        graph = graph_generators.edge_13()
        assert brute_force_representant(graph, [], budget) == brute_force_representant(graph, [], budget)

    def test_empty_graph(self):
        assert brute_force_representant(LabeledGraph.from_edges(0, [])) == ()

    def test_n_over_budget(self, budget):
        with pytest.raises(BudgetExceededError):
            brute_force_representant(graph_generators.path(6), [], budget)

    def test_node_cap(self, cycle):
        with pytest.raises(BudgetExceededError):
            brute_force_representant(cycle(4), [], SearchBudget(max_n=5, max_nodes=1))


class TestLabelings:
    """Busca sobre rotulagens."""

    def test_path_has_a_good_labeling(self):
        mapping = search_labelings(graph_generators.path(3), is_permutation_labeled)
        assert mapping == {1: 1, 2: 3, 3: 2}

    def test_twin_house_has_no_fp132_free_labeling(self, twin_house):
        assert search_labelings(twin_house, lambda g: find_any(g, FP132) is None) is None

    def test_canonical_form_identifies_isomorphic_graphs(self):
        other = LabeledGraph.from_edges(3, [(1, 2), (1, 3)])
        assert canonical_form(graph_generators.path(3)) == canonical_form(other)

    def test_unlabeled_representability(self, budget):
        assert is_representable_unlabeled(graph_generators.path(3), [(1, 2, 1)], budget)


class TestEnumeration:
    def test_labeled_count(self):
        assert len(list(enumerate_labeled_graphs(3))) == 8

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
    def test_unlabeled_counts(self, n, count):
        assert len(enumerate_unlabeled_graphs(n)) == count

    def test_atlas_matches_canonical_dedup(self):
        assert len({canonical_form(g) for g in enumerate_labeled_graphs(4)}) == 11

    def test_atlas_limit(self):
        with pytest.raises(BudgetExceededError):
            enumerate_unlabeled_graphs(8)


class TestClassOracles:
    """Oráculos de classes de grafos."""

    def test_cycle_is_not_permutation(self, cycle):
        assert not class_oracles(cycle(5)).permutation

    def test_complete_graph_is_trivially_perfect(self):
        assert class_oracles(graph_generators.complete(4)).trivially_perfect

    def test_path_is_not_trivially_perfect(self):
        flags = class_oracles(graph_generators.path(4))
        assert not flags.trivially_perfect
        assert flags.bipartite_permutation

    def test_p4_c4_free(self, cycle):
        assert not is_p4_c4_free(cycle(4))
        assert is_p4_c4_free(graph_generators.star(4))
