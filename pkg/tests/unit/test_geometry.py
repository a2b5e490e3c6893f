from fractions import Fraction

import pytest

from src.core.exceptions import ForbiddenPatternError, InvariantViolation
from src.core.geometry_models import Hook, HookModel, MptModel, PointedInterval
from src.core.words import avoids, twelve_represents
from src.services import geometry
from src.utils import graph_generators

F = Fraction


@pytest.fixture
def complement_model(hook_example_graph):
    return geometry.build_mpt_model(hook_example_graph.complement())


class TestMptModel:
    """Modelo de intervalos pontuados do complemento."""

    def test_left_endpoints(self, complement_model):
        assert complement_model[2].l == F(1, 3)
        assert complement_model[5].l == F(5, 6)

    def test_right_endpoints(self, complement_model):
        assert complement_model[1] == PointedInterval(F(1), F(1), F(31, 6))
        assert complement_model[2].r == F(16, 3)

    def test_model_is_valid(self, complement_model, hook_example_graph):
        assert geometry.validate_mpt(complement_model, hook_example_graph.complement())
        assert not geometry.validate_mpt(complement_model, hook_example_graph)

    def test_builder_refuses_cfp123(self):
        graph = graph_generators.edge_13()
        with pytest.raises(ForbiddenPatternError) as exc_info:
            geometry.build_mpt_model(graph)
        assert exc_info.value.witness.pattern == "FP_COCOMP"
        assert exc_info.value.witness.vertices == (1, 2, 3)

    def test_proper_family_violation(self):
        model = MptModel((PointedInterval(F(0), F(1), F(5)), PointedInterval(F(2), F(3), F(4))))
        with pytest.raises(InvariantViolation):
            geometry.check_proper_family(model)


class TestUnitAdjust:
    """Ajuste para comprimento unitário."""

    def test_values(self, complement_model):
        adjusted = geometry.unit_adjust(complement_model)
        thirtieths = [x * 30 for x in adjusted.values()]
        assert thirtieths == [22, 22, 52, 10, 40, 70, 43, 43, 73, 46, 46, 76, 19, 49, 49]

    def test_lengths_are_one_and_model_stays_valid(self, complement_model, hook_example_graph):
        adjusted = geometry.unit_adjust(complement_model)
        for _, _, a, b in geometry.one_sided_intervals(adjusted):
            assert b - a == 1
        assert geometry.validate_mpt(adjusted, hook_example_graph.complement())

    def test_isolated_vertices_get_sticks(self):
        model = MptModel((PointedInterval(F(1), F(1), F(1)), PointedInterval(F(2), F(2), F(2))))
        sticks = geometry.attach_isolated_sticks(model)
        assert sticks[1] == PointedInterval(F(1), F(1), F(2))
        assert sticks[2] == PointedInterval(F(4), F(4), F(5))


class TestHooks:
    """Ganchos sobre a reta y = -x."""

    def test_round_trip(self, complement_model):
        assert geometry.hook_to_mpt(geometry.mpt_to_hook(complement_model)) == complement_model

    def test_intersections(self):
        first = Hook(F(0), F(-1), F(1))
        assert geometry.hooks_intersect(first, Hook(F(1, 2), F(-1, 2), F(3, 2)))
        assert not geometry.hooks_intersect(first, Hook(F(2), F(1), F(3)))

    def test_hook_word_of_example(self, complement_model, hook_example_graph):
        unit = geometry.attach_isolated_sticks(geometry.unit_adjust(complement_model))
        hooks = geometry.mpt_to_hook(unit)
        assert hooks.unit
        assert geometry.hook_intersection_graph(hooks) == hook_example_graph.complement()
        assert geometry.hook_word(hooks) == (4, 3, 2, 1, 5, 2)

    def test_hook_word_requires_unit_model(self):
        hooks = HookModel((Hook(F(0), F(-2), F(0)),))
        with pytest.raises(InvariantViolation):
            geometry.hook_word(hooks)

    def test_distinct_corners_required(self):
        with pytest.raises(InvariantViolation):
            HookModel((Hook(F(0), F(-1), F(0)), Hook(F(0), F(0), F(1))))


class TestCo132Intervals:
    """Modelo de intervalos para o padrão 132."""

    def test_anchors_and_word(self, interval_example_graph):
        model = geometry.build_co132_interval_model(interval_example_graph, check_patterns=False)
        assert model.left_indices == (1, 1, 2, 4, 2, 3)
        assert geometry.co132_word(model) == (6, 5, 4, 4, 3, 6, 2, 3, 5, 1, 1, 2)

    def test_raw_word_represents_but_contains_132(self, interval_example_graph):
        word = geometry.co132_word(geometry.build_co132_interval_model(interval_example_graph, check_patterns=False))
        assert twelve_represents(word, interval_example_graph)
        assert not avoids(word, (1, 3, 2))

    def test_interval_example_is_refused_by_default(self, interval_example_graph):
        with pytest.raises(ForbiddenPatternError) as info:
            geometry.build_co132_interval_model(interval_example_graph)
        assert info.value.witness.pattern == "FP132.b"
        assert info.value.witness.vertices == (2, 3, 5, 6)

    def test_twin_house_is_refused(self, twin_house):
        with pytest.raises(ForbiddenPatternError):
            geometry.build_co132_interval_model(twin_house)


class TestUnitIntervals:
    def test_unit_interval_graph(self):
        assert geometry.unit_interval_graph([F(0), F(1, 2), F(2)]).edges == frozenset({(1, 2)})

    def test_unit_interval_hooks_give_complement_word(self):
        lefts = [F(0), F(1, 2), F(5, 2)]
        hooks = geometry.unit_interval_to_hooks(lefts)
        graph = geometry.unit_interval_graph(lefts)
        assert geometry.hook_intersection_graph(hooks) == graph
        word = geometry.hook_word(hooks)
        assert twelve_represents(word, graph.complement())
        assert avoids(word, (1, 2, 3))
