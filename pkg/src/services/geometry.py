"""Geometric model constructions over exact rationals.

The 123 pipeline runs: complement -> pointed-interval (MPT) model -> unit
adjustment -> hooks on y = -x -> word read off y = -x + 1.  The 132 pipeline
builds an interval model of the complement and reads its endpoints.
"""

import logging
from fractions import Fraction
from typing import Sequence

from src.core.exceptions import ForbiddenPatternError, InvariantViolation
from src.core.geometry_models import (
    Co132IntervalModel,
    Hook,
    HookModel,
    MptModel,
    PointedInterval,
)
from src.core.models import LabeledGraph, Word
from src.services.pattern_matcher import find_any
from src.utils.pattern_catalog import CFP123, FP132

logger = logging.getLogger(__name__)

# one-sided interval: (vertex, side, left, right); side "+" is [p, r], "-" is [l, p]
OneSided = tuple[int, str, Fraction, Fraction]


def build_mpt_model(graph: LabeledGraph) -> MptModel:
    witness = find_any(graph, CFP123)
    if witness is not None:
        raise ForbiddenPatternError(
            f"Grafo contém o padrão {witness.pattern} em {witness.vertices}; não há modelo MPT", witness
        )
    n = graph.n
    denominator = n + 1
    intervals = []
    for i in graph.vertices:
        smaller = [j for j in range(1, i) if graph.has_edge(i, j)]
        larger = [j for j in range(i + 1, n + 1) if graph.has_edge(i, j)]
        left = Fraction(i)
        if smaller:
            left = min(left, smaller[0] - Fraction(n - i + 1, denominator))
        right = Fraction(i)
        if larger:
            right = max(right, larger[-1] + Fraction(i, denominator))
        intervals.append(PointedInterval(left, Fraction(i), right))
    model = MptModel(tuple(intervals))
    _assert_distinct_endpoints(model)
    if not validate_mpt(model, graph):
        raise InvariantViolation(f"Modelo MPT construído não representa {graph}")
    return model


def _assert_distinct_endpoints(model: MptModel) -> None:
    endpoints = [x for iv in model.intervals for x in {iv.l, iv.p, iv.r}]
    if len(endpoints) != len(set(endpoints)):
        raise InvariantViolation("Extremidades repetidas no modelo MPT")


def validate_mpt(model: MptModel, graph: LabeledGraph) -> bool:
    """uv is an edge iff both points lie in both intervals."""
    if model.n != graph.n:
        return False
    for u in graph.vertices:
        for v in range(u + 1, graph.n + 1):
            iu, iv = model[u], model[v]
            both = iu.contains(iv.p) and iv.contains(iu.p)
            if both != graph.has_edge(u, v):
                return False
    return True


def one_sided_intervals(model: MptModel) -> list[OneSided]:
    members: list[OneSided] = []
    for vertex, iv in enumerate(model.intervals, start=1):
        if iv.r != iv.p:
            members.append((vertex, "+", iv.p, iv.r))
        if iv.l != iv.p:
            members.append((vertex, "-", iv.l, iv.p))
    return sorted(members, key=lambda member: member[2])


def check_proper_family(model: MptModel) -> None:
    """Raise when one one-sided interval contains another."""
    members = one_sided_intervals(model)
    for first in members:
        for second in members:
            if first is second:
                continue
            if first[2] <= second[2] and second[3] <= first[3]:
                raise InvariantViolation(
                    f"Intervalo {first[1]}{first[0]} contém {second[1]}{second[0]}: "
                    f"[{first[2]}, {first[3]}] ⊇ [{second[2]}, {second[3]}]"
                )


def _order_signature(values: Sequence[Fraction]) -> list[int]:
    ranks = {x: rank for rank, x in enumerate(sorted(set(values)))}
    return [ranks[x] for x in values]


def unit_adjust(model: MptModel) -> MptModel:
    """Rescale every one-sided interval to length 1, keeping the order of all endpoints.

    Intervals are handled by ascending left endpoint.  For the current [a, b],
    alpha is the rightmost right endpoint of another interval strictly inside
    (a, b); [alpha, b] (or [a, b] when there is none) is mapped linearly onto a
    segment ending at a + 1 and everything beyond b is translated.
    """
    check_proper_family(model)
    coords = [[iv.l, iv.p, iv.r] for iv in model.intervals]
    members = [(vertex, side) for vertex, side, _, _ in one_sided_intervals(model)]

    def bounds(vertex: int, side: str) -> tuple[Fraction, Fraction]:
        l, p, r = coords[vertex - 1]
        return (p, r) if side == "+" else (l, p)

    for vertex, side in members:
        a, b = bounds(vertex, side)
        inner = []
        for other in members:
            if other == (vertex, side):
                continue
            right = bounds(*other)[1]
            if a < right < b:
                inner.append(right)
        start = max(inner) if inner else a
        target = a + 1
        scale = (target - start) / (b - start)

        def remap(x: Fraction) -> Fraction:
            if x <= start:
                return x
            if x <= b:
                return start + (x - start) * scale
            return x + (target - b)

        coords = [[remap(x) for x in triple] for triple in coords]
        logger.debug(f"Ajuste unitário de {side}{vertex}: [{a}, {b}] -> [{a}, {target}]")

    adjusted = MptModel(tuple(PointedInterval(l, p, r) for l, p, r in coords))
    for vertex, side in members:
        a, b = bounds(vertex, side)
        if b - a != 1:
            raise InvariantViolation(f"Intervalo {side}{vertex} ficou com comprimento {b - a}")
    if _order_signature(model.values()) != _order_signature(adjusted.values()):
        raise InvariantViolation("Ajuste unitário alterou a ordem das extremidades")
    return adjusted


def attach_isolated_sticks(model: MptModel) -> MptModel:
    """Give every point-like vertex a horizontal unit stick inside a fresh gap of width 2."""
    coords = [[iv.l, iv.p, iv.r] for iv in model.intervals]
    for index in range(len(coords)):
        l, p, r = coords[index]
        if not l == p == r:
            continue
        coords = [[x + 2 if x > p else x for x in triple] for triple in coords]
        coords[index][2] = p + 1
    return MptModel(tuple(PointedInterval(l, p, r) for l, p, r in coords))


def mpt_to_hook(model: MptModel) -> HookModel:
    hooks = tuple(Hook(c=iv.p, l=iv.l, r=iv.r) for iv in model.intervals)
    return HookModel(hooks, unit=all(hook.is_unit for hook in hooks))


def hook_to_mpt(hook_model: HookModel) -> MptModel:
    return MptModel(tuple(PointedInterval(hook.l, hook.c, hook.r) for hook in hook_model.hooks))


def _boxes_meet(first, second) -> bool:
    # closed axis-aligned segments meet iff their bounding boxes overlap
    (p1, p2), (q1, q2) = first, second
    return (
        max(min(p1[0], p2[0]), min(q1[0], q2[0])) <= min(max(p1[0], p2[0]), max(q1[0], q2[0]))
        and max(min(p1[1], p2[1]), min(q1[1], q2[1])) <= min(max(p1[1], p2[1]), max(q1[1], q2[1]))
    )


def hooks_intersect(first: Hook, second: Hook) -> bool:
    return any(_boxes_meet(s, t) for s in first.segments() for t in second.segments())


def corner_order(hook_model: HookModel) -> list[int]:
    """Indices of hooks from top-left to bottom-right along y = -x."""
    return sorted(range(hook_model.n), key=lambda index: hook_model.hooks[index].c)


def hook_intersection_graph(hook_model: HookModel) -> LabeledGraph:
    order = corner_order(hook_model)
    label = {index: position + 1 for position, index in enumerate(order)}
    hooks = hook_model.hooks
    edges = [
        (label[a], label[b])
        for a in range(len(hooks))
        for b in range(a + 1, len(hooks))
        if hooks_intersect(hooks[a], hooks[b])
    ]
    return LabeledGraph.from_edges(hook_model.n, edges)


def hook_word(hook_model: HookModel) -> Word:
    """Labels of the endpoints on y = -x + 1, read by descending x."""
    if not hook_model.unit:
        raise InvariantViolation("A leitura da palavra exige ganchos unitários")
    order = corner_order(hook_model)
    entries = []
    for position, index in enumerate(order, start=1):
        for x in hook_model.hooks[index].line_endpoints():
            entries.append((x, position))
    xs = [x for x, _ in entries]
    if len(xs) != len(set(xs)):
        raise InvariantViolation("Extremidades coincidentes sobre a reta y = -x + 1")
    return tuple(label for _, label in sorted(entries, reverse=True))


def build_co132_interval_model(graph: LabeledGraph, check_patterns: bool = True) -> Co132IntervalModel:
    """Interval model of the complement: l_i = anchor_i - i/(n+1), r_i = i.

    The anchor of i is its smallest non-neighbor below it, or i itself.  With
    `check_patterns=False` the FP132 guard is skipped and only the interval
    semantics are verified, so graphs that contain the pattern but still fit
    the formula keep their raw model.
    """
    if check_patterns:
        witness = find_any(graph, FP132)
        if witness is not None:
            raise ForbiddenPatternError(
                f"Grafo contém o padrão {witness.pattern} em {witness.vertices}", witness
            )
    n = graph.n
    anchors = []
    for i in graph.vertices:
        non_neighbors = [j for j in range(1, i) if not graph.has_edge(i, j)]
        anchors.append(min([i] + non_neighbors))
    lefts = tuple(anchor - Fraction(i, n + 1) for i, anchor in enumerate(anchors, start=1))
    rights = tuple(Fraction(i) for i in graph.vertices)
    endpoints = lefts + rights
    if len(set(endpoints)) != len(endpoints):
        raise InvariantViolation("Extremidades repetidas no modelo de intervalos")
    model = Co132IntervalModel(lefts, rights, tuple(anchors))
    for u in graph.vertices:
        for v in range(u + 1, n + 1):
            if model.intersects(u, v) == graph.has_edge(u, v):
                raise InvariantViolation(f"Modelo de intervalos incorreto no par {u}{v}")
    return model


def co132_word(model: Co132IntervalModel) -> Word:
    """Labels of all 2n endpoints by descending coordinate."""
    entries = [(x, vertex) for vertex in range(1, model.n + 1) for x in model.interval(vertex)]
    return tuple(vertex for _, vertex in sorted(entries, reverse=True))


def unit_interval_to_hooks(lefts: Sequence[Fraction]) -> HookModel:
    """Unit intervals [t, t+1] on y = -x + 1 become hooks with corner (t, -t)."""
    hooks = tuple(Hook(c=Fraction(t), l=Fraction(t) - 1, r=Fraction(t) + 1) for t in lefts)
    return HookModel(hooks, unit=True)


def unit_interval_graph(lefts: Sequence[Fraction]) -> LabeledGraph:
    """Closed unit intervals labeled by ascending left endpoint."""
    ordered = sorted(Fraction(t) for t in lefts)
    return LabeledGraph.from_edges(
        len(ordered),
        (
            (u + 1, v + 1)
            for u in range(len(ordered))
            for v in range(u + 1, len(ordered))
            if ordered[v] - ordered[u] <= 1
        ),
    )
