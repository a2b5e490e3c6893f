from fractions import Fraction

from pydantic import BaseModel

from src.core.geometry_models import Co132IntervalModel, HookModel, MptModel


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class PointedIntervalEntry(BaseModel):
    vertex: int
    l: str
    p: str
    r: str


class HookEntry(BaseModel):
    vertex: int
    c: str
    l: str
    r: str


class IntervalEntry(BaseModel):
    vertex: int
    anchor: int
    l: str
    r: str


def mpt_entries(model: MptModel) -> list[dict]:
    return [
        PointedIntervalEntry(
            vertex=vertex, l=format_fraction(iv.l), p=format_fraction(iv.p), r=format_fraction(iv.r)
        ).model_dump()
        for vertex, iv in enumerate(model.intervals, start=1)
    ]


def hook_entries(model: HookModel) -> list[dict]:
    """Vertices are numbered by corner order."""
    ordered = sorted(model.hooks, key=lambda hook: hook.c)
    return [
        HookEntry(vertex=vertex, c=format_fraction(h.c), l=format_fraction(h.l), r=format_fraction(h.r)).model_dump()
        for vertex, h in enumerate(ordered, start=1)
    ]


def interval_entries(model: Co132IntervalModel) -> list[dict]:
    return [
        IntervalEntry(
            vertex=vertex,
            anchor=model.left_indices[vertex - 1],
            l=format_fraction(model.lefts[vertex - 1]),
            r=format_fraction(model.rights[vertex - 1]),
        ).model_dump()
        for vertex in range(1, model.n + 1)
    ]
