"""Exact-rational geometric models: pointed intervals, hooks, co-interval models."""

from dataclasses import dataclass
from fractions import Fraction

from src.core.exceptions import InvariantViolation


@dataclass(frozen=True)
class PointedInterval:
    l: Fraction
    p: Fraction
    r: Fraction

    def __post_init__(self):
        if not self.l <= self.p <= self.r:
            raise InvariantViolation(f"Intervalo pontuado inválido: {self.l} <= {self.p} <= {self.r}")

    def contains(self, x: Fraction) -> bool:
        return self.l <= x <= self.r


@dataclass(frozen=True)
class MptModel:
    """Pointed interval of vertex i at index i-1."""

    intervals: tuple[PointedInterval, ...]

    @property
    def n(self) -> int:
        return len(self.intervals)

    def __getitem__(self, vertex: int) -> PointedInterval:
        return self.intervals[vertex - 1]

    def values(self) -> list[Fraction]:
        return [x for interval in self.intervals for x in (interval.l, interval.p, interval.r)]


@dataclass(frozen=True)
class Hook:
    """L-shape with corner (c, -c), top endpoint (c, -l) and right endpoint (r, -c)."""

    c: Fraction
    l: Fraction
    r: Fraction

    def __post_init__(self):
        if not self.l <= self.c <= self.r:
            raise InvariantViolation(f"Gancho inválido: l={self.l}, c={self.c}, r={self.r}")

    @property
    def corner(self) -> tuple[Fraction, Fraction]:
        return (self.c, -self.c)

    @property
    def top(self) -> tuple[Fraction, Fraction]:
        return (self.c, -self.l)

    @property
    def right(self) -> tuple[Fraction, Fraction]:
        return (self.r, -self.c)

    @property
    def is_vertical_stick(self) -> bool:
        return self.r == self.c

    @property
    def is_horizontal_stick(self) -> bool:
        return self.l == self.c

    @property
    def is_unit(self) -> bool:
        up, across = self.c - self.l, self.r - self.c
        return up in (0, 1) and across in (0, 1) and (up, across) != (0, 0)

    def segments(self) -> list[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
        """Vertical then horizontal segment; a stick degenerates one of them to the corner."""
        return [(self.corner, self.top), (self.corner, self.right)]

    def line_endpoints(self) -> list[Fraction]:
        """x-coordinates of the free endpoints that lie on y = -x + 1 (unit hooks only)."""
        xs = []
        if self.l != self.c:
            xs.append(self.c)
        if self.r != self.c:
            xs.append(self.r)
        return xs


@dataclass(frozen=True)
class HookModel:
    hooks: tuple[Hook, ...]
    unit: bool = False

    def __post_init__(self):
        corners = [hook.c for hook in self.hooks]
        if len(set(corners)) != len(corners):
            raise InvariantViolation("Os cantos dos ganchos devem ser distintos")
        if self.unit and not all(hook.is_unit for hook in self.hooks):
            raise InvariantViolation("Modelo marcado como unitário contém gancho não unitário")

    @property
    def n(self) -> int:
        return len(self.hooks)


@dataclass(frozen=True)
class Co132IntervalModel:
    """Interval [l_i, r_i] of vertex i at index i-1; disjoint intervals mean adjacency."""

    lefts: tuple[Fraction, ...]
    rights: tuple[Fraction, ...]
    left_indices: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return len(self.lefts)

    def interval(self, vertex: int) -> tuple[Fraction, Fraction]:
        return self.lefts[vertex - 1], self.rights[vertex - 1]

    def intersects(self, u: int, v: int) -> bool:
        lu, ru = self.interval(u)
        lv, rv = self.interval(v)
        return lu <= rv and lv <= ru
