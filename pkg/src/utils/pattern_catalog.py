"""Ordered forbidden patterns (induced ordered subgraphs) and the named catalog.

Slots are written x < y < z < w.  Pairs left out of a definition are FREE.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

SLOT_NAMES = "xyzw"


class PairConstraint(str, Enum):
    EDGE = "edge"
    NONEDGE = "nonedge"
    FREE = "free"

    def flipped(self) -> "PairConstraint":
        if self is PairConstraint.EDGE:
            return PairConstraint.NONEDGE
        if self is PairConstraint.NONEDGE:
            return PairConstraint.EDGE
        return self


@dataclass(frozen=True)
class OrderedPattern:
    name: str
    arity: int
    constraints: tuple[tuple[tuple[int, int], PairConstraint], ...] = field(repr=False)

    def __post_init__(self):
        expected = set(combinations(range(self.arity), 2))
        if {pair for pair, _ in self.constraints} != expected or len(self.constraints) != len(expected):
            raise ValueError(f"Padrão {self.name}: todos os pares de posições devem estar definidos")

    def constraint(self, a: int, b: int) -> PairConstraint:
        for pair, value in self.constraints:
            if pair == (a, b):
                return value
        raise KeyError((a, b))

    def constrained_pairs(self) -> list[tuple[int, int, PairConstraint]]:
        return [(a, b, value) for (a, b), value in self.constraints if value is not PairConstraint.FREE]

    def complement(self, name: str | None = None) -> "OrderedPattern":
        """Same slots, every EDGE and NONEDGE swapped."""
        return OrderedPattern(
            name or f"co-{self.name}",
            self.arity,
            tuple((pair, value.flipped()) for pair, value in self.constraints),
        )

    def reverse(self, name: str | None = None) -> "OrderedPattern":
        """Slot order reversed, which is what relabeling i -> n+1-i does to a witness."""
        last = self.arity - 1
        return OrderedPattern(
            name or f"{self.name}.rev",
            self.arity,
            tuple(sorted(((last - b, last - a), value) for (a, b), value in self.constraints)),
        )

    def describe(self) -> str:
        parts = []
        for a, b, value in self.constrained_pairs():
            mark = "E" if value is PairConstraint.EDGE else "N"
            parts.append(f"{SLOT_NAMES[a]}{SLOT_NAMES[b]} {mark}")
        return f"{self.name}: " + ", ".join(parts)


@dataclass(frozen=True)
class PatternWitness:
    pattern: str
    vertices: tuple[int, ...]


def make_pattern(name: str, arity: int, edges: str = "", nonedges: str = "") -> OrderedPattern:
    """`edges`/`nonedges` are space-separated slot pairs such as "xz yw"."""
    values = {pair: PairConstraint.FREE for pair in combinations(range(arity), 2)}
    for tokens, value in ((edges, PairConstraint.EDGE), (nonedges, PairConstraint.NONEDGE)):
        for token in tokens.split():
            a, b = sorted(SLOT_NAMES.index(ch) for ch in token)
            values[(a, b)] = value
    return OrderedPattern(name, arity, tuple(sorted(values.items())))


FP_INT = make_pattern("FP_INT", 3, edges="xz", nonedges="yz")
FP_COMP = make_pattern("FP_COMP", 3, edges="xy yz", nonedges="xz")
FP_COCOMP = make_pattern("FP_COCOMP", 3, edges="xz", nonedges="xy yz")
FP_TRIANGLE = make_pattern("FP_TRIANGLE", 3, edges="xy yz xz")

FP12_B = make_pattern("FP12.b", 4, edges="xz yw", nonedges="xw xy yz zw")
FP12_C = make_pattern("FP12.c", 4, edges="xw yz", nonedges="xy xz yw zw")

FP123_B = make_pattern("FP123.b", 4, edges="yz", nonedges="xz yw")
FP123_C = make_pattern("FP123.c", 4, edges="xz", nonedges="xw yz")
FP123_D = make_pattern("FP123.d", 4, edges="yw", nonedges="xw yz")

CFP123_B = make_pattern("CFP123.b", 4, edges="xz yw", nonedges="yz")
CFP123_C = make_pattern("CFP123.c", 4, edges="xw yz", nonedges="xz")
CFP123_D = make_pattern("CFP123.d", 4, edges="xw yz", nonedges="yw")

FP132_A = make_pattern("FP132.a", 3, edges="yz", nonedges="xz")
FP132_B = make_pattern("FP132.b", 4, edges="xw", nonedges="xz yw")

FP211_B = make_pattern("FP211.b", 4, edges="xw yz", nonedges="xy yw")
FP211_C = make_pattern("FP211.c", 4, edges="xz yw", nonedges="xy yz")

FP_GROUNDED_L_1 = make_pattern("FP_GROUNDED_L.1", 4, edges="xz yw", nonedges="xy yz")
FP_GROUNDED_L_2 = make_pattern("FP_GROUNDED_L.2", 4, edges="xw xy yz", nonedges="xz")

# Pattern sets, in catalog (scan) order
INTERVAL = (FP_INT,)
PERMUTATION = (FP_COMP, FP_COCOMP)
TRIVIALLY_PERFECT = (FP_INT, FP_COMP)
BIPARTITE_PERMUTATION = (FP_COMP, FP_COCOMP, FP_TRIANGLE)
FP12 = (FP_COMP, FP12_B, FP12_C)
FP123 = (FP_COMP, FP123_B, FP123_C, FP123_D)
CFP123 = (FP_COCOMP, CFP123_B, CFP123_C, CFP123_D)
MPT = (CFP123_B,)
FP132 = (FP132_A, FP132_B)
FP211 = (FP_COMP, FP211_B, FP211_C)
GROUNDED_L = (FP_GROUNDED_L_1, FP_GROUNDED_L_2)

PATTERN_SETS: dict[str, tuple[OrderedPattern, ...]] = {
    "interval": INTERVAL,
    "permutation": PERMUTATION,
    "trivially_perfect": TRIVIALLY_PERFECT,
    "bipartite_permutation": BIPARTITE_PERMUTATION,
    "12": FP12,
    "123": FP123,
    "co123": CFP123,
    "mpt": MPT,
    "132": FP132,
    "211": FP211,
    "grounded_l": GROUNDED_L,
}

CATALOG: dict[str, OrderedPattern] = {
    pattern.name: pattern
    for patterns in PATTERN_SETS.values()
    for pattern in patterns
}
CATALOG[FP_TRIANGLE.name] = FP_TRIANGLE


def pattern_by_name(name: str) -> OrderedPattern:
    """Catalog lookup; a trailing ".rev" names the slot-reversed pattern."""
    base = name[: -len(".rev")] if name.endswith(".rev") else name
    try:
        pattern = CATALOG[base]
    except KeyError:
        raise KeyError(f"Padrão desconhecido: {name}") from None
    return pattern.reverse() if base != name else pattern
