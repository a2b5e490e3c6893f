from typing import Literal, Optional, Sequence

from pydantic import BaseModel, field_serializer

from src.core.models import format_word
from src.schemas.census_schemas import SearchBudget
from src.utils.pattern_catalog import PatternWitness


class WitnessSchema(BaseModel):
    pattern: str
    vertices: tuple[int, ...]

    class Config:
        frozen = True

    @classmethod
    def from_witness(cls, witness: PatternWitness) -> "WitnessSchema":
        return cls(pattern=witness.pattern, vertices=witness.vertices)


class Certificate(BaseModel):
    status: Literal["represented", "refuted", "unknown"]
    method: Literal["pattern", "oracle"]
    word: Optional[tuple[int, ...]] = None
    avoided_patterns: Optional[tuple[str, ...]] = None
    witness: Optional[WitnessSchema] = None
    reason: Optional[str] = None
    budget: Optional[SearchBudget] = None
    # isolated vertices moved to the top labels: old label -> new label
    relabeling: Optional[dict[int, int]] = None
    relabeled_word: Optional[tuple[int, ...]] = None

    class Config:
        frozen = True

    @field_serializer("word", "relabeled_word")
    def _serialize_word(self, word: Optional[tuple[int, ...]]):
        return None if word is None else format_word(word)

    @classmethod
    def represented(cls, word: Sequence[int], avoided: Sequence[str], method: str = "pattern",
                    reason: str | None = None) -> "Certificate":
        return cls(status="represented", method=method, word=tuple(word),
                   avoided_patterns=tuple(avoided), reason=reason)

    @classmethod
    def refuted(cls, witness: PatternWitness | None, reason: str | None = None) -> "Certificate":
        return cls(
            status="refuted",
            method="pattern",
            witness=WitnessSchema.from_witness(witness) if witness else None,
            reason=reason,
        )

    @classmethod
    def refuted_by_oracle(cls, budget: SearchBudget, reason: str | None = None) -> "Certificate":
        return cls(status="refuted", method="oracle", budget=budget, reason=reason)

    @classmethod
    def unknown(cls, reason: str, method: str = "oracle", budget: SearchBudget | None = None) -> "Certificate":
        return cls(status="unknown", method=method, reason=reason, budget=budget)

    def with_relabeling(self, mapping: dict[int, int], word: Sequence[int]) -> "Certificate":
        return self.model_copy(update={"relabeling": dict(mapping), "relabeled_word": tuple(word)})

    @property
    def is_represented(self) -> bool:
        return self.status == "represented"

    @property
    def is_refuted(self) -> bool:
        return self.status == "refuted"

    def to_json_dict(self) -> dict:
        return self.model_dump(mode="json", exclude_none=True)
