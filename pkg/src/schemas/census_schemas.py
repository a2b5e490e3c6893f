from typing import Optional

from pydantic import BaseModel, Field

from src.core.config import Config


class SearchBudget(BaseModel):
    max_n: int = Field(default_factory=lambda: Config.MAX_N, ge=1)
    max_occurrences: int = Field(default_factory=lambda: Config.MAX_OCCURRENCES, ge=1)
    time_cap: Optional[float] = Field(default_factory=lambda: Config.TIME_CAP, gt=0)
    max_nodes: Optional[int] = Field(default=None, ge=1)

    class Config:
        frozen = True


class CensusRow(BaseModel):
    n: int
    pattern: str
    labeled_total: int
    labeled_count_pattern: Optional[int] = None
    labeled_count_oracle: Optional[int] = None
    unlabeled_count: Optional[int] = None
    unlabeled_total: int
    agree: Optional[bool] = None
    wall_time_ms: Optional[int] = None

    class Config:
        frozen = True


class Disagreement(BaseModel):
    n: int
    pattern: str
    edges: str
    pattern_decision: Optional[bool]
    oracle_decision: Optional[bool]
    # smallest edge bitmask over all relabelings; groups disagreements by isomorphism class
    canonical: Optional[int] = None

    class Config:
        frozen = True
