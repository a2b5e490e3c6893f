from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.core.config import Config
from src.services.constructors import PATTERN_SELECTORS


class RunConfig(BaseModel):
    """One validated CLI invocation."""

    command: Literal["check", "represent", "census", "crossvalidate", "model", "selftest"]
    input_path: Optional[str] = None
    edges: Optional[str] = None
    graph_name: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=0)
    pattern: str = "none"
    patterns: Optional[str] = None
    kind: Literal["mpt", "hook", "interval"] = "hook"
    output_format: Literal["json", "text", "csv", "svg", "tikz"] = "json"
    oracle: bool = False
    max_n: int = Field(default_factory=lambda: Config.MAX_N, ge=1)
    max_occurrences: int = Field(default_factory=lambda: Config.MAX_OCCURRENCES, ge=1)
    time_cap: Optional[float] = Field(default_factory=lambda: Config.TIME_CAP, gt=0)
    jobs: Optional[int] = Field(default=None, ge=1)
    timings: bool = False
    unlabeled: bool = False
    seed: int = Field(default_factory=lambda: Config.SEED)

    class Config:
        frozen = True

    @field_validator("pattern")
    @classmethod
    def _known_selector(cls, value: str) -> str:
        if value not in PATTERN_SELECTORS:
            raise ValueError(f"Seletor de padrão inválido '{value}'; use um de {', '.join(PATTERN_SELECTORS)}")
        return value

    @field_validator("patterns")
    @classmethod
    def _digit_patterns(cls, value: Optional[str]) -> Optional[str]:
        if value is None:
            return value
        tokens = [token.strip() for token in value.split(",")]
        if not all(token.isdigit() and "0" not in token for token in tokens):
            raise ValueError(f"Lista de padrões inválida '{value}', use por exemplo 121,231")
        return ",".join(tokens)

    @model_validator(mode="after")
    def _graph_source(self) -> "RunConfig":
        sources = [s for s in (self.input_path, self.edges, self.graph_name) if s is not None]
        if self.command in ("check", "represent", "model"):
            if len(sources) != 1:
                raise ValueError("Informe exatamente uma fonte de grafo: arquivo, --edges ou --graph-name")
        if self.command in ("census", "crossvalidate") and self.n is None:
            raise ValueError("Informe --n para censo e validação cruzada")
        return self
