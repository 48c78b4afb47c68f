from typing import List, Optional, Tuple

import orjson
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
    field_serializer,
    model_validator,
)

from core.coloring.model import Coloring
from core.graphs.model import VertexSet


class Part(BaseModel):
    """One carved piece U_s = U_{m-1}(center, G_{s-1})."""

    model_config = ConfigDict(frozen=True)

    center: int
    m: int = Field(ge=1)
    vertices: VertexSet
    # Carve trace: |V_{s-1}| before this step and |N_s| after it.
    residual_size: Optional[int] = None
    separator_size: Optional[int] = None

    @field_serializer("vertices")
    def serialize_vertices(self, vertices: VertexSet) -> List[int]:
        return sorted(vertices)


class Decomposition(BaseModel):
    """V = U_1 ⊔ ... ⊔ U_s ⊔ N for a fixed radius r."""

    model_config = ConfigDict(frozen=True)

    r: int = Field(ge=1)
    v: int = Field(ge=0)
    parts: Tuple[Part, ...] = ()
    separator: VertexSet = frozenset()

    @field_serializer("separator")
    def serialize_separator(self, separator: VertexSet) -> List[int]:
        return sorted(separator)


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class DecompositionReport(BaseModel):
    r: int
    v: int
    checks: List[CheckResult]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


class RecursiveColoringReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    coloring: Coloring
    c: int = Field(ge=1)
    levels: int = Field(ge=0)
    level_sizes: Tuple[int, ...]

    @model_validator(mode="after")
    def check_palette(self) -> "RecursiveColoringReport":
        if len(self.level_sizes) != self.levels:
            raise ValueError("one vertex count per level is required")
        if self.coloring.k > self.c * self.levels:
            raise ValueError(
                f"{self.coloring.k} colors exceed c * levels = {self.c * self.levels}"
            )
        return self


def decomposition_to_json(D: Decomposition) -> str:
    return orjson.dumps(
        D.model_dump(), option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS
    ).decode("utf-8")


def decomposition_from_json(text: str) -> Decomposition:
    return Decomposition.model_validate(orjson.loads(text))
