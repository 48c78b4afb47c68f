from typing import List, Optional

from pydantic import BaseModel, Field

from core.bounds.model import BoundValue, TheoremConsistencyReport
from core.oracle.model import OracleResult


class ChiResponse(BaseModel):
    vertices: int
    edges: int
    chi: int
    coloring: List[int] = Field(description="An optimal coloring, one color per vertex")


class LocalChiResponse(BaseModel):
    r: int
    vertices: int
    value: int
    profile: Optional[List[int]] = Field(
        default=None, description="chi of the radius-r ball around each vertex"
    )


class ColorResponse(BaseModel):
    r: int
    c: int
    levels: int
    level_bound: int
    level_sizes: List[int]
    colors_used: int
    proper: bool
    coloring: List[int]


class BoundResponse(BaseModel):
    bound: BoundValue
    rendered: str


class TheoremResponse(BaseModel):
    reports: List[TheoremConsistencyReport]
    passed: bool


class OracleResponse(BaseModel):
    result: OracleResult
    witness_dimacs: Optional[str] = None
