from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, computed_field, field_serializer

from core.utils import format_rational


class BoundValue(BaseModel):
    """Exact value of one bound formula on f_c(n, r)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    params: Dict[str, int | str]
    value: Fraction
    # The n of f_c(n, r) the bound speaks about, when it differs from params["n"].
    target_n: Optional[int] = None
    kind: str = "lower"  # "lower", "upper" (f <= value) or "strict_upper" (f < value)
    valid_unconditionally: bool = True
    note: str = ""

    @field_serializer("value")
    def serialize_value(self, value: Fraction) -> str:
        return f"{value.numerator}/{value.denominator}"

    def render(self) -> str:
        return format_rational(self.value)


class Violation(BaseModel):
    v: int
    levels: int
    colors_needed: int


class TheoremConsistencyReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    r: int
    c: int
    bound: Fraction
    v_max: int
    checked: int
    max_slack: Optional[int] = None
    min_slack: Optional[int] = None
    violations: List[Violation] = []

    @field_serializer("bound")
    def serialize_bound(self, bound: Fraction) -> str:
        return f"{bound.numerator}/{bound.denominator}"

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return not self.violations

    @computed_field  # type: ignore[prop-decorator]
    @property
    def vacuous(self) -> bool:
        return self.checked == 0
