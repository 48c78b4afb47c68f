from typing import Tuple

from pydantic import BaseModel, ConfigDict, computed_field, field_validator


class Coloring(BaseModel):
    """Total vertex coloring; colors[v] is the color index of vertex v."""

    model_config = ConfigDict(frozen=True)

    colors: Tuple[int, ...]

    @field_validator("colors")
    @classmethod
    def check_nonnegative(cls, colors: Tuple[int, ...]) -> Tuple[int, ...]:
        for v, color in enumerate(colors):
            if color < 0:
                raise ValueError(f"vertex {v} has negative color {color}")
        return colors

    @computed_field  # type: ignore[prop-decorator]
    @property
    def k(self) -> int:
        """Palette size used: one more than the largest color."""
        return max(self.colors) + 1 if self.colors else 0


def serialize_coloring(coloring: Coloring) -> str:
    """One "v c" line per vertex, 0-based, ascending v."""
    return "".join(f"{v} {color}\n" for v, color in enumerate(coloring.colors))
