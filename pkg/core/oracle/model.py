from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.graphs.metric import is_connected
from core.graphs.model import Graph


class OracleResult(BaseModel):
    """f_c(n, r) pinned exactly by a smallest witness, or bounded below by the search cap."""

    model_config = ConfigDict(frozen=True)

    mode: Literal["EXACT", "LOWER_BOUND"]
    value: int = Field(ge=0)
    # Least canonical code among the smallest graphs with lchi_r <= c and chi > n.
    witness: Optional[Graph] = None
    graphs_examined: int = Field(ge=0)
    n: int
    r: int
    c: int
    vmax: int

    @model_validator(mode="after")
    def check_witness(self) -> "OracleResult":
        if self.mode == "EXACT":
            if self.witness is None:
                raise ValueError("an exact result needs a witness")
            if self.witness.n != self.value + 1:
                raise ValueError(
                    f"witness has {self.witness.n} vertices, expected {self.value + 1}"
                )
        elif self.witness is not None:
            raise ValueError("a lower bound carries no witness")
        return self

    def summary(self) -> str:
        if self.mode == "EXACT":
            return f"EXACT f={self.value}, witness: {describe_graph(self.witness)}"
        return f"LOWER_BOUND f>={self.value} ({self.graphs_examined} graphs examined)"


def describe_graph(G: Optional[Graph]) -> str:
    """Short human name for small recognizable graphs."""
    if G is None:
        return "none"
    degrees = {G.degree(v) for v in G.vertices()}
    if G.n >= 3 and degrees == {2} and is_connected(G):
        return f"{G.n}-cycle"
    if G.num_edges == G.n * (G.n - 1) // 2:
        return f"K_{G.n}"
    return f"{G.n} vertices, {G.num_edges} edges"
