from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from core.errors import InvalidGraphError

VertexSet = FrozenSet[int]


class Graph(BaseModel):
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency tuples."""

    model_config = ConfigDict(frozen=True, ignored_types=(cached_property,))

    n: int = Field(ge=0)
    adjacency: Tuple[Tuple[int, ...], ...]

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)
        self.check_simple()

    def check_simple(self) -> None:
        """Raise InvalidGraphError unless rows are in range, loop-free, ascending and symmetric.

        Called from __init__ after field validation, outside pydantic validators.
        """
        if len(self.adjacency) != self.n:
            raise InvalidGraphError(
                f"adjacency has {len(self.adjacency)} rows for n={self.n}"
            )
        for v, neighbors in enumerate(self.adjacency):
            previous = -1
            for u in neighbors:
                if not 0 <= u < self.n:
                    raise InvalidGraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise InvalidGraphError(f"self-loop at {v}")
                if u <= previous:
                    raise InvalidGraphError(
                        f"neighbors of {v} not strictly ascending: {neighbors}"
                    )
                previous = u
        for v, neighbors in enumerate(self.adjacency):
            for u in neighbors:
                if not (self.masks[u] >> v) & 1:
                    raise InvalidGraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build from an edge list; duplicates collapse, loops and bad indices raise."""
        if n < 0:
            raise InvalidGraphError(f"vertex count must be nonnegative, got {n}")
        neighbor_sets: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise InvalidGraphError(f"self-loop at {u}")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
        # Invariants hold by construction; skip the O(m) re-validation.
        return cls.model_construct(n=n, adjacency=adjacency)

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls.from_edges(n, [])

    @cached_property
    def masks(self) -> List[int]:
        """Neighborhood of each vertex as an int bitset."""
        result = []
        for neighbors in self.adjacency:
            mask = 0
            for u in neighbors:
                mask |= 1 << u
            result.append(mask)
        return result

    @property
    def num_edges(self) -> int:
        return sum(len(neighbors) for neighbors in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(neighbors) for neighbors in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.masks[u] >> v) & 1)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (u, v) with u < v in ascending lexicographic order."""
        for u, neighbors in enumerate(self.adjacency):
            for v in neighbors:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


class SubgraphView(BaseModel):
    """Induced subgraph G[S] together with the index maps back to its parent."""

    model_config = ConfigDict(frozen=True)

    parent: Graph
    vertices: VertexSet
    graph: Graph
    to_parent: Tuple[int, ...]
    to_child: Dict[int, int]

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)
        self.check_maps()

    def check_maps(self) -> None:
        if len(self.to_parent) != self.graph.n or len(self.to_child) != self.graph.n:
            raise InvalidGraphError("index maps do not match the subgraph order")
        if set(self.to_parent) != set(self.vertices):
            raise InvalidGraphError("forward map does not cover the vertex set")
        for child, parent in enumerate(self.to_parent):
            if self.to_child.get(parent) != child:
                raise InvalidGraphError(f"index maps disagree at {child}->{parent}")

    def lift(self, subset: Iterable[int]) -> VertexSet:
        """Translate subgraph indices to parent indices."""
        return frozenset(self.to_parent[i] for i in subset)

    def restrict(self, subset: Iterable[int]) -> VertexSet:
        """Translate parent indices (members of the view) to subgraph indices."""
        return frozenset(self.to_child[i] for i in subset)
