from collections import deque
from typing import AbstractSet, Dict, List, Optional

from core.graphs.model import Graph, SubgraphView, VertexSet


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range for n={G.n}")


def _check_subset(G: Graph, S: AbstractSet[int]) -> None:
    for v in S:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for n={G.n}")


def bfs_layers(
    G: Graph,
    source: int,
    depth: Optional[int] = None,
    allowed: Optional[AbstractSet[int]] = None,
) -> List[VertexSet]:
    """Spheres S_0, S_1, ... around source, stopping at depth or when a layer is empty.

    With allowed given the search runs in G[allowed], which must contain source.
    """
    _check_vertex(G, source)
    if allowed is not None and source not in allowed:
        raise ValueError(f"source {source} is not in the allowed set")
    seen = {source}
    frontier = [source]
    layers: List[VertexSet] = [frozenset(frontier)]
    while frontier and (depth is None or len(layers) <= depth):
        nxt = []
        for x in frontier:
            for y in G.adjacency[x]:
                if y in seen or (allowed is not None and y not in allowed):
                    continue
                seen.add(y)
                nxt.append(y)
        if not nxt:
            break
        layers.append(frozenset(nxt))
        frontier = nxt
    return layers


def distances(G: Graph, v: int, radius: Optional[int] = None) -> Dict[int, int]:
    """BFS distance from v to every vertex within radius (all reachable ones if None)."""
    return {
        u: d for d, layer in enumerate(bfs_layers(G, v, radius)) for u in layer
    }


def ball(G: Graph, v: int, rad: int) -> VertexSet:
    """U_rad(v, G): vertices at distance at most rad from v."""
    if rad < 0:
        raise ValueError(f"radius must be nonnegative, got {rad}")
    return frozenset().union(*bfs_layers(G, v, rad))


def sphere(G: Graph, v: int, rad: int) -> VertexSet:
    """S_rad(v, G): vertices at distance exactly rad from v."""
    if rad < 0:
        raise ValueError(f"radius must be nonnegative, got {rad}")
    layers = bfs_layers(G, v, rad)
    return layers[rad] if rad < len(layers) else frozenset()


def outer_boundary(G: Graph, S: AbstractSet[int]) -> VertexSet:
    """Vertices outside S with a neighbor in S."""
    _check_subset(G, S)
    boundary = set()
    for v in S:
        for u in G.adjacency[v]:
            if u not in S:
                boundary.add(u)
    return frozenset(boundary)


def induced(G: Graph, S: AbstractSet[int]) -> SubgraphView:
    """G[S], with subgraph vertex i standing for the i-th smallest member of S."""
    _check_subset(G, S)
    to_parent = tuple(sorted(S))
    to_child = {p: i for i, p in enumerate(to_parent)}
    adjacency = tuple(
        tuple(to_child[u] for u in G.adjacency[p] if u in to_child) for p in to_parent
    )
    # Parent adjacency is sorted and the relabeling is monotone, so rows stay sorted.
    sub = Graph.model_construct(n=len(to_parent), adjacency=adjacency)
    return SubgraphView(
        parent=G,
        vertices=frozenset(to_parent),
        graph=sub,
        to_parent=to_parent,
        to_child=to_child,
    )


def components(G: Graph) -> List[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    assigned = [False] * G.n
    result: List[VertexSet] = []
    for start in range(G.n):
        if assigned[start]:
            continue
        members = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in G.adjacency[x]:
                if y not in members:
                    members.add(y)
                    queue.append(y)
        for x in members:
            assigned[x] = True
        result.append(frozenset(members))
    return result


def is_connected(G: Graph, S: Optional[AbstractSet[int]] = None) -> bool:
    """Whether G[S] (G itself when S is None) is connected; the empty graph is not."""
    S = frozenset(range(G.n)) if S is None else S
    if not S:
        return False
    reached = frozenset().union(*bfs_layers(G, min(S), allowed=S))
    return len(reached) == len(S)


def odd_girth(G: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, or None for bipartite graphs."""
    best: Optional[int] = None
    for s in range(G.n):
        dist = distances(G, s)
        for x, dx in dist.items():
            if best is not None and 2 * dx + 1 >= best:
                continue
            for y in G.adjacency[x]:
                if dist.get(y) == dx:
                    best = 2 * dx + 1
                    break
    return best


def is_triangle_free(G: Graph) -> bool:
    masks = G.masks
    return all(masks[u] & masks[v] == 0 for u, v in G.edges())
