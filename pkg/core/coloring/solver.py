"""Exact coloring: DSATUR branch and bound with color-symmetry breaking.

Search state lives inside a single call, so every function here is safe to run
concurrently on different inputs.
"""

from typing import Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from core.coloring.model import Coloring
from core.graphs.metric import ball, components, induced
from core.graphs.model import Graph, VertexSet
from core.timer import timer
from core.utils import parallel_map


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def greedy_coloring(G: Graph, order: Sequence[int]) -> Coloring:
    """First-fit coloring along `order`: each vertex takes the least color its colored neighbors miss."""
    if sorted(order) != list(range(G.n)):
        raise ValueError("order must be a permutation of the vertices")
    colors = [-1] * G.n
    for v in order:
        taken = {colors[u] for u in G.adjacency[v] if colors[u] >= 0}
        color = 0
        while color in taken:
            color += 1
        colors[v] = color
    return Coloring(colors=tuple(colors))


def greedy_clique(G: Graph) -> List[int]:
    """A large clique found greedily from every seed vertex; the chromatic lower bound."""
    masks = G.masks
    best: List[int] = []
    for seed in range(G.n):
        clique = [seed]
        candidates = masks[seed]
        while candidates:
            pick = max(
                _bits(candidates),
                key=lambda u: ((masks[u] & candidates).bit_count(), -u),
            )
            clique.append(pick)
            candidates &= masks[pick]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def _dsatur_search(G: Graph, k: int) -> Optional[List[int]]:
    """Backtracking k-coloring of G, or None.

    Branches on the uncolored vertex of highest saturation (lowest index on ties) and
    lets it use only colors 0..(largest color so far)+1. Frames live on an explicit
    stack, so component size is not limited by the interpreter recursion limit.
    """
    n = G.n
    if n == 0:
        return []
    if len(greedy_clique(G)) > k:
        return None
    adjacency = G.adjacency
    colors = [-1] * n
    # counts[v][c]: colored neighbors of uncolored v that hold color c
    counts = [[0] * k for _ in range(n)]
    saturation = [0] * n

    def assign(v: int, color: int) -> None:
        colors[v] = color
        for u in adjacency[v]:
            if colors[u] < 0:
                counts[u][color] += 1
                if counts[u][color] == 1:
                    saturation[u] += 1

    def unassign(v: int, color: int) -> None:
        colors[v] = -1
        for u in adjacency[v]:
            if colors[u] < 0:
                counts[u][color] -= 1
                if counts[u][color] == 0:
                    saturation[u] -= 1

    def select() -> int:
        best, best_saturation = -1, -1
        for v in range(n):
            if colors[v] < 0 and saturation[v] > best_saturation:
                best, best_saturation = v, saturation[v]
        return best

    def extend() -> bool:
        # frame: [vertex, next color to try, largest color used before this vertex]
        stack = [[select(), 0, -1]]
        while stack:
            frame = stack[-1]
            v, color, max_used = frame
            if colors[v] >= 0:
                unassign(v, colors[v])
            limit = min(k - 1, max_used + 1)
            while color <= limit and counts[v][color]:
                color += 1
            if color > limit:
                stack.pop()
                continue
            assign(v, color)
            frame[1] = color + 1
            if len(stack) == n:
                return True
            nxt = select()
            if saturation[nxt] < k:
                stack.append([nxt, 0, max(max_used, color)])
        return False

    return colors if extend() else None


def k_coloring(G: Graph, k: int) -> Optional[Coloring]:
    """A proper coloring with at most k colors, or None when none exists.

    Components are searched independently, each with its own symmetry breaking.
    """
    if G.n == 0:
        return Coloring(colors=())
    if k < 1:
        return None
    parts = components(G)
    if len(parts) == 1:
        found = _dsatur_search(G, k)
        return None if found is None else Coloring(colors=tuple(found))
    colors = [0] * G.n
    for part in parts:
        if len(part) == 1:
            continue
        view = induced(G, part)
        found = _dsatur_search(view.graph, k)
        if found is None:
            return None
        for child, color in enumerate(found):
            colors[view.to_parent[child]] = color
    return Coloring(colors=tuple(colors))


def optimal_coloring(G: Graph) -> Coloring:
    """A coloring with exactly chi(G) colors."""
    if G.n == 0:
        return Coloring(colors=())
    lower = len(greedy_clique(G))
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    best = greedy_coloring(G, order)
    for k in range(lower, best.k):
        found = k_coloring(G, k)
        if found is not None:
            return found
    return best


def chromatic_number(G: Graph) -> int:
    """chi(G); 0 for the empty graph."""
    return optimal_coloring(G).k


def _ball_chromatic(task: Tuple[Graph, VertexSet]) -> int:
    G, members = task
    return optimal_coloring(induced(G, members).graph).k


def _unique_balls(G: Graph, r: int) -> Tuple[List[VertexSet], List[int], List[int]]:
    """Distinct radius-r balls, which ball each vertex owns, and the first center of each."""
    balls: List[VertexSet] = []
    centers: List[int] = []
    index = {}
    owner = []
    for v in range(G.n):
        members = ball(G, v, r)
        if members not in index:
            index[members] = len(balls)
            balls.append(members)
            centers.append(v)
        owner.append(index[members])
    return balls, owner, centers


def ball_chromatic_profile(
    G: Graph, r: int, workers: Optional[int] = None
) -> List[int]:
    """chi(G[U_r(v)]) for every vertex v."""
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    balls, owner, _ = _unique_balls(G, r)
    values = parallel_map(_ball_chromatic, [(G, b) for b in balls], workers)
    return [values[i] for i in owner]


@timer
def local_chromatic(G: Graph, r: int, workers: Optional[int] = None) -> int:
    """The r-local chromatic number: the largest chi over all radius-r balls."""
    return max(ball_chromatic_profile(G, r, workers), default=0)


def local_chromatic_at_most(G: Graph, r: int, c: int) -> bool:
    """Whether every radius-r ball of G is c-colorable."""
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    balls, _, centers = _unique_balls(G, r)
    for center, members in zip(centers, balls):
        if k_coloring(induced(G, members).graph, c) is None:
            logger.debug(
                f"Ball around {center} of size {len(members)} needs more than {c} colors"
            )
            return False
    return True


def verify_coloring(G: Graph, col: Coloring) -> bool:
    """True iff no edge is monochromatic."""
    if len(col.colors) != G.n:
        raise ValueError(f"coloring covers {len(col.colors)} of {G.n} vertices")
    colors = col.colors
    return all(colors[u] != colors[v] for u, v in G.edges())
