"""Exhaustive enumeration of small graphs, labeled or one per isomorphism class.

Pair t of the lexicographic pair list (0,1), (0,2), ..., (v-2,v-1) is bit t of an
edge mask. Canonical codes put pair t at bit E-1-t instead, so comparing codes as
integers compares adjacency bit-strings read from the first pair on.
"""

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, List, Optional, Tuple

from loguru import logger

from core.config import ORACLE_VMAX_HARD_CAP
from core.graphs.model import Graph


@lru_cache(maxsize=None)
def edge_pairs(v: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(combinations(range(v), 2))


def _check_order(v: int) -> None:
    if not 1 <= v <= ORACLE_VMAX_HARD_CAP:
        raise ValueError(f"enumeration needs 1 <= v <= {ORACLE_VMAX_HARD_CAP}, got {v}")


def graph_from_mask(v: int, mask: int) -> Graph:
    pairs = edge_pairs(v)
    return Graph.from_edges(v, (pairs[t] for t in range(len(pairs)) if (mask >> t) & 1))


def graph_from_code(v: int, code: int) -> Graph:
    pairs = edge_pairs(v)
    top = len(pairs) - 1
    return Graph.from_edges(
        v, (pairs[t] for t in range(len(pairs)) if (code >> (top - t)) & 1)
    )


def _refined_cells(G: Graph) -> List[List[int]]:
    """Vertex classes of color refinement started from degrees, in canonical class order."""
    colors = [G.degree(v) for v in G.vertices()]
    classes = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in G.adjacency[v])))
            for v in G.vertices()
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colors = [ranking[sig] for sig in signatures]
        if len(ranking) == classes:
            break
        classes = len(ranking)
    cells: List[List[int]] = [[] for _ in range(classes)]
    for v, color in enumerate(colors):
        cells[color].append(v)
    return cells


def canonical_form(G: Graph) -> int:
    """Least adjacency code over the vertex orders that respect the refined classes.

    The classes and their order depend only on the isomorphism type, so two graphs
    get the same code exactly when they are isomorphic.
    """
    pairs = edge_pairs(G.n)
    top = len(pairs) - 1
    masks = G.masks
    best: Optional[int] = None
    for pieces in product(*(permutations(cell) for cell in _refined_cells(G))):
        order = [v for piece in pieces for v in piece]
        code = 0
        for t, (i, j) in enumerate(pairs):
            if (masks[order[i]] >> order[j]) & 1:
                code |= 1 << (top - t)
        if best is None or code < best:
            best = code
    return best or 0


@lru_cache(maxsize=None)
def representatives(v: int) -> Tuple[int, ...]:
    """Sorted canonical codes, one per isomorphism class on v vertices."""
    _check_order(v)
    if v == 1:
        return (0,)
    codes = set()
    for code in representatives(v - 1):
        smaller = graph_from_code(v - 1, code)
        edges = list(smaller.edges())
        for attach in range(1 << (v - 1)):
            extra = [(u, v - 1) for u in range(v - 1) if (attach >> u) & 1]
            codes.add(canonical_form(Graph.from_edges(v, edges + extra)))
    logger.debug(f"{len(codes)} isomorphism classes on {v} vertices")
    return tuple(sorted(codes))


def enumeration_size(v: int, prune: bool) -> int:
    _check_order(v)
    return len(representatives(v)) if prune else 1 << len(edge_pairs(v))


def enumerate_graphs(
    v: int, prune: bool = False, start: int = 0, stop: Optional[int] = None
) -> Iterator[Graph]:
    """Graphs on v vertices: every labeled one in edge-mask order, or one per class.

    start/stop select a slice of the enumeration (edge masks, or indices into the
    sorted representatives), so disjoint ranges partition the work.
    """
    _check_order(v)
    total = enumeration_size(v, prune)
    stop = total if stop is None else min(stop, total)
    if prune:
        codes = representatives(v)
        for index in range(start, stop):
            yield graph_from_code(v, codes[index])
    else:
        for mask in range(start, stop):
            yield graph_from_mask(v, mask)


def count_graphs(v: int, prune: bool = False) -> int:
    return sum(1 for _ in enumerate_graphs(v, prune))
