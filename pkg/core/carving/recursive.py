from functools import lru_cache
from typing import List, Optional, Tuple

from loguru import logger

from core.carving.carve import carve
from core.carving.model import RecursiveColoringReport
from core.coloring.model import Coloring
from core.coloring.solver import k_coloring
from core.errors import LocalChromaticExceeded
from core.graphs.metric import induced
from core.graphs.model import Graph, VertexSet
from core.timer import timer
from core.utils import ceil_root, parallel_map


def min_kept(v: int, r: int) -> int:
    """Smallest s with s^(r+1) >= v^r: the fewest vertices a carve of v vertices keeps out of N."""
    return ceil_root(v**r, r + 1)


@lru_cache(maxsize=None)
def level_bound(v: int, r: int) -> int:
    """Worst-case number of carve levels on v vertices: t(0) = 0, t(v) = 1 + t(v - s)."""
    if v < 0:
        raise ValueError(f"vertex count must be nonnegative, got {v}")
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    levels = 0
    while v > 0:
        v -= min_kept(v, r)
        levels += 1
    return levels


def _color_part(task: Tuple[Graph, VertexSet, int]) -> Optional[Tuple[int, ...]]:
    G, members, c = task
    found = k_coloring(induced(G, members).graph, c)
    return None if found is None else found.colors


@timer
def recursive_color(
    G: Graph, r: int, c: int, workers: Optional[int] = None
) -> RecursiveColoringReport:
    """Color G level by level: carve, c-color every part, recurse on the separator.

    Level l uses colors l*c .. l*c + c - 1. Parts of one level are pairwise
    non-adjacent and every edge leaving a part ends in the separator, which is
    colored at a deeper level with a disjoint palette, so the union is proper.
    Raises LocalChromaticExceeded when some part is not c-colorable; that part lies
    in a radius-r ball, so the failure certifies lchi_r(G) > c.
    """
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    colors = [-1] * G.n
    level_sizes: List[int] = []
    current: VertexSet = frozenset(range(G.n))
    while current:
        level = len(level_sizes)
        view = induced(G, current)
        D = carve(view.graph, r)
        level_sizes.append(view.graph.n)
        tasks = [(view.graph, part.vertices, c) for part in D.parts]
        results = parallel_map(_color_part, tasks, workers)
        for part, part_colors in zip(D.parts, results):
            if part_colors is None:
                raise LocalChromaticExceeded(
                    center=view.to_parent[part.center], level=level, c=c
                )
            for child, color in zip(sorted(part.vertices), part_colors):
                colors[view.to_parent[child]] = level * c + color
        logger.debug(
            f"level {level}: {view.graph.n} vertices, {len(D.parts)} parts, "
            f"{len(D.separator)} passed down"
        )
        current = view.lift(D.separator)
    report = RecursiveColoringReport(
        coloring=Coloring(colors=tuple(colors)),
        c=c,
        levels=len(level_sizes),
        level_sizes=tuple(level_sizes),
    )
    logger.info(
        f"Recursive coloring of {G.n} vertices: {report.levels} levels, {report.coloring.k} colors"
    )
    return report
