"""Brute-force evaluation of f_c(n, r) on graphs with at most eight vertices.

f_c(n, r) is the largest f such that every f-vertex graph whose radius-r balls are
all c-colorable is n-colorable. Levels are scanned upward; the first order v that
has a counterexample fixes f = v - 1.
"""

from typing import Optional, Tuple

from loguru import logger

from core.coloring.solver import greedy_clique, k_coloring, local_chromatic_at_most
from core.config import ORACLE_VMAX_HARD_CAP, get_settings
from core.graphs.model import Graph
from core.oracle.enumerate import (
    canonical_form,
    enumerate_graphs,
    enumeration_size,
    graph_from_code,
)
from core.oracle.model import OracleResult
from core.timer import timer
from core.utils import parallel_map

CHUNK_SIZE = 4096
# Orders above this are always enumerated up to isomorphism.
PRUNE_REQUIRED_ABOVE = 6

ScanTask = Tuple[int, int, int, int, bool, int, int]


def is_counterexample(G: Graph, n: int, r: int, c: int) -> bool:
    """lchi_r(G) <= c while chi(G) > n."""
    # A clique sits inside the radius-1 ball of each of its vertices.
    if len(greedy_clique(G)) > c:
        return False
    if k_coloring(G, n) is not None:
        return False
    return local_chromatic_at_most(G, r, c)


def _scan(task: ScanTask) -> Tuple[int, Optional[int]]:
    """Graphs examined and the least witness code in one slice of a level."""
    v, n, r, c, prune, start, stop = task
    examined = 0
    best: Optional[int] = None
    for G in enumerate_graphs(v, prune, start, stop):
        examined += 1
        if is_counterexample(G, n, r, c):
            code = canonical_form(G)
            if best is None or code < best:
                best = code
    return examined, best


@timer
def f_oracle(
    n: int,
    r: int,
    c: int,
    vmax: int,
    prune: Optional[bool] = None,
    workers: Optional[int] = None,
) -> OracleResult:
    """Scan v = 1..vmax for the smallest graph with lchi_r <= c and chi > n.

    prune=None enumerates isomorphism classes only above the configured order;
    orders above PRUNE_REQUIRED_ABOVE are pruned whatever prune says.
    The witness is the least canonical code among the smallest counterexamples,
    given in canonical labeling, so pruning and partitioning do not change it.
    """
    for name, value in (("n", n), ("r", r), ("c", c)):
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")
    settings = get_settings()
    cap = min(settings.oracle_vmax_cap, ORACLE_VMAX_HARD_CAP)
    if not 1 <= vmax <= cap:
        raise ValueError(f"vmax must be in 1..{cap}, got {vmax}")

    examined = 0
    for v in range(1, vmax + 1):
        if v <= n:
            # Every graph on at most n vertices is n-colorable.
            continue
        pruned = v > settings.prune_above if prune is None else prune
        if v > PRUNE_REQUIRED_ABOVE and not pruned:
            logger.warning(f"oracle v={v}: labeled enumeration is too large, enumerating isomorphism classes")
            pruned = True
        total = enumeration_size(v, pruned)
        tasks = [
            (v, n, r, c, pruned, start, min(start + CHUNK_SIZE, total))
            for start in range(0, total, CHUNK_SIZE)
        ]
        results = parallel_map(_scan, tasks, workers)
        examined += sum(count for count, _ in results)
        codes = [code for _, code in results if code is not None]
        logger.debug(f"oracle v={v}: {total} graphs (pruned={pruned}), {len(codes)} slices with witnesses")
        if codes:
            result = OracleResult(
                mode="EXACT",
                value=v - 1,
                witness=graph_from_code(v, min(codes)),
                graphs_examined=examined,
                n=n,
                r=r,
                c=c,
                vmax=vmax,
            )
            logger.info(f"f_{c}({n}, {r}) = {v - 1} after {examined} graphs")
            return result

    logger.info(f"f_{c}({n}, {r}) >= {vmax}: no counterexample on {vmax} or fewer vertices")
    return OracleResult(
        mode="LOWER_BOUND",
        value=vmax,
        graphs_examined=examined,
        n=n,
        r=r,
        c=c,
        vmax=vmax,
    )
