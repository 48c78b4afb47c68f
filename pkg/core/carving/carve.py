"""Ball carving: split V into radius-r pieces and a small separator N.

The r+1-th root of v never appears in floating point. A ratio test
|U_m| / |U_{m-1}| <= v^(1/(r+1)) is decided as |U_m|^(r+1) <= v * |U_{m-1}|^(r+1),
and the separator bound |N| <= (1 - v^(-1/(r+1))) * v as (v - |N|)^(r+1) >= v^r.
"""

from typing import List

from loguru import logger

from core.carving.model import CheckResult, Decomposition, DecompositionReport, Part
from core.graphs.metric import ball, bfs_layers, is_connected, outer_boundary
from core.graphs.model import Graph
from core.timer import timer


def separator_within_bound(v: int, separator_size: int, r: int) -> bool:
    return (v - separator_size) ** (r + 1) >= v**r


def _select_m(ball_sizes: List[int], v: int, r: int) -> int:
    for m in range(1, r + 2):
        if ball_sizes[m] ** (r + 1) <= v * ball_sizes[m - 1] ** (r + 1):
            return m
    # The r+1 ratios multiply to |U_{r+1}| <= v, so one of them is small enough.
    raise RuntimeError(f"no admissible m among ball sizes {ball_sizes} for v={v}")


@timer
def carve(G: Graph, r: int) -> Decomposition:
    """Carve G into parts U_{m-1}(u, G_s) around lowest-index residual centers.

    Each step looks at the balls U_0..U_{r+1} of u inside the residual graph G_s,
    takes the smallest m whose growth ratio is at most the (r+1)-th root of |V|,
    emits U_{m-1} as a part, moves the sphere S_m into the separator and drops
    U_m from the residual set.
    """
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    v = G.n
    residual = set(range(v))
    separator: set = set()
    parts: List[Part] = []
    while residual:
        u = min(residual)
        residual_size = len(residual)
        layers = bfs_layers(G, u, depth=r + 1, allowed=residual)
        layers += [frozenset()] * (r + 2 - len(layers))
        ball_sizes = []
        total = 0
        for layer in layers:
            total += len(layer)
            ball_sizes.append(total)
        m = _select_m(ball_sizes, v, r)
        part = frozenset().union(*layers[:m])
        separator |= layers[m]
        residual -= part
        residual -= layers[m]
        parts.append(
            Part(
                center=u,
                m=m,
                vertices=part,
                residual_size=residual_size,
                separator_size=len(separator),
            )
        )
        logger.debug(
            f"carve step {len(parts)}: center={u} m={m} part={len(part)} "
            f"sphere={len(layers[m])} separator={len(separator)} residual={len(residual)}"
        )
    D = Decomposition(r=r, v=v, parts=tuple(parts), separator=frozenset(separator))
    logger.debug(
        f"carve r={r} on {v} vertices: {len(parts)} parts, separator {len(separator)}"
    )
    return D


def _check_cover(G: Graph, D: Decomposition) -> CheckResult:
    everything = frozenset(range(G.n))
    seen: set = set()
    problems = []
    for i, part in enumerate(D.parts):
        overlap = seen & part.vertices
        if overlap:
            problems.append(f"part {i} overlaps earlier parts at {sorted(overlap)[:5]}")
        seen |= part.vertices
    overlap = seen & D.separator
    if overlap:
        problems.append(f"separator meets parts at {sorted(overlap)[:5]}")
    union = seen | D.separator
    if union != everything:
        missing = sorted(everything - union)[:5]
        extra = sorted(union - everything)[:5]
        problems.append(f"missing {missing}, out of range {extra}")
    if D.v != G.n:
        problems.append(f"decomposition records v={D.v}, graph has {G.n}")
    return CheckResult(name="disjoint_cover", passed=not problems, detail="; ".join(problems))


def _in_range(G: Graph, vertices) -> bool:
    return all(0 <= x < G.n for x in vertices)


def _check_boundaries(G: Graph, D: Decomposition) -> CheckResult:
    for i, part in enumerate(D.parts):
        if not _in_range(G, part.vertices):
            return CheckResult(name="condition_i_boundary", passed=False, detail=f"part {i} out of range")
        leaking = outer_boundary(G, part.vertices) - D.separator
        if leaking:
            return CheckResult(
                name="condition_i_boundary",
                passed=False,
                detail=f"part {i} (center {part.center}) touches {sorted(leaking)[:5]} outside N",
            )
    return CheckResult(name="condition_i_boundary", passed=True)


def _check_radius(G: Graph, r: int, D: Decomposition) -> CheckResult:
    for i, part in enumerate(D.parts):
        if not (0 <= part.center < G.n and _in_range(G, part.vertices)):
            return CheckResult(name="condition_ii_radius", passed=False, detail=f"part {i} out of range")
        outside = part.vertices - ball(G, part.center, r)
        if outside:
            return CheckResult(
                name="condition_ii_radius",
                passed=False,
                detail=f"part {i} has {sorted(outside)[:5]} farther than {r} from {part.center}",
            )
    return CheckResult(name="condition_ii_radius", passed=True)


def _check_separator_bound(G: Graph, r: int, D: Decomposition) -> CheckResult:
    v, size = G.n, len(D.separator)
    passed = separator_within_bound(v, size, r)
    return CheckResult(
        name="separator_bound",
        passed=passed,
        detail=f"(v - |N|)^(r+1) = {(v - size) ** (r + 1)} vs v^r = {v**r}",
    )


def _check_connected(G: Graph, D: Decomposition) -> CheckResult:
    for i, part in enumerate(D.parts):
        if not _in_range(G, part.vertices) or not is_connected(G, part.vertices):
            return CheckResult(
                name="parts_connected", passed=False, detail=f"part {i} is not connected"
            )
    return CheckResult(name="parts_connected", passed=True)


def _check_running_bound(G: Graph, r: int, D: Decomposition) -> CheckResult:
    """After every step, (root - 1) * sum|U_i| >= |N_s|, i.e. (|N_s| + U)^(r+1) <= v * U^(r+1)."""
    v = G.n
    carved = 0
    traced = 0
    for i, part in enumerate(D.parts):
        carved += len(part.vertices)
        if part.separator_size is None:
            continue
        traced += 1
        if (part.separator_size + carved) ** (r + 1) > v * carved ** (r + 1):
            return CheckResult(
                name="running_bound",
                passed=False,
                detail=f"after step {i + 1}: |N_s|={part.separator_size}, carved={carved}",
            )
    detail = "" if traced else "no carve trace recorded"
    return CheckResult(name="running_bound", passed=True, detail=detail)


def verify_decomposition(G: Graph, r: int, D: Decomposition) -> DecompositionReport:
    """Check D against G: cover, conditions (i) and (ii), the separator bound, connectivity.

    A carve trace, when present, is checked step by step as well. Failures become
    report entries; nothing raises.
    """
    checks = [
        _check_cover(G, D),
        _check_boundaries(G, D),
        _check_radius(G, r, D),
        _check_separator_bound(G, r, D),
        _check_connected(G, D),
        _check_running_bound(G, r, D),
    ]
    for check in checks:
        if not check.passed:
            logger.info(f"Decomposition check {check.name} failed: {check.detail}")
    return DecompositionReport(r=r, v=G.n, checks=checks)
