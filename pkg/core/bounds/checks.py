import math
from fractions import Fraction
from typing import Iterable, List, Optional

from loguru import logger

from core.bounds.formulas import Number, _gen_value, bound_gen
from core.bounds.model import TheoremConsistencyReport, Violation
from core.carving.recursive import level_bound
from core.errors import BoundDomainError
from core.timer import timer


def check_base_case(n: int, r: int, c: int) -> bool:
    """For n <= c the main bound is at most 1, so f_c(n, r) >= 1 already covers it."""
    if n > c:
        raise BoundDomainError(f"the base case covers n <= c, got n={n}, c={c}")
    return bound_gen(n, r, c).value <= 1


def check_induction_step(n: int, r: int, c: int, a: Optional[Number] = None) -> bool:
    """Exact check of the step from m = n - c to m = n.

    With B(m) = (a + m/c)^(r+1, rising) / (r+1)^(r+1), confirms
    (a + n/c + r) / (a + n/c - 1) * B(n - c) >= B(n). Default a = r/2.
    """
    if c <= 1:
        raise BoundDomainError(f"the induction step needs c > 1, got c={c}")
    if n <= c:
        raise BoundDomainError(f"the induction step needs n > c, got n={n}, c={c}")
    a = Fraction(r, 2) if a is None else Fraction(a)
    x = a + Fraction(n, c)
    if x - 1 <= 0:
        raise BoundDomainError(f"a + n/c - 1 must be positive, got {x - 1}")
    ratio = (x + r) / (x - 1)
    return ratio * _gen_value(n - c, r, c, a) >= _gen_value(n, r, c, a)


def check_corollary(v: int, r: int, f_prev: int) -> bool:
    """Recursion for f: v >= root/(root - 1) * (f_prev + 1) with root = v^(1/(r+1)).

    Here v = f_c(n, r) + 1 and f_prev = f_c(n - c, r). Cleared of roots this reads
    (v - f_prev - 1)^(r+1) >= v^r with v - f_prev - 1 > 0.
    """
    kept = v - f_prev - 1
    return kept > 0 and kept ** (r + 1) >= v**r


@timer
def theorem_consistency(n: int, r: int, c: int) -> TheoremConsistencyReport:
    """Every v below the main bound must be colorable by carving: c * t(v) <= n.

    t is level_bound, the worst-case number of carve levels, each of which costs at
    most c colors. A violation would mean the carving recursion and the bound disagree.
    """
    bound = bound_gen(n, r, c).value
    v_max = math.ceil(bound) - 1
    violations: List[Violation] = []
    slacks: List[int] = []
    for v in range(1, v_max + 1):
        levels = level_bound(v, r)
        needed = c * levels
        slacks.append(n - needed)
        if needed > n:
            violations.append(Violation(v=v, levels=levels, colors_needed=needed))
    report = TheoremConsistencyReport(
        n=n,
        r=r,
        c=c,
        bound=bound,
        v_max=max(v_max, 0),
        checked=len(slacks),
        max_slack=max(slacks, default=None),
        min_slack=min(slacks, default=None),
        violations=violations,
    )
    if violations:
        logger.error(f"Theorem consistency fails at n={n} r={r} c={c}: {violations[:3]}")
    return report


def theorem_grid(
    n_max: int = 60,
    radii: Iterable[int] = (1, 2, 3),
    palettes: Iterable[int] = (2, 3, 4),
) -> List[TheoremConsistencyReport]:
    radii, palettes = list(radii), list(palettes)
    reports = [
        theorem_consistency(n, r, c)
        for r in radii
        for c in palettes
        for n in range(1, n_max + 1)
    ]
    failed = sum(not report.passed for report in reports)
    logger.info(f"Theorem grid: {len(reports)} parameter sets, {failed} with violations")
    return reports
