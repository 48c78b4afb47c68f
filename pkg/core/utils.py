import math
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, TypeVar

from loguru import logger

from core.config import get_settings

T = TypeVar("T")
R = TypeVar("R")


def iroot(x: int, k: int) -> int:
    """Largest s with s**k <= x, in exact integer arithmetic."""
    if x < 0 or k < 1:
        raise ValueError(f"iroot needs x >= 0 and k >= 1, got x={x}, k={k}")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return math.isqrt(x)
    # Newton from above; the start is >= the true root.
    s = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        t = ((k - 1) * s + x // s ** (k - 1)) // k
        if t >= s:
            return s
        s = t


def ceil_root(x: int, k: int) -> int:
    """Smallest s with s**k >= x."""
    s = iroot(x, k)
    return s if s**k == x else s + 1


def format_rational(value: Fraction, digits: int = 10) -> str:
    """Render as "p/q (≈decimal)"; the decimal part is informational only."""
    with localcontext() as ctx:
        ctx.prec = digits + 2
        approx = Decimal(value.numerator) / Decimal(value.denominator)
    return f"{value.numerator}/{value.denominator} (≈{approx:.{digits}g})"


def parallel_map(
    func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None
) -> List[R]:
    """Ordered map, fanned out to a process pool when more than one worker is asked for.

    Results come back in input order, so callers stay deterministic whatever the pool does.
    """
    items = list(items)
    workers = workers if workers is not None else get_settings().workers
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    logger.debug(f"Mapping {func.__name__} over {len(items)} items with {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
