"""Exact-rational calculators for the known bounds on f_c(n, r).

f_c(n, r) is the largest f such that every f-vertex graph whose radius-r balls are
all c-colorable is n-colorable. Rising factorials x(x+1)...(x+k-1) appear in the
lower bounds; everything is Fraction arithmetic, nothing is rounded.
"""

from fractions import Fraction
from typing import Optional, Union

from core.bounds.model import BoundValue
from core.errors import BoundDomainError

Number = Union[int, Fraction]


def _require_positive(**params: int) -> None:
    for name, value in params.items():
        if value < 1:
            raise BoundDomainError(f"{name} must be a positive integer, got {value}")


def rising_factorial(x: Number, k: int) -> Fraction:
    """x(x+1)...(x+k-1); the empty product for k = 0 is 1."""
    if k < 0:
        raise BoundDomainError(f"k must be nonnegative, got {k}")
    result = Fraction(1)
    x = Fraction(x)
    for i in range(k):
        result *= x + i
    return result


def _gen_value(n: int, r: int, c: int, a: Fraction) -> Fraction:
    return rising_factorial(a + Fraction(n, c), r + 1) / (r + 1) ** (r + 1)


def bound_gen(n: int, r: int, c: int) -> BoundValue:
    """Main lower bound: f_c(n, r) >= (n/c + r/2)^(r+1, rising) / (r+1)^(r+1), for c > 1."""
    _require_positive(n=n, r=r, c=c)
    if c <= 1:
        raise BoundDomainError(f"the general bound needs c > 1, got c={c}")
    return BoundValue(
        name="gen",
        params={"n": n, "r": r, "c": c},
        value=_gen_value(n, r, c, Fraction(r, 2)),
    )


def bound_kst(k: int, c: int, r: int) -> BoundValue:
    """Kierstead–Szemerédi–Trotter: f_c(k(c-1)+1, r) >= floor(r/2k)^k."""
    _require_positive(k=k, c=c, r=r)
    return BoundValue(
        name="kst",
        params={"k": k, "c": c, "r": r},
        value=Fraction((r // (2 * k)) ** k),
        target_n=k * (c - 1) + 1,
    )


def bound_bb(n: int, r: int) -> BoundValue:
    """Two-color bound: f_2(n, r) >= (n+r+1)...(n+2r+1) / (2^r (r+1)^(r+1))."""
    _require_positive(n=n, r=r)
    value = rising_factorial(n + r + 1, r + 1) / (2**r * (r + 1) ** (r + 1))
    return BoundValue(name="bb", params={"n": n, "r": r, "c": 2}, value=value)


def bound_upper_bogdnrv(k: int, c: int, r: int) -> BoundValue:
    """Sharpness of the KST order: f_c(k(c-1), r) < ((2rc+1)^k - 1) / (2r)."""
    _require_positive(k=k, c=c, r=r)
    return BoundValue(
        name="upper-bogd",
        params={"k": k, "c": c, "r": r},
        value=Fraction((2 * r * c + 1) ** k - 1, 2 * r),
        target_n=k * (c - 1),
        kind="strict_upper",
    )


def bound_upper_erdos(n: int, r: int) -> BoundValue:
    """High-girth graphs: f_c(n, r) <= f_2(n, r) < n^(4r+5), only for n > n_0(r).

    n_0(r) is not known explicitly, so the value is flagged rather than trusted.
    """
    _require_positive(n=n, r=r)
    return BoundValue(
        name="upper-erdos",
        params={"n": n, "r": r},
        value=Fraction(n ** (4 * r + 5)),
        kind="strict_upper",
        valid_unconditionally=False,
        note="holds only for n > n_0(r); n_0(r) is unspecified",
    )


def bound_prop(m: int, r: int, c: int, a: Number) -> BoundValue:
    """Inductive estimate f_c(m, r) >= (a + m/c)^(r+1, rising) / (r+1)^(r+1) - 1.

    Valid for m = n0 + jc once it holds at the base n0; a = r/2 reproduces bound_gen up to the -1.
    """
    _require_positive(m=m, r=r, c=c)
    a = Fraction(a)
    return BoundValue(
        name="prop",
        params={"m": m, "r": r, "c": c, "a": f"{a.numerator}/{a.denominator}"},
        value=_gen_value(m, r, c, a) - 1,
        target_n=m,
        valid_unconditionally=False,
        note="needs the same estimate at a base n0 with m - n0 divisible by c",
    )


def bound_asymptotic(n: int, r: int, c: int) -> BoundValue:
    """Headline growth ((n + rc) / (c + rc))^(r+1) of the main bound."""
    _require_positive(n=n, r=r, c=c)
    return BoundValue(
        name="asym",
        params={"n": n, "r": r, "c": c},
        value=Fraction(n + r * c, c + r * c) ** (r + 1),
        valid_unconditionally=False,
        note="order of growth only; use gen for a certified value",
    )


def bound_upper_stiebitz(r: int) -> BoundValue:
    """Generalized Mycielski graphs give f_2(3, r) < 2r^2 + 5r + 4."""
    _require_positive(r=r)
    return BoundValue(
        name="stiebitz",
        params={"r": r},
        value=Fraction(2 * r * r + 5 * r + 4),
        target_n=3,
        kind="strict_upper",
    )


def bound_lower_jiang(r: int) -> BoundValue:
    """f_2(3, r) >= (r - 1)^2."""
    _require_positive(r=r)
    return BoundValue(
        name="jiang", params={"r": r}, value=Fraction((r - 1) ** 2), target_n=3
    )


def seed_a_from_kst(k: int, c: int, r: int) -> Optional[Fraction]:
    """Largest a on the grid 1/(2c) for which the KST value certifies the inductive base.

    The base is n0 = k(c-1)+1: a works when bound_prop(n0, r, c, a) <= floor(r/2k)^k.
    Returns None when even a = r/2 is not certified there.
    """
    _require_positive(k=k, c=c, r=r)
    n0 = k * (c - 1) + 1
    known = bound_kst(k, c, r).value
    step = Fraction(1, 2 * c)

    def certified(j: int) -> bool:
        return bound_prop(n0, r, c, j * step).value <= known

    lo = r * c  # a = r/2
    if not certified(lo):
        return None
    gap = 1
    while certified(lo + gap):
        lo += gap
        gap *= 2
    hi = lo + gap
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if certified(mid):
            lo = mid
        else:
            hi = mid
    return lo * step


BOUNDS = {
    "gen": bound_gen,
    "kst": bound_kst,
    "bb": bound_bb,
    "upper-bogd": bound_upper_bogdnrv,
    "upper-erdos": bound_upper_erdos,
    "prop": bound_prop,
    "asym": bound_asymptotic,
    "stiebitz": bound_upper_stiebitz,
    "jiang": bound_lower_jiang,
}
