import math
from fractions import Fraction

import pytest

from core.bounds.checks import (
    check_base_case,
    check_corollary,
    check_induction_step,
    theorem_consistency,
    theorem_grid,
)
from core.bounds.formulas import (
    BOUNDS,
    bound_asymptotic,
    bound_bb,
    bound_gen,
    bound_kst,
    bound_lower_jiang,
    bound_prop,
    bound_upper_bogdnrv,
    bound_upper_erdos,
    bound_upper_stiebitz,
    rising_factorial,
    seed_a_from_kst,
)
from core.errors import BoundDomainError
from core.utils import ceil_root, format_rational, iroot


class TestExactHelpers:
    def test_rising_factorial(self):
        assert rising_factorial(1, 3) == 6
        assert rising_factorial(Fraction(3, 2), 2) == Fraction(15, 4)
        assert rising_factorial(Fraction(7, 3), 0) == 1

    def test_integer_roots(self):
        assert iroot(80, 2) == 8
        assert iroot(81, 2) == 9
        assert iroot(10**30, 3) == 10**10
        assert iroot(10**30 - 1, 3) == 10**10 - 1
        assert ceil_root(82, 2) == 10
        assert ceil_root(64, 3) == 4
        assert ceil_root(0, 5) == 0

    def test_format_rational(self):
        assert format_rational(Fraction(143, 16)) == "143/16 (≈8.9375)"
        assert format_rational(Fraction(512)) == "512/1 (≈512)"


class TestFormulas:
    @pytest.mark.parametrize(
        "n, r, c, expected",
        [
            (2, 1, 2, Fraction(15, 16)),
            (10, 1, 2, Fraction(143, 16)),
            (3, 2, 3, Fraction(24, 27)),
        ],
    )
    def test_bound_gen(self, n, r, c, expected):
        assert bound_gen(n, r, c).value == expected

    def test_bound_gen_needs_two_colors(self):
        with pytest.raises(BoundDomainError):
            bound_gen(3, 1, 1)
        with pytest.raises(BoundDomainError):
            bound_gen(0, 1, 2)

    def test_bound_kst(self):
        assert bound_kst(3, 2, 12).value == 8
        assert bound_kst(3, 2, 12).target_n == 4
        assert bound_kst(1, 2, 1).value == 0
        assert bound_kst(2, 3, 8).value == 4
        assert bound_kst(2, 3, 8).target_n == 5

    def test_bound_bb(self):
        assert bound_bb(3, 1).value == Fraction(30, 8)
        assert bound_bb(1, 1).value == Fraction(3, 2)
        assert bound_bb(10, 2).value == Fraction(2730, 108)

    def test_bound_upper_bogdnrv(self):
        assert bound_upper_bogdnrv(2, 2, 1).value == 12
        assert bound_upper_bogdnrv(2, 2, 1).target_n == 2
        assert bound_upper_bogdnrv(1, 2, 1).value == 2
        assert bound_upper_bogdnrv(1, 3, 2).value == 3
        assert bound_upper_bogdnrv(1, 3, 2).kind == "strict_upper"

    def test_bound_upper_erdos_is_flagged(self):
        bound = bound_upper_erdos(2, 1)
        assert bound.value == 512
        assert bound_upper_erdos(3, 1).value == 19683
        assert bound_upper_erdos(1, 4).value == 1
        assert not bound.valid_unconditionally
        assert "n_0" in bound.note

    def test_small_radius_calculators(self):
        assert bound_upper_stiebitz(1).value == 11
        assert bound_upper_stiebitz(3).value == 37
        assert bound_lower_jiang(1).value == 0
        assert bound_lower_jiang(5).value == 16

    def test_asymptotic_form(self):
        assert bound_asymptotic(10, 1, 2).value == Fraction(144, 16)
        assert not bound_asymptotic(10, 1, 2).valid_unconditionally

    def test_bound_prop_with_default_seed(self):
        for n in range(3, 20):
            assert bound_prop(n, 2, 3, Fraction(1)).value == bound_gen(n, 2, 3).value - 1

    def test_registry_names(self):
        assert {"gen", "kst", "bb", "upper-bogd", "upper-erdos"} <= set(BOUNDS)

    def test_bound_gen_grows_with_n_and_shrinks_with_c(self):
        for r in (1, 2, 3):
            for c in (2, 3, 4):
                values = [bound_gen(n, r, c).value for n in range(1, 40)]
                assert all(a < b for a, b in zip(values, values[1:]))
            for n in (1, 5, 20):
                values = [bound_gen(n, r, c).value for c in range(2, 8)]
                assert all(a > b for a, b in zip(values, values[1:]))

    def test_bounds_are_positive(self):
        for n in range(1, 30):
            for r in (1, 2, 3, 4):
                assert bound_bb(n, r).value > 0
                for c in (2, 3, 5):
                    assert bound_gen(n, r, c).value > 0

    def test_serialized_value(self):
        assert bound_gen(10, 1, 2).model_dump()["value"] == "143/16"

    def test_render(self):
        assert bound_gen(10, 1, 2).render() == "143/16 (≈8.9375)"


class TestSeedFromKst:
    def test_largest_certified_seed(self):
        assert seed_a_from_kst(1, 2, 4) == Fraction(13, 4)

    def test_default_seed_only(self):
        assert seed_a_from_kst(1, 2, 1) == Fraction(1, 2)

    def test_not_certified(self):
        assert seed_a_from_kst(3, 2, 1) is None

    def test_result_is_maximal(self):
        k, c, r = 2, 3, 8
        a = seed_a_from_kst(k, c, r)
        n0 = k * (c - 1) + 1
        known = bound_kst(k, c, r).value
        assert a is not None and a >= Fraction(r, 2)
        assert bound_prop(n0, r, c, a).value <= known
        assert bound_prop(n0, r, c, a + Fraction(1, 2 * c)).value > known


class TestChecks:
    def test_base_case_grid(self):
        for c in range(2, 7):
            for r in range(1, 6):
                for n in range(1, c + 1):
                    assert check_base_case(n, r, c), (n, r, c)

    def test_base_case_domain(self):
        with pytest.raises(BoundDomainError):
            check_base_case(5, 1, 2)

    @pytest.mark.parametrize(
        "n, r, c, a",
        [(4, 1, 2, Fraction(1, 2)), (6, 2, 2, 1), (3, 1, 2, Fraction(1, 2))],
    )
    def test_induction_step_examples(self, n, r, c, a):
        assert check_induction_step(n, r, c, a)

    def test_induction_step_grid(self):
        for c in range(2, 6):
            for r in range(1, 5):
                for a in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
                    for n in range(c + 1, 61):
                        assert check_induction_step(n, r, c, a), (n, r, c, a)

    def test_induction_step_default_seed(self):
        assert check_induction_step(10, 3, 4)

    def test_induction_step_domain(self):
        with pytest.raises(BoundDomainError):
            check_induction_step(2, 1, 2)
        with pytest.raises(BoundDomainError):
            check_induction_step(5, 1, 1)
        with pytest.raises(BoundDomainError):
            check_induction_step(3, 1, 2, Fraction(-3))

    def test_corollary(self):
        assert check_corollary(9, 1, 5)
        assert not check_corollary(9, 1, 6)
        assert not check_corollary(4, 2, 3)
        assert check_corollary(1, 1, -1)


class TestTheoremConsistency:
    def test_n10(self):
        report = theorem_consistency(10, 1, 2)
        assert report.passed
        assert report.v_max == 8
        assert report.checked == 8
        assert report.max_slack == 8
        assert report.min_slack == 4

    def test_n4(self):
        report = theorem_consistency(4, 1, 2)
        assert report.bound == Fraction(35, 16)
        assert report.v_max == 2
        assert report.passed
        assert report.min_slack == 2

    def test_vacuous(self):
        report = theorem_consistency(2, 1, 2)
        assert report.passed
        assert report.vacuous
        assert report.checked == 0
        assert report.min_slack is None

    @pytest.mark.slow
    def test_full_grid(self):
        reports = theorem_grid()
        assert len(reports) == 60 * 3 * 3
        assert all(report.passed for report in reports)
        for report in reports:
            assert report.v_max == max(math.ceil(report.bound) - 1, 0)
