import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from imptables.logic import catalan
from imptables.series import (
    CLASSICAL_SERIES,
    KLEENE_SERIES,
    SERIES_NAMES,
    ConsistencyError,
    PowerSeries,
    closed_form,
    series_description,
)

rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)


def series_strategy(max_order=8):
    return st.lists(rationals, min_size=1, max_size=max_order + 1).map(PowerSeries)


def binomial_sqrt_coefficient(n, scale):
    """[x^n] of (1 + scale*x)^(1/2) via the generalized binomial theorem."""
    half = Fraction(1, 2)
    coeff = Fraction(1)
    for i in range(n):
        coeff *= (half - i) / (i + 1)
    return coeff * Fraction(scale) ** n


class TestConstruction:
    def test_orders(self):
        s = PowerSeries([1, 2, 3])
        assert s.order == 2
        assert s.coefficient(0) == 1
        assert s.coefficient(2) == 3

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            PowerSeries([])

    def test_builders(self):
        assert PowerSeries.identity(3).coeffs == (1, 0, 0, 0)
        assert PowerSeries.zero(2).coeffs == (0, 0, 0)
        assert PowerSeries.x(3).coeffs == (0, 1, 0, 0)
        assert PowerSeries.constant(7, 2).coeffs == (7, 0, 0)

    def test_coefficient_beyond_order_is_an_error(self):
        s = PowerSeries([1, 2])
        with pytest.raises(IndexError):
            s.coefficient(2)
        with pytest.raises(IndexError):
            s.coefficient(-1)

    def test_truncate(self):
        s = PowerSeries([1, 2, 3, 4])
        assert s.truncate(1).coeffs == (1, 2)
        with pytest.raises(IndexError):
            s.truncate(9)


class TestArithmetic:
    def test_add_truncates_to_min_order(self):
        a = PowerSeries([1, 1, 1, 1])
        b = PowerSeries([1, 2])
        assert (a + b).coeffs == (2, 3)
        assert (a - b).coeffs == (0, -1)

    def test_identity_laws(self):
        a = PowerSeries([3, 1, 4, 1, 5])
        one = PowerSeries.identity(4)
        zero = PowerSeries.zero(4)
        assert a + zero == a
        assert one * a == a
        assert a * one == a

    def test_scale_and_shift(self):
        a = PowerSeries([1, 2, 3])
        assert a.scale(3).coeffs == (3, 6, 9)
        assert (2 * a).coeffs == (2, 4, 6)
        assert (a / 2).coeffs == (Fraction(1, 2), 1, Fraction(3, 2))
        assert a.shift().coeffs == (0, 1, 2)
        assert PowerSeries.identity(3).shift().coeffs == (0, 1, 0, 0)

    def test_mul_oracle_values(self):
        r = closed_form("r", 4)
        assert (r * r).coefficient(4) == 33
        t = closed_form("t", 2)
        f = closed_form("f", 2)
        assert (t * f).coefficient(2) == 1

    def test_pow(self):
        x = PowerSeries.x(5)
        assert (x**3).coeffs == (0, 0, 0, 1, 0, 0)
        a = PowerSeries([1, 1, 0, 0])
        assert (a**2).coeffs == (1, 2, 1, 0)
        assert (a**0) == PowerSeries.identity(3)
        with pytest.raises(ValueError):
            a ** (-1)

    @given(series_strategy(), series_strategy())
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(series_strategy(5), series_strategy(5), series_strategy(5))
    def test_mul_associates(self, a, b, c):
        n = min(a.order, b.order, c.order)
        assert ((a * b) * c).truncate(n) == (a * (b * c)).truncate(n)

    @given(series_strategy(5), series_strategy(5), series_strategy(5))
    def test_mul_distributes(self, a, b, c):
        n = min(a.order, b.order, c.order)
        assert (a * (b + c)).truncate(n) == (a * b + a * c).truncate(n)


class TestSqrt:
    def test_binomial_oracle_1_minus_12x(self):
        base = PowerSeries([1, -12] + [0] * 19)
        root = base.sqrt()
        assert root.coeffs[:4] == (1, -6, -18, -108)
        for n in range(21):
            assert root.coefficient(n) == binomial_sqrt_coefficient(n, -12)

    def test_binomial_oracle_1_minus_8x(self):
        base = PowerSeries([1, -8] + [0] * 10)
        root = base.sqrt()
        assert root.coeffs[:6] == (1, -4, -8, -32, -160, -896)
        for n in range(11):
            assert root.coefficient(n) == binomial_sqrt_coefficient(n, -8)

    def test_constant_square(self):
        assert PowerSeries.constant(9, 3).sqrt().coeffs == (3, 0, 0, 0)

    def test_nested_radical_constant_term(self):
        order = 6
        one = PowerSeries.identity(order)
        x = PowerSeries.x(order)
        inner = (one - 12 * x).sqrt()
        outer = (5 * one + 24 * x + 4 * inner).sqrt()
        assert outer.coefficient(0) == 3

    def test_rational_constant_terms(self):
        s = PowerSeries([Fraction(9, 4), 1, 1]).sqrt()
        assert s.coefficient(0) == Fraction(3, 2)
        assert (s * s).coeffs == (Fraction(9, 4), 1, 1)

    def test_error_cases(self):
        with pytest.raises(ValueError):
            PowerSeries([2, 1]).sqrt()
        with pytest.raises(ValueError):
            PowerSeries([-1, 1]).sqrt()
        with pytest.raises(ValueError):
            PowerSeries([0, 1]).sqrt()

    @given(series_strategy(6), st.integers(min_value=1, max_value=5))
    def test_round_trip(self, body, constant):
        coeffs = (Fraction(constant * constant),) + body.coeffs[1:]
        series = PowerSeries(coeffs)
        root = series.sqrt()
        assert root * root == series
        assert root.coefficient(0) == constant


class TestClosedForms:
    def test_small_prefixes(self):
        assert closed_form("g", 3).coeffs == (0, 3, 9, 54)
        assert closed_form("u", 3).coeffs == (0, 1, 3, 18)
        assert closed_form("f", 3).coeffs == (0, 1, 1, 6)
        assert closed_form("s", 3).coeffs == (0, 1, 1, 4)
        assert closed_form("t", 3).coefficient(3) == 30
        assert closed_form("i", 4).coeffs == (1, 0, 0, 0, 0)

    def test_r4(self):
        # brute force, the recurrence, and this expansion all give 61
        # (total 80 minus s4 = 19)
        assert closed_form("r", 4).coefficient(4) == 61

    def test_g_is_three_u(self):
        order = 50
        assert closed_form("g", order) == closed_form("u", order).scale(3)

    def test_kleene_partition(self):
        order = 50
        t, f, u, g = (closed_form(k, order) for k in KLEENE_SERIES)
        assert t + f + u == g

    def test_classical_partition(self):
        order = 50
        r, s, g2 = (closed_form(k, order) for k in CLASSICAL_SERIES)
        assert r + s == g2
        for n in range(1, order + 1):
            assert g2.coefficient(n) == 2**n * catalan(n)

    def test_kleene_total_is_radix_scaled_catalan(self):
        g = closed_form("g", 30)
        for n in range(1, 31):
            assert g.coefficient(n) == 3**n * catalan(n)

    def test_count_series_are_nonnegative_integers(self):
        for name in KLEENE_SERIES + CLASSICAL_SERIES:
            coeffs = closed_form(name, 50).integer_coefficients()
            assert coeffs[0] == 0
            assert all(c >= 0 for c in coeffs)

    def test_self_similarity(self):
        # the total series satisfy G^2 = G - radix*x in both logics
        order = 40
        g = closed_form("g", order)
        x = PowerSeries.x(order)
        assert g * g == g - 3 * x
        g2 = closed_form("g2", order)
        assert g2 * g2 == g2 - 2 * x

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            closed_form("q", 5)
        with pytest.raises(ValueError):
            closed_form("t", 0)

    def test_descriptions_exist(self):
        for name in SERIES_NAMES:
            assert series_description(name)


class TestIntegerExtraction:
    def test_fractional_coefficient_rejected(self):
        s = PowerSeries([0, Fraction(1, 2)])
        with pytest.raises(ConsistencyError):
            s.integer_coefficients()

    def test_integral_series_converts(self):
        assert PowerSeries([0, 1, 3]).integer_coefficients() == (0, 1, 3)
