import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from widthone.exact_arith import (
    BinomialTable,
    binomial,
    f43_unit,
    hypergeometric_unit,
    pochhammer,
)


def factorial_binomial(a, b):
    # independent of math.comb
    if b < 0 or b > a:
        return 0
    return math.factorial(a) // (math.factorial(b) * math.factorial(a - b))


class TestBinomial:
    @pytest.mark.parametrize(
        "a,b,expected", [(5, 2, 10), (4, 7, 0), (13, 10, 286), (0, 0, 1), (3, -1, 0)]
    )
    def test_values(self, a, b, expected):
        assert binomial(a, b) == expected

    def test_286_by_factorials(self):
        assert factorial_binomial(13, 10) == 286

    def test_negative_top_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(st.integers(0, 200), st.integers(-5, 205))
    def test_matches_factorials(self, a, b):
        assert binomial(a, b) == factorial_binomial(a, b)

    @given(st.integers(0, 300), st.data())
    def test_symmetry(self, a, data):
        b = data.draw(st.integers(0, a))
        assert binomial(a, b) == binomial(a, a - b)

    @pytest.mark.parametrize("a", range(31))
    def test_row_sum(self, a):
        assert sum(binomial(a, b) for b in range(a + 1)) == 2**a


class TestBinomialTable:
    def test_pascal_rule(self):
        t = BinomialTable(40)
        for a in range(1, 41):
            for b in range(1, a + 1):
                assert t(a, b) == t(a - 1, b - 1) + t(a - 1, b)

    def test_banded_table_folds_and_falls_back(self):
        t = BinomialTable(100, 5)
        assert len(t.row(100)) == 6
        assert t(100, 97) == binomial(100, 3)  # folded into the band
        assert t(100, 50) == binomial(100, 50)  # outside the band
        assert t(150, 2) == binomial(150, 2)  # beyond a_max
        assert t(10, 11) == 0 and t(10, -1) == 0

    @given(st.integers(0, 60), st.integers(-3, 63))
    def test_agrees_with_binomial(self, a, b):
        assert BinomialTable(60, 7)(a, b) == binomial(a, b)


class TestPochhammer:
    @pytest.mark.parametrize("a,k,expected", [(3, 0, 1), (-2, 3, 0), (2, 3, 24), (1, 5, 120)])
    def test_values(self, a, k, expected):
        assert pochhammer(a, k) == expected

    def test_by_hand(self):
        assert 2 * 3 * 4 == 24

    @given(st.integers(1, 40), st.integers(0, 40))
    def test_rising_over_factorial_is_binomial(self, a, k):
        assert Fraction(pochhammer(a, k), math.factorial(k)) == binomial(a + k - 1, k)

    def test_negative_length(self):
        with pytest.raises(ValueError):
            pochhammer(3, -1)


def f43_direct(upper, lower):
    """Independent oracle: sum of pochhammer ratios term by term."""
    total = Fraction(0)
    k = 0
    while True:
        num = math.prod(pochhammer(a, k) for a in upper)
        if num == 0 and k > 0:
            return total
        den = math.prod(pochhammer(b, k) for b in lower) * math.factorial(k)
        total += Fraction(num, den)
        k += 1


class TestF43:
    def test_zero_upper_parameter(self):
        assert f43_unit(7, 3, 0, 5, 2, 4, 9) == 1

    def test_trivial_termination(self):
        assert f43_unit(1, 1, 0, 0, 1, 1, 1) == 1

    def test_width_one_parameters_d2_n5_corner(self):
        # d=2, n=5, i=j=1: prefactor is 1 and the corner entry is 26
        d, n, i, j = 2, 5, 1, 1
        params = (n - i + 1, n - j + 1, 1 - d, 1 - d, 1, 2 - d - i, 2 - d - j)
        assert f43_direct(params[:4], params[4:]) == 26
        assert f43_unit(*params) == 26

    @given(
        st.integers(1, 8),
        st.integers(1, 6),
        st.data(),
    )
    def test_against_direct_sum(self, d, n, data):
        i = data.draw(st.integers(1, n))
        j = data.draw(st.integers(1, n))
        upper = (n - i + 1, n - j + 1, 1 - d, 1 - d)
        lower = (1, 2 - d - i, 2 - d - j)
        assert f43_unit(*upper, *lower) == f43_direct(upper, lower)

    def test_non_terminating_rejected(self):
        with pytest.raises(ValueError):
            f43_unit(1, 2, 3, 4, 1, 1, 1)

    def test_zero_denominator_before_termination(self):
        # lower -1 vanishes at k = 1, upper -3 would only vanish at k = 3
        with pytest.raises(ZeroDivisionError):
            f43_unit(1, 1, 1, -3, -1, 1, 1)

    def test_rational_result(self):
        # 2F1(-1, 1; 2; 1) = 1 - 1/2
        assert hypergeometric_unit((-1, 1), (2,)) == Fraction(1, 2)
