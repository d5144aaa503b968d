import pytest
from hypothesis import given, settings, strategies as st

from widthone.exact_arith import binomial
from widthone.width_one import (
    Biword,
    FeasibilityError,
    WidthOneMatrix,
    biword_to_matrix,
    count_width_one,
    enumerate_biwords,
    enumerate_width_one,
    enumerate_width_one_by_filter,
    is_width_one,
    matrix_to_biword,
    sum_all_by_filter,
    sum_all_oracle,
)

INTRO_EXAMPLE = [
    [5, 3, 0, 0, 0],
    [0, 2, 0, 0, 0],
    [0, 0, 3, 0, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 9, 7, 1],
]

BIWORD_EXAMPLE = [
    [0, 3, 0, 0],
    [0, 2, 0, 0],
    [0, 1, 2, 0],
    [0, 0, 1, 1],
]


class TestIsWidthOne:
    def test_intro_example(self):
        assert is_width_one(INTRO_EXAMPLE)
        assert WidthOneMatrix(INTRO_EXAMPLE).d == 30

    def test_identity_is_a_chain(self):
        assert is_width_one([[1, 0], [0, 1]])

    def test_antidiagonal(self):
        assert not is_width_one([[0, 1], [1, 0]])

    def test_zero(self):
        assert is_width_one([[0, 0], [0, 0]])

    def test_constructor_rejects(self):
        with pytest.raises(ValueError):
            WidthOneMatrix([[0, 1], [1, 0]])
        with pytest.raises(ValueError):
            WidthOneMatrix([[1, -1], [0, 0]])


class TestBiword:
    def test_displayed_example(self):
        B = matrix_to_biword(BIWORD_EXAMPLE)
        assert B.top == (1, 1, 1, 2, 2, 3, 3, 3, 4, 4)
        assert B.bottom == (2, 2, 2, 2, 2, 2, 3, 3, 3, 4)
        assert biword_to_matrix(B, 4, 4).entries == tuple(map(tuple, BIWORD_EXAMPLE))

    def test_scaled_unit(self):
        B = matrix_to_biword([[4, 0], [0, 0]])
        assert B == Biword((1,) * 4, (1,) * 4)
        assert biword_to_matrix(B, 2, 2).entries == ((4, 0), (0, 0))

    def test_two_columns(self):
        B = matrix_to_biword([[0, 1], [0, 1]])
        assert B.columns == [(1, 2), (2, 2)]
        assert biword_to_matrix(B, 2, 2).entries == ((0, 1), (0, 1))

    def test_rejects_decreasing(self):
        with pytest.raises(ValueError):
            Biword((2, 1), (1, 1))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            biword_to_matrix(Biword((1, 3), (1, 1)), 2, 2)

    def test_rejects_non_width_one(self):
        with pytest.raises(ValueError):
            matrix_to_biword([[0, 1], [1, 0]])


class TestEnumeration:
    @pytest.mark.parametrize("d,n1,n2,count", [(1, 2, 2, 4), (2, 5, 5, 225), (3, 2, 4, 4 * 20)])
    def test_counts(self, d, n1, n2, count):
        assert sum(1 for _ in enumerate_biwords(d, n1, n2)) == count

    def test_count_286_squared(self):
        assert binomial(13, 10) ** 2 == 81796
        assert sum(1 for _ in enumerate_biwords(10, 4, 4)) == 81796

    def test_lexicographic_and_distinct(self):
        words = [(B.top, B.bottom) for B in enumerate_biwords(3, 3, 2)]
        assert words == sorted(words)
        assert len(set(words)) == len(words)

    @pytest.mark.parametrize("d", range(1, 6))
    @pytest.mark.parametrize("n", range(1, 5))
    def test_count_law(self, d, n):
        mats = list(enumerate_width_one(d, n))
        assert len(mats) == binomial(d + n - 1, d) ** 2 == count_width_one(d, n)
        assert len({T.entries for T in mats}) == len(mats)
        for T in mats:
            assert is_width_one(T.entries) and T.d == d

    @pytest.mark.parametrize("d", range(1, 5))
    @pytest.mark.parametrize("n", range(1, 4))
    def test_oracles_agree_as_sets(self, d, n):
        via_biwords = {T.entries for T in enumerate_width_one(d, n)}
        via_filter = set(enumerate_width_one_by_filter(d, n))
        assert via_biwords == via_filter

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 4), st.integers(1, 3), st.integers(1, 3))
    def test_round_trip(self, d, n1, n2):
        for B in enumerate_biwords(d, n1, n2):
            T = biword_to_matrix(B, n1, n2)
            assert matrix_to_biword(T) == B
            assert biword_to_matrix(matrix_to_biword(T), n1, n2) == T


class TestSumAllOracle:
    def test_d1(self):
        assert sum_all_oracle(1, 5) == [[1] * 5 for _ in range(5)]

    def test_d2_first_row(self):
        assert sum_all_oracle(2, 5)[0] == [26, 22, 18, 14, 10]

    def test_two_oracles_3_2_2(self):
        assert sum_all_oracle(3, 2, 2) == sum_all_by_filter(3, 2, 2)

    def test_rectangular_oracles(self):
        assert sum_all_oracle(3, 2, 3) == sum_all_by_filter(3, 2, 3)

    def test_guard(self):
        with pytest.raises(FeasibilityError):
            sum_all_oracle(3, 3, limit=50)
        assert sum_all_oracle(3, 3, limit=50, force=True)[0][0] > 0
