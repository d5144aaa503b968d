import pytest
from hypothesis import given, settings, strategies as st

from widthone.exact_arith import binomial
from widthone.formulas import (
    SumMatrix,
    choose_method,
    convolution_check,
    entry_rsk,
    entry_rsk_4f3,
    entry_stanley,
    fundamental_domain,
    representative,
    sum_matrix,
)
from widthone.reference_values import KNOWN_S_N5
from widthone.width_one import sum_all_oracle


class TestEntries:
    @pytest.mark.parametrize(
        "f", [entry_rsk, entry_rsk_4f3, entry_stanley, convolution_check]
    )
    @pytest.mark.parametrize(
        "args,expected", [((2, 5, 5, 1, 1), 26), ((8, 5, 5, 3, 3), 93456), ((5, 5, 5, 3, 3), 3546)]
    )
    def test_known_entries(self, f, args, expected):
        assert f(*args) == expected

    def test_stanley_terms_for_corner(self):
        assert binomial(10, 9) * 1 == 10
        assert binomial(9, 9) * 16 == 16

    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_d1_all_ones(self, n):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert entry_rsk(1, n, n, i, j) == 1 == convolution_check(1, n, n, i, j)

    @pytest.mark.parametrize("d", [1, 2, 7, 50])
    def test_one_by_one(self, d):
        assert entry_stanley(d, 1, 1, 1, 1) == d == entry_rsk(d, 1, 1, 1, 1)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            entry_rsk(2, 3, 3, 4, 1)
        with pytest.raises(ValueError):
            entry_stanley(0, 3, 3, 1, 1)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(1, 10), st.integers(1, 7), st.integers(1, 7), st.data())
    def test_four_routes_agree(self, d, n1, n2, data):
        i = data.draw(st.integers(1, n1))
        j = data.draw(st.integers(1, n2))
        ref = entry_rsk(d, n1, n2, i, j)
        assert entry_rsk_4f3(d, n1, n2, i, j) == ref
        assert entry_stanley(d, n1, n2, i, j) == ref
        assert convolution_check(d, n1, n2, i, j) == ref


class TestSymmetry:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_square_domain_covers_orbits(self, n):
        dom = set(fundamental_domain(n, n))
        reps = {representative(n, n, i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
        assert reps == dom

    @pytest.mark.parametrize("n1,n2", [(2, 3), (3, 2), (4, 5), (1, 4)])
    def test_rect_domain_covers_orbits(self, n1, n2):
        dom = set(fundamental_domain(n1, n2))
        reps = {representative(n1, n2, i, j) for i in range(1, n1 + 1) for j in range(1, n2 + 1)}
        assert reps == dom

    @pytest.mark.parametrize("method", ["rsk", "stanley"])
    @pytest.mark.parametrize("d,n1,n2", [(4, 5, 5), (6, 4, 4), (3, 2, 5), (5, 4, 3)])
    def test_reflection_matches_full_computation(self, method, d, n1, n2):
        fast = sum_matrix(d, n1, n2, method)
        slow = sum_matrix(d, n1, n2, method, use_symmetry=False)
        assert fast == slow

    def test_check_rejects_broken_matrix(self):
        good = sum_matrix(2, 3, 3, "rsk").entries
        bad = [list(r) for r in good]
        bad[0][1] += 1
        bad[1][0] -= 1
        with pytest.raises(AssertionError):
            SumMatrix(2, tuple(map(tuple, bad)))


class TestSumMatrix:
    @pytest.mark.parametrize("d", sorted(KNOWN_S_N5))
    @pytest.mark.parametrize("method", ["rsk", "stanley", "rsk-4f3", "convolution"])
    def test_known_n5(self, d, method):
        assert sum_matrix(d, 5, 5, method).entries == KNOWN_S_N5[d]

    def test_3_2_2_rsk_vs_oracle(self):
        assert [list(r) for r in sum_matrix(3, 2, 2, "rsk").entries] == sum_all_oracle(3, 2, 2)

    @pytest.mark.parametrize("d", range(1, 6))
    @pytest.mark.parametrize("n1", range(1, 5))
    @pytest.mark.parametrize("n2", range(1, 5))
    def test_oracle_equivalence(self, d, n1, n2):
        oracle = sum_matrix(d, n1, n2, "oracle")
        assert sum_matrix(d, n1, n2, "rsk") == oracle == sum_matrix(d, n1, n2, "stanley")

    def test_total(self):
        for d in range(1, 9):
            for n in range(1, 7):
                assert sum_matrix(d, n, n).total() == d * binomial(d + n - 1, d) ** 2

    def test_growth_in_d(self):
        corners = [KNOWN_S_N5[d][0][0] for d in sorted(KNOWN_S_N5)]
        assert all(a < b for a, b in zip(corners, corners[1:]))
        for i, j in [(1, 1), (2, 3), (3, 3)]:
            vals = [entry_rsk(d, 5, 5, i, j) for d in range(1, 9)]
            assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_figure_scale_30_5(self):
        S = sum_matrix(30, 5, 5, "stanley")
        assert S == sum_matrix(30, 5, 5, "rsk")
        assert 1.55e8 < S.min() < 1.65e8
        assert 6.65e9 < S.max() < 6.75e9

    def test_auto(self):
        assert choose_method(10, 5, 5) == "rsk"
        assert choose_method(11, 5, 5) == "stanley"
        assert sum_matrix(12, 3, 3).method == "stanley"

    def test_workers(self):
        assert sum_matrix(9, 6, 6, "rsk", workers=2) == sum_matrix(9, 6, 6, "stanley")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            sum_matrix(2, 2, 2, "magic")

    def test_one_indexed_access(self):
        S = sum_matrix(2, 5, 5)
        assert S[1, 1] == 26 and S[3, 5] == 18 and S.rows == S.cols == 5
