import warnings
from math import comb

import pytest

from oracles import dp_graph_nu, naive_is_shifted
from hxcomb import (
    Family, conjecture_bound, is_subgraph, is_shifted, make_A, make_A_graph, make_F1, make_F2,
    make_F3, size_formulas,
)
from hxcomb.constructions import BelowThresholdWarning
from hxcomb.errors import GroundSetMismatchError, InvalidParametersError


def grid():
    return [(n, s) for s in range(2, 6) for n in range(2 * s + 2, 15)]


class TestMakeA:
    def test_star(self):
        assert len(make_A(1, 1, 6, 3)) == comb(5, 2) == 10

    @pytest.mark.parametrize("n, k", [(5, 3), (6, 2), (7, 3)])
    def test_vacuous(self, n, k):
        assert len(make_A(n, k, n, k)) == comb(n, k)

    def test_F2_like(self):
        assert len(make_A(4, 2, 8, 3)) == comb(4, 2) * 4 + comb(4, 3) == 28

    @pytest.mark.parametrize("args, word", [
        ((2, 3, 6, 3), "p >= r"), ((1, 0, 6, 3), "r >= 1"),
        ((7, 1, 6, 3), "n >= p"), ((3, 3, 6, 2), "k >= r"),
    ])
    def test_invalid(self, args, word):
        with pytest.raises(InvalidParametersError, match=word):
            make_A(*args)

    @pytest.mark.parametrize("n", range(3, 10))
    def test_always_shifted(self, n):
        for k in (2, 3):
            for p in range(1, n + 1):
                for r in range(1, min(p, k) + 1):
                    f = make_A(p, r, n, k)
                    assert is_shifted(f)
                    if n <= 7:
                        assert naive_is_shifted(f, n, k)

    def test_shifted_up_to_12(self):
        for n in (10, 11, 12):
            for p in range(1, n + 1):
                for r in range(1, min(p, 3) + 1):
                    assert is_shifted(make_A(p, r, n, 3))


class TestF:
    @pytest.mark.parametrize("make, size", [(make_F1, 36), (make_F2, 40), (make_F3, 35)])
    def test_n10_s3(self, make, size):
        assert len(make(10, 3)) == size

    @pytest.mark.parametrize("n, s, expected", [
        (7, 2, (15, 13, 10)), (8, 2, (21, 16, 10)), (9, 3, (28, 34, 35)), (10, 3, (36, 40, 35)),
    ])
    def test_size_formulas(self, n, s, expected):
        assert size_formulas(n, s) == expected

    @pytest.mark.parametrize("n, s, bound", [(7, 2, 15), (9, 3, 35), (10, 3, 40)])
    def test_bound(self, n, s, bound):
        assert conjecture_bound(n, s) == bound

    def test_formulas_match_enumeration(self):
        for n, s in grid():
            sizes = tuple(len(m(n, s)) for m in (make_F1, make_F2, make_F3))
            assert sizes == size_formulas(n, s)

    def test_polynomial_forms(self):
        # the expanded cubic forms of the second and third sizes
        for n, s in grid():
            _, f2, f3 = size_formulas(n, s)
            assert 6 * f2 == -2 * s**3 + (3 * n - 6) * s**2 + (3 * n - 4) * s
            assert 3 * f3 == 4 * s**3 - s

    def test_below_threshold_warns(self):
        with pytest.warns(BelowThresholdWarning):
            f = make_F3(5, 2)
        assert len(f) == 10
        with pytest.raises(InvalidParametersError):
            make_F1(8, 1)


class TestAGraph:
    def test_i0(self):
        g = make_A_graph(0, 7, 2)
        assert len(g) == 10
        assert all(max(e) <= 5 for e in g)

    def test_block_layout(self):
        g = make_A_graph(2, 10, 3)
        expected = set()
        for a in range(1, 11):
            for b in range(a + 1, 11):
                if a <= 2 or b <= 5:
                    expected.add((a, b))
        assert {tuple(e) for e in g} == expected

    @pytest.mark.parametrize("args", [(3, 10, 2), (0, 7, 3), (-1, 8, 2)])
    def test_invalid(self, args):
        with pytest.raises(InvalidParametersError):
            make_A_graph(*args)

    def test_matching_number_is_m(self):
        for n in range(4, 13):
            for m in range(0, (n - 2) // 2 + 1):
                for i in range(0, m + 1):
                    g = make_A_graph(i, n, m)
                    assert dp_graph_nu(g, n) == m, (i, n, m)
                    assert is_shifted(g)


class TestIsSubgraph:
    def test_reflexive_and_empty(self):
        g = make_A_graph(1, 8, 2)
        assert is_subgraph(g, g)
        assert is_subgraph(Family(8, 2), g)

    def test_K5_in_container(self):
        k5 = make_A(5, 2, 5, 2)
        k5 = Family(7, 2, k5.edges)
        assert is_subgraph(k5, make_A_graph(0, 7, 2))
        assert not is_subgraph(make_A_graph(1, 7, 2), make_A_graph(0, 7, 2))

    def test_mismatch(self):
        with pytest.raises(GroundSetMismatchError):
            is_subgraph(Family(6, 2), Family(7, 2))


def test_F_families_are_union_feasible_small():
    from hxcomb import check_U
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for n, s in [(7, 2), (9, 3), (10, 3)]:
            for make in (make_F1, make_F2, make_F3):
                assert check_U(make(n, s), s, 2 * s + 1) is None
