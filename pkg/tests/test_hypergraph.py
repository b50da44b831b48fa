from fractions import Fraction

import pytest

from hyperdense import (EmptySetError, Hypergraph, Shape, ShiftedWeightWarning, ValidationError,
                        WeightedHypergraph, WeightFn, density, induced_weight, load_instance,
                        removal_delta)
from hyperdense.hypergraph import as_fraction, better, intersection_counts

from .conftest import aon_graph, naive_F


class TestWeightFn:
    def test_shapes(self):
        assert WeightFn((0, 1, 3, 6)).shape is Shape.CONVEX
        assert WeightFn((0, 2, 3)).shape is Shape.CONCAVE
        assert WeightFn((0, 1, 1, 3)).shape is Shape.NEITHER

    def test_linear_counts_as_convex(self):
        f = WeightFn.linear(Fraction(3, 2), 4)
        assert f.is_convex and f.is_concave
        assert f.shape is Shape.CONVEX
        assert f.values == (0, Fraction(3, 2), 3, Fraction(9, 2), 6)

    def test_all_or_nothing(self):
        f = WeightFn.all_or_nothing(2, 3)
        assert f.values == (0, 0, 0, 2)
        assert f.shape is Shape.CONVEX

    def test_power_exact(self):
        f = WeightFn.power(Fraction(1, 3), 3, 3)
        assert f.values == (0, Fraction(1, 3), Fraction(8, 3), 9)
        with pytest.raises(ValidationError):
            WeightFn.power(1, 0, 3)

    def test_table_shift_warns(self):
        with pytest.warns(ShiftedWeightWarning):
            f = WeightFn.table([5, 6, 8])
        assert f.values == (0, 1, 3)

    def test_rejects_decreasing_and_negative(self):
        with pytest.raises(ValidationError, match="decreasing"):
            WeightFn.table([0, 2, 1])
        with pytest.raises(ValidationError, match="negative"):
            WeightFn.table([0, -1, 2])
        with pytest.raises(ValidationError):
            WeightFn((1, 2))
        with pytest.raises(ValidationError):
            WeightFn((0,))

    def test_size_one_edge(self):
        f = WeightFn.table([0, 7])
        assert f.size == 1 and f.shape is Shape.CONVEX

    def test_decimal_strings_are_exact(self):
        assert as_fraction("0.1") == Fraction(1, 10)
        assert as_fraction(0.1) == Fraction(1, 10)
        assert as_fraction("3/4") == Fraction(3, 4)


class TestHypergraph:
    def test_derived_counts(self):
        g = Hypergraph(5, ((0, 1), (1, 2, 3), (4,)))
        assert (g.m, g.p, g.r) == (3, 6, 3)
        assert g.incidence[1] == (0, 1)
        assert g.degree(4) == 1

    @pytest.mark.parametrize("edges", [((1, 0),), ((0, 0),), ((0, 5),), ((),)])
    def test_bad_edges(self, edges):
        with pytest.raises(ValidationError):
            Hypergraph(3, edges)

    def test_duplicate_edges_are_independent(self):
        H = aon_graph(2, [(0, 1), (0, 1)])
        assert H.m == 2 and H.psi == 2
        assert induced_weight(H, {0, 1}) == 2

    def test_length_mismatch(self):
        with pytest.raises(ValidationError):
            WeightedHypergraph(Hypergraph(2, ((0, 1),)), (WeightFn((0, 1)),))

    def test_psi_and_scale(self):
        H = load_instance("3 2\n2 0 1 table 0 1/2 3/2\n2 1 2 linear 1/3")
        assert H.psi == Fraction(3, 2) + Fraction(2, 3)
        assert H.weight_scale == 6
        A = H.arrays
        assert A.psi == H.psi * 6
        assert A.tables == [0, 3, 9, 0, 2, 4]


class TestObjective:
    def test_table_lookup(self):
        H = load_instance("3 1\n3 0 1 2 table 0 1 3 6")
        assert induced_weight(H, {0, 1}) == 3
        assert induced_weight(H, set()) == 0

    def test_two_edges(self):
        # frozen from the naive oracle: f1(1) + f2(2) = 1 + 2
        H = load_instance("3 2\n2 0 1 table 0 1 3\n2 1 2 table 0 2 2")
        assert induced_weight(H, {1, 2}) == 3
        assert naive_F(H, {1, 2}) == 3

    def test_density(self, square_edge):
        assert density(square_edge, {0, 1, 2}) == 3
        tri = aon_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert density(tri, {0, 1, 2}) == 1
        assert density(tri, {0, 1}) == Fraction(1, 2)
        with pytest.raises(EmptySetError):
            density(tri, set())

    def test_isolated_vertex(self):
        H = aon_graph(3, [(0, 1)])
        assert density(H, {2}) == 0

    def test_removal_delta_path(self, path3):
        S = {0, 1, 2}
        assert [removal_delta(path3, S, v) for v in range(3)] == [1, 2, 1]
        for v in range(3):
            assert removal_delta(path3, S, v) == naive_F(path3, S) - naive_F(path3, S - {v})
        with pytest.raises(ValueError):
            removal_delta(path3, {0, 1}, 2)

    def test_removal_delta_convex_table(self):
        H = load_instance("4 1\n3 0 1 2 table 0 1 3 6")
        S = {0, 1, 2, 3}
        assert removal_delta(H, S, 0) == 3
        assert removal_delta(H, S, 3) == 0
        counts = intersection_counts(H, S)
        assert removal_delta(H, S, 0, counts) == 3


def test_tie_break_order():
    assert better(Fraction(2), (5,), Fraction(1), (0,))
    assert better(Fraction(1), (3,), Fraction(1), (0, 1))
    assert better(Fraction(1), (0, 2), Fraction(1), (1, 2))
    assert not better(Fraction(1), (1, 2), Fraction(1), (1, 2))
