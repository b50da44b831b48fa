import itertools
import random
from fractions import Fraction

import pytest

from hyperdense import (EmptySetError, FractionalSolution, NotConvexError, SizeLimitError,
                        check_feasible, export_lp, indicator_solution, load_instance,
                        separate, sweep_round)
from hyperdense.lp import count_constraints
from hyperdense.oracle import random_instance

from .conftest import naive_best


def enum_min(H, x, j):
    inc = H.weights[j].increments
    return min(sum((d * x[v] for d, v in zip(inc, perm)), Fraction(0))
               for perm in itertools.permutations(H.edges[j]))


class TestSeparate:
    def test_pair(self, pair_example):
        x = (Fraction(1, 2), Fraction(1, 4))
        value, order = separate(pair_example, x, 0)
        assert value == 1 and order == (0, 1)
        assert enum_min(pair_example, x, 0) == 1
        # the other ordering costs 5/4
        assert 1 * x[1] + 2 * x[0] == Fraction(5, 4)

    def test_uniform_on_superset(self, square_edge):
        x = (Fraction(1, 5),) * 3
        assert separate(square_edge, x, 0)[0] == Fraction(9, 5)

    def test_zero(self, square_edge):
        assert separate(square_edge, (0, 0, 0), 0)[0] == 0

    def test_not_convex(self):
        H = load_instance("2 1\n2 0 1 table 0 2 3")
        with pytest.raises(NotConvexError):
            separate(H, (Fraction(1, 2), Fraction(1, 2)), 0)

    @pytest.mark.parametrize("seed", range(50))
    def test_matches_enumeration(self, seed):
        rng = random.Random(seed)
        k = rng.randint(1, 7)
        H = random_instance(seed, k, 1, k, "convex", min_edge_size=k)
        x = [Fraction(rng.randint(0, 6), rng.randint(1, 6)) for _ in range(k)]
        assert separate(H, x, 0)[0] == enum_min(H, x, 0)


class TestFeasibility:
    def test_indicator_construction(self, triangle_pendant):
        sol = indicator_solution(triangle_pendant, {0, 1, 2})
        assert check_feasible(triangle_pendant, sol)
        assert sol.objective == 1

    def test_zero_x_positive_y(self, pair_example):
        verdict = check_feasible(pair_example, FractionalSolution((0, 0), (1,)))
        assert not verdict and verdict.edge == 0
        assert verdict.permutation is not None and verdict.lhs == 0

    def test_zero_y(self, path3):
        x = (Fraction(1, 3),) * 3
        assert check_feasible(path3, FractionalSolution(x, (0, 0)))

    def test_simplex_and_sign(self, pair_example):
        assert not check_feasible(pair_example, FractionalSolution((1, 1), (0,)))
        assert not check_feasible(pair_example, FractionalSolution((-1, 1), (0,)))
        assert not check_feasible(pair_example, FractionalSolution((0, 0), (-1,)))

    def test_dimension_mismatch(self, pair_example):
        with pytest.raises(ValueError):
            check_feasible(pair_example, FractionalSolution((0,), (0,)))

    def test_non_convex_edge_uses_true_minimum(self):
        H = load_instance("2 1\n2 0 1 table 0 2 3")
        x = (Fraction(1, 2), Fraction(1, 4))
        # true minimum over both orderings: 2*(1/4) + 1*(1/2) = 1
        assert not check_feasible(H, FractionalSolution(x, (Fraction(11, 10),)))
        assert check_feasible(H, FractionalSolution(x, (1,)))
        assert enum_min(H, x, 0) == 1

    @pytest.mark.parametrize("seed", range(30))
    def test_weak_duality(self, seed):
        rng = random.Random(seed)
        H = random_instance(seed, 7, 6, 4, "convex")
        S, best = naive_best(H)
        for _ in range(3):
            T = [v for v in range(H.n) if rng.random() < 0.5] or [0]
            assert check_feasible(H, indicator_solution(H, T))
        sol = indicator_solution(H, S)
        assert sol.objective == best
        if H.m:
            j = rng.randrange(H.m)
            y = list(sol.y)
            y[j] += Fraction(1, 7)
            assert not check_feasible(H, FractionalSolution(sol.x, y))


class TestSweep:
    def test_square_edge(self, square_edge):
        sol = sweep_round(square_edge, indicator_solution(square_edge, {0, 1, 2}))
        assert sol.vertices == (0, 1, 2) and sol.density == 3

    def test_two_thresholds(self, triangle_pendant):
        x = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), 0)
        sol = sweep_round(triangle_pendant, FractionalSolution(x, (0, 0, 0, 0)))
        assert sol.extras["thresholds"] == [Fraction(1, 2), Fraction(1, 4)]
        assert sol.vertices == (0, 1, 2) and sol.density == 1

    def test_single_positive(self, path3):
        sol = sweep_round(path3, FractionalSolution((0, Fraction(1, 2), 0), (0, 0)))
        assert sol.vertices == (1,)

    def test_all_zero(self, path3):
        with pytest.raises(EmptySetError):
            sweep_round(path3, FractionalSolution((0, 0, 0), (0, 0)))

    @pytest.mark.parametrize("seed", range(30))
    def test_recovers_optimum(self, seed):
        H = random_instance(seed, 8, 7, 4, "convex")
        S, best = naive_best(H)
        sol = sweep_round(H, indicator_solution(H, S))
        assert sol.density == best


class TestExport:
    def test_full_square_edge(self, square_edge):
        text = export_lp(square_edge, mode="full")
        assert count_constraints(text) == 6 + 1
        assert "Maximize" in text and "Bounds" in text and text.rstrip().endswith("End")

    def test_full_too_large(self):
        H = random_instance(0, 8, 100, 8, "convex", min_edge_size=8)
        assert H.r == 8
        with pytest.raises(SizeLimitError):
            export_lp(H, mode="full")
        text = export_lp(H)
        assert count_constraints(text) == 1
        assert "Separation contract" in text

    def test_fractional_coefficients_scaled(self):
        H = load_instance("2 1\n2 0 1 table 0 1/2 5/3")
        text = export_lp(H, mode="full")
        assert "3 x0 + 7 x1 - 6 y0 >= 0" in text

    def test_writes_file(self, tmp_path, path3):
        out = tmp_path / "m.lp"
        text = export_lp(path3, out)
        assert out.read_text() == text

    def test_rejects(self, path3):
        with pytest.raises(ValueError):
            export_lp(path3, mode="dense")
        with pytest.raises(NotConvexError):
            export_lp(load_instance("2 1\n2 0 1 table 0 2 3"))

    def test_constraint_semantics(self):
        # every listed ordering constraint holds at the indicator solution of the optimum
        H = random_instance(3, 5, 4, 3, "convex")
        S, _ = naive_best(H)
        sol = indicator_solution(H, S)
        vals = {f"x{v}": x for v, x in enumerate(sol.x)}
        vals.update({f"y{j}": y for j, y in enumerate(sol.y)})
        text = export_lp(H, mode="full")
        for line in text.splitlines():
            if not line.startswith(" sep_"):
                continue
            expr = line.split(":", 1)[1].rsplit(">=", 1)[0].split()
            total, sign = Fraction(0), 1
            for i, tok in enumerate(expr):
                if tok in "+-":
                    sign = 1 if tok == "+" else -1
                elif tok in vals:
                    total += sign * int(expr[i - 1]) * vals[tok]
                    sign = 1
            assert total >= 0
