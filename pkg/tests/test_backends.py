import random
from fractions import Fraction

import pytest

from hyperdense import backend, brute_force, load_instance, solve_exact, solve_greedy
from hyperdense.flow import FlowNetwork, min_cut
from hyperdense.oracle import random_instance

from .conftest import naive_best

needs_ext = pytest.mark.skipif("cython" not in backend.available(),
                               reason="compiled kernels not built")


def test_python_always_available():
    assert "python" in backend.available()
    with backend.use("python"):
        assert backend.active() == "python"
    with pytest.raises(ValueError):
        with backend.use("fortran"):
            pass


def random_network(seed):
    rng = random.Random(seed)
    N = rng.randint(2, 40)
    arcs = [(rng.randrange(N), rng.randrange(N), rng.randint(0, 50))
            for _ in range(rng.randint(0, 6 * N))]
    return FlowNetwork.from_arcs(N, [a for a in arcs if a[0] != a[1]])


@needs_ext
@pytest.mark.parametrize("seed", range(50))
def test_max_flow_agrees(seed):
    net = random_network(seed)
    for variant in (0, 1):
        with backend.use("python"):
            a = min_cut(net, variant)
        with backend.use("cython"):
            b = min_cut(net, variant)
        assert a == b


@needs_ext
@pytest.mark.parametrize("seed", range(30))
def test_peel_and_brute_agree(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 14)
    H = random_instance(seed, n, rng.randint(0, 20), min(n, 5),
                        rng.choice(["convex", "concave", "mixed"]) if n >= 2 else "convex")
    out = {}
    for name in ("python", "cython"):
        with backend.use(name):
            sol, steps = solve_greedy(H)
            res = brute_force(H)
            out[name] = (sol, steps, res.best_set, res.best_density)
    assert out["python"] == out["cython"]


@needs_ext
def test_huge_weights_fall_back_to_exact_integers():
    big = 10**30
    H = load_instance(f"3 2\n2 0 1 table 0 {big} {3 * big}\n2 1 2 linear 1/3")
    with backend.use("cython"):
        sol, _ = solve_exact(H)
        g, _ = solve_greedy(H)
        b = brute_force(H)
    assert sol.density == b.best_density == naive_best(H)[1] == (3 * big + Fraction(1, 3)) / 2
    assert g.density == sol.density
    net = FlowNetwork.from_arcs(3, [(0, 2, big), (2, 1, big - 1)])
    with backend.use("cython"):
        assert min_cut(net).cut_value == big - 1
