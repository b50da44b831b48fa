import itertools
from fractions import Fraction

import pytest

from hyperdense import WeightedHypergraph, WeightFn, load_instance
from hyperdense.hypergraph import induced_weight


def naive_best(H):
    """Independent oracle: from-scratch evaluation of every nonempty subset,
    visited by size then lexicographically, so the first maximum found is the
    tie-break winner."""
    best_set, best_d = None, None
    for k in range(1, H.n + 1):
        for S in itertools.combinations(range(H.n), k):
            d = induced_weight(H, S) / k
            if best_d is None or d > best_d:
                best_set, best_d = S, d
    return best_set, best_d


def naive_F(H, S):
    # counted edge by edge, bypassing the library's evaluation helpers
    members = set(S)
    return sum((w.values[sum(v in members for v in e)] for e, w in zip(H.edges, H.weights)),
               Fraction(0))


def all_subsets(n):
    for k in range(n + 1):
        yield from itertools.combinations(range(n), k)


def aon_graph(n, pairs, w=1):
    return WeightedHypergraph.from_edges(
        n, [(tuple(sorted(e)), WeightFn.all_or_nothing(w, len(e))) for e in pairs])


@pytest.fixture
def square_edge():
    # one edge {0,1,2} with f(i) = i^2
    return load_instance("3 1\n3 0 1 2 table 0 1 4 9")


@pytest.fixture
def triangle_pendant():
    return aon_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


@pytest.fixture
def path3():
    return aon_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def two_disjoint():
    return aon_graph(4, [(0, 1), (2, 3)])


@pytest.fixture
def pair_example():
    # edge {0,1} with f = (0,1,3)
    return load_instance("2 1\n2 0 1 table 0 1 3")


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
