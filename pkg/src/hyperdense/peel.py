"""Peeling approximations and the all-concave closed form."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from . import backend
from .errors import EmptyGraphError, NotConcaveError
from .hypergraph import Solution, WeightedHypergraph, as_fraction


@dataclass(frozen=True)
class PeelStep:
    rank: int
    vertex: int
    delta: Fraction
    density_after: Fraction | None  # None once the set is empty


def _check(H: WeightedHypergraph):
    if H.n == 0:
        raise EmptyGraphError("instance has no vertices")


def solve_greedy(H: WeightedHypergraph) -> tuple[Solution, list[PeelStep]]:
    """Repeatedly drop the vertex whose removal loses the least weight.

    Ties go to the smallest vertex id. Every intermediate set, including the
    full vertex set, is a candidate; equal densities favour the smaller set.
    The 1/r guarantee holds when every table is convex; other tables are
    accepted without a guarantee.
    """
    _check(H)
    A = H.arrays
    W = A.scale
    n = A.n
    order, removed, after = backend.peel(A)
    best_k, best_F = 0, A.psi  # k vertices removed so far
    for k in range(1, n):
        F = after[k - 1]
        size = n - k
        # F / size >= best_F / (n - best_k); ties prefer the later, smaller set
        if F * (n - best_k) >= best_F * size:
            best_k, best_F = k, F
    steps = []
    for k, (v, d, F) in enumerate(zip(order, removed, after)):
        left = n - k - 1
        steps.append(PeelStep(k, v, Fraction(d, W), Fraction(F, W * left) if left else None))
    S = order[best_k:]
    sol = Solution(S, Fraction(best_F, W * (n - best_k)), "greedy", n,
                   {"guarantee": "1/r" if H.all_convex else "none"})
    return sol, steps


def removal_csv(steps: list[PeelStep]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["rank", "vertex", "delta", "density_after"])
    for s in steps:
        w.writerow([s.rank, s.vertex, str(s.delta), "" if s.density_after is None else str(s.density_after)])
    return buf.getvalue()


def para_iteration_bound(n: int, eps) -> int:
    """``ceil(log_{1+eps} n) + 1``, evaluated exactly."""
    base = 1 + as_fraction(eps)
    k, power = 0, Fraction(1)
    while power < n:
        power *= base
        k += 1
    return k + 1


def solve_para(H: WeightedHypergraph, eps) -> tuple[Solution, int]:
    """Batch peeling: each round removes every vertex whose delta is at most
    ``r (1 + eps) F(S) / |S|``, all measured against the same ``S``.

    Rounds shrink ``|S|`` by a factor above ``1 + eps``, so there are at most
    ``ceil(log_{1+eps} n) + 1`` of them.
    """
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    _check(H)
    A = H.arrays
    W, n, r = A.scale, A.n, max(H.r, 1)
    tables, tab_ptr = A.tables, A.tab_ptr
    edge_ptr = A.edge_ptr
    vert_ptr, vert_edges = A.vert_ptr, A.vert_edges
    counts = [edge_ptr[j + 1] - edge_ptr[j] for j in range(A.m)]
    S = list(range(n))
    F = A.psi
    best_set, best_F = tuple(S), F
    num, den = r * (eps.denominator + eps.numerator), eps.denominator  # r(1+eps)
    iterations = 0
    while S:
        iterations += 1
        size = len(S)
        # delta(v) <= r(1+eps) F / |S|  <=>  delta(v) * |S| * den <= num * F
        limit = num * F
        batch, keep = [], []
        for v in S:
            d = 0
            for k in range(vert_ptr[v], vert_ptr[v + 1]):
                j = vert_edges[k]
                top = tab_ptr[j] + counts[j]
                d += tables[top] - tables[top - 1]
            (batch if d * size * den <= limit else keep).append(v)
        assert not keep or len(keep) * (eps + 1) < size, "batch did not shrink S by 1 + eps"
        for v in batch:
            for k in range(vert_ptr[v], vert_ptr[v + 1]):
                j = vert_edges[k]
                c = counts[j]
                F -= tables[tab_ptr[j] + c] - tables[tab_ptr[j] + c - 1]
                counts[j] = c - 1
        S = keep
        if S and F * len(best_set) >= best_F * len(S):
            best_set, best_F = tuple(S), F
    sol = Solution(best_set, Fraction(best_F, W * len(best_set)), "para", iterations,
                   {"eps": eps, "guarantee": "1/(r(1+eps))" if H.all_convex else "none"})
    return sol, iterations


def solve_concave(H: WeightedHypergraph) -> Solution:
    """Optimal singleton ``{v}`` maximizing ``sum_{e ∋ v} f_e(1)``.

    Exact when every table is non-decreasing concave: the weight is then
    submodular, so no set beats its best single vertex.
    """
    _check(H)
    for j, w in enumerate(H.weights):
        if not w.is_concave:
            raise NotConcaveError(f"edge {j} has a non-concave weight table")
    score = [Fraction(0)] * H.n
    for e, w in zip(H.edges, H.weights):
        f1 = w.values[1]
        for v in e:
            score[v] += f1
    v = max(range(H.n), key=lambda u: (score[u], -u))
    return Solution((v,), score[v], "concave", 1)
