"""Flow-based solvers: exact binary search and the geometric (1 - eps) search.

Both test a threshold ``lam`` by one minimum cut: the cut is cheaper than
``Psi`` (scaled) exactly when some nonempty set has density above ``lam``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EmptyGraphError, ValidationError
from .flow import SOURCE, CutVariant, build_network, min_cut
from .hypergraph import Solution, WeightedHypergraph, as_fraction, density


class Branch(enum.Enum):
    RAISE_LB = "raise_lb"
    LOWER_UB = "lower_ub"


@dataclass(frozen=True)
class TraceStep:
    lam: Fraction
    cut_value: int
    branch: Branch
    lb: Fraction
    ub: Fraction
    cuts: int = 1


@dataclass
class SearchTrace:
    steps: list[TraceStep] = field(default_factory=list)
    initial_lb: Fraction = Fraction(0)
    initial_ub: Fraction = Fraction(0)
    final_lb: Fraction = Fraction(0)
    final_ub: Fraction = Fraction(0)

    @property
    def iterations(self) -> int:
        return len(self.steps)

    @property
    def cuts(self) -> int:
        return sum(s.cuts for s in self.steps)

    def to_dict(self) -> dict:
        return {
            "initial_lb": str(self.initial_lb),
            "initial_ub": str(self.initial_ub),
            "final_lb": str(self.final_lb),
            "final_ub": str(self.final_ub),
            "iterations": [
                {"lambda": str(s.lam), "cut_value": s.cut_value, "branch": s.branch.value,
                 "lb": str(s.lb), "ub": str(s.ub), "cuts": s.cuts}
                for s in self.steps
            ],
        }


def _prepare(H: WeightedHypergraph, name: str):
    if H.n == 0:
        raise EmptyGraphError("instance has no vertices")
    H.require_convex(name)


def _test(H: WeightedHypergraph, lam: Fraction, variant=CutVariant.MINIMAL_SOURCE):
    net = build_network(H, lam)
    cut = min_cut(net, variant)
    return cut, cut.cut_value < H.psi * net.scale


def _zero_solution(H, algorithm, trace):
    return Solution((0,), Fraction(0), algorithm, 0, {"trace": trace})


def canonical_optimum(H: WeightedHypergraph, union) -> tuple[int, ...]:
    """Smallest (then lexicographically first) optimal set inside ``union``.

    ``union`` must be the largest optimal set. At the optimal density the
    optimal sets plus the empty set are the minimizers of a submodular
    function, so they are closed under intersection; forcing ``v`` to the
    source side and taking the minimal source cut yields the least optimal
    set containing ``v``, and every minimum-cardinality optimum arises so.
    """
    union = tuple(sorted(union))
    if len(union) <= 1:
        return union
    lam = density(H, union)
    net = build_network(H, lam)
    big = sum(net.caps) + 1
    best = union
    for v in union:
        net.tails.append(SOURCE)
        net.heads.append(2 + v)
        net.caps.append(big)
        cut = min_cut(net, CutVariant.MINIMAL_SOURCE)
        del net.tails[-1], net.heads[-1], net.caps[-1]
        cand = cut.vertices
        if len(cand) < len(best) or (len(cand) == len(best) and cand < best):
            best = cand
    return best


def solve_exact(H: WeightedHypergraph, canonical: bool = True) -> tuple[Solution, SearchTrace]:
    """Maximum-density set by bisection on ``lam`` with exact rationals.

    The search runs on weights scaled to integers, where two distinct
    achievable densities differ by at least ``1/(n(n-1))``; it stops once the
    bracket is narrower than that, then extracts the maximal-source cut at
    the lower end. With ``canonical`` the answer is reduced to the smallest,
    lexicographically first optimal set.
    """
    _prepare(H, "the exact flow solver")
    W = H.weight_scale
    psi = H.psi
    trace = SearchTrace(initial_lb=Fraction(0), initial_ub=psi)
    if psi == 0:
        trace.final_lb = trace.final_ub = Fraction(0)
        return _zero_solution(H, "flow", trace), trace
    n = H.n
    if n == 1:
        # only one candidate set: the bracket is closed from the start
        trace.initial_lb = trace.final_lb = trace.final_ub = psi
        return Solution((0,), psi, "flow", 0, {"trace": trace}), trace
    gap = Fraction(1, n * (n - 1))
    lb, ub = Fraction(0), psi * W
    while ub - lb >= gap:
        lam = (lb + ub) / 2
        cut, denser = _test(H, lam / W)
        if denser:
            lb = lam
            branch = Branch.RAISE_LB
        else:
            ub = lam
            branch = Branch.LOWER_UB
        trace.steps.append(TraceStep(lam / W, cut.cut_value, branch, lb / W, ub / W))
    trace.final_lb, trace.final_ub = lb / W, ub / W
    cut = min_cut(build_network(H, lb / W), CutVariant.MAXIMAL_SOURCE)
    S = cut.vertices
    if canonical:
        S = canonical_optimum(H, S)
    return Solution(S, density(H, S), "flow", trace.iterations, {"trace": trace}), trace


def _floor_sqrt(x: Fraction, D: int) -> Fraction:
    """``floor(sqrt(x) * D) / D``."""
    return Fraction(math.isqrt(x.numerator * D * D // x.denominator), D)


def eps_iteration_bound(r: int, m: int, eps) -> int:
    """``ceil(log2(ln(r m) / ln(1/(1-eps)))) + 2`` (0 + 2 when ``r m = 1``)."""
    eps = as_fraction(eps)
    if r * m <= 1:
        return 2
    x = math.log(r * m) / -math.log1p(-float(eps))
    return max(0, math.ceil(math.log2(x))) + 2


def solve_eps(H: WeightedHypergraph, eps) -> tuple[Solution, SearchTrace]:
    """(1 - eps)-approximate densest set by geometric search on ``lam``.

    Starts from ``[f_em(|e_m|)/|e_m|, Psi]`` for the heaviest edge ``e_m`` and
    probes the geometric mean, rounded down at precision ``W n^2`` (refined
    when needed so the probe stays strictly inside the bracket). On a
    positive probe the lower bound jumps to the density actually found,
    which keeps ``ub/lb`` at or below the square root of its previous value.
    """
    eps = as_fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    _prepare(H, "the (1-eps) flow solver")
    psi = H.psi
    if psi == 0:
        raise ValidationError("all edge weights are zero; the geometric search needs a positive weight")
    W = H.weight_scale
    n = H.n
    jm = max(range(H.m), key=lambda j: (H.weights[j].top, -j))
    lb = H.weights[jm].top / len(H.edges[jm])
    ub = psi
    trace = SearchTrace(initial_lb=lb, initial_ub=ub)
    D0 = W * n * n
    while lb < (1 - eps) * ub:
        target = lb * ub
        D = D0
        lam = _floor_sqrt(target, D)
        while lam <= lb:
            D *= 2
            lam = _floor_sqrt(target, D)
        cuts = 0
        while True:
            cut, denser = _test(H, lam, CutVariant.MAXIMAL_SOURCE)
            cuts += 1
            if not denser:
                ub = lam
                branch = Branch.LOWER_UB
                break
            found = density(H, cut.vertices)
            if found * found >= target:
                lb = found
                branch = Branch.RAISE_LB
                break
            # the set found lies below the exact geometric mean: probe closer to it
            while lam <= found:
                D *= 2
                lam = _floor_sqrt(target, D)
        trace.steps.append(TraceStep(lam, cut.cut_value, branch, lb, ub, cuts))
    trace.final_lb, trace.final_ub = lb, ub
    cut = min_cut(build_network(H, lb), CutVariant.MAXIMAL_SOURCE)
    S = cut.vertices
    sol = Solution(S, density(H, S), "flow-eps", trace.iterations,
                   {"trace": trace, "eps": eps})
    return sol, trace
