"""Certificate tooling for the permutation LP of the densest sub-hypergraph.

The LP maximizes ``sum_e y_e`` subject to ``sum_v x_v <= 1``, ``x, y >= 0``
and, for every edge ``e`` and every ordering ``pi`` of its vertices,
``sum_i (f_e(i) - f_e(i-1)) x_pi(i) >= y_e``. Only the cheapest ordering
matters per edge, and for convex tables that is ``x`` sorted descending.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import EmptySetError, NotConvexError, SizeLimitError
from .hypergraph import Solution, WeightedHypergraph, as_fraction, better, density

FULL_EXPORT_LIMIT = 10**5


@dataclass(frozen=True)
class FractionalSolution:
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(as_fraction(v) for v in self.x))
        object.__setattr__(self, "y", tuple(as_fraction(v) for v in self.y))

    @property
    def objective(self) -> Fraction:
        return sum(self.y, Fraction(0))


@dataclass(frozen=True)
class Verdict:
    feasible: bool
    reason: str = ""
    edge: int | None = None
    permutation: tuple[int, ...] | None = None
    lhs: Fraction | None = None

    def __bool__(self):
        return self.feasible


def separate(H: WeightedHypergraph, x, j: int) -> tuple[Fraction, tuple[int, ...]]:
    """Cheapest ordering of edge ``j`` for the vertex weights ``x``.

    Returns ``(min value, ordering)``; the ordering lists the edge's
    vertices by non-increasing ``x`` (ties by id), so the largest ``x``
    meets the smallest increment.
    """
    w = H.weights[j]
    if not w.is_convex:
        raise NotConvexError(f"edge {j} has a non-convex weight table")
    order = tuple(sorted(H.edges[j], key=lambda v: (-x[v], v)))
    value = sum((d * x[v] for d, v in zip(w.increments, order)), Fraction(0))
    return value, order


def _cheapest_ordering(H: WeightedHypergraph, x, j: int):
    # rearrangement inequality: largest x against smallest increment
    inc = H.weights[j].increments
    slots = sorted(range(len(inc)), key=lambda i: (inc[i], i))
    verts = sorted(H.edges[j], key=lambda v: (-x[v], v))
    order = [0] * len(inc)
    for i, v in zip(slots, verts):
        order[i] = v
    value = sum((inc[i] * x[order[i]] for i in range(len(inc))), Fraction(0))
    return value, tuple(order)


def check_feasible(H: WeightedHypergraph, sol: FractionalSolution) -> Verdict:
    """Check every LP constraint; on failure name the violated one."""
    if len(sol.x) != H.n or len(sol.y) != H.m:
        raise ValueError(
            f"expected {H.n} x-values and {H.m} y-values, got {len(sol.x)} and {len(sol.y)}"
        )
    for v, xv in enumerate(sol.x):
        if xv < 0:
            return Verdict(False, f"x[{v}] = {xv} is negative")
    for j, yj in enumerate(sol.y):
        if yj < 0:
            return Verdict(False, f"y[{j}] = {yj} is negative", edge=j)
    total = sum(sol.x, Fraction(0))
    if total > 1:
        return Verdict(False, f"sum of x is {total} > 1")
    for j in range(H.m):
        if H.weights[j].is_convex:
            value, order = separate(H, sol.x, j)
        else:
            value, order = _cheapest_ordering(H, sol.x, j)
        if value < sol.y[j]:
            return Verdict(False, f"edge {j}: ordering {order} gives {value} < y = {sol.y[j]}",
                           edge=j, permutation=order, lhs=value)
    return Verdict(True)


def indicator_solution(H: WeightedHypergraph, S) -> FractionalSolution:
    """``x = 1/|S|`` on ``S``; ``y_e = f_e(|e & S|)/|S|``. Objective is the density of ``S``."""
    members = set(S)
    if not members:
        raise EmptySetError("S must be nonempty")
    k = len(members)
    x = tuple(Fraction(1, k) if v in members else Fraction(0) for v in range(H.n))
    y = []
    for e, w in zip(H.edges, H.weights):
        c = sum(1 for v in e if v in members)
        y.append(w.values[c] / k)
    return FractionalSolution(x, tuple(y))


def sweep_round(H: WeightedHypergraph, sol: FractionalSolution) -> Solution:
    """Best level set ``{v : x_v >= t}`` over the distinct positive ``x`` values."""
    x = sol.x
    thresholds = sorted({v for v in x if v > 0}, reverse=True)
    if not thresholds:
        raise EmptySetError("x has no positive entry; every level set is empty")
    best_set, best_d = None, None
    for t in thresholds:
        S = tuple(v for v in range(H.n) if x[v] >= t)
        d = density(H, S)
        if best_set is None or better(d, S, best_d, best_set):
            best_set, best_d = S, d
    return Solution(best_set, best_d, "lp-sweep", len(thresholds),
                    {"thresholds": thresholds})


def _lp_terms(terms) -> str:
    parts = []
    for coef, name in terms:
        if not parts:
            parts.append(f"{coef} {name}" if coef >= 0 else f"- {-coef} {name}")
        else:
            parts.append(f"+ {coef} {name}" if coef >= 0 else f"- {-coef} {name}")
    return " ".join(parts)


_CALLBACK_NOTE = """\
\\ Separation contract for the per-edge ordering constraints (not listed):
\\   for edge e with table f_e and current x, let pi order the vertices of e
\\   by non-increasing x (ties by vertex id). The most violated constraint is
\\     sum_i (f_e(i) - f_e(i-1)) x_pi(i) - y_e >= 0
\\   and it is violated iff its left-hand side is negative. Add it as a cut
\\   and re-solve until no edge yields a violation; the level sets
\\   {v : x_v >= t} of the final x contain a maximum-density vertex set.
"""


def export_lp(H: WeightedHypergraph, path=None, mode: str = "callback",
              limit: int = FULL_EXPORT_LIMIT) -> str:
    """Write the LP in CPLEX LP text format and return the text.

    ``mode="callback"`` writes objective, simplex constraint and bounds and
    documents the separation routine in comments. ``mode="full"`` also lists
    every ordering constraint, refused when ``r! * m`` exceeds ``limit``.
    Coefficients are scaled per constraint to integers.
    """
    if mode not in ("callback", "full"):
        raise ValueError(f"unknown export mode {mode!r}")
    H.require_convex("LP export")
    if mode == "full" and math.factorial(H.r) * H.m > limit:
        raise SizeLimitError(
            f"full export needs r! * m = {math.factorial(H.r) * H.m} > {limit} ordering constraints"
        )
    xs = [f"x{v}" for v in range(H.n)]
    ys = [f"y{j}" for j in range(H.m)]
    out = [f"\\ densest sub-hypergraph LP: n={H.n} m={H.m} p={H.p} r={H.r}",
           f"\\ mode: {mode}"]
    if mode == "callback":
        out.append(_CALLBACK_NOTE.rstrip("\n"))
    out.append("Maximize")
    out.append(" obj: " + (_lp_terms((1, y) for y in ys) if ys else "0 x0" if xs else ""))
    out.append("Subject To")
    if xs:
        out.append(" simplex: " + _lp_terms((1, x) for x in xs) + " <= 1")
    if mode == "full":
        for j, (e, w) in enumerate(zip(H.edges, H.weights)):
            inc = w.increments
            scale = 1
            for d in inc:
                scale = math.lcm(scale, d.denominator)
            for k, perm in enumerate(itertools.permutations(e)):
                terms = [(int(d * scale), f"x{v}") for d, v in zip(inc, perm) if d]
                terms.append((-scale, f"y{j}"))
                out.append(f" sep_{j}_{k}: " + _lp_terms(terms) + " >= 0")
    out.append("Bounds")
    out.extend(f" {name} >= 0" for name in xs + ys)
    out.append("End")
    text = "\n".join(out) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def count_constraints(text: str) -> int:
    """Number of rows in the ``Subject To`` section of an exported model."""
    rows, inside = 0, False
    for line in text.splitlines():
        s = line.strip()
        if s == "Subject To":
            inside = True
        elif s in ("Bounds", "End"):
            inside = False
        elif inside and s and not s.startswith("\\"):
            rows += 1
    return rows
