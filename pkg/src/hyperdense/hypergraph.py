"""Problem instances: hypergraphs, per-edge weight tables and the objective.

All weights are :class:`fractions.Fraction`. Solvers work on an integer
copy of the tables (every value multiplied by the lcm of the denominators),
exposed through :attr:`WeightedHypergraph.arrays`.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import EmptySetError, ValidationError

Rational = Fraction


class ShiftedWeightWarning(UserWarning):
    """Emitted when a table with f(0) != 0 is shifted down to f(0) = 0."""


class Shape(enum.Enum):
    CONVEX = "convex"
    CONCAVE = "concave"
    NEITHER = "neither"


def as_fraction(value) -> Fraction:
    """Exact conversion; floats go through their shortest repr so 0.1 -> 1/10."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not weights")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(str(value).strip())


@dataclass(frozen=True)
class WeightFn:
    """Tabulated edge-weight function ``values[i] = f(i)`` for ``i = 0..|e|``.

    The constructor expects a normalized table (``f(0) = 0``); use
    :meth:`table` to accept and shift arbitrary user tables.
    """

    values: tuple[Fraction, ...]
    source: tuple = ("table",)

    def __post_init__(self):
        vals = tuple(as_fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) < 2:
            raise ValidationError("a weight table needs at least f(0) and f(1)")
        if vals[0] != 0:
            raise ValidationError(f"f(0) must be 0 after normalization, got {vals[0]}")
        for i in range(len(vals) - 1):
            if vals[i + 1] < vals[i]:
                raise ValidationError(
                    f"weight table is decreasing at i={i}: f({i})={vals[i]} > f({i + 1})={vals[i + 1]}"
                )

    # -- constructors -------------------------------------------------
    @classmethod
    def table(cls, values: Iterable) -> "WeightFn":
        vals = [as_fraction(v) for v in values]
        if any(v < 0 for v in vals):
            raise ValidationError("negative weight in table")
        if vals and vals[0] != 0:
            warnings.warn(
                f"f(0)={vals[0]} shifted to 0", ShiftedWeightWarning, stacklevel=2
            )
            base = vals[0]
            vals = [v - base for v in vals]
        return cls(tuple(vals), ("table",))

    @classmethod
    def linear(cls, w, size: int) -> "WeightFn":
        w = _nonneg(w)
        return cls(tuple(w * i for i in range(size + 1)), ("linear", w))

    @classmethod
    def all_or_nothing(cls, w, size: int) -> "WeightFn":
        w = _nonneg(w)
        vals = [Fraction(0)] * (size + 1)
        vals[size] = w
        return cls(tuple(vals), ("allornothing", w))

    @classmethod
    def power(cls, w, exponent: int, size: int) -> "WeightFn":
        w = _nonneg(w)
        if isinstance(exponent, bool) or int(exponent) != exponent or exponent < 1:
            raise ValidationError(f"power exponent must be an integer >= 1, got {exponent}")
        exponent = int(exponent)
        return cls(tuple(w * i**exponent for i in range(size + 1)), ("power", w, exponent))

    # -- shape --------------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.values) - 1

    @property
    def increments(self) -> tuple[Fraction, ...]:
        """``f(i) - f(i-1)`` for ``i = 1..|e|``."""
        v = self.values
        return tuple(v[i] - v[i - 1] for i in range(1, len(v)))

    @cached_property
    def _int_increments(self) -> tuple[int, ...]:
        # increments scaled by the common denominator; same order as the rationals
        den = 1
        for v in self.values:
            den = math.lcm(den, v.denominator)
        ints = [v.numerator * (den // v.denominator) for v in self.values]
        return tuple(ints[i] - ints[i - 1] for i in range(1, len(ints)))

    @cached_property
    def is_convex(self) -> bool:
        d = self._int_increments
        return all(d[i] <= d[i + 1] for i in range(len(d) - 1))

    @cached_property
    def is_concave(self) -> bool:
        d = self._int_increments
        return all(d[i] >= d[i + 1] for i in range(len(d) - 1))

    @property
    def shape(self) -> Shape:
        # linear tables are both; they count as convex
        if self.is_convex:
            return Shape.CONVEX
        if self.is_concave:
            return Shape.CONCAVE
        return Shape.NEITHER

    @property
    def top(self) -> Fraction:
        return self.values[-1]

    def __call__(self, i: int) -> Fraction:
        return self.values[i]


def _nonneg(w) -> Fraction:
    w = as_fraction(w)
    if w < 0:
        raise ValidationError(f"negative weight {w}")
    return w


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("vertex count must be non-negative")
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for j, e in enumerate(edges):
            if not e:
                raise ValidationError(f"edge {j} is empty")
            if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                raise ValidationError(f"edge {j} is not sorted and duplicate-free")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValidationError(f"edge {j} has a vertex outside [0, {self.n})")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def p(self) -> int:
        return sum(len(e) for e in self.edges)

    @property
    def r(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edges incident to each vertex, in increasing edge order."""
        inc = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])


@dataclass(frozen=True)
class IntArrays:
    """Flat integer view of an instance, shared by the Python and compiled kernels.

    ``tables[tab_ptr[j] + i]`` is ``f_j(i)`` times ``scale``.
    """

    n: int
    m: int
    edge_ptr: list
    edge_verts: list
    vert_ptr: list
    vert_edges: list
    tab_ptr: list
    tables: list
    scale: int
    psi: int


@dataclass(frozen=True)
class WeightedHypergraph:
    graph: Hypergraph
    weights: tuple[WeightFn, ...]

    def __post_init__(self):
        weights = tuple(self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != self.graph.m:
            raise ValidationError(
                f"{self.graph.m} edges but {len(weights)} weight functions"
            )
        for j, (e, w) in enumerate(zip(self.graph.edges, weights)):
            if w.size != len(e):
                raise ValidationError(
                    f"edge {j}: table has {len(w.values)} entries, expected {len(e) + 1}"
                )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[Sequence[int], WeightFn]]):
        es, ws = [], []
        for verts, w in edges:
            es.append(tuple(sorted(verts)))
            ws.append(w)
        return cls(Hypergraph(n, tuple(es)), tuple(ws))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def p(self) -> int:
        return self.graph.p

    @property
    def r(self) -> int:
        return self.graph.r

    @property
    def edges(self):
        return self.graph.edges

    @cached_property
    def psi(self) -> Fraction:
        return sum((w.top for w in self.weights), Fraction(0))

    @property
    def all_convex(self) -> bool:
        return all(w.is_convex for w in self.weights)

    @property
    def all_concave(self) -> bool:
        return all(w.is_concave for w in self.weights)

    def require_convex(self, what: str = "this algorithm"):
        from .errors import NotConvexError

        for j, w in enumerate(self.weights):
            if not w.is_convex:
                raise NotConvexError(f"edge {j} has a non-convex weight table; {what} needs convex tables")

    @cached_property
    def weight_scale(self) -> int:
        """lcm of every table denominator; multiplying by it makes all weights integers."""
        scale = 1
        for w in self.weights:
            for v in w.values:
                scale = math.lcm(scale, v.denominator)
        return scale

    @cached_property
    def arrays(self) -> IntArrays:
        g = self.graph
        scale = self.weight_scale
        edge_ptr = [0]
        edge_verts = []
        tab_ptr = [0]
        tables = []
        for e, w in zip(g.edges, self.weights):
            edge_verts.extend(e)
            edge_ptr.append(len(edge_verts))
            tables.extend(v.numerator * (scale // v.denominator) for v in w.values)
            tab_ptr.append(len(tables))
        vert_ptr = [0]
        vert_edges = []
        for inc in g.incidence:
            vert_edges.extend(inc)
            vert_ptr.append(len(vert_edges))
        psi = sum(tables[tab_ptr[j + 1] - 1] for j in range(g.m))
        return IntArrays(g.n, g.m, edge_ptr, edge_verts, vert_ptr, vert_edges,
                         tab_ptr, tables, scale, psi)


@dataclass(frozen=True)
class Solution:
    vertices: tuple[int, ...]
    density: Fraction
    algorithm: str
    iterations: int = 0
    extras: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        if not self.vertices:
            raise EmptySetError("a solution must contain at least one vertex")


# ---------------------------------------------------------------------------
# objective

def intersection_counts(H: WeightedHypergraph, S) -> list[int]:
    members = S if isinstance(S, (set, frozenset)) else set(S)
    return [sum(1 for v in e if v in members) for e in H.edges]


def induced_weight(H: WeightedHypergraph, S) -> Fraction:
    """``F(S) = sum_e f_e(|e & S|)``, one pass over the incidences."""
    counts = intersection_counts(H, S)
    return sum((w.values[c] for w, c in zip(H.weights, counts)), Fraction(0))


def density(H: WeightedHypergraph, S) -> Fraction:
    members = set(S)
    if not members:
        raise EmptySetError("density of the empty set is undefined")
    return induced_weight(H, members) / len(members)


def removal_delta(H: WeightedHypergraph, S, v: int, counts: Sequence[int] | None = None) -> Fraction:
    """``F(S) - F(S - {v})`` in O(deg v) given per-edge counts ``|e & S|``."""
    if v not in S:
        raise ValueError(f"vertex {v} is not in S")
    if counts is None:
        counts = intersection_counts(H, S)
    total = Fraction(0)
    for j in H.graph.incidence[v]:
        c = counts[j]
        vals = H.weights[j].values
        total += vals[c] - vals[c - 1]
    return total


def better(d1: Fraction, s1: Sequence[int], d2: Fraction, s2: Sequence[int]) -> bool:
    """True when candidate 1 beats candidate 2 under the global tie-break.

    Higher density wins; then the smaller set; then the lexicographically
    smaller sorted id list.
    """
    if d1 != d2:
        return d1 > d2
    if len(s1) != len(s2):
        return len(s1) < len(s2)
    return sorted(s1) < sorted(s2)
