"""The s-t flow gadget whose minimum cut prices ``Psi + lam*|S| - F(S)``.

Node layout: ``0`` is the source, ``1`` the sink, vertex ``v`` is node
``2 + v`` and the gadget nodes of each edge follow in edge order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import backend
from .errors import NotConvexError, ValidationError
from .hypergraph import WeightedHypergraph, WeightFn, as_fraction

SOURCE = 0
SINK = 1


class CutVariant(enum.IntEnum):
    MINIMAL_SOURCE = 0
    MAXIMAL_SOURCE = 1


def alpha_coefficients(f: WeightFn) -> list[Fraction]:
    """Second differences of ``f``: ``alpha_0 = f(1) - f(0)``,
    ``alpha_i = f(i+1) + f(i-1) - 2 f(i)`` for ``0 < i < |e|``.

    Their prefix sums telescope to ``f(j+1) - f(j)``.
    """
    v = f.values
    alpha = [v[1] - v[0]]
    for i in range(1, len(v) - 1):
        alpha.append(v[i + 1] + v[i - 1] - 2 * v[i])
    for i, a in enumerate(alpha):
        if a < 0:
            raise NotConvexError(f"alpha_{i} = {a} < 0: weight table is not convex")
    return alpha


@dataclass
class FlowNetwork:
    num_nodes: int
    tails: list[int]
    heads: list[int]
    caps: list[int]
    scale: int = 1
    n_vertices: int = 0
    s: int = SOURCE
    t: int = SINK

    @classmethod
    def from_arcs(cls, num_nodes: int, arcs, s: int = SOURCE, t: int = SINK) -> "FlowNetwork":
        tails, heads, caps = [], [], []
        for u, v, c in arcs:
            if c < 0 or int(c) != c:
                raise ValidationError(f"arc ({u},{v}) needs a non-negative integer capacity")
            tails.append(u)
            heads.append(v)
            caps.append(int(c))
        return cls(num_nodes, tails, heads, caps, 1, 0, s, t)

    @property
    def num_arcs(self) -> int:
        return len(self.tails)

    @property
    def arcs(self):
        return list(zip(self.tails, self.heads, self.caps))

    def vertex_node(self, v: int) -> int:
        return 2 + v

    def cut_value(self, source_side) -> int:
        """Total capacity of arcs leaving ``source_side`` (a set of node ids)."""
        X = source_side if isinstance(source_side, (set, frozenset)) else set(source_side)
        return sum(c for u, v, c in zip(self.tails, self.heads, self.caps)
                   if u in X and v not in X)

    def to_dimacs(self) -> str:
        lines = [f"p max {self.num_nodes} {self.num_arcs}",
                 f"n {self.s + 1} s", f"n {self.t + 1} t"]
        lines += [f"a {u + 1} {v + 1} {c}" for u, v, c in zip(self.tails, self.heads, self.caps)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CutResult:
    cut_value: int
    source_side: frozenset
    vertices: tuple[int, ...]
    variant: CutVariant


def network_scale(H: WeightedHypergraph, lam: Fraction) -> int:
    return math.lcm(H.weight_scale, Fraction(lam).denominator)


def _gadget_template(H: WeightedHypergraph):
    """lam-independent part of the network with capacities in units of 1/W.

    Cached on the (immutable) instance since every search step rebuilds the
    network for a new ``lam``.
    """
    cached = H.__dict__.get("_gadget_template")
    if cached is not None:
        return cached
    W = H.weight_scale
    tails, heads, caps = [], [], []
    node = 2 + H.n
    for j, (e, w) in enumerate(zip(H.edges, H.weights)):
        try:
            alpha = alpha_coefficients(w)
        except NotConvexError as exc:
            raise NotConvexError(f"edge {j}: {exc}") from exc
        k = len(e)
        for i, a in enumerate(alpha):
            if a:
                ac = a.numerator * (W // a.denominator)
                tails.append(SOURCE)
                heads.append(node + i)
                caps.append((k - i) * ac)
                for v in e:
                    tails.append(node + i)
                    heads.append(2 + v)
                    caps.append(ac)
        node += k
    cached = (node, tails, heads, caps)
    H.__dict__["_gadget_template"] = cached
    return cached


def build_network(H: WeightedHypergraph, lam) -> FlowNetwork:
    """Gadget network for threshold ``lam``; capacities scaled to integers.

    Arcs: ``(v, t)`` with ``lam``; per edge and ``i < |e|`` an arc
    ``(s, u_i)`` with ``(|e| - i) * alpha_i`` and arcs ``(u_i, v)`` with
    ``alpha_i`` for every ``v`` in the edge. Zero-capacity arcs are left out.
    """
    lam = as_fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    scale = network_scale(H, lam)
    num_nodes, g_tails, g_heads, g_caps = _gadget_template(H)
    n = H.n
    lam_cap = lam.numerator * (scale // lam.denominator)
    if lam_cap:
        tails = list(range(2, 2 + n))
        heads = [SINK] * n
        caps = [lam_cap] * n
    else:
        tails, heads, caps = [], [], []
    mult = scale // H.weight_scale
    tails += g_tails
    heads += g_heads
    caps += g_caps if mult == 1 else [c * mult for c in g_caps]
    return FlowNetwork(num_nodes, tails, heads, caps, scale, n)


def min_cut(net: FlowNetwork, variant: CutVariant = CutVariant.MINIMAL_SOURCE) -> CutResult:
    """Exact minimum s-t cut.

    ``MINIMAL_SOURCE`` returns the nodes reachable from ``s`` in the final
    residual graph, ``MAXIMAL_SOURCE`` everything that cannot reach ``t``.
    """
    value, side = backend.max_flow(net.num_nodes, net.s, net.t, net.tails, net.heads,
                                   net.caps, int(variant))
    X = frozenset(i for i, b in enumerate(side) if b)
    verts = tuple(v for v in range(net.n_vertices) if side[2 + v])
    return CutResult(value, X, verts, CutVariant(variant))


def gadget_cut(H: WeightedHypergraph, net: FlowNetwork, S) -> frozenset:
    """Source side ``{s} + S + {u_i : i < |e & S|}`` used by the cut-cost identity."""
    members = set(S)
    X = {SOURCE}
    X.update(2 + v for v in members)
    node = 2 + H.n
    for e in H.edges:
        c = sum(1 for v in e if v in members)
        X.update(node + i for i in range(c))
        node += len(e)
    return frozenset(X)
