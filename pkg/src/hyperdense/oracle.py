"""Exhaustive ground truth and seeded random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import backend
from .errors import EmptyGraphError, TooLargeError, ValidationError
from .hypergraph import Hypergraph, WeightedHypergraph, WeightFn

MAX_ORACLE_N = 24
MAX_TABLE_N = 16


@dataclass(frozen=True)
class OracleResult:
    best_set: tuple[int, ...]
    best_density: Fraction
    table: dict | None = None  # subset tuple -> density, kept on request for n <= 16


def _mask_to_set(mask: int) -> tuple[int, ...]:
    out, v = [], 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def gray_walk(H: WeightedHypergraph):
    """Yield ``(mask, scaled F, size)`` for every nonempty subset in Gray-code
    order, updating edge counts incrementally (one vertex flips per step)."""
    A = H.arrays
    tables, tab_ptr = A.tables, A.tab_ptr
    counts = [0] * A.m
    F = size = mask = 0
    for i in range(1, 1 << A.n):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        sign = -1 if mask & bit else 1
        mask ^= bit
        size += sign
        for k in range(A.vert_ptr[v], A.vert_ptr[v + 1]):
            j = A.vert_edges[k]
            c = counts[j]
            if sign > 0:
                F += tables[tab_ptr[j] + c + 1] - tables[tab_ptr[j] + c]
            else:
                F -= tables[tab_ptr[j] + c] - tables[tab_ptr[j] + c - 1]
            counts[j] = c + sign
        yield mask, F, size


def brute_force(H: WeightedHypergraph, keep_table: bool = False) -> OracleResult:
    """Maximum density over all ``2^n - 1`` nonempty subsets."""
    if H.n == 0:
        raise EmptyGraphError("instance has no vertices")
    if H.n > MAX_ORACLE_N:
        raise TooLargeError(f"brute force is capped at n <= {MAX_ORACLE_N}, got n = {H.n}")
    W = H.weight_scale
    mask, F, size = backend.brute(H.arrays)
    table = None
    if keep_table:
        if H.n > MAX_TABLE_N:
            raise TooLargeError(f"full subset table is capped at n <= {MAX_TABLE_N}")
        table = {_mask_to_set(mk): Fraction(f, W * sz) for mk, f, sz in gray_walk(H)}
    return OracleResult(_mask_to_set(mask), Fraction(F, W * size), table)


SHAPES = ("convex", "concave", "mixed")


def _increments(rng: random.Random, k: int, max_weight: int, ascending: bool, strict: bool):
    total = rng.randint(1 if strict else 0, max_weight)
    cuts = sorted(rng.randint(0, total) for _ in range(k - 1))
    parts = sorted(b - a for a, b in zip([0, *cuts], [*cuts, total]))
    if strict and k >= 2 and parts[0] == parts[-1]:
        # equal parts make a linear table; tilt it, keeping the sum (total >= 1 here)
        parts[0] -= 1
        parts[-1] += 1
    return parts if ascending else parts[::-1]


def _table(incs) -> WeightFn:
    vals, acc = [0], 0
    for d in incs:
        acc += d
        vals.append(acc)
    return WeightFn(tuple(Fraction(v) for v in vals))


def random_instance(seed, n: int, m: int, max_edge_size: int, shape: str = "convex",
                    max_weight: int = 9, min_edge_size: int = 1) -> WeightedHypergraph:
    """Seeded random hypergraph with small-integer weight tables.

    Edge sizes are uniform in ``[min_edge_size, max_edge_size]``; vertices are
    sampled without repetition. Convex tables have non-decreasing increments,
    concave ones non-increasing; every value is at most ``max_weight``. With
    ``shape="mixed"`` each table is convex or concave at random, and when
    ``m >= 2`` edge 0 is strictly convex and edge 1 strictly concave.
    """
    shape = shape.lower()
    if shape not in SHAPES:
        raise ValidationError(f"shape must be one of {SHAPES}, got {shape!r}")
    if n < 1 or m < 0 or max_weight < 0:
        raise ValidationError("need n >= 1, m >= 0 and max_weight >= 0")
    if not 1 <= min_edge_size <= max_edge_size <= n:
        raise ValidationError(
            f"edge sizes need 1 <= {min_edge_size} <= {max_edge_size} <= n = {n}"
        )
    forced = shape == "mixed" and m >= 2
    if forced and (max_edge_size < 2 or max_weight < 1):
        raise ValidationError("mixed instances need max_edge_size >= 2 and max_weight >= 1")
    rng = random.Random(seed)
    edges, weights = [], []
    for j in range(m):
        lo = max(min_edge_size, 2) if forced and j < 2 else min_edge_size
        k = rng.randint(lo, max_edge_size)
        e = tuple(sorted(rng.sample(range(n), k)))
        if forced and j < 2:
            ascending, strict = j == 0, True
        elif shape == "mixed":
            ascending, strict = rng.random() < 0.5, False
        else:
            ascending, strict = shape == "convex", False
        edges.append(e)
        weights.append(_table(_increments(rng, k, max_weight, ascending, strict)))
    return WeightedHypergraph(Hypergraph(n, tuple(edges)), tuple(weights))


def sized_instance(seed, n: int, p: int, r: int, max_weight: int = 9) -> WeightedHypergraph:
    """Seeded convex instance with exactly ``p`` incidences and rank ``r``.

    Edge sizes are uniform in ``[1, r]`` (the last edge is trimmed to hit
    ``p``), and at least one edge has size ``r`` whenever ``p >= r``.
    """
    if not 1 <= r <= n or p < 0:
        raise ValidationError(f"need 1 <= r <= n and p >= 0, got n={n}, p={p}, r={r}")
    rng = random.Random(seed)
    edges, weights = [], []
    left = p
    while left:
        k = r if not edges and p >= r else min(rng.randint(1, r), left)
        left -= k
        edges.append(tuple(sorted(rng.sample(range(n), k))))
        weights.append(_table(_increments(rng, k, max_weight, True, False)))
    return WeightedHypergraph(Hypergraph(n, tuple(edges)), tuple(weights))
