"""Pure-Python hot loops. Arbitrary-precision integers throughout.

``_ckernels.pyx`` mirrors every function here with the same signature and
results on int64 data; :mod:`hyperdense.backend` chooses between them.
"""

from __future__ import annotations

import heapq
from collections import deque

MINIMAL_SOURCE = 0
MAXIMAL_SOURCE = 1


def _residual_graph(num_nodes, tails, heads, caps):
    deg = [0] * (num_nodes + 1)
    for u, v in zip(tails, heads):
        deg[u + 1] += 1
        deg[v + 1] += 1
    for i in range(num_nodes):
        deg[i + 1] += deg[i]
    start = deg
    fill = start[:-1]
    m2 = 2 * len(tails)
    to = [0] * m2
    cap = [0] * m2
    rev = [0] * m2
    for u, v, c in zip(tails, heads, caps):
        a = fill[u]
        fill[u] += 1
        b = fill[v]
        fill[v] += 1
        to[a], cap[a], rev[a] = v, c, b
        to[b], cap[b], rev[b] = u, 0, a
    return start, to, cap, rev


def max_flow(num_nodes, s, t, tails, heads, caps, variant=MINIMAL_SOURCE):
    """Dinic's algorithm. Returns ``(flow_value, source_side)``.

    ``source_side[x]`` is 1 for nodes on the source side of the requested
    canonical minimum cut.
    """
    start, to, cap, rev = _residual_graph(num_nodes, tails, heads, caps)
    total = 0
    level = [-1] * num_nodes
    while True:
        for i in range(num_nodes):
            level[i] = -1
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            lu = level[u] + 1
            for a in range(start[u], start[u + 1]):
                if cap[a] > 0 and level[to[a]] < 0:
                    level[to[a]] = lu
                    q.append(to[a])
        if level[t] < 0:
            break
        it = start[:-1]
        path = []
        u = s
        while True:
            if u == t:
                f = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= f
                    cap[rev[a]] += f
                total += f
                # back up to the tail of the first saturated arc
                k = 0
                while cap[path[k]] > 0:
                    k += 1
                del path[k:]
                u = s if k == 0 else to[path[k - 1]]
                continue
            a = it[u]
            end = start[u + 1]
            lu = level[u] + 1
            while a < end and (cap[a] == 0 or level[to[a]] != lu):
                a += 1
            it[u] = a
            if a < end:
                path.append(a)
                u = to[a]
                continue
            if u == s:
                break
            level[u] = -1
            back = path.pop()
            u = to[rev[back]]
            it[u] += 1
    side = [0] * num_nodes
    if variant == MINIMAL_SOURCE:
        side[s] = 1
        q = deque([s])
        while q:
            u = q.popleft()
            for a in range(start[u], start[u + 1]):
                if cap[a] > 0 and not side[to[a]]:
                    side[to[a]] = 1
                    q.append(to[a])
    else:
        sink_side = [0] * num_nodes
        sink_side[t] = 1
        q = deque([t])
        while q:
            w = q.popleft()
            for a in range(start[w], start[w + 1]):
                x = to[a]
                if not sink_side[x] and cap[rev[a]] > 0:
                    sink_side[x] = 1
                    q.append(x)
        side = [1 - b for b in sink_side]
    return total, side


def peel(n, edge_ptr, edge_verts, vert_ptr, vert_edges, tab_ptr, tables, psi):
    """Greedy min-delta peeling with a lazy heap.

    Returns ``(order, deltas, weights_after)``: the removal sequence, the
    delta of each removed vertex at its removal, and ``F`` of the remaining
    set right after each removal.
    """
    m = len(edge_ptr) - 1
    counts = [edge_ptr[j + 1] - edge_ptr[j] for j in range(m)]
    delta = [0] * n
    for v in range(n):
        d = 0
        for k in range(vert_ptr[v], vert_ptr[v + 1]):
            j = vert_edges[k]
            top = tab_ptr[j] + counts[j]
            d += tables[top] - tables[top - 1]
        delta[v] = d
    heap = [(delta[v], v) for v in range(n)]
    heapq.heapify(heap)
    alive = [True] * n
    stamp = [-1] * n
    order, removed, after = [], [], []
    F = psi
    for step in range(n):
        while True:
            d, v = heapq.heappop(heap)
            if alive[v] and d == delta[v]:
                break
        alive[v] = False
        F -= d
        order.append(v)
        removed.append(d)
        after.append(F)
        touched = []
        for k in range(vert_ptr[v], vert_ptr[v + 1]):
            j = vert_edges[k]
            c = counts[j]
            counts[j] = c - 1
            if c < 2:
                continue
            base = tab_ptr[j]
            diff = (tables[base + c - 1] - tables[base + c - 2]) - (tables[base + c] - tables[base + c - 1])
            if diff == 0:
                continue
            for q in range(edge_ptr[j], edge_ptr[j + 1]):
                u = edge_verts[q]
                if alive[u]:
                    delta[u] += diff
                    if stamp[u] != step:
                        stamp[u] = step
                        touched.append(u)
        for u in touched:
            heapq.heappush(heap, (delta[u], u))
    return order, removed, after


def _lex_less(a, b):
    # equal-size masks: the one owning the lowest differing bit sorts first
    diff = a ^ b
    low = diff & -diff
    return (a & low) != 0


def brute(n, edge_ptr, edge_verts, vert_ptr, vert_edges, tab_ptr, tables):
    """Gray-code walk over all nonempty subsets.

    Returns ``(best_mask, best_weight, best_size)`` under the global
    tie-break (density, then smaller set, then lexicographic).
    """
    m = len(edge_ptr) - 1
    counts = [0] * m
    F = 0
    size = 0
    mask = 0
    best_mask, best_F, best_size = 0, 0, 0
    for i in range(1, 1 << n):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        if mask & bit:
            mask ^= bit
            size -= 1
            for k in range(vert_ptr[v], vert_ptr[v + 1]):
                j = vert_edges[k]
                c = counts[j]
                F -= tables[tab_ptr[j] + c] - tables[tab_ptr[j] + c - 1]
                counts[j] = c - 1
        else:
            mask |= bit
            size += 1
            for k in range(vert_ptr[v], vert_ptr[v + 1]):
                j = vert_edges[k]
                c = counts[j]
                F += tables[tab_ptr[j] + c + 1] - tables[tab_ptr[j] + c]
                counts[j] = c + 1
        if best_size == 0:
            best_mask, best_F, best_size = mask, F, size
            continue
        lhs = F * best_size
        rhs = best_F * size
        if lhs > rhs or (lhs == rhs and (size < best_size or (size == best_size and _lex_less(mask, best_mask)))):
            best_mask, best_F, best_size = mask, F, size
    return best_mask, best_F, best_size
