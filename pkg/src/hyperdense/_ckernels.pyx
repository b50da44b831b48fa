# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counterparts of :mod:`hyperdense._pykernels` on int64 data.

Callers (see :mod:`hyperdense.backend`) only route here when every
intermediate value provably fits in a signed 64-bit integer.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef long long i64

MINIMAL_SOURCE = 0
MAXIMAL_SOURCE = 1


cdef inline void _free_all(void** ptrs, int k):
    cdef int i
    for i in range(k):
        free(ptrs[i])


def max_flow(Py_ssize_t num_nodes, Py_ssize_t s, Py_ssize_t t,
             const i64[::1] tails, const i64[::1] heads, const i64[::1] caps,
             int variant=0):
    cdef Py_ssize_t m = tails.shape[0]
    cdef Py_ssize_t m2 = 2 * m
    cdef Py_ssize_t i, a, b, u, v, w, x, end, k, lu, qh, qt, plen
    cdef i64 f, total = 0
    cdef i64* start = <i64*> malloc((num_nodes + 1) * sizeof(i64))
    cdef i64* fill = <i64*> malloc((num_nodes + 1) * sizeof(i64))
    cdef i64* to = <i64*> malloc((m2 + 1) * sizeof(i64))
    cdef i64* cap = <i64*> malloc((m2 + 1) * sizeof(i64))
    cdef i64* rev = <i64*> malloc((m2 + 1) * sizeof(i64))
    cdef i64* level = <i64*> malloc((num_nodes + 1) * sizeof(i64))
    cdef i64* it = <i64*> malloc((num_nodes + 1) * sizeof(i64))
    cdef i64* queue = <i64*> malloc((num_nodes + 1) * sizeof(i64))
    cdef i64* path = <i64*> malloc((num_nodes + 1) * sizeof(i64))
    cdef char* mark = <char*> malloc(num_nodes + 1)
    cdef void* ptrs[10]
    ptrs[0] = start; ptrs[1] = fill; ptrs[2] = to; ptrs[3] = cap; ptrs[4] = rev
    ptrs[5] = level; ptrs[6] = it; ptrs[7] = queue; ptrs[8] = path; ptrs[9] = mark
    for i in range(10):
        if ptrs[i] == NULL:
            _free_all(ptrs, 10)
            raise MemoryError()
    try:
        for i in range(num_nodes + 1):
            start[i] = 0
        for i in range(m):
            start[tails[i] + 1] += 1
            start[heads[i] + 1] += 1
        for i in range(num_nodes):
            start[i + 1] += start[i]
        for i in range(num_nodes):
            fill[i] = start[i]
        for i in range(m):
            u = tails[i]
            v = heads[i]
            a = fill[u]
            fill[u] += 1
            b = fill[v]
            fill[v] += 1
            to[a] = v; cap[a] = caps[i]; rev[a] = b
            to[b] = u; cap[b] = 0; rev[b] = a

        while True:
            for i in range(num_nodes):
                level[i] = -1
            level[s] = 0
            qh = 0; qt = 0
            queue[qt] = s; qt += 1
            while qh < qt:
                u = queue[qh]; qh += 1
                lu = level[u] + 1
                for a in range(start[u], start[u + 1]):
                    if cap[a] > 0 and level[to[a]] < 0:
                        level[to[a]] = lu
                        queue[qt] = to[a]; qt += 1
            if level[t] < 0:
                break
            for i in range(num_nodes):
                it[i] = start[i]
            plen = 0
            u = s
            while True:
                if u == t:
                    f = cap[path[0]]
                    for k in range(1, plen):
                        if cap[path[k]] < f:
                            f = cap[path[k]]
                    for k in range(plen):
                        cap[path[k]] -= f
                        cap[rev[path[k]]] += f
                    total += f
                    k = 0
                    while cap[path[k]] > 0:
                        k += 1
                    plen = k
                    if k == 0:
                        u = s
                    else:
                        u = to[path[k - 1]]
                    continue
                a = it[u]
                end = start[u + 1]
                lu = level[u] + 1
                while a < end and (cap[a] == 0 or level[to[a]] != lu):
                    a += 1
                it[u] = a
                if a < end:
                    path[plen] = a; plen += 1
                    u = to[a]
                    continue
                if u == s:
                    break
                level[u] = -1
                plen -= 1
                u = to[rev[path[plen]]]
                it[u] += 1

        memset(mark, 0, num_nodes)
        qh = 0; qt = 0
        if variant == 0:
            mark[s] = 1
            queue[qt] = s; qt += 1
            while qh < qt:
                u = queue[qh]; qh += 1
                for a in range(start[u], start[u + 1]):
                    if cap[a] > 0 and not mark[to[a]]:
                        mark[to[a]] = 1
                        queue[qt] = to[a]; qt += 1
            side = [mark[i] for i in range(num_nodes)]
        else:
            mark[t] = 1
            queue[qt] = t; qt += 1
            while qh < qt:
                w = queue[qh]; qh += 1
                for a in range(start[w], start[w + 1]):
                    x = to[a]
                    if not mark[x] and cap[rev[a]] > 0:
                        mark[x] = 1
                        queue[qt] = x; qt += 1
            side = [1 - mark[i] for i in range(num_nodes)]
        return total, side
    finally:
        _free_all(ptrs, 10)


# indexed binary min-heap keyed by (delta, vertex)

cdef inline bint _less(i64* key, i64 a, i64 b) nogil:
    return key[a] < key[b] or (key[a] == key[b] and a < b)


cdef void _sift_up(i64* heap, i64* pos, i64* key, i64 i) nogil:
    cdef i64 v = heap[i]
    cdef i64 parent
    while i > 0:
        parent = (i - 1) >> 1
        if _less(key, v, heap[parent]):
            heap[i] = heap[parent]
            pos[heap[i]] = i
            i = parent
        else:
            break
    heap[i] = v
    pos[v] = i


cdef void _sift_down(i64* heap, i64* pos, i64* key, i64 i, i64 size) nogil:
    cdef i64 v = heap[i]
    cdef i64 c
    while True:
        c = 2 * i + 1
        if c >= size:
            break
        if c + 1 < size and _less(key, heap[c + 1], heap[c]):
            c += 1
        if _less(key, heap[c], v):
            heap[i] = heap[c]
            pos[heap[i]] = i
            i = c
        else:
            break
    heap[i] = v
    pos[v] = i


def peel(Py_ssize_t n, const i64[::1] edge_ptr, const i64[::1] edge_verts,
         const i64[::1] vert_ptr, const i64[::1] vert_edges,
         const i64[::1] tab_ptr, const i64[::1] tables, i64 psi):
    cdef Py_ssize_t m = edge_ptr.shape[0] - 1
    cdef Py_ssize_t v, u, j, k, q, step, size, hp
    cdef i64 c, base, diff, d, F = psi
    cdef i64* counts = <i64*> malloc((m + 1) * sizeof(i64))
    cdef i64* delta = <i64*> malloc((n + 1) * sizeof(i64))
    cdef i64* heap = <i64*> malloc((n + 1) * sizeof(i64))
    cdef i64* pos = <i64*> malloc((n + 1) * sizeof(i64))
    cdef char* alive = <char*> malloc(n + 1)
    cdef void* ptrs[5]
    ptrs[0] = counts; ptrs[1] = delta; ptrs[2] = heap; ptrs[3] = pos; ptrs[4] = alive
    for k in range(5):
        if ptrs[k] == NULL:
            _free_all(ptrs, 5)
            raise MemoryError()
    order = [0] * n
    removed = [0] * n
    after = [0] * n
    try:
        with nogil:
            for j in range(m):
                counts[j] = edge_ptr[j + 1] - edge_ptr[j]
            for v in range(n):
                d = 0
                for k in range(vert_ptr[v], vert_ptr[v + 1]):
                    j = vert_edges[k]
                    base = tab_ptr[j] + counts[j]
                    d += tables[base] - tables[base - 1]
                delta[v] = d
                alive[v] = 1
                heap[v] = v
                pos[v] = v
            size = n
            hp = n // 2
            while hp > 0:
                hp -= 1
                _sift_down(heap, pos, delta, hp, size)
        for step in range(n):
            v = heap[0]
            size -= 1
            if size > 0:
                heap[0] = heap[size]
                pos[heap[0]] = 0
                _sift_down(heap, pos, delta, 0, size)
            alive[v] = 0
            d = delta[v]
            F -= d
            order[step] = v
            removed[step] = d
            after[step] = F
            with nogil:
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
                            if diff < 0:
                                _sift_up(heap, pos, delta, pos[u])
                            else:
                                _sift_down(heap, pos, delta, pos[u], size)
        return order, removed, after
    finally:
        _free_all(ptrs, 5)


def brute(Py_ssize_t n, const i64[::1] edge_ptr, const i64[::1] edge_verts,
          const i64[::1] vert_ptr, const i64[::1] vert_edges,
          const i64[::1] tab_ptr, const i64[::1] tables):
    cdef Py_ssize_t m = edge_ptr.shape[0] - 1
    cdef Py_ssize_t v, j, k
    cdef unsigned long long i, total, mask = 0, bit, best_mask = 0, dif, low
    cdef i64 F = 0, best_F = 0, lhs, rhs, c
    cdef i64 size = 0, best_size = 0
    cdef bint take
    cdef i64* counts = <i64*> malloc((m + 1) * sizeof(i64))
    if counts == NULL:
        raise MemoryError()
    try:
        with nogil:
            for j in range(m):
                counts[j] = 0
            total = (<unsigned long long> 1) << n
            i = 1
            while i < total:
                v = 0
                bit = i
                while (bit & 1) == 0:
                    bit >>= 1
                    v += 1
                bit = (<unsigned long long> 1) << v
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
                i += 1
                if best_size == 0:
                    best_mask = mask; best_F = F; best_size = size
                    continue
                lhs = F * best_size
                rhs = best_F * size
                take = lhs > rhs
                if not take and lhs == rhs:
                    if size < best_size:
                        take = True
                    elif size == best_size:
                        dif = mask ^ best_mask
                        low = dif & (~dif + 1)
                        take = (mask & low) != 0
                if take:
                    best_mask = mask; best_F = F; best_size = size
        return best_mask, best_F, best_size
    finally:
        free(counts)
