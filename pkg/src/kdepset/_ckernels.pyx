# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Output-identical to ``kdepset._pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t, int8_t, uint8_t

cnp.import_array()

BACKEND = "cython"

cdef int64_t INF = 1LL << 62


cdef extern from *:
    """
    static inline int kd_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int kd_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int kd_popcount(unsigned long long x) nogil
    int kd_ctz(unsigned long long x) nogil


def two_color(int64_t n, indptr, indices):
    cdef const int64_t[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const int64_t[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    color_arr = np.full(n, -1, dtype=np.int8)
    parent_arr = np.full(n, -1, dtype=np.int64)
    queue_arr = np.empty(max(n, 1), dtype=np.int64)
    cdef int8_t[::1] color = color_arr
    cdef int64_t[::1] parent = parent_arr
    cdef int64_t[::1] queue = queue_arr
    cdef int64_t root, head, tail, u, v, j
    cdef int8_t cu
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        head = 0
        tail = 0
        queue[tail] = root
        tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            cu = color[u]
            for j in range(ptr[u], ptr[u + 1]):
                v = nbr[j]
                if color[v] == -1:
                    color[v] = 1 - cu
                    parent[v] = u
                    queue[tail] = v
                    tail += 1
                elif color[v] == cu:
                    return color_arr, parent_arr, (int(u), int(v))
    return color_arr, parent_arr, (-1, -1)


def hopcroft_karp(int64_t n, indptr, indices, side):
    cdef const int64_t[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const int64_t[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    side_arr = np.ascontiguousarray(side, dtype=np.int8)
    cdef const int8_t[::1] sd = side_arr

    mate_arr = np.full(n, -1, dtype=np.int64)
    cdef int64_t[::1] mate = mate_arr
    cdef int64_t[::1] left = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t nleft = 0
    cdef int64_t u, v, w, j, i, root, du, limit, top, end
    for u in range(n):
        if sd[u] == 0 and ptr[u + 1] > ptr[u]:
            left[nleft] = u
            nleft += 1

    with nogil:
        for i in range(nleft):
            u = left[i]
            for j in range(ptr[u], ptr[u + 1]):
                v = nbr[j]
                if mate[v] == -1:
                    mate[u] = v
                    mate[v] = u
                    break

    cdef int64_t[::1] dist = np.full(max(n, 1), INF, dtype=np.int64)
    cdef int64_t[::1] it = np.zeros(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] stack = np.empty(max(n, 1) + 1, dtype=np.int64)
    cdef int64_t[::1] via = np.empty(max(n, 1) + 1, dtype=np.int64)
    cdef int64_t head, tail, nvia
    cdef bint descended

    with nogil:
        while True:
            head = 0
            tail = 0
            for i in range(nleft):
                u = left[i]
                if mate[u] == -1:
                    dist[u] = 0
                    queue[tail] = u
                    tail += 1
                else:
                    dist[u] = INF
            limit = INF
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[u]
                if du >= limit:
                    continue
                for j in range(ptr[u], ptr[u + 1]):
                    w = mate[nbr[j]]
                    if w == -1:
                        if limit == INF:
                            limit = du + 1
                    elif dist[w] == INF:
                        dist[w] = du + 1
                        queue[tail] = w
                        tail += 1
            if limit == INF:
                break

            for i in range(nleft):
                u = left[i]
                it[u] = ptr[u]
            for i in range(nleft):
                root = left[i]
                if mate[root] != -1:
                    continue
                top = 0
                stack[0] = root
                nvia = 0
                while top >= 0:
                    u = stack[top]
                    end = ptr[u + 1]
                    descended = False
                    while it[u] < end:
                        v = nbr[it[u]]
                        it[u] += 1
                        w = mate[v]
                        if w == -1:
                            if dist[u] + 1 == limit:
                                via[nvia] = v
                                nvia += 1
                                for j in range(top + 1):
                                    mate[stack[j]] = via[j]
                                    mate[via[j]] = stack[j]
                                top = -1
                                descended = True
                                break
                        elif dist[w] == dist[u] + 1:
                            via[nvia] = v
                            nvia += 1
                            top += 1
                            stack[top] = w
                            descended = True
                            break
                    if not descended:
                        dist[u] = INF
                        top -= 1
                        if nvia > 0:
                            nvia -= 1
    return mate_arr


def alternating_reach(int64_t n, indptr, indices, side, mate):
    cdef const int64_t[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const int64_t[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    side_arr = np.ascontiguousarray(side, dtype=np.int8)
    cdef const int8_t[::1] sd = side_arr
    mate_arr = np.ascontiguousarray(mate, dtype=np.int64)
    cdef const int64_t[::1] mt = mate_arr
    reached_arr = np.zeros(n, dtype=np.uint8)
    cdef uint8_t[::1] reached = reached_arr
    cdef int64_t[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t head = 0, tail = 0, u, v, w, j, mu
    for u in range(n):
        if sd[u] == 0 and mt[u] == -1:
            reached[u] = 1
            queue[tail] = u
            tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        mu = mt[u]
        for j in range(ptr[u], ptr[u + 1]):
            v = nbr[j]
            if v == mu or reached[v]:
                continue
            reached[v] = 1
            w = mt[v]
            if w == -1:
                return reached_arr, int(v)
            if not reached[w]:
                reached[w] = 1
                queue[tail] = w
                tail += 1
    return reached_arr, -1


cdef struct BnB:
    int n
    int k
    uint64_t adj[64]
    uint64_t best
    int best_size
    int64_t nodes
    int64_t budget
    bint aborted


cdef void _search(BnB* s, uint64_t cand, uint64_t fixed) noexcept nogil:
    cdef int exc[64]
    cdef int order[65]
    cdef int size, v, x, e, pick, pick_exc, total, best_cut, cut, need, norder, i
    cdef uint64_t rest, low, viol, f
    if s.aborted:
        return
    s.nodes += 1
    if s.budget and s.nodes > s.budget:
        s.aborted = True
        return
    size = kd_popcount(cand)
    if size <= s.best_size:
        return

    viol = 0
    total = 0
    pick = -1
    pick_exc = 0
    rest = cand
    while rest:
        v = kd_ctz(rest)
        low = (<uint64_t>1) << v
        rest ^= low
        exc[v] = 0
        e = kd_popcount(s.adj[v] & cand) - s.k
        if e > 0:
            exc[v] = e
            viol |= low
            total += e
            if e > pick_exc:
                pick_exc = e
                pick = v
            if (fixed & low) and e > kd_popcount(s.adj[v] & cand & ~fixed):
                return
    if pick < 0:
        s.best = cand
        s.best_size = size
        return

    best_cut = 1
    rest = cand & ~fixed
    while rest:
        x = kd_ctz(rest)
        rest ^= (<uint64_t>1) << x
        cut = exc[x] + kd_popcount(s.adj[x] & viol)
        if cut > best_cut:
            best_cut = cut
    need = (total + best_cut - 1) // best_cut
    if size - need <= s.best_size:
        return

    norder = 0
    if not ((fixed >> pick) & 1):
        order[norder] = pick
        norder += 1
    rest = s.adj[pick] & cand & ~fixed
    while rest:
        x = kd_ctz(rest)
        rest ^= (<uint64_t>1) << x
        order[norder] = x
        norder += 1
    f = fixed
    for i in range(norder):
        x = order[i]
        _search(s, cand & ~((<uint64_t>1) << x), f)
        if s.aborted:
            return
        f |= (<uint64_t>1) << x


def kdep_bnb(int n, adj, int k, init_mask, budget):
    if n > 64:
        raise ValueError("kdep_bnb supports at most 64 vertices")
    cdef BnB s
    cdef int i
    s.n = n
    s.k = k
    for i in range(n):
        s.adj[i] = <uint64_t>adj[i]
    s.best = <uint64_t>init_mask
    s.best_size = kd_popcount(s.best)
    s.nodes = 0
    s.budget = budget
    s.aborted = False
    cdef uint64_t full = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    with nogil:
        _search(&s, full, 0)
    return int(s.best), int(s.nodes), not s.aborted
