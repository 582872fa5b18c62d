"""Pure-Python kernels. Same signatures and outputs as the compiled ``_ckernels``.

All graphs arrive in CSR form (``indptr``, ``indices``) with every
adjacency row sorted ascending; ``side`` is 0 for Left, 1 for Right.
"""

from __future__ import annotations

from collections import deque

import numpy as np

BACKEND = "python"

_INF = 1 << 62


def two_color(n, indptr, indices):
    """BFS 2-coloring, components rooted at their lowest id (color 0).

    Returns ``(color, parent, conflict)`` where ``conflict`` is an edge
    ``(u, v)`` with equal colors, or ``(-1, -1)`` if the graph is bipartite.
    """
    ptr = indptr.tolist()
    nbr = indices.tolist()
    color = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            cu = color[u]
            for j in range(ptr[u], ptr[u + 1]):
                v = nbr[j]
                if color[v] == -1:
                    color[v] = 1 - cu
                    parent[v] = u
                    queue.append(v)
                elif color[v] == cu:
                    return (np.array(color, dtype=np.int8),
                            np.array(parent, dtype=np.int64), (u, v))
    return np.array(color, dtype=np.int8), np.array(parent, dtype=np.int64), (-1, -1)


def hopcroft_karp(n, indptr, indices, side):
    """Maximum matching; returns ``mate`` (partner id or -1 per vertex).

    Greedy warm start, then shortest-augmenting-path phases. Left vertices
    and adjacency rows are scanned in ascending id order.
    """
    ptr = indptr.tolist()
    nbr = indices.tolist()
    left = [u for u in range(n) if side[u] == 0 and ptr[u + 1] > ptr[u]]
    mate = [-1] * n

    for u in left:
        for j in range(ptr[u], ptr[u + 1]):
            v = nbr[j]
            if mate[v] == -1:
                mate[u] = v
                mate[v] = u
                break

    dist = [_INF] * n
    it = [0] * n
    while True:
        # layered BFS from free Left vertices
        queue = deque()
        for u in left:
            if mate[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        limit = _INF
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du >= limit:
                continue
            for j in range(ptr[u], ptr[u + 1]):
                w = mate[nbr[j]]
                if w == -1:
                    if limit == _INF:
                        limit = du + 1
                elif dist[w] == _INF:
                    dist[w] = du + 1
                    queue.append(w)
        if limit == _INF:
            break

        for u in left:
            it[u] = ptr[u]
        for root in left:
            if mate[root] != -1:
                continue
            stack = [root]
            via = []
            while stack:
                u = stack[-1]
                end = ptr[u + 1]
                descended = False
                while it[u] < end:
                    v = nbr[it[u]]
                    it[u] += 1
                    w = mate[v]
                    if w == -1:
                        if dist[u] + 1 == limit:
                            via.append(v)
                            for x, y in zip(stack, via):
                                mate[x] = y
                                mate[y] = x
                            stack = []
                            descended = True
                            break
                    elif dist[w] == dist[u] + 1:
                        via.append(v)
                        stack.append(w)
                        descended = True
                        break
                if not descended:
                    dist[u] = _INF
                    stack.pop()
                    if via:
                        via.pop()
    return np.array(mate, dtype=np.int64)


def alternating_reach(n, indptr, indices, side, mate):
    """Vertices reachable from free Left vertices by alternating paths.

    Returns ``(reached, augmenting_end)``; ``augmenting_end`` is a free Right
    vertex reached by the search (so ``mate`` is not maximum) or -1.
    """
    ptr = indptr.tolist()
    nbr = indices.tolist()
    mt = mate.tolist()
    reached = [0] * n
    queue = deque()
    for u in range(n):
        if side[u] == 0 and mt[u] == -1:
            reached[u] = 1
            queue.append(u)
    while queue:
        u = queue.popleft()
        mu = mt[u]
        for j in range(ptr[u], ptr[u + 1]):
            v = nbr[j]
            if v == mu or reached[v]:
                continue
            reached[v] = 1
            w = mt[v]
            if w == -1:
                return np.array(reached, dtype=np.uint8), v
            if not reached[w]:
                reached[w] = 1
                queue.append(w)
    return np.array(reached, dtype=np.uint8), -1


def _popcount(x):
    return x.bit_count()


def kdep_bnb(n, adj, k, init_mask, budget):
    """Branch-and-bound for a maximum k-dependent set on <= 64 vertices.

    ``adj`` holds one neighbor bitmask per vertex; ``init_mask`` must be a
    feasible set (the incumbent). ``budget`` caps explored nodes (0 = none).
    Returns ``(best_mask, nodes, completed)``.
    """
    adj = list(adj)
    best = [init_mask, _popcount(init_mask)]
    nodes = [0]
    aborted = [False]

    def search(cand, fixed):
        if aborted[0]:
            return
        nodes[0] += 1
        if budget and nodes[0] > budget:
            aborted[0] = True
            return
        size = _popcount(cand)
        if size <= best[1]:
            return

        exc = [0] * n
        viol = 0
        total = 0
        pick = -1
        pick_exc = 0
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            e = _popcount(adj[v] & cand) - k
            if e > 0:
                exc[v] = e
                viol |= low
                total += e
                if e > pick_exc:
                    pick_exc = e
                    pick = v
                if fixed & low and e > _popcount(adj[v] & cand & ~fixed):
                    return
        if pick < 0:
            best[0] = cand
            best[1] = size
            return

        # each removal lowers total excess by at most exc(x) + |violating nbrs of x|
        best_cut = 1
        rest = cand & ~fixed
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            rest ^= low
            cut = exc[x] + _popcount(adj[x] & viol)
            if cut > best_cut:
                best_cut = cut
        need = -(-total // best_cut)
        if size - need <= best[1]:
            return

        order = [pick] if not (fixed >> pick) & 1 else []
        rest = adj[pick] & cand & ~fixed
        while rest:
            low = rest & -rest
            order.append(low.bit_length() - 1)
            rest ^= low
        f = fixed
        for x in order:
            search(cand & ~(1 << x), f)
            if aborted[0]:
                return
            f |= 1 << x

    search((1 << n) - 1, 0)
    return best[0], nodes[0], not aborted[0]
