"""Exact brute-force solvers for small graphs (bipartite or not).

Used as ground truth for the approximation: maximum k-dependent set,
maximum matching, minimum vertex cover, and the Konig-Egervary test.
Size thresholds default to 22 vertices (k-dependent search) and 14
(matching / cover) and can be overridden by ``KDEPSET_ORACLE_LIMIT`` and
``KDEPSET_MATCHING_LIMIT``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import _backend
from .approx import check_ratio
from .errors import InvalidK, NotKE, TooLarge
from .graph import Graph, is_k_dependent, remove_edges
from .matching import Matching

DEFAULT_KDEP_LIMIT = 22
DEFAULT_MATCHING_LIMIT = 14
EXHAUSTIVE_LIMIT = 16


def kdep_limit() -> int:
    return int(os.environ.get("KDEPSET_ORACLE_LIMIT", DEFAULT_KDEP_LIMIT))


def matching_limit() -> int:
    return int(os.environ.get("KDEPSET_MATCHING_LIMIT", DEFAULT_MATCHING_LIMIT))


def _check_size(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise TooLarge(f"graph has {g.n} vertices, oracle limit is {limit}")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class OracleResult:
    optimum: frozenset[int]
    size: int
    nodes_explored: int
    certified: bool


def _greedy_incumbent(adj: list[int], n: int, k: int) -> int:
    # drop the vertex whose removal cuts the most excess degree until feasible
    cand = (1 << n) - 1
    while True:
        exc = {}
        for v in _bits(cand):
            e = (adj[v] & cand).bit_count() - k
            if e > 0:
                exc[v] = e
        if not exc:
            return cand
        viol = sum(1 << v for v in exc)
        best, best_cut = -1, -1
        for x in _bits(cand):
            cut = exc.get(x, 0) + (adj[x] & viol).bit_count()
            if cut > best_cut:
                best, best_cut = x, cut
        cand &= ~(1 << best)


def _exhaustive(adj: list[int], n: int, k: int) -> tuple[int, int]:
    checked = 0
    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            checked += 1
            mask = sum(1 << v for v in combo)
            if all((adj[v] & mask).bit_count() <= k for v in combo):
                return mask, checked
    return 0, checked


def exact_max_k_dependent(g: Graph, k: int, limit_n: int | None = None, *,
                          budget: int = 0, method: str = "bnb") -> OracleResult:
    """Maximum k-dependent set by branch-and-bound.

    The search branches on the vertex with the largest induced degree above
    ``k`` (lowest id on ties): one child removes it, the others keep it and
    remove one of its neighbors, so every feasible subset lies in exactly one
    child. A node is pruned when its size minus a lower bound on the number
    of further removals cannot beat the incumbent.

    ``method="exhaustive"`` enumerates subsets by decreasing size instead
    (only up to 16 vertices). A positive ``budget`` caps explored nodes; if
    it runs out the result is the incumbent with ``certified=False``.
    """
    if k < 0:
        raise InvalidK("k must be non-negative")
    _check_size(g, kdep_limit() if limit_n is None else limit_n)
    adj = g.bitmasks()
    n = g.n
    if method == "exhaustive":
        if n > EXHAUSTIVE_LIMIT:
            raise TooLarge(f"exhaustive search is limited to {EXHAUSTIVE_LIMIT} vertices")
        mask, checked = _exhaustive(adj, n, k)
        opt = frozenset(_bits(mask))
        return OracleResult(opt, len(opt), checked, True)
    if method != "bnb":
        raise ValueError(f"unknown method {method!r}")
    init = _greedy_incumbent(adj, n, k)
    mask, nodes, completed = _backend.kernels.kdep_bnb(n, adj, k, init, budget)
    opt = frozenset(_bits(mask))
    assert is_k_dependent(g, opt, k)
    return OracleResult(opt, len(opt), nodes, completed)


def exact_max_matching(g: Graph, limit_n: int | None = None) -> Matching:
    """Maximum matching of any (possibly non-bipartite) small graph.

    Memoized recursion on the set of still-available vertices: the lowest
    available vertex is either left unmatched or matched to an available
    neighbor.
    """
    _check_size(g, matching_limit() if limit_n is None else limit_n)
    adj = g.bitmasks()

    @lru_cache(maxsize=None)
    def best(avail: int) -> tuple[int, tuple]:
        if not avail:
            return 0, ()
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail ^ low
        top = best(rest)
        for u in _bits(adj[v] & rest):
            size, pairs = best(rest & ~(1 << u))
            if size + 1 > top[0]:
                top = (size + 1, ((v, u),) + pairs)
        return top

    return Matching(best((1 << g.n) - 1)[1])


def exact_min_vertex_cover(g: Graph, limit_n: int | None = None) -> frozenset[int]:
    """Minimum vertex cover by subset search, starting at size nu(g)."""
    limit = matching_limit() if limit_n is None else limit_n
    _check_size(g, limit)
    if g.m == 0:
        return frozenset()
    lower = len(exact_max_matching(g, limit))
    edges = [(1 << a) | (1 << b) for a, b in g.edges]
    for size in range(lower, g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = sum(1 << v for v in combo)
            if all(e & mask for e in edges):
                return frozenset(combo)
    raise AssertionError("the full vertex set is always a cover")


def is_konig_egervary(g: Graph, limit_n: int | None = None) -> bool:
    """True iff maximum matching size equals minimum vertex cover size."""
    return len(exact_max_matching(g, limit_n)) == len(exact_min_vertex_cover(g, limit_n))


@dataclass(frozen=True)
class KEReport:
    n: int
    m: int
    k: int
    alg: int
    opt: int
    feasible: bool
    bound_holds: bool
    residual_ke: tuple[bool, ...]
    solution: frozenset[int]

    @property
    def all_residuals_ke(self) -> bool:
        return all(self.residual_ke)


def ke_experiment(g: Graph, k: int, limit_n: int | None = None) -> KEReport:
    """Run the k-round removal on a Konig-Egervary graph with exact subroutines.

    Each round removes a maximum matching found by :func:`exact_max_matching`;
    the final set is the complement of an exact minimum cover of the last
    residual. ``residual_ke[i]`` records whether the graph after round
    ``i + 1`` is still Konig-Egervary (reported only, never enforced).

    Raises:
        NotKE: ``g`` itself is not Konig-Egervary.
    """
    if k < 1:
        raise InvalidK("k must be >= 1")
    limit = matching_limit() if limit_n is None else limit_n
    _check_size(g, limit)
    if not is_konig_egervary(g, limit):
        raise NotKE("graph is not Konig-Egervary")
    residual = g
    stayed = []
    for _ in range(k):
        residual = remove_edges(residual, exact_max_matching(residual, limit))
        stayed.append(is_konig_egervary(residual, limit))
    cover = exact_min_vertex_cover(residual, limit)
    solution = frozenset(range(g.n)) - cover
    opt = exact_max_k_dependent(g, k, max(limit, g.n)).size
    return KEReport(
        n=g.n, m=g.m, k=k, alg=len(solution), opt=opt,
        feasible=is_k_dependent(g, solution, k),
        bound_holds=check_ratio(len(solution), opt, k),
        residual_ke=tuple(stayed), solution=solution,
    )
