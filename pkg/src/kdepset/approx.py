"""k rounds of maximum-matching removal followed by a Konig independent set.

The returned set is k-dependent in the input graph: every edge it induces
was removed in one of the k rounds, and each round removes at most one edge
per vertex. On bipartite graphs its size is at least
``(k + 2) / (2 (k + 1))`` times the optimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Protocol

import numpy as np

from .errors import InvalidK, InvalidMatching, InvalidProvider, NotOptimal
from .graph import Edge, Graph, is_k_dependent
from .matching import (
    Matching,
    independent_set_from_matching,
    is_maximum_matching,
    konig_cover,
    max_matching,
    verify_matching,
)


class MatchingProvider(Protocol):
    """Supplies the matching removed in round ``iteration`` (1-based).

    Providers with ``trusted = False`` have every answer checked to be a
    maximum matching of the residual it was asked about.
    """

    trusted: bool

    def __call__(self, residual: Graph, iteration: int) -> Matching: ...


class HopcroftKarpProvider:
    trusted = True

    def __call__(self, residual: Graph, iteration: int) -> Matching:
        return max_matching(residual)

    def __repr__(self) -> str:
        return "HopcroftKarpProvider()"


class ScriptedProvider:
    """Replays a fixed list of matchings, one per round."""

    def __init__(self, matchings: Iterable[Iterable[Edge]], trusted: bool = False):
        self.matchings = [m if isinstance(m, Matching) else Matching(m) for m in matchings]
        self.trusted = trusted

    def __call__(self, residual: Graph, iteration: int) -> Matching:
        if iteration > len(self.matchings):
            raise InvalidProvider(
                f"script holds {len(self.matchings)} matchings, round {iteration} requested")
        return self.matchings[iteration - 1]

    def __repr__(self) -> str:
        return f"ScriptedProvider({len(self.matchings)} matchings, trusted={self.trusted})"


@dataclass(frozen=True)
class IterationRecord:
    index: int
    matching: Matching
    residual_edge_count: int


@dataclass
class RunTrace:
    """Everything one run did; enough to recheck each bound exactly.

    ``residuals`` is only filled in verbose mode and then holds the graphs
    after 0, 1, ..., k rounds of removal.
    """

    k: int
    n: int
    m: int
    iterations: list[IterationRecord]
    final_matching: Matching
    final_cover: frozenset[int]
    solution: frozenset[int]
    residuals: list[Graph] | None = field(default=None, repr=False)

    def accumulated(self, i: int) -> frozenset[Edge]:
        """Edges removed during the first ``i`` rounds."""
        return frozenset(e for rec in self.iterations[:i] for e in rec.matching)

    @property
    def accumulated_removed(self) -> frozenset[Edge]:
        return self.accumulated(self.k)

    @property
    def cumulative_removed_sizes(self) -> list[int]:
        sizes, total = [], 0
        for rec in self.iterations:
            total += len(rec.matching)
            sizes.append(total)
        return sizes

    @property
    def removed_count(self) -> int:
        return sum(len(rec.matching) for rec in self.iterations)

    @property
    def matching_sizes(self) -> list[int]:
        return [len(rec.matching) for rec in self.iterations]


def _check_k(k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidK(f"k must be an integer >= 1, got {k!r}")


def _validated(residual: Graph, result, iteration: int) -> Matching:
    try:
        m = result if isinstance(result, Matching) else Matching(result)
    except InvalidMatching as exc:
        raise InvalidProvider(f"round {iteration}: {exc}") from None
    if not verify_matching(residual, m):
        raise InvalidProvider(f"round {iteration}: pairs are not edges of the residual graph")
    if not is_maximum_matching(residual, m):
        raise InvalidProvider(
            f"round {iteration}: matching of size {len(m)} is not maximum "
            f"(maximum is {len(max_matching(residual))})")
    return m


def solve(g: Graph, k: int, provider: MatchingProvider | None = None,
          *, verbose: bool = False) -> tuple[frozenset[int], RunTrace]:
    """Approximate a maximum k-dependent set of the bipartite graph ``g``.

    Args:
        g: bipartite input graph.
        k: degree bound, at least 1.
        provider: source of the matching removed in each round; defaults to
            deterministic Hopcroft-Karp.
        verbose: keep every residual graph in the trace.

    Returns:
        ``(solution, trace)``.

    Raises:
        InvalidK: ``k < 1``.
        InvalidProvider: an untrusted provider returned something that is not
            a maximum matching of the current residual.
    """
    _check_k(k)
    provider = provider or HopcroftKarpProvider()
    keys = g.edge_keys
    alive = np.ones(g.m, dtype=bool)
    residual = g
    residuals = [g] if verbose else None
    records = []
    for i in range(1, k + 1):
        m = provider(residual, i)
        if not getattr(provider, "trusted", False):
            m = _validated(residual, m, i)
        if len(m):
            pairs = np.asarray(m.pairs, dtype=np.int64)
            alive[np.searchsorted(keys, pairs[:, 0] * g.n + pairs[:, 1])] = False
            residual = g.keep_edges(alive)
        records.append(IterationRecord(i, m, residual.m))
        if verbose:
            residuals.append(residual)

    final = max_matching(residual)
    cover = konig_cover(residual, final)
    solution = independent_set_from_matching(residual, final)
    trace = RunTrace(k=k, n=g.n, m=g.m, iterations=records, final_matching=final,
                     final_cover=cover, solution=solution, residuals=residuals)
    return solution, trace


def check_lemma1(trace: RunTrace) -> bool:
    """``|S| >= n - |removed| / k``, compared as ``k|S| >= k n - |removed|``."""
    k = trace.k
    return k * len(trace.solution) >= k * trace.n - trace.removed_count


@dataclass(frozen=True)
class Lemma2Report:
    """Quantities in ``2k|S| >= k|OPT| + 2|E'|``.

    ``e_prime`` counts edges inside the optimum that survived all k rounds,
    ``e_double_prime`` those that were removed, ``d_star`` the vertices
    outside the optimum.
    """

    holds: bool
    solution_size: int
    optimal_size: int
    induced_edges: int
    e_prime: int
    e_double_prime: int
    d_star: int
    k: int = 1

    @property
    def bound(self) -> Fraction:
        """Right-hand side ``|OPT| / 2 + |E'| / k`` as an exact rational."""
        return Fraction(self.optimal_size, 2) + Fraction(self.e_prime, self.k)


def check_lemma2(g: Graph, k: int, trace: RunTrace,
                 optimal: Iterable[int]) -> tuple[bool, Lemma2Report]:
    """Check ``|S| >= |OPT| / 2 + |E'| / k`` for the run in ``trace``.

    Raises:
        NotOptimal: ``optimal`` is not k-dependent in ``g``.
    """
    optimal = frozenset(optimal)
    if not is_k_dependent(g, optimal, k):
        raise NotOptimal("supplied optimum is not k-dependent")
    removed = trace.accumulated_removed
    induced = [e for e in g.edges if e[0] in optimal and e[1] in optimal]
    e_prime = sum(1 for e in induced if e not in removed)
    holds = 2 * k * len(trace.solution) >= k * len(optimal) + 2 * e_prime
    report = Lemma2Report(
        holds=holds,
        solution_size=len(trace.solution),
        optimal_size=len(optimal),
        induced_edges=len(induced),
        e_prime=e_prime,
        e_double_prime=len(induced) - e_prime,
        d_star=g.n - len(optimal),
        k=k,
    )
    return holds, report


def ratio_bound(k: int) -> Fraction:
    """Guaranteed worst-case OPT/ALG ratio, ``2(k + 1) / (k + 2)``."""
    _check_k(k)
    return Fraction(2 * (k + 1), k + 2)


def check_ratio(solution_size: int, optimal_size: int, k: int) -> bool:
    """``(k + 2) OPT <= 2 (k + 1) ALG`` in exact integer arithmetic."""
    return (k + 2) * optimal_size <= 2 * (k + 1) * solution_size


def independence_numbers(trace: RunTrace) -> list[int]:
    """alpha of each stored residual ``G_0 .. G_k``; needs a verbose trace."""
    if trace.residuals is None:
        raise ValueError("trace was not recorded with verbose=True")
    return [g.n - len(max_matching(g)) for g in trace.residuals]
