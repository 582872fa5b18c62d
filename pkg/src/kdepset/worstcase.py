"""Tight instances: bipartite graphs where the algorithm can return only k + 2
vertices while the optimum has 2(k + 1).

Layout for a given k (0-based ids)::

    a_i -> i - 1        (i = 1..k+1)   Left
    b_i -> k + i        (i = 1..k+1)   Right
    u   -> 2k + 2                      Left
    w   -> 2k + 3                      Right

Edges: ``u-w``, ``a_i-b_j`` for ``i != j``, every ``a_i-w`` and every
``b_i-u``. B-indices wrap modulo k + 1 (``b_{i+k+1} == b_i``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .approx import RunTrace, ScriptedProvider, ratio_bound, solve
from .errors import ConstructionFailure, InvalidK, TightnessViolation
from .graph import Edge, Graph, is_k_dependent, remove_edges
from .matching import Matching, verify_matching
from .oracle import exact_max_k_dependent


def _e(x: int, y: int) -> Edge:
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class _Labels:
    k: int

    def a(self, i: int) -> int:
        return i - 1

    def b(self, i: int) -> int:
        return self.k + 1 + (i - 1) % (self.k + 1)

    @property
    def u(self) -> int:
        return 2 * self.k + 2

    @property
    def w(self) -> int:
        return 2 * self.k + 3


@dataclass(frozen=True)
class WorstCaseInstance:
    k: int
    graph: Graph
    a_ids: list[int]
    b_ids: list[int]
    u_id: int
    w_id: int
    scripted: list[Matching] = field(repr=False)
    expected_opt: int
    expected_alg: int
    expected_residual_ab_edges: frozenset[Edge]
    expected_path: tuple[int, int, int, int]

    @property
    def optimum(self) -> frozenset[int]:
        """A union B, the optimal k-dependent set."""
        return frozenset(self.a_ids) | frozenset(self.b_ids)


def _kept_pair(k: int, j: int) -> int:
    """A-index of the A-B pair left out of round j (it survives all rounds)."""
    if k % 2 == 1 and j >= (k + 3) // 2:
        return j + 1
    return j


def _build_matchings(k: int) -> list[Matching]:
    lab = _Labels(k)
    rounds = []
    for j in range(1, k + 1):
        skip = _kept_pair(k, j)
        pairs = [_e(lab.a(i), lab.b(i + j)) for i in range(1, k + 2) if i != skip]
        pairs.append(_e(lab.a(skip), lab.w))
        pairs.append(_e(lab.b(skip + j), lab.u))
        rounds.append(Matching(pairs))
    return rounds


def generate(k: int) -> WorstCaseInstance:
    """Build the tight instance for ``k`` together with its scripted matchings."""
    if not isinstance(k, int) or k < 1:
        raise InvalidK(f"k must be an integer >= 1, got {k!r}")
    lab = _Labels(k)
    idx = range(1, k + 2)
    edges = [_e(lab.u, lab.w)]
    edges += [_e(lab.a(i), lab.b(j)) for i in idx for j in idx if i != j]
    edges += [_e(lab.a(i), lab.w) for i in idx]
    edges += [_e(lab.b(i), lab.u) for i in idx]
    graph = Graph(2 * (k + 2), edges)

    kept = frozenset(_e(lab.a(_kept_pair(k, j)), lab.b(_kept_pair(k, j) + j))
                     for j in range(1, k + 1))
    if k % 2 == 0:
        path = (lab.a(k + 1), lab.w, lab.u, lab.b(k + 1))
    else:
        path = (lab.a((k + 3) // 2), lab.w, lab.u, lab.b(1))
    inst = WorstCaseInstance(
        k=k, graph=graph,
        a_ids=[lab.a(i) for i in idx], b_ids=[lab.b(i) for i in idx],
        u_id=lab.u, w_id=lab.w,
        scripted=_build_matchings(k),
        expected_opt=2 * (k + 1), expected_alg=k + 2,
        expected_residual_ab_edges=kept, expected_path=path,
    )
    scripted_matchings(inst)
    return inst


def scripted_matchings(inst: WorstCaseInstance) -> list[Matching]:
    """The k adversarial matchings, each checked to be a perfect matching.

    Raises:
        ConstructionFailure: a matching is not perfect on the graph, or two
            rounds share an edge.
    """
    rounds = _build_matchings(inst.k)
    n = inst.graph.n
    seen: set[Edge] = set()
    for j, m in enumerate(rounds, start=1):
        if len(m) * 2 != n or not verify_matching(inst.graph, m):
            raise ConstructionFailure(f"round {j} is not a perfect matching: {m.pairs}")
        if seen.intersection(m):
            raise ConstructionFailure(f"round {j} reuses an edge of an earlier round")
        seen.update(m)
    return rounds


def residual_structure(inst: WorstCaseInstance) -> dict:
    """Describe the graph left after removing every scripted matching.

    Keys: ``ab_edges`` (surviving A-B edges), ``other_edges`` (the rest),
    ``ab_disjoint`` (no shared endpoints), ``path_isolated`` (the remaining
    non-A-B edges form exactly the path ``expected_path`` and no other
    residual edge touches it).
    """
    residual = inst.graph
    for m in inst.scripted:
        residual = remove_edges(residual, m)
    a, b = set(inst.a_ids), set(inst.b_ids)
    ab = [e for e in residual.edges if (e[0] in a and e[1] in b) or (e[0] in b and e[1] in a)]
    other = [e for e in residual.edges if e not in set(ab)]
    ends = [v for e in ab for v in e]
    p = inst.expected_path
    path_edges = {_e(p[0], p[1]), _e(p[1], p[2]), _e(p[2], p[3])}
    touching = [e for e in residual.edges if (e[0] in p or e[1] in p) and e not in path_edges]
    return {
        "residual": residual,
        "ab_edges": frozenset(ab),
        "other_edges": frozenset(other),
        "ab_disjoint": len(set(ends)) == len(ends),
        "path_isolated": set(other) == path_edges and not touching,
    }


@dataclass
class TightnessReport:
    k: int
    n: int
    m: int
    alg: int
    opt: int
    opt_source: str
    ratio: Fraction
    bound: Fraction
    trace: RunTrace = field(repr=False)

    @property
    def equals_bound(self) -> bool:
        return self.ratio == self.bound


def _deletion_certificate(inst: WorstCaseInstance) -> bool:
    # k-dependence is hereditary, so if deleting any single vertex still
    # leaves a violation, no set with n - 1 or more vertices is feasible.
    everyone = set(range(inst.graph.n))
    return all(not is_k_dependent(inst.graph, everyone - {x}, inst.k) for x in everyone)


def demonstrate_tightness(k: int, oracle_limit: int = 20) -> TightnessReport:
    """Run the scripted adversarial rounds and confirm the ratio is exactly tight.

    The optimum is confirmed by the exact oracle when the instance has at
    most ``oracle_limit`` vertices; beyond that, A union B is checked
    feasible and every set of n - 1 vertices is checked infeasible.

    Raises:
        TightnessViolation: any expectation fails; the run trace is attached.
    """
    inst = generate(k)
    g = inst.graph
    solution, trace = solve(g, k, ScriptedProvider(inst.scripted, trusted=False))
    if len(solution) != inst.expected_alg:
        raise TightnessViolation(
            f"k={k}: algorithm returned {len(solution)} vertices, expected {inst.expected_alg}",
            trace)
    if not is_k_dependent(g, solution, k):
        raise TightnessViolation(f"k={k}: output is not {k}-dependent", trace)

    if g.n <= oracle_limit:
        res = exact_max_k_dependent(g, k, oracle_limit)
        opt, source = res.size, "oracle"
        if not res.certified:
            raise TightnessViolation(f"k={k}: oracle did not finish", trace)
    else:
        if not is_k_dependent(g, inst.optimum, k) or not _deletion_certificate(inst):
            raise TightnessViolation(f"k={k}: A u B failed its optimality certificate", trace)
        opt, source = len(inst.optimum), "deletion-certificate"
    if opt != inst.expected_opt:
        raise TightnessViolation(f"k={k}: optimum is {opt}, expected {inst.expected_opt}", trace)

    ratio = Fraction(opt, len(solution))
    bound = ratio_bound(k)
    if ratio != bound:
        raise TightnessViolation(f"k={k}: ratio {ratio} differs from bound {bound}", trace)
    return TightnessReport(k=k, n=g.n, m=g.m, alg=len(solution), opt=opt,
                           opt_source=source, ratio=ratio, bound=bound, trace=trace)


def metadata(inst: WorstCaseInstance) -> dict:
    """JSON-serializable description written next to the edge list."""
    return {
        "k": inst.k,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "a_ids": inst.a_ids,
        "b_ids": inst.b_ids,
        "u": inst.u_id,
        "w": inst.w_id,
        "left_part": inst.a_ids + [inst.u_id],
        "right_part": inst.b_ids + [inst.w_id],
        "expected_opt": inst.expected_opt,
        "expected_alg": inst.expected_alg,
        "expected_residual_ab_edges": sorted(map(list, inst.expected_residual_ab_edges)),
        "expected_path": list(inst.expected_path),
        "scripted_matchings": [[list(p) for p in m] for m in inst.scripted],
    }


def metadata_json(inst: WorstCaseInstance) -> str:
    return json.dumps(metadata(inst), indent=2) + "\n"
