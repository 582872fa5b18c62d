"""Seeded property sweeps: random instances checked against the exact oracle."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from .approx import check_lemma1, check_lemma2, check_ratio, solve
from .generators import random_bipartite, random_graph
from .graph import Graph, is_k_dependent
from .oracle import exact_max_k_dependent, is_konig_egervary, ke_experiment
from .worstcase import TightnessReport, demonstrate_tightness

DEFAULT_PS = (0.1, 0.2, 0.3, 0.5)


@dataclass(frozen=True)
class TrialSpec:
    index: int
    n: int
    p: float
    k: int
    graph_seed: int

    def graph(self) -> Graph:
        return random_bipartite(self.n, self.p, self.graph_seed)


@dataclass(frozen=True)
class TrialResult:
    index: int
    n: int
    m: int
    p: float
    k: int
    graph_seed: int
    alg: int
    opt: int
    certified: bool
    feasible: bool
    lemma1: bool
    lemma2: bool
    ratio_ok: bool
    e_prime: int
    removed: int

    @property
    def ok(self) -> bool:
        return self.certified and self.feasible and self.lemma1 and self.lemma2 and self.ratio_ok

    def as_dict(self) -> dict:
        return asdict(self) | {"ok": self.ok}


def trial_specs(trials: int, seed: int, ks: Sequence[int], min_n: int, max_n: int,
                ps: Sequence[float] = DEFAULT_PS) -> list[TrialSpec]:
    """Per-trial parameters; each trial draws from its own spawned seed."""
    if not 1 <= min_n <= max_n:
        raise ValueError("need 1 <= min_n <= max_n")
    specs = []
    for i, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        rng = np.random.default_rng(child)
        specs.append(TrialSpec(
            index=i,
            n=int(rng.integers(min_n, max_n + 1)),
            p=float(ps[int(rng.integers(len(ps)))]),
            k=int(ks[int(rng.integers(len(ks)))]),
            graph_seed=int(rng.integers(2**31)),
        ))
    return specs


def run_trial(spec: TrialSpec, oracle_limit: int | None = None) -> TrialResult:
    g = spec.graph()
    solution, trace = solve(g, spec.k)
    res = exact_max_k_dependent(g, spec.k, oracle_limit)
    lemma2, rep = check_lemma2(g, spec.k, trace, res.optimum)
    return TrialResult(
        index=spec.index, n=g.n, m=g.m, p=spec.p, k=spec.k, graph_seed=spec.graph_seed,
        alg=len(solution), opt=res.size, certified=res.certified,
        feasible=is_k_dependent(g, solution, spec.k),
        lemma1=check_lemma1(trace), lemma2=lemma2,
        ratio_ok=check_ratio(len(solution), res.size, spec.k),
        e_prime=rep.e_prime, removed=trace.removed_count,
    )


def property_sweep(trials: int, seed: int, ks: Sequence[int], min_n: int, max_n: int,
                   ps: Sequence[float] = DEFAULT_PS, jobs: int = 1,
                   oracle_limit: int | None = None) -> list[TrialResult]:
    """Solve and oracle-check ``trials`` random bipartite instances.

    Results come back ordered by trial index whatever ``jobs`` is.
    """
    specs = trial_specs(trials, seed, ks, min_n, max_n, ps)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_trial, specs, [oracle_limit] * len(specs), chunksize=8))
    return [run_trial(s, oracle_limit) for s in specs]


@dataclass(frozen=True)
class KETrial:
    index: int
    n: int
    m: int
    p: float
    graph_seed: int
    bipartite: bool
    k: int
    alg: int
    opt: int
    feasible: bool
    bound_holds: bool
    residuals_ke: bool


def ke_sweep(graphs: int, seed: int, ks: Sequence[int] = (1, 2), min_n: int = 4,
             max_n: int = 10, ps: Sequence[float] = (0.2, 0.3, 0.4, 0.5)
             ) -> tuple[int, list[KETrial]]:
    """Draw ``graphs`` random general graphs, keep the Konig-Egervary ones and
    run :func:`ke_experiment` on each for every k.

    Returns ``(number of KE graphs kept, trials)``.
    """
    kept = 0
    out = []
    for i, child in enumerate(np.random.SeedSequence(seed).spawn(graphs)):
        rng = np.random.default_rng(child)
        n = int(rng.integers(min_n, max_n + 1))
        p = float(ps[int(rng.integers(len(ps)))])
        gseed = int(rng.integers(2**31))
        g = random_graph(n, p, gseed)
        if not is_konig_egervary(g):
            continue
        kept += 1
        for k in ks:
            rep = ke_experiment(g, k)
            out.append(KETrial(index=i, n=n, m=g.m, p=p, graph_seed=gseed,
                               bipartite=g.is_bipartite, k=k, alg=rep.alg, opt=rep.opt,
                               feasible=rep.feasible, bound_holds=rep.bound_holds,
                               residuals_ke=rep.all_residuals_ke))
    return kept, out


def tight_sweep(ks: Sequence[int], oracle_limit: int = 20) -> list[TightnessReport]:
    return [demonstrate_tightness(k, oracle_limit) for k in ks]
