from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kdepset.approx import (
    HopcroftKarpProvider,
    ScriptedProvider,
    check_lemma1,
    check_lemma2,
    check_ratio,
    independence_numbers,
    ratio_bound,
    solve,
)
from kdepset.errors import InvalidK, InvalidProvider, NotOptimal
from kdepset.graph import Graph, is_k_dependent
from kdepset.matching import Matching
from kdepset.oracle import exact_max_k_dependent
from kdepset.worstcase import generate

from bruteforce import brute_max_k_dependent
from conftest import EX12_OPT_1BASED, bipartite_graphs, zero_based_set


def test_edgeless_graph():
    g = Graph(4)
    s, trace = solve(g, 3)
    assert s == frozenset(range(4))
    assert trace.matching_sizes == [0, 0, 0]
    assert check_lemma1(trace)
    holds, rep = check_lemma2(g, 3, trace, range(4))
    assert holds and rep.e_prime == 0


def test_ex12_scripted(ex12, ex12_dashed):
    s, trace = solve(ex12, 1, ScriptedProvider([ex12_dashed]))
    assert len(s) == 8
    assert is_k_dependent(ex12, s, 1)
    assert trace.removed_count == 6
    assert check_lemma1(trace)  # 8 >= 12 - 6
    assert trace.iterations[0].residual_edge_count == 6


def test_example12_lemma2_against_known_optimum(ex12, ex12_dashed):
    _, trace = solve(ex12, 1, ScriptedProvider([ex12_dashed]))
    optimum = zero_based_set(EX12_OPT_1BASED)
    holds, rep = check_lemma2(ex12, 1, trace, optimum)
    # induced edges of the optimum: 1-2, 3-4, 7-8, 9-10; only 1-2 survives the dashed round
    assert rep.induced_edges == 4 and rep.e_prime == 1 and rep.e_double_prime == 3
    assert rep.d_star == 3
    assert holds and rep.bound == Fraction(11, 2)


def test_ex12_lemma2_against_oracle_optimum(ex12, ex12_dashed):
    _, trace = solve(ex12, 1, ScriptedProvider([ex12_dashed]))
    opt = exact_max_k_dependent(ex12, 1)
    assert opt.size == 9
    induced = [e for e in ex12.edges if e[0] in opt.optimum and e[1] in opt.optimum]
    survived = [e for e in induced if e not in trace.accumulated_removed]
    holds, rep = check_lemma2(ex12, 1, trace, opt.optimum)
    assert rep.e_prime == len(survived)
    assert holds


def test_ex12_default_provider(ex12):
    s, trace = solve(ex12, 1)
    assert len(s) in (8, 9) and is_k_dependent(ex12, s, 1)
    assert check_lemma1(trace)


@pytest.mark.parametrize("k, size", [(3, 5), (4, 6)])
def test_worst_case_scripted(k, size):
    inst = generate(k)
    s, trace = solve(inst.graph, k, ScriptedProvider(inst.scripted))
    assert len(s) == size


def test_worst_case_k3_lemmas_tight():
    inst = generate(3)
    s, trace = solve(inst.graph, 3, ScriptedProvider(inst.scripted))
    assert trace.removed_count == 15
    assert 3 * len(s) == 3 * 10 - 15  # lemma 1 with equality
    assert check_lemma1(trace)
    holds, rep = check_lemma2(inst.graph, 3, trace, inst.optimum)
    assert rep.e_prime == 3 and rep.induced_edges == 12
    assert holds and rep.bound == len(s)  # 5 = 8/2 + 3/3


def test_ratio_bound_values():
    assert ratio_bound(1) == Fraction(4, 3)
    assert ratio_bound(2) == Fraction(3, 2)
    for k in range(1, 200):
        assert ratio_bound(k) < 2
        assert ratio_bound(k) == 1 + Fraction(k, k + 2)


def test_ratio_bound_rejects_bad_k():
    with pytest.raises(InvalidK):
        ratio_bound(0)
    with pytest.raises(InvalidK):
        solve(Graph(2), 0)


def test_check_ratio_examples():
    assert check_ratio(5, 8, 3)
    assert check_ratio(8, 9, 1)
    assert check_ratio(0, 0, 1)
    assert not check_ratio(4, 8, 3)


def test_lemma2_rejects_infeasible_optimum():
    g = Graph(2, [(0, 1)])
    _, trace = solve(g, 1)
    with pytest.raises(NotOptimal):
        check_lemma2(g, 0, trace, {0, 1})


def test_scripted_non_maximum_rejected(ex12, ex12_dashed):
    with pytest.raises(InvalidProvider, match="not maximum"):
        solve(ex12, 1, ScriptedProvider([ex12_dashed[:5]]))


def test_scripted_non_edge_rejected(ex12):
    with pytest.raises(InvalidProvider, match="not edges"):
        solve(ex12, 1, ScriptedProvider([[(0, 2)]]))


def test_scripted_reuse_of_removed_edge_rejected(ex12, ex12_dashed):
    with pytest.raises(InvalidProvider):
        solve(ex12, 2, ScriptedProvider([ex12_dashed, ex12_dashed]))


def test_scripted_too_short():
    with pytest.raises(InvalidProvider, match="round 2"):
        solve(Graph(2), 2, ScriptedProvider([[]]))


def test_provider_returning_pairs_is_coerced():
    class Pairs:
        trusted = False

        def __call__(self, residual, i):
            return [(0, 1)] if residual.m else []

    s, trace = solve(Graph(2, [(0, 1)]), 2, Pairs())
    assert trace.matching_sizes == [1, 0] and len(s) == 2


def test_trace_invariants():
    inst = generate(4)
    s, trace = solve(inst.graph, 4, ScriptedProvider(inst.scripted), verbose=True)
    assert trace.cumulative_removed_sizes == [6, 12, 18, 24]
    assert len(trace.accumulated(2)) == 12
    assert trace.iterations[-1].residual_edge_count == trace.m - len(trace.accumulated_removed)
    assert s == frozenset(range(trace.n)) - trace.final_cover
    assert len(trace.residuals) == 5


def test_independence_numbers_need_verbose():
    _, trace = solve(Graph(2), 1)
    with pytest.raises(ValueError):
        independence_numbers(trace)


@settings(max_examples=120, deadline=None)
@given(bipartite_graphs(max_n=11), st.integers(1, 4))
def test_solve_properties(g, k):
    s, trace = solve(g, k, verbose=True)
    assert is_k_dependent(g, s, k)
    assert check_lemma1(trace)
    alphas = independence_numbers(trace)
    assert alphas == sorted(alphas)
    assert alphas[-1] == len(s)
    opt = brute_max_k_dependent(g.n, g.edges, k)
    assert check_ratio(len(s), opt, k)
    res = exact_max_k_dependent(g, k)
    assert res.size == opt
    assert check_lemma2(g, k, trace, res.optimum)[0]


@settings(max_examples=40, deadline=None)
@given(bipartite_graphs(max_n=10), st.integers(1, 3), st.randoms(use_true_random=False))
def test_provider_independence(g, k, rnd):
    """A different (shuffled-order) maximum matching still meets the bound."""
    from kdepset.matching import max_matching

    class Shuffled:
        trusted = False

        def __call__(self, residual, i):
            perm = list(range(residual.n))
            rnd.shuffle(perm)
            inv = {p: v for v, p in enumerate(perm)}
            relabeled = Graph(residual.n, [(perm[a], perm[b]) for a, b in residual.edges])
            return Matching((inv[a], inv[b]) for a, b in max_matching(relabeled))

    opt = exact_max_k_dependent(g, k).size
    for provider in (HopcroftKarpProvider(), Shuffled()):
        s, trace = solve(g, k, provider)
        assert is_k_dependent(g, s, k)
        assert check_ratio(len(s), opt, k)
