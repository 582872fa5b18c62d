import io

import numpy as np
import pytest
from hypothesis import given

from kdepset.errors import EdgeNotPresent, NotBipartite, ParseError
from kdepset.graph import (
    LEFT,
    RIGHT,
    Graph,
    format_edge_list,
    format_solution,
    induced_degrees,
    is_k_dependent,
    parse_edge_list,
    parse_solution,
    remove_edges,
)
from kdepset.worstcase import generate

from conftest import EX12_OPT_1BASED, bipartite_graphs, zero_based, zero_based_set


def test_parse_path():
    g = parse_edge_list("3 2\n0 1\n1 2\n")
    assert g.n == 3
    assert g.edge_set == {(0, 1), (1, 2)}
    assert g.side.tolist() == [LEFT, RIGHT, LEFT]


def test_parse_edgeless_all_left():
    g = parse_edge_list("2 0\n")
    assert g.n == 2 and g.m == 0
    assert g.side.tolist() == [LEFT, LEFT]


def test_parse_comments_and_stream():
    text = "# a comment\n\n3 1\n# inside\n2 0\n"
    g = parse_edge_list(io.StringIO(text))
    assert g.edges == [(0, 2)]


def test_ex12_parses(ex12):
    assert (ex12.n, ex12.m) == (12, 12)
    assert ex12.is_bipartite
    u, v = ex12.edge_arrays
    assert np.all(ex12.side[u] != ex12.side[v])


@pytest.mark.parametrize("text, fragment", [
    ("3 1\n0 0\n", "self-loop"),
    ("3 1\n0 3\n", "out of range"),
    ("3 2\n0 1\n1 0\n", "duplicate"),
    ("3 2\n0 1\n", "announces 2"),
    ("3 1\n0 1\n1 2\n", "more than"),
    ("3 1\n0 x\n", "non-integer"),
    ("3 1\n0 1 2\n", "expected 2"),
    ("", "missing"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_edge_list(text)


def test_parse_error_reports_line():
    with pytest.raises(ParseError) as info:
        parse_edge_list("# header\n3 1\n0 0\n")
    assert info.value.line == 3


def test_not_bipartite_reports_odd_cycle():
    with pytest.raises(NotBipartite) as info:
        parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    cycle = info.value.cycle
    assert len(cycle) % 2 == 1 and len(set(cycle)) == len(cycle)
    edges = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert (min(a, b), max(a, b)) in edges


def test_triangle_accepted_as_general_graph():
    g = parse_edge_list("3 3\n0 1\n1 2\n0 2\n", require_bipartite=False)
    assert g.side is None and not g.is_bipartite


def test_lowest_id_of_each_component_is_left():
    g = Graph(6, [(4, 1), (1, 5), (3, 2)])
    assert g.side[1] == LEFT and g.side[4] == RIGHT and g.side[5] == RIGHT
    assert g.side[2] == LEFT and g.side[3] == RIGHT
    assert g.side[0] == LEFT


@given(bipartite_graphs())
def test_round_trip(g):
    again = parse_edge_list(format_edge_list(g, ["round trip"]))
    assert again == g
    assert again.edge_set == g.edge_set


@given(bipartite_graphs())
def test_every_edge_crosses(g):
    u, v = g.edge_arrays
    assert np.all(g.side[u] != g.side[v])


@given(bipartite_graphs())
def test_adjacency_symmetric(g):
    for a in range(g.n):
        for b in g.neighbors(a):
            assert a in g.neighbors(b)
            assert g.has_edge(a, b) and g.has_edge(b, a)
    assert sum(len(g.neighbors(a)) for a in range(g.n)) == 2 * g.m


def test_remove_edges_empty_is_identity(ex12):
    assert remove_edges(ex12, []) == ex12


def test_remove_edges_path():
    g = Graph(3, [(0, 1), (1, 2)])
    r = remove_edges(g, [(1, 0)])
    assert r.n == 3 and r.edges == [(1, 2)]
    assert np.array_equal(r.side, g.side)


def test_remove_ex12_dashed(ex12, ex12_dashed):
    r = remove_edges(ex12, ex12_dashed)
    expected = zero_based([(1, 2), (2, 11), (3, 12), (5, 6), (7, 12), (10, 11)])
    assert r.edge_set == {tuple(sorted(e)) for e in expected}
    assert r.n == 12


def test_remove_missing_edge():
    g = Graph(3, [(0, 1)])
    with pytest.raises(EdgeNotPresent):
        remove_edges(g, [(1, 2)])


@given(bipartite_graphs())
def test_remove_keeps_n_and_sides(g):
    r = remove_edges(g, g.edges[::2])
    assert r.n == g.n and np.array_equal(r.side, g.side)
    assert r.m == g.m - len(g.edges[::2])


def test_is_k_dependent_examples(ex12):
    assert is_k_dependent(ex12, [], 0)
    assert is_k_dependent(ex12, zero_based_set(EX12_OPT_1BASED), 1)
    assert not is_k_dependent(ex12, zero_based_set(EX12_OPT_1BASED), 0)
    assert not is_k_dependent(Graph(2, [(0, 1)]), {0, 1}, 0)


def test_induced_degrees():
    assert induced_degrees(Graph(3, [(0, 1), (1, 2)]), set()) == {}
    assert induced_degrees(Graph(3, [(0, 1), (1, 2)]), {0, 1, 2}) == {0: 1, 1: 2, 2: 1}


def test_induced_degrees_worst_case_k1():
    inst = generate(1)
    assert set(induced_degrees(inst.graph, inst.optimum).values()) == {1}


def test_induced_degrees_rejects_bad_ids():
    with pytest.raises(ValueError):
        induced_degrees(Graph(2), {5})


@given(bipartite_graphs())
def test_k_dependent_matches_max_degree(g):
    s = set(range(0, g.n, 2)) | {g.n - 1} if g.n else set()
    degs = induced_degrees(g, s)
    for k in range(4):
        assert is_k_dependent(g, s, k) == (max(degs.values(), default=0) <= k)


def test_solution_format_round_trip():
    assert format_solution({3, 1, 2}) == "1\n2\n3\n"
    assert parse_solution("1\n2\n3\n") == {1, 2, 3}
    with pytest.raises(ParseError):
        parse_solution("1\n1\n")


def test_graph_is_immutable(ex12):
    u, _ = ex12.edge_arrays
    with pytest.raises(ValueError):
        u[0] = 5
