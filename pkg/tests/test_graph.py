import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sscbounds import (
    GraphError,
    dumps_graph,
    from_edge_list,
    loads_graph,
    reverse,
    validate_leaders,
)


def test_path3_from_edge_list():
    g = from_edge_list(3, False, [(0, 1), (1, 2)])
    assert g.n == 3 and not g.directed
    assert g.edges() == {(0, 1), (1, 0), (1, 2), (2, 1)}


def test_single_isolated_node():
    g = from_edge_list(1, True, [])
    assert g.n == 1
    assert g.edges() == set()


def test_self_loop_rejected():
    with pytest.raises(GraphError):
        from_edge_list(3, True, [(0, 0)])


def test_endpoint_out_of_range_rejected():
    with pytest.raises(GraphError):
        from_edge_list(3, False, [(0, 3)])
    with pytest.raises(GraphError):
        from_edge_list(3, False, [(-1, 0)])


def test_zero_nodes_rejected():
    with pytest.raises(GraphError):
        from_edge_list(0, False, [])


def test_duplicates_collapse_and_symmetrize():
    g = from_edge_list(3, False, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_pairs() == [(0, 1)]
    assert g.in_neighbors(0) == {1}


def test_neighbors_undirected_path():
    g = from_edge_list(3, False, [(0, 1), (1, 2)])
    assert g.in_neighbors(1) == {0, 2}
    assert g.out_neighbors(1) == {0, 2}


def test_neighbors_directed():
    g = from_edge_list(3, True, [(0, 1), (2, 1)])
    assert g.in_neighbors(1) == {0, 2}
    assert g.out_neighbors(0) == {1}
    assert g.out_neighbors(1) == set()
    assert g.in_neighbors(0) == set()


def test_neighbors_invalid_node():
    g = from_edge_list(2, False, [(0, 1)])
    with pytest.raises(GraphError):
        g.in_neighbors(5)


def test_reverse_directed():
    g = from_edge_list(3, True, [(0, 1), (1, 2)])
    assert reverse(g).edges() == {(1, 0), (2, 1)}


def test_reverse_undirected_fixed_point():
    g = from_edge_list(3, False, [(0, 1), (1, 2)])
    assert reverse(g) == g


def test_validate_leaders():
    g = from_edge_list(3, False, [(0, 1)])
    assert validate_leaders(g, [2, 0]) == (2, 0)
    with pytest.raises(GraphError):
        validate_leaders(g, [])
    with pytest.raises(GraphError):
        validate_leaders(g, [0, 0])
    with pytest.raises(GraphError):
        validate_leaders(g, [3])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    directed = draw(st.booleans())
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] != e[1]
            ),
            max_size=3 * n,
        )
    )
    return from_edge_list(n, directed, pairs)


@given(graphs())
@settings(max_examples=60)
def test_edge_consistency(g):
    for i, j in g.edges():
        assert j in g.out_neighbors(i)
        assert i in g.in_neighbors(j)


@given(graphs())
@settings(max_examples=60)
def test_reverse_involution(g):
    assert reverse(reverse(g)) == g
    assert reverse(g).n == g.n


@given(graphs())
@settings(max_examples=60)
def test_undirected_neighborhoods_agree(g):
    if not g.directed:
        for v in range(g.n):
            assert g.in_neighbors(v) == g.out_neighbors(v)


def test_text_round_trip():
    g = from_edge_list(4, True, [(0, 1), (2, 3), (3, 0)])
    assert loads_graph(dumps_graph(g, "text")) == g


def test_json_round_trip():
    g = from_edge_list(4, False, [(0, 1), (2, 3)])
    assert loads_graph(dumps_graph(g, "json")) == g


def test_text_format_comments_and_errors():
    g = loads_graph("# a path\ngraph 3 undirected\nedge 0 1  # first\nedge 1 2\n")
    assert g.edge_pairs() == [(0, 1), (1, 2)]
    with pytest.raises(GraphError):
        loads_graph("edge 0 1\n")
    with pytest.raises(GraphError):
        loads_graph("graph 3 sideways\n")
    with pytest.raises(GraphError):
        loads_graph('{"n": 3}')


def test_json_matches_text_parse():
    text_g = loads_graph("graph 2 directed\nedge 0 1\n")
    json_g = loads_graph(json.dumps({"n": 2, "directed": True, "edges": [[0, 1]]}))
    assert text_g == json_g
