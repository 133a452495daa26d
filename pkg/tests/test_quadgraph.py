from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from truncgolay.construct import K4
from truncgolay.quadgraph import (
    NotAPathError,
    delete_vertices,
    graph_of,
    is_labeled_path,
    path_reducing_victims,
    path_terms,
    path_violations,
    path_witness,
)


def test_empty_terms_edgeless():
    g = graph_of([], 3, 2)
    assert g.edges == () and g.vertices == {0, 1, 2}


def test_k4_from_example_quadratic():
    g = graph_of(K4, 4, 2)
    assert {(i, j) for i, j, _ in g.edges} == set(combinations(range(4), 2))


def test_single_edge_label():
    assert graph_of([(0, 1, 2)], 2, 4).edges == ((0, 1, 2),)


def test_zero_coefficient_dropped():
    assert graph_of([(0, 1, 4)], 2, 4).edges == ()


def test_graph_of_errors():
    with pytest.raises(ValueError):
        graph_of([(0, 1, 1), (0, 1, 1)], 2, 2)
    with pytest.raises(ValueError):
        graph_of([(1, 1, 1)], 2, 2)
    with pytest.raises(ValueError):
        graph_of([(0, 3, 1)], 3, 2)


def test_delete_nothing():
    g = graph_of(K4, 4, 2)
    assert delete_vertices(g, ()) == g


def test_k4_minus_0_3():
    h = delete_vertices(graph_of(K4, 4, 2), (0, 3))
    assert h.edges == ((1, 2, 1),)
    assert path_witness(h).ends == (1, 2)


def test_path_minus_middle_is_not_path():
    g = graph_of([(0, 1, 1), (1, 2, 1)], 3, 2)
    h = delete_vertices(g, (1,))
    assert h.edges == () and h.vertices == {0, 2}
    assert path_violations(h) == ["disconnected"]


def test_unknown_victim():
    with pytest.raises(ValueError):
        delete_vertices(graph_of([], 2, 2), (5,))


def test_single_vertex_witness():
    h = delete_vertices(graph_of([], 3, 2), (0, 1))
    w = path_witness(h)
    assert w.order == (2,) and w.ends == (2, 2)


def test_triangle_is_a_cycle():
    g = graph_of([(0, 1, 1), (0, 2, 1), (1, 2, 1)], 3, 2)
    with pytest.raises(NotAPathError) as exc:
        path_witness(g)
    assert "cycle" in exc.value.violations


def test_wrong_label():
    g = graph_of([(0, 1, 1)], 2, 4)
    assert not is_labeled_path(g)
    assert any("label" in v for v in path_violations(g))
    assert is_labeled_path(graph_of([(0, 1, 2)], 2, 4))


def test_degree_three():
    g = graph_of([(0, 1, 1), (0, 2, 1), (0, 3, 1)], 4, 2)
    assert any("degree" in v for v in path_violations(g))


def test_enumeration_k4():
    found = path_reducing_victims(graph_of(K4, 4, 2), 2)
    # K4 has no path of 3+ vertices left after one deletion; any pair leaves an edge
    assert found == list(combinations(range(4), 2))


def test_enumeration_caps_at_one_survivor():
    found = path_reducing_victims(graph_of([], 2, 2))
    assert found == [(0,), (1,)]


edges_st = st.integers(2, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.sampled_from(list(combinations(range(n), 2)))))
)


@settings(max_examples=80, deadline=None)
@given(edges_st)
def test_witness_properties(data):
    n, pairs = data
    g = graph_of([(i, j, 1) for i, j in pairs], n, 2)
    for victims in path_reducing_victims(g):
        h = delete_vertices(g, victims)
        w = path_witness(h)
        assert len(h.edges) == len(h.vertices) - 1
        if len(h.vertices) > 1:
            degrees = sorted(h.degree(v) for v in h.vertices)
            assert degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:])
        # re-encode the witness as a quadratic form on the survivors
        again = graph_of(path_terms(w, 2), n, 2)
        again = delete_vertices(again, victims)
        assert path_witness(again).ends == w.ends


@settings(max_examples=60, deadline=None)
@given(edges_st, st.data())
def test_delete_idempotent_and_composable(data, draw):
    n, pairs = data
    g = graph_of([(i, j, 1) for i, j in pairs], n, 2)
    a = draw.draw(st.sets(st.integers(0, n - 1)))
    b = draw.draw(st.sets(st.integers(0, n - 1)))
    once = delete_vertices(g, a)
    # already-deleted vertices are unknown to the smaller graph
    assert delete_vertices(once, a & once.vertices) == once
    if a:
        with pytest.raises(ValueError):
            delete_vertices(once, a)
    assert delete_vertices(delete_vertices(g, a), b - a) == delete_vertices(g, a | b)
