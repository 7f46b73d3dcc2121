import math

import pytest
from hypothesis import given

from pathcover import generators as G
from pathcover.bigraph import (
    GraphError,
    VertexRef,
    build,
    components,
    cycle_rank,
    dumps,
    from_edge_list,
    girth,
    is_regular,
    loads,
    max_degree,
    parse_graph,
    to_edge_list,
)
from pathcover.cycles import enumerate_cycles

from conftest import bigraphs


def test_build_p3():
    g = build(2, 1, [(0, 0), (1, 0)])
    assert g == G.p3()
    assert [list(a) for a in g.adj_x] == [[0], [0]]
    assert list(g.adj_y[0]) == [0, 1]


def test_build_empty_and_duplicate_edges():
    assert build(0, 0, []).n_vertices == 0
    g = build(1, 1, [(0, 0), (0, 0)])
    assert g.n_edges == 1


def test_build_out_of_range_names_pair():
    with pytest.raises(GraphError, match=r"\(2, 0\)"):
        build(2, 1, [(2, 0)])


def test_girth_fixtures():
    assert girth(G.c6()) == 6
    assert girth(G.star3()) == math.inf
    assert girth(G.k33()) == 4
    assert girth(G.q3()) == 4
    assert girth(G.cycle(50)) == 50


def test_degree_queries():
    assert max_degree(G.k33()) == 3 and is_regular(G.k33()) == 3
    assert max_degree(G.k23()) == 3 and is_regular(G.k23()) is None
    empty = build(0, 0, [])
    assert max_degree(empty) == 0 and is_regular(empty) == 0


def test_fam_degrees():
    g = G.fam(5, 2)
    assert g.degree(VertexRef.x(0)) == 5
    assert g.degree(VertexRef.x(4)) == 2


def test_cycle6_is_c6():
    assert G.cycle(6) == G.c6()
    # x_i ~ y_i and x_i ~ y_(i+2 mod 3)
    assert set(G.c6().edges()) == {(i, i) for i in range(3)} | {(i, (i + 2) % 3) for i in range(3)}


@pytest.mark.parametrize("seed", range(25))
def test_random_forest_is_acyclic(seed):
    g = G.random_forest(25, seed)
    assert girth(g) == math.inf
    assert cycle_rank(g) == 0


@pytest.mark.parametrize("seed", range(10))
def test_random_regular_degrees(seed):
    g = G.random_regular(8, 3, seed)
    assert is_regular(g) == 3


def test_random_regular_gives_up():
    with pytest.raises(G.GenerationError):
        G.random_regular(4, 3, 0, max_tries=0)


@given(bigraphs())
def test_symmetry_and_serialization_round_trip(g):
    for i, ys in enumerate(g.adj_x):
        for j in ys:
            assert i in g.adj_y[j]
    assert loads(dumps(g)) == g
    assert from_edge_list(to_edge_list(g)) == g
    assert parse_graph(to_edge_list(g)) == parse_graph(dumps(g))


@given(bigraphs(max_x=5, max_y=5))
def test_girth_infinite_iff_cycle_rank_zero(g):
    assert (girth(g) == math.inf) == (cycle_rank(g) == 0)
    cycles = enumerate_cycles(g)
    if cycles:
        assert girth(g) == min(len(c) for c in cycles)
    else:
        assert girth(g) == math.inf


@given(bigraphs())
def test_components_partition_vertices(g):
    comps = components(g)
    flat = sorted(v for c in comps for v in c)
    assert flat == list(range(g.n_vertices))


def test_parse_errors():
    with pytest.raises(GraphError):
        loads('{"x_count": 1')
    with pytest.raises(GraphError):
        from_edge_list("")
    with pytest.raises(GraphError):
        loads('{"x_count": 1, "y_count": 1, "edges": [[0, 3]]}')


def test_linked_cycles_shape():
    g = G.two_c50_linked()
    assert g.x_count == 50 and g.y_count == 51
    assert g.degree(VertexRef.y(50)) == 2
    assert girth(g) == 50
