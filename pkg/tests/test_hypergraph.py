from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathcover import generators as G
from pathcover.bigraph import GraphError
from pathcover.bigraph import VertexRef as V
from pathcover.cover import PathXCover, min_cover_oracle
from pathcover.deficiency import alpha_lambda, max_deficiency
from pathcover.hypergraph import (
    BergePath,
    Hypergraph,
    berge_cover_ok,
    fano,
    incidence_graph,
    is_strongly_independent,
    random_hypergraph,
    restricted_incidence_graph,
    strong_independence,
    subhypergraph,
    to_berge_cover,
)

TRI = Hypergraph.of(3, [{0, 1}, {1, 2}, {2, 0}])


@st.composite
def hypergraphs(draw, max_n=7, max_m=7):
    n = draw(st.integers(0, max_n))
    if n == 0:
        return Hypergraph(0, ())
    edges = draw(st.lists(st.frozensets(st.integers(0, n - 1), min_size=1), max_size=max_m, unique=True))
    return Hypergraph(n, tuple(edges))


def naive_strong_independence(h):
    for r in range(h.vertex_count, -1, -1):
        for s in combinations(range(h.vertex_count), r):
            if is_strongly_independent(h, s):
                return r
    return 0


def test_incidence_examples():
    assert incidence_graph(Hypergraph.of(2, [{0, 1}])) == G.p3()
    # edge {0,1} is y0, {1,2} is y1, {2,0} is y2: a 6-cycle
    assert incidence_graph(TRI) == G.c6()


def test_duplicate_and_bad_edges_rejected():
    with pytest.raises(GraphError):
        Hypergraph.of(2, [{0, 1}, {0, 1}])
    with pytest.raises(GraphError):
        Hypergraph.of(2, [set()])
    with pytest.raises(GraphError):
        Hypergraph.of(2, [{0, 5}])


def test_berge_examples():
    h = Hypergraph.of(2, [{0, 1}])
    bp = to_berge_cover(h, PathXCover(((V.x(0), V.y(0), V.x(1)),)))
    assert bp == [BergePath((0, 1), (0,))] and bp[0].sequence() == [0, 0, 1]

    g = incidence_graph(TRI)
    ham = PathXCover(((V.y(0), V.x(0), V.y(2), V.x(2), V.y(1), V.x(1)),))
    assert min_cover_oracle(g)[0] == 1
    out = to_berge_cover(TRI, ham)
    assert len(out) == 1 and len(out[0].vertices) == 3 and len(out[0].edges) == 2
    assert berge_cover_ok(TRI, out)

    iso = Hypergraph.of(2, [{0}])
    out = to_berge_cover(iso, PathXCover(((V.x(0), V.y(0)), (V.x(1),))))
    assert out == [BergePath((0,), ()), BergePath((1,), ())]


def test_strong_independence_examples():
    assert strong_independence(TRI).size == 1
    assert strong_independence(Hypergraph.of(4, [{0}, {1}, {2}, {3}])).size == 4
    assert strong_independence(fano()).size == 1


def test_fano_is_a_projective_plane():
    f = fano()
    for a, b in combinations(range(7), 2):
        assert sum(1 for e in f.edges if {a, b} <= e) == 1
    assert G.fano_incidence().x_count == 7


def test_subhypergraph_examples():
    sub = subhypergraph(TRI, {0, 1})
    assert sub.vertex_count == 2
    assert set(sub.edges) == {frozenset({0, 1}), frozenset({1}), frozenset({0})}
    assert subhypergraph(TRI, range(3)) == TRI
    assert subhypergraph(TRI, set()) == Hypergraph(0, ())
    with pytest.raises(GraphError):
        subhypergraph(TRI, {7})


def test_subhypergraph_dedups_restricted_edges():
    h = Hypergraph.of(3, [{0, 1}, {0, 2}])
    assert subhypergraph(h, {0}).edges == (frozenset({0}),)


def test_json_round_trip():
    assert Hypergraph.from_json_obj(fano().to_json_obj()) == fano()


@given(hypergraphs())
def test_strong_independence_matches_alpha_and_brute_force(h):
    s = strong_independence(h)
    assert s.size == alpha_lambda(incidence_graph(h)).size == naive_strong_independence(h)


@given(hypergraphs(max_n=6, max_m=5))
def test_berge_round_trip_covers_vertices(h):
    g = incidence_graph(h)
    _, cover = min_cover_oracle(g)
    paths = to_berge_cover(h, cover)
    assert berge_cover_ok(h, paths)


@given(hypergraphs(max_n=6, max_m=6), st.data())
def test_restriction_never_raises_deficiency_multiset_reading(h, data):
    s = data.draw(st.sets(st.integers(0, max(0, h.vertex_count - 1)))) if h.vertex_count else set()
    g = restricted_incidence_graph(h, s)
    assert max_deficiency(g).value <= max_deficiency(incidence_graph(h)).value


def test_deduplicated_restriction_can_raise_deficiency():
    # two edges restrict to the same set; merging them removes a Lambda vertex
    h = Hypergraph.of(6, [{0, 5}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4, 5}])
    s = {0, 1, 2, 3, 4}
    assert max_deficiency(incidence_graph(h)).value == 3
    assert max_deficiency(restricted_incidence_graph(h, s)).value == 3
    assert max_deficiency(incidence_graph(subhypergraph(h, s))).value == 4


def test_random_hypergraph_is_valid():
    for seed in range(20):
        h = random_hypergraph(8, 8, seed)
        assert len(h.edges) <= 8 and h.vertex_count == 8
