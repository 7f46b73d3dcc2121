import pytest
from hypothesis import given

from pathcover import generators as G
from pathcover.bigraph import VertexRef as V
from pathcover.bigraph import build
from pathcover.cover import certify, min_cover_oracle, verify_cover
from pathcover.deficiency import deficiency_of, max_deficiency
from pathcover.errors import PreconditionError
from pathcover.forest import solve_forest

from conftest import bigraphs


def check(g, cover, cert):
    assert verify_cover(g, cover).ok
    assert cert == deficiency_of(g, cert.subset)
    assert len(cover) <= cert.value
    assert certify(g, cover, cert).ok


def test_single_x_vertex():
    g = build(1, 2, [(0, 0), (0, 1)])
    cover, cert = solve_forest(g)
    assert cover.paths == ((V.x(0),),) and cert.value == 1


def test_star3():
    cover, cert = solve_forest(G.star3())
    assert len(cover) == 2
    assert cert.subset == (0, 1, 2) and cert.value == 2


def test_caterpillar_is_one_path():
    g = G.caterpillar()
    cover, cert = solve_forest(g)
    assert len(cover) == 1 and cert.value >= 1
    assert set(cover.paths[0]) == set(g.vertices())
    assert min_cover_oracle(g)[0] == 1


def test_cyclic_input_rejected():
    with pytest.raises(PreconditionError):
        solve_forest(G.c6())


def test_empty_and_y_only():
    assert len(solve_forest(build(0, 0, []))[0]) == 0
    cover, cert = solve_forest(build(0, 3, []))
    assert len(cover) == 0 and cert.value == 0


def test_all_small_trees_every_root():
    for g in G.trees(8):
        best = max_deficiency(g).value
        for r in range(max(1, g.x_count)):
            cover, cert = solve_forest(g, root_choice=lambda xs, r=r: xs[r % len(xs)])
            check(g, cover, cert)
            assert len(cover) <= best


@pytest.mark.parametrize("seed", range(60))
def test_random_forests(seed):
    g = G.random_forest(20 + seed % 10, seed)
    cover, cert = solve_forest(g)
    check(g, cover, cert)
    assert len(cover) <= max_deficiency(g).value
    if g.n_vertices <= 18:
        assert min_cover_oracle(g)[0] <= len(cover)


@given(bigraphs(max_x=7, max_y=7))
def test_forest_subgraphs_of_random_graphs(g):
    # keep a spanning forest of g
    parent = list(range(g.n_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    kept = []
    for i, j in g.edges():
        a, b = find(i), find(g.x_count + j)
        if a != b:
            parent[a] = b
            kept.append((i, j))
    f = build(g.x_count, g.y_count, kept)
    cover, cert = solve_forest(f)
    check(f, cover, cert)
    assert min_cover_oracle(f)[0] <= len(cover) <= max_deficiency(f).value
