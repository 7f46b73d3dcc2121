import logging

import pytest

from pathcover import generators as G
from pathcover.cover import verify_cover
from pathcover.cubic import solve_cubic
from pathcover.deficiency import alpha_lambda, is_lambda_independent
from pathcover.cycles import two_factor
from pathcover.errors import PreconditionError


def check(g):
    cover, wit = solve_cubic(g)
    assert verify_cover(g, cover).ok
    assert cover.vertex_count() == g.n_vertices
    assert len(cover) == wit.size
    assert is_lambda_independent(g, wit.subset)
    cycle_of = {v: k for k, c in enumerate(two_factor(g).cycles) for v in c}
    assert len({cycle_of[g.ref(x)] for x in wit.subset}) == wit.size
    assert wit.size <= alpha_lambda(g).size
    return cover, wit


@pytest.mark.parametrize("g", [G.k33(), G.q3()], ids=["k33", "q3"])
def test_single_path_examples(g):
    cover, wit = check(g)
    assert len(cover) == 1 and wit.size == 1
    assert len(cover.paths[0]) == g.n_vertices


def test_rejects_non_cubic():
    with pytest.raises(PreconditionError):
        solve_cubic(G.c6())
    with pytest.raises(PreconditionError):
        solve_cubic(G.k23())


@pytest.mark.parametrize("seed", range(60))
def test_random_cubic(seed):
    check(G.random_regular(6 + seed % 11, 3, seed))


@pytest.mark.parametrize("seed", range(80))
def test_cubic_with_many_short_cycles(seed):
    check(G.cubic_from_squares(3 + seed % 6, seed))


def test_do_something_else_is_exercised(caplog):
    caplog.set_level(logging.INFO, logger="pathcover.cubic")
    for seed in range(60):
        solve_cubic(G.cubic_from_squares(4 + seed % 4, seed), trace=True)
    assert any("dse=(" in r.getMessage() for r in caplog.records)


def test_disconnected_cubic():
    g = G.k33().disjoint_union(G.q3()).disjoint_union(G.k33())
    cover, wit = check(g)
    assert len(cover) == 3
