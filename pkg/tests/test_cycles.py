import math

import pytest
from hypothesis import given

from pathcover import generators as G
from pathcover.bigraph import Side, build, girth, is_regular
from pathcover.cycles import (
    CyclePacking,
    HallViolation,
    PackingCapExceeded,
    Ring,
    enumerate_cycles,
    greedy_cycle_packing,
    optimal_cycle_packing,
    perfect_matching,
    two_factor,
)
from pathcover.errors import PreconditionError

from conftest import bigraphs


def naive_best_packing(g):
    cycles = [frozenset(c) for c in enumerate_cycles(g)]
    best = (0, 0)

    def rec(k, used, cov, cnt):
        nonlocal best
        best = max(best, (cov, -cnt))
        for t in range(k, len(cycles)):
            if not cycles[t] & used:
                rec(t + 1, used | cycles[t], cov + len(cycles[t]), cnt + 1)

    rec(0, frozenset(), 0, 0)
    return best[0], -best[1]


def test_perfect_matching_k33_and_c6():
    m = perfect_matching(G.k33())
    assert sorted(j for _, j in m.pairs) == [0, 1, 2]
    m6 = perfect_matching(G.c6())
    assert all(G.c6().has_edge(i, j) for i, j in m6.pairs) and len({j for _, j in m6.pairs}) == 3


def test_hall_violation_on_p3():
    with pytest.raises(HallViolation) as exc:
        perfect_matching(G.p3())
    assert exc.value.side is Side.X
    assert exc.value.subset == [0, 1] and exc.value.neighborhood == [0]


def test_two_factor_examples():
    assert len(two_factor(G.c6())) == 1 and two_factor(G.c6()).covered() == 6
    k = two_factor(G.k33())
    assert len(k) == 1 and len(k.cycles[0]) == 6
    with pytest.raises(PreconditionError):
        two_factor(G.k23())


@pytest.mark.parametrize("seed", range(20))
def test_two_factor_spans_random_regular(seed):
    g = G.random_regular(6 + seed % 6, 3 + seed % 2, seed)
    pk = two_factor(g)
    assert pk.is_valid(g) and pk.covered() == g.n_vertices


def test_packing_examples():
    assert len(optimal_cycle_packing(G.star3())) == 0
    k23 = optimal_cycle_packing(G.k23())
    assert len(k23) == 1 and k23.covered() == 4
    cp = optimal_cycle_packing(G.c6_pendant())
    assert len(cp) == 1 and cp.covered() == 6


def test_packing_cap_and_heuristic():
    g = G.k33().disjoint_union(G.q3()).disjoint_union(G.random_regular(8, 3, 1))
    assert len(optimal_cycle_packing(g)) >= 3  # each component is searched on its own
    big = G.random_regular(14, 3, 0)
    with pytest.raises(PackingCapExceeded):
        optimal_cycle_packing(big)
    pk = optimal_cycle_packing(big, heuristic=True)
    assert not pk.certified and pk.is_valid(big)


def test_long_cycle_packs_without_cap_error():
    assert optimal_cycle_packing(G.cycle(400)).covered() == 400


@given(bigraphs(max_x=7, max_y=7, max_deg=3))
def test_packing_matches_naive_enumeration(g):
    pk = optimal_cycle_packing(g)
    assert pk.is_valid(g)
    assert (pk.covered(), len(pk)) == naive_best_packing(g)


@given(bigraphs(max_x=6, max_y=6))
def test_packing_matches_naive_enumeration_any_degree(g):
    pk = optimal_cycle_packing(g)
    assert (pk.covered(), len(pk)) == naive_best_packing(g)


@given(bigraphs(max_x=8, max_y=8, max_deg=3))
def test_leftover_is_a_forest(g):
    pk = optimal_cycle_packing(g)
    xs = [v.index for v in pk.vertices() if v.side is Side.X]
    ys = [v.index for v in pk.vertices() if v.side is Side.Y]
    rest, _, _ = g.delete_vertices(xs, ys)
    assert girth(rest) == math.inf


@given(bigraphs(max_x=7, max_y=7))
def test_greedy_packing_is_valid_and_leaves_forest(g):
    pk = greedy_cycle_packing(g)
    assert pk.is_valid(g)
    xs = [v.index for v in pk.vertices() if v.side is Side.X]
    ys = [v.index for v in pk.vertices() if v.side is Side.Y]
    assert girth(g.delete_vertices(xs, ys)[0]) == math.inf


def test_ring_walks():
    r = Ring([0, 10, 1, 11, 2, 12])
    assert r.around(0, 12) == [0, 10, 1, 11, 2, 12]
    assert r.around(0, 10) == [0, 12, 2, 11, 1, 10]
    assert r.around_from(1) == [1, 11, 2, 12, 0, 10]
    assert r.around_to(1)[-1] == 1
    with pytest.raises(ValueError):
        r.around(0, 1)


def test_packing_json_round_trip():
    pk = optimal_cycle_packing(G.k23())
    assert CyclePacking.from_json_obj(pk.to_json_obj()) == pk


def test_enumerate_cycles_counts():
    assert len(enumerate_cycles(G.k33())) == 15  # 9 four-cycles and 6 six-cycles
    assert len(enumerate_cycles(G.c6())) == 1
    assert is_regular(G.q3()) == 3 and len(enumerate_cycles(G.q3())) == 28
