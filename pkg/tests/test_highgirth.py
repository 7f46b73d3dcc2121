import math
from fractions import Fraction

import pytest

from pathcover import generators as G
from pathcover.bigraph import girth
from pathcover.cover import verify_cover
from pathcover.cycles import greedy_cycle_packing, optimal_cycle_packing, two_factor
from pathcover.deficiency import alpha_lambda, lambda_set
from pathcover.errors import PreconditionError
from pathcover.highgirth import (
    E_LOWER,
    E_UPPER,
    ResamplingExhausted,
    check_girth_condition,
    dependency_audit,
    girth_threshold,
    solve_high_girth,
)


def test_e_brackets():
    assert E_LOWER < Fraction(math.e) < E_UPPER


@pytest.mark.parametrize("d", range(1, 40))
def test_threshold_matches_real_comparison(d):
    t = girth_threshold(d)
    assert t - 1 < 4 * math.e * d * d + 1 <= t


def test_condition_examples():
    assert check_girth_condition(G.cycle(50), 2).ok
    assert not check_girth_condition(G.c6(), 2).ok
    assert not check_girth_condition(G.k33(), 3).ok
    assert check_girth_condition(G.star3(), 3).ok  # forests have infinite girth
    assert not check_girth_condition(G.k33(), 2).ok  # degree too large


def test_single_c50():
    g = G.cycle(50)
    cover, wit = solve_high_girth(g, 2, two_factor(g))
    assert len(cover) == 1 and len(cover.paths[0]) == 49 and wit.size == 1
    assert verify_cover(g, cover).ok


def test_two_c50():
    g = G.disjoint_cycles([50, 50])
    cover, wit = solve_high_girth(g, 2, two_factor(g), seed=7)
    assert len(cover) == 2 and lambda_set(g, wit.subset) == []


def test_k33_forced():
    g = G.k33()
    with pytest.raises(PreconditionError):
        solve_high_girth(g, 3, two_factor(g))
    cover, wit = solve_high_girth(g, 3, two_factor(g), force=True)
    assert len(cover) == 1 and verify_cover(g, cover).ok


def test_packing_must_cover_x():
    g = G.c6_pendant()
    with pytest.raises(PreconditionError):
        solve_high_girth(g, 3, optimal_cycle_packing(g), force=True)


@pytest.mark.parametrize("seed", range(20))
def test_multi_cycle_d2_deterministic(seed):
    lengths = [46 + 2 * (seed % 5), 50, 60, 48][: 2 + seed % 3]
    g = G.disjoint_cycles(lengths)
    pk = two_factor(g)
    a = solve_high_girth(g, 2, pk, seed=seed)
    b = solve_high_girth(g, 2, pk, seed=seed)
    assert a == b
    cover, wit = a
    assert len(cover) == len(lengths) == wit.size
    assert cover.vertex_count() == g.n_vertices - len(lengths)
    assert verify_cover(g, cover).ok and not lambda_set(g, wit.subset)


@pytest.mark.parametrize("seed", range(30))
def test_forced_small_instances_never_return_invalid_witness(seed):
    g = G.cubic_from_squares(2 + seed % 4, seed)
    pk = two_factor(g)
    try:
        cover, wit = solve_high_girth(g, 3, pk, seed=seed, max_resamples=200, force=True)
    except ResamplingExhausted as exc:
        assert exc.conflicts
        return
    assert verify_cover(g, cover).ok
    assert not lambda_set(g, wit.subset)
    assert wit.size <= alpha_lambda(g).size


def test_audit_examples():
    g = G.cycle(50)
    assert dependency_audit(g, two_factor(g)).events == []
    assert dependency_audit(G.k33(), two_factor(G.k33())).events == []
    h = G.two_c50_linked()
    rep = dependency_audit(h, greedy_cycle_packing(h))
    assert len(rep.events) == 1
    ev = rep.events[0]
    assert ev.prob == Fraction(1, 625)
    assert rep.inequality_holds() and ev.margin > 0


def test_audit_counts_against_bounds():
    import random

    for seed in range(20):
        rng = random.Random(seed)
        lengths = [rng.choice([40, 50, 60]) for _ in range(4)]
        links = []
        for _ in range(6):
            a, b = rng.sample(range(4), 2)
            links.append((a, rng.randrange(lengths[a] // 2), b, rng.randrange(lengths[b] // 2)))
        g = G.linked_cycles(lengths, links)
        rep = dependency_audit(g, greedy_cycle_packing(g))
        assert rep.counts_within_bounds()
        assert rep.to_json_obj()["event_count"] == len(rep.events)
