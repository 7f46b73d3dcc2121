"""High-girth bigraphs: one path per packing cycle, certified by a Lambda-independent selection.

Pick one X vertex per cycle uniformly at random.  Two picks conflict when
they lie on different cycles and share a Y neighbor.  While a conflict
exists, redraw both cycles of the lowest conflicting pair.  The audit
evaluates the Local Lemma product for every event on a concrete instance.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bigraph import BiGraph, girth, max_degree
from .cover import PathXCover
from .cycles import CyclePacking, Ring, rings
from .deficiency import LambdaIndependentSet
from .errors import PreconditionError

# 12-digit rational brackets around e
E_LOWER = Fraction(271828182845, 10**11)
E_UPPER = Fraction(271828182846, 10**11)


class ResamplingExhausted(RuntimeError):
    def __init__(self, resamples: int, conflicts: list[tuple[int, int]]):
        self.resamples = resamples
        self.conflicts = conflicts
        super().__init__(f"no conflict-free selection after {resamples} resamples; residual {conflicts}")


@dataclass(frozen=True)
class GirthVerdict:
    ok: bool
    girth: float
    max_degree: int
    d: int
    threshold: int  # smallest integer girth satisfying girth >= 4 e d^2 + 1

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "Valid"
        why = []
        if self.max_degree > self.d:
            why.append(f"max degree {self.max_degree} > d = {self.d}")
        if self.girth < self.threshold:
            why.append(f"girth {self.girth} < {self.threshold}")
        return "Invalid: " + ", ".join(why)


def girth_threshold(d: int) -> int:
    lo = math.floor(4 * E_LOWER * d * d)
    hi = math.floor(4 * E_UPPER * d * d)
    if lo != hi:
        raise ArithmeticError(f"4ed^2 too close to an integer for d = {d}")
    # 4ed^2 is irrational, so girth >= 4ed^2 + 1 iff girth >= floor(4ed^2) + 2
    return hi + 2


def check_girth_condition(g: BiGraph, d: int) -> GirthVerdict:
    gi = girth(g)
    delta = max_degree(g)
    thr = girth_threshold(d)
    return GirthVerdict(delta <= d and gi >= thr, gi, delta, d, thr)


@dataclass
class SelectionState:
    choice: list[int]
    conflict_pairs: list[tuple[int, int]]
    rng_seed: int
    resample_count: int = 0
    history: list[tuple[int, int]] = field(default_factory=list)


def similar_pairs(g: BiGraph, cyc: list[Ring]) -> list[tuple[int, int]]:
    """All pairs u < v of X vertices on different cycles with a common Y neighbor."""
    cycle_of = {v: k for k, r in enumerate(cyc) for v in r.ids}
    pairs = set()
    for y in range(g.y_count):
        nb = [x for x in g.adj_y[y] if x in cycle_of]
        for a in range(len(nb)):
            for b in range(a + 1, len(nb)):
                if cycle_of[nb[a]] != cycle_of[nb[b]]:
                    pairs.add((nb[a], nb[b]))
    return sorted(pairs)


def _conflicts(g: BiGraph, chosen: list[int]) -> list[tuple[int, int]]:
    picked = set(chosen)
    found = set()
    for x in chosen:
        for y in g.adj_x[x]:
            for w in g.adj_y[y]:
                if w != x and w in picked:
                    found.add((min(x, w), max(x, w)))
    return sorted(found)


def solve_high_girth(
    g: BiGraph,
    d: int,
    packing: CyclePacking,
    seed: int = 0,
    max_resamples: int | None = None,
    force: bool = False,
) -> tuple[PathXCover, LambdaIndependentSet]:
    if not packing.is_valid(g):
        raise PreconditionError("packing is not a set of disjoint cycles of the graph")
    if not packing.covers_x(g):
        raise PreconditionError("packing does not cover X")
    if not force and not check_girth_condition(g, d):
        raise PreconditionError(f"girth condition fails: {check_girth_condition(g, d)}")
    cyc = rings(g, packing)
    if max_resamples is None:
        max_resamples = 1000 * max(1, len(cyc))
    rng = random.Random(seed)
    xs_of = [[v for v in r.ids if v < g.x_count] for r in cyc]
    cycle_of = {v: k for k, r in enumerate(cyc) for v in r.ids}

    state = SelectionState([rng.choice(xs) for xs in xs_of], [], seed)
    state.conflict_pairs = _conflicts(g, state.choice)
    while state.conflict_pairs:
        if state.resample_count >= max_resamples:
            raise ResamplingExhausted(state.resample_count, state.conflict_pairs)
        u, v = state.conflict_pairs[0]
        for c in sorted({cycle_of[u], cycle_of[v]}):
            state.choice[c] = rng.choice(xs_of[c])
        state.history.append((u, v))
        state.resample_count += 1
        state.conflict_pairs = _conflicts(g, state.choice)

    paths = []
    for r, x in zip(cyc, state.choice):
        # drop the Y successor of the chosen vertex; the rest of the cycle is a path
        paths.append(tuple(g.ref(v) for v in r.around_to(r.succ(x))[:-1]))
    return PathXCover(tuple(paths)), LambdaIndependentSet(tuple(sorted(state.choice)))


# -- Local Lemma audit ---------------------------------------------------------------


@dataclass
class EventRecord:
    u: int
    v: int
    l1: int  # half-length of C(u)
    l2: int
    prob: Fraction
    x: float
    type1: int  # dependent events touching C(u)
    type2: int  # dependent events touching C(v)
    product: float
    margin: float  # x * prod(1 - x_j) - Pr

    def to_json_obj(self, d: int) -> dict:
        return {
            "type1_bound": self.l1 * d * d, "type2_bound": self.l2 * d * d,
            "u": self.u, "v": self.v, "l1": self.l1, "l2": self.l2,
            "pr": f"{self.prob.numerator}/{self.prob.denominator}",
            "x": self.x, "type1": self.type1, "type2": self.type2,
            "lhs": self.product, "margin": f"{self.margin:.12e}",
        }


@dataclass
class AuditReport:
    d: int
    n_cycles: int
    events: list[EventRecord]
    girth_condition: bool

    @property
    def min_margin(self) -> float | None:
        return min((e.margin for e in self.events), default=None)

    def inequality_holds(self, tol: float = 1e-9) -> bool:
        return all(e.margin >= -tol for e in self.events)

    def counts_within_bounds(self) -> bool:
        dd = self.d * self.d
        return all(e.type1 <= e.l1 * dd and e.type2 <= e.l2 * dd for e in self.events)

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "cycles": self.n_cycles,
            "girth_condition": self.girth_condition,
            "event_count": len(self.events),
            "inequality_holds": self.inequality_holds(),
            "counts_within_bounds": self.counts_within_bounds(),
            "min_margin": None if self.min_margin is None else f"{self.min_margin:.12e}",
            "events": [e.to_json_obj(self.d) for e in self.events],
        }


def dependency_audit(g: BiGraph, packing: CyclePacking, d: int | None = None) -> AuditReport:
    """Events A_i, their dependency digraph, and the Local Lemma product per event.

    (i, j) is an arc when the four endpoints of the two events do not lie on
    four distinct cycles.
    """
    if d is None:
        d = max(1, max_degree(g))
    cyc = rings(g, packing)
    cycle_of = {v: k for k, r in enumerate(cyc) for v in r.ids}
    pairs = similar_pairs(g, cyc)
    half = [len(r) // 2 for r in cyc]
    cyc_pair = [(cycle_of[u], cycle_of[v]) for u, v in pairs]
    xs = [math.e / (half[a] * half[b]) for a, b in cyc_pair]
    touching: dict[int, list[int]] = {}
    for j, (a, b) in enumerate(cyc_pair):
        touching.setdefault(a, []).append(j)
        touching.setdefault(b, []).append(j)

    events = []
    for i, (u, v) in enumerate(pairs):
        a, b = cyc_pair[i]
        t1 = [j for j in touching[a] if j != i]
        t2 = [j for j in touching[b] if j != i]
        nbrs = set(t1) | set(t2)
        prod = xs[i]
        for j in sorted(nbrs):
            prod *= 1 - xs[j]
        pr = Fraction(1, half[a] * half[b])
        events.append(
            EventRecord(u, v, half[a], half[b], pr, xs[i], len(t1), len(t2), prod, prod - float(pr))
        )
    gi = girth(g)
    return AuditReport(d, len(cyc), events, max_degree(g) <= d and gi >= girth_threshold(d))
