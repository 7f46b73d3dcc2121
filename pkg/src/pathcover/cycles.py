"""Matchings, 2-factors of regular bigraphs and optimal cycle packings."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from .bigraph import BiGraph, Side, VertexRef, build, canonical_cycle, cycle_is_valid, is_regular
from .errors import PreconditionError

log = logging.getLogger(__name__)

DEFAULT_PACKING_CAP = 24
DEFAULT_RANK_CAP = 8


class HallViolation(ValueError):
    """No perfect matching; ``subset`` on ``side`` has a smaller neighborhood."""

    def __init__(self, side: Side, subset: list[int], neighborhood: list[int]):
        self.side = side
        self.subset = subset
        self.neighborhood = neighborhood
        super().__init__(
            f"no perfect matching: {side.value}-set {subset} has only {len(neighborhood)} neighbors"
        )


class PackingCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]  # (x, y), sorted by x

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


@dataclass(frozen=True)
class CyclePacking:
    cycles: tuple[tuple[VertexRef, ...], ...]
    certified: bool = True

    def __len__(self) -> int:
        return len(self.cycles)

    def vertices(self) -> set[VertexRef]:
        return {v for c in self.cycles for v in c}

    def covered(self) -> int:
        return sum(len(c) for c in self.cycles)

    def is_valid(self, g: BiGraph) -> bool:
        seen: set[VertexRef] = set()
        for c in self.cycles:
            if not cycle_is_valid(g, c) or seen & set(c):
                return False
            seen |= set(c)
        return True

    def covers_x(self, g: BiGraph) -> bool:
        vs = self.vertices()
        return all(VertexRef.x(i) in vs for i in range(g.x_count))

    def to_json_obj(self) -> list:
        return [[[v.side.value, v.index] for v in c] for c in self.cycles]

    @classmethod
    def from_json_obj(cls, obj: list) -> "CyclePacking":
        return cls(tuple(tuple(VertexRef(Side(s), int(i)) for s, i in c) for c in obj))


def _packing(g: BiGraph, id_cycles, certified=True) -> CyclePacking:
    return CyclePacking(tuple(tuple(g.ref(v) for v in c) for c in id_cycles), certified)


# -- matchings -------------------------------------------------------------------


def _augment_all(left_adj, n_right):
    """Augmenting-path matching from every left vertex in index order.

    Returns (match_left, match_right, failed_left, reached_left) where the
    last two describe the first left vertex that could not be matched.
    """
    match_l = [-1] * len(left_adj)
    match_r = [-1] * n_right
    for s in range(len(left_adj)):
        prev_r = {}
        seen_l = [s]
        queue = deque([s])
        end = -1
        while queue and end < 0:
            u = queue.popleft()
            for r in left_adj[u]:
                if r in prev_r:
                    continue
                prev_r[r] = u
                if match_r[r] < 0:
                    end = r
                    break
                seen_l.append(match_r[r])
                queue.append(match_r[r])
        if end < 0:
            return match_l, match_r, s, sorted(seen_l)
        r = end
        while r >= 0:
            u = prev_r[r]
            nxt = match_l[u]
            match_l[u], match_r[r] = r, u
            r = nxt
    return match_l, match_r, -1, []


def perfect_matching(g: BiGraph) -> Matching:
    """Perfect matching by breadth-first augmenting paths, lowest index first."""
    match_x, _, failed, reached = _augment_all(g.adj_x, g.y_count)
    if failed >= 0:
        nbrs = sorted({j for i in reached for j in g.adj_x[i]})
        raise HallViolation(Side.X, reached, nbrs)
    if g.x_count < g.y_count:
        _, _, failed, reached = _augment_all(g.adj_y, g.x_count)
        nbrs = sorted({i for j in reached for i in g.adj_y[j]})
        raise HallViolation(Side.Y, reached, nbrs)
    return Matching(tuple((i, match_x[i]) for i in range(g.x_count)))


# -- 2-factors ----------------------------------------------------------------------


def _cycles_of_2_regular(g: BiGraph, edges) -> list[tuple[int, ...]]:
    nbr: dict[int, list[int]] = {}
    for i, j in edges:
        a, b = i, g.x_count + j
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    seen: set[int] = set()
    out = []
    for s in sorted(nbr):
        if s in seen:
            continue
        cyc, prev, cur = [s], -1, s
        seen.add(s)
        while True:
            a, b = nbr[cur]
            nxt = a if a != prev else b
            if nxt == s:
                break
            cyc.append(nxt)
            seen.add(nxt)
            prev, cur = cur, nxt
        out.append(canonical_cycle(cyc))
    return out


def two_factor(g: BiGraph) -> CyclePacking:
    """Spanning disjoint cycles of a d-regular bigraph, d >= 2, from two perfect matchings."""
    d = is_regular(g)
    if d is None or d < 2:
        raise PreconditionError("two_factor needs a regular bigraph of degree >= 2")
    m1 = perfect_matching(g)
    rest = build(g.x_count, g.y_count, set(g.edges()) - set(m1.pairs))
    assert is_regular(rest) == d - 1, "removing a perfect matching must leave a (d-1)-regular graph"
    m2 = perfect_matching(rest)
    packing = _packing(g, _cycles_of_2_regular(g, m1.pairs + m2.pairs))
    assert packing.covered() == g.n_vertices
    return packing


# -- cycle enumeration and packing ---------------------------------------------------


def enumerate_cycles(g: BiGraph) -> list[tuple[int, ...]]:
    """All simple cycles as canonical unified-id tuples, shortest first then lexicographic."""
    return enumerate_cycles_adj([sorted(a) for a in g.adjacency_lists()])


def enumerate_cycles_adj(adj) -> list[tuple[int, ...]]:
    out = []
    for s in range(len(adj)):
        # each cycle is found once: from its lowest vertex, in the direction
        # whose second vertex is smaller than its last
        path = [s]
        on_path = {s}
        stack = [iter(adj[s])]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if w == s and len(path) >= 4 and path[1] < path[-1]:
                out.append(tuple(path))
            elif w > s and w not in on_path:
                path.append(w)
                on_path.add(w)
                stack.append(iter(adj[w]))
    out.sort(key=lambda c: (len(c), c))
    return out


def _core_components(g: BiGraph) -> list[list[int]]:
    """Connected components of the 2-core; every cycle lies inside one of them."""
    adj = [set(a) for a in g.adjacency_lists()]
    stack = [v for v in range(len(adj)) if len(adj[v]) < 2]
    gone = set()
    while stack:
        v = stack.pop()
        if v in gone:
            continue
        gone.add(v)
        for w in adj[v]:
            adj[w].discard(v)
            if len(adj[w]) < 2:
                stack.append(w)
        adj[v].clear()
    seen = set(gone)
    out = []
    for s in range(len(adj)):
        if s in seen:
            continue
        comp, todo = [], [s]
        seen.add(s)
        while todo:
            v = todo.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        out.append(sorted(comp))
    return out


def _component_adj(g: BiGraph, comp: list[int]):
    inside = set(comp)
    return [sorted(w for w in a if w in inside) if v in inside else [] for v, a in enumerate(g.adjacency_lists())]


def optimal_cycle_packing(
    g: BiGraph,
    cap: int = DEFAULT_PACKING_CAP,
    heuristic: bool = False,
    rank_cap: int = DEFAULT_RANK_CAP,
) -> CyclePacking:
    """Disjoint cycles covering as many vertices as possible, then as few cycles as possible.

    The optimum splits over the connected components of the 2-core, so each
    is searched on its own.  Exact branch and bound: take the lowest
    undecided vertex that still lies on a feasible cycle, and either put it
    on one of those cycles (shortest first) or declare it uncovered.  A
    component is searched exactly when it has at most ``cap`` vertices or
    cycle rank at most ``rank_cap``; otherwise ``heuristic`` switches the
    whole packing to a greedy one marked uncertified.
    """
    comps = _core_components(g)
    for comp in comps:
        n_edges = sum(len(a) for a in _component_adj(g, comp)) // 2
        rank = n_edges - len(comp) + 1
        if len(comp) > cap and rank > rank_cap:
            if heuristic:
                return greedy_cycle_packing(g)
            raise PackingCapExceeded(
                f"packing cap: a cyclic component has {len(comp)} vertices > {cap} and cycle rank {rank} > {rank_cap}"
            )
    picked = []
    for comp in comps:
        picked += _pack_component(_component_adj(g, comp))
    picked.sort(key=lambda c: (len(c), c))
    return _packing(g, picked)


def _pack_component(adj) -> list[tuple[int, ...]]:
    cycles = enumerate_cycles_adj(adj)
    masks = [sum(1 << v for v in c) for c in cycles]
    through: dict[int, list[int]] = {}
    for k, c in enumerate(cycles):
        for v in c:
            through.setdefault(v, []).append(k)

    best = {"cov": -1, "cnt": 0, "pick": []}
    chosen: list[int] = []

    def rec(blocked: int, cov: int) -> None:
        avail = 0
        for m in masks:
            if not m & blocked:
                avail |= m
        bound = cov + bin(avail).count("1")
        if bound < best["cov"] or (bound == best["cov"] and len(chosen) >= best["cnt"]):
            return
        if not avail:
            best.update(cov=cov, cnt=len(chosen), pick=list(chosen))
            return
        v = (avail & -avail).bit_length() - 1
        for k in through[v]:
            if not masks[k] & blocked:
                chosen.append(k)
                rec(blocked | masks[k], cov + len(cycles[k]))
                chosen.pop()
        rec(blocked | 1 << v, cov)

    rec(0, 0)
    return [cycles[k] for k in best["pick"]]


def greedy_cycle_packing(g: BiGraph) -> CyclePacking:
    """Repeatedly remove a cycle found by depth-first search until the rest is a forest."""
    adj = [set(a) for a in g.adjacency_lists()]
    out = []
    while True:
        cyc = _find_cycle(adj)
        if cyc is None:
            break
        out.append(canonical_cycle(cyc))
        for v in cyc:
            for w in adj[v]:
                adj[w].discard(v)
            adj[v].clear()
    log.info("greedy packing: %d cycles (uncertified)", len(out))
    return _packing(g, out, certified=False)


def _find_cycle(adj) -> list[int] | None:
    state = [0] * len(adj)
    parent = [-1] * len(adj)
    for s in range(len(adj)):
        if state[s]:
            continue
        stack = [(s, iter(sorted(adj[s])))]
        state[s] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if w == parent[v]:
                    continue
                if state[w] == 1:
                    cyc = [v]
                    while cyc[-1] != w:
                        cyc.append(parent[cyc[-1]])
                    return cyc
                if state[w] == 0:
                    state[w] = 1
                    parent[w] = v
                    stack.append((w, iter(sorted(adj[w]))))
                    break
            else:
                state[v] = 2
                stack.pop()
    return None


class Ring:
    """A cycle as a cyclic list of unified ids, with position lookup."""

    def __init__(self, ids):
        self.ids = list(ids)
        self.pos = {v: k for k, v in enumerate(self.ids)}

    def __len__(self) -> int:
        return len(self.ids)

    def __contains__(self, v) -> bool:
        return v in self.pos

    def succ(self, v: int) -> int:
        return self.ids[(self.pos[v] + 1) % len(self.ids)]

    def pred(self, v: int) -> int:
        return self.ids[(self.pos[v] - 1) % len(self.ids)]

    def around(self, start: int, end: int) -> list[int]:
        """All vertices from ``start`` to the cycle-neighbor ``end``, the long way round."""
        n = len(self.ids)
        k = self.pos[start]
        if end == self.pred(start):
            return [self.ids[(k + t) % n] for t in range(n)]
        if end == self.succ(start):
            return [self.ids[(k - t) % n] for t in range(n)]
        raise ValueError(f"{start} and {end} are not consecutive on the cycle")

    def around_from(self, start: int) -> list[int]:
        return self.around(start, self.pred(start))

    def around_to(self, end: int) -> list[int]:
        return self.around(self.succ(end), end)


def rings(g: BiGraph, packing: CyclePacking) -> list[Ring]:
    return [Ring(g.vid(v) for v in c) for c in packing.cycles]
