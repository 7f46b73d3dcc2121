"""Lambda sets, Lambda-deficiency and Lambda-independence.

For S a subset of X, Lambda(S) is the set of Y vertices with at least two
neighbors in S.  ``def(G, S) = |S| - |Lambda(S)|`` and ``def(G)`` is its
maximum over all S.

Both maximizations here are exact.  Ties are broken toward the subset that
contains the smallest element of the symmetric difference, which is the
order an include-first depth-first search meets its leaves in.  That order
is preserved under disjoint unions, so independent pieces of the graph can
be searched separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bigraph import BiGraph, GraphError

DEFAULT_CAP = 30


class InstanceTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class DeficiencyCertificate:
    subset: tuple[int, ...]
    lam: tuple[int, ...]
    value: int

    @property
    def lambda_size(self) -> int:
        return len(self.lam)

    def is_consistent(self, g: BiGraph) -> bool:
        try:
            lam = lambda_set(g, self.subset)
        except GraphError:
            return False
        return (
            len(set(self.subset)) == len(self.subset)
            and tuple(sorted(lam)) == tuple(sorted(self.lam))
            and self.value == len(self.subset) - len(lam)
        )

    def to_json_obj(self) -> dict:
        return {"subset": list(self.subset), "lambda": list(self.lam), "value": self.value}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "DeficiencyCertificate":
        return cls(tuple(obj["subset"]), tuple(obj.get("lambda", ())), int(obj["value"]))


@dataclass(frozen=True)
class LambdaIndependentSet:
    subset: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.subset)

    def as_certificate(self) -> DeficiencyCertificate:
        # Lambda is empty, so the deficiency is the size
        return DeficiencyCertificate(self.subset, (), len(self.subset))


def _check_subset(g: BiGraph, s: Iterable[int]) -> list[int]:
    s = list(s)
    for i in s:
        if not 0 <= i < g.x_count:
            raise GraphError(f"x{i} is not a vertex of X")
    return s


def lambda_set(g: BiGraph, s: Iterable[int]) -> list[int]:
    """Sorted Y indices with at least two neighbors in ``s``."""
    members = set(_check_subset(g, s))
    return [
        j
        for j, nbrs in enumerate(g.adj_y)
        if sum(1 for i in nbrs if i in members) >= 2
    ]


def deficiency_of(g: BiGraph, s: Iterable[int]) -> DeficiencyCertificate:
    subset = tuple(sorted(set(_check_subset(g, s))))
    lam = tuple(lambda_set(g, subset))
    return DeficiencyCertificate(subset, lam, len(subset) - len(lam))


def _x_blocks(g: BiGraph) -> list[list[int]]:
    """Groups of X vertices linked through Y vertices of degree >= 2.

    Lambda never crosses groups, so deficiency and Lambda-independence are
    additive over them.
    """
    parent = list(range(g.x_count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for nbrs in g.adj_y:
        for a, b in zip(nbrs, nbrs[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[int]] = {}
    for i in range(g.x_count):
        blocks.setdefault(find(i), []).append(i)
    return list(blocks.values())


def _max_def_block(g: BiGraph, xs: list[int]) -> tuple[int, list[int]]:
    # local Y vertices that can ever join Lambda
    ys = sorted({j for i in xs for j in g.adj_x[i] if len(g.adj_y[j]) >= 2})
    yloc = {j: t for t, j in enumerate(ys)}
    nbrs = [[yloc[j] for j in g.adj_x[i] if j in yloc] for i in xs]
    n = len(xs)
    cnt = [0] * len(ys)
    chosen: list[int] = []
    best_val = -1
    best: list[int] = []

    def bound(k: int, val: int) -> int:
        free = 0
        used: set[int] = set()
        costly = 0
        for u in range(k, n):
            cost = [y for y in nbrs[u] if cnt[y] == 1]
            if not cost:
                free += 1
                continue
            costly += 1
            for y in cost:
                if y not in used:
                    used.add(y)
                    break
        return val + free + costly - len(used)

    def dfs(k: int, val: int) -> None:
        nonlocal best_val, best
        if k == n:
            if val > best_val:
                best_val, best = val, list(chosen)
            return
        if bound(k, val) <= best_val:
            return
        # include xs[k]
        gained = 0
        for y in nbrs[k]:
            cnt[y] += 1
            if cnt[y] == 2:
                gained += 1
        chosen.append(k)
        dfs(k + 1, val + 1 - gained)
        chosen.pop()
        for y in nbrs[k]:
            cnt[y] -= 1
        dfs(k + 1, val)

    dfs(0, 0)
    return best_val, [xs[k] for k in best]


def max_deficiency(g: BiGraph, cap: int = DEFAULT_CAP) -> DeficiencyCertificate:
    """Exact def(G) with a maximizing subset.

    Branch and bound in X-index order.  The bound adds to the current value
    every undecided vertex, less the Y vertices that already have exactly one
    chosen neighbor and would be forced into Lambda (counted through a greedy
    assignment so that it stays admissible).
    """
    if g.x_count > cap:
        raise InstanceTooLarge(f"instance too large for exact deficiency: |X| = {g.x_count} > {cap}")
    subset: list[int] = []
    for xs in _x_blocks(g):
        _, part = _max_def_block(g, xs)
        subset.extend(part)
    return deficiency_of(g, subset)


def conflict_masks(g: BiGraph) -> list[int]:
    """Bitmask per X vertex of the other X vertices it shares a neighbor with."""
    masks = [0] * g.x_count
    for nbrs in g.adj_y:
        for a in nbrs:
            for b in nbrs:
                if a != b:
                    masks[a] |= 1 << b
    return masks


def _mis(masks: list[int], cand: int) -> int:
    """Maximum independent set among ``cand``; include-first order, lowest index first."""
    best = 0
    best_size = -1

    def rec(cur: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        if not cand:
            if size > best_size:
                best, best_size = cur, size
            return
        if size + bin(cand).count("1") <= best_size:
            return
        v = (cand & -cand).bit_length() - 1
        rec(cur | (1 << v), size + 1, cand & ~(1 << v) & ~masks[v])
        rec(cur, size, cand & ~(1 << v))

    rec(0, 0, cand)
    return best


def alpha_lambda(g: BiGraph, cap: int = DEFAULT_CAP) -> LambdaIndependentSet:
    """Maximum Lambda-independent set: a maximum independent set of the conflict graph."""
    if g.x_count > cap:
        raise InstanceTooLarge(f"instance too large for exact alpha_lambda: |X| = {g.x_count} > {cap}")
    masks = conflict_masks(g)
    found = 0
    for xs in _x_blocks(g):
        found |= _mis(masks, sum(1 << i for i in xs))
    return LambdaIndependentSet(tuple(i for i in range(g.x_count) if found >> i & 1))


def is_lambda_independent(g: BiGraph, s: Iterable[int]) -> bool:
    return not lambda_set(g, s)
