"""Path X-covers of acyclic bigraphs with at most def(G) paths.

The recursion of the forest argument is run as a loop: each round deletes a
few vertices from a working copy and records what to do with the cover and
certificate of the smaller graph; the records are then replayed in reverse.
The working copy keeps original vertex ids, so nothing needs remapping.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from typing import Callable, Sequence

from .bigraph import BiGraph, girth
from .cover import PathXCover
from .deficiency import DeficiencyCertificate, deficiency_of
from .errors import InvariantViolation, PreconditionError

log = logging.getLogger(__name__)

RootChoice = Callable[[Sequence[int]], int]


def lowest_root(xs: Sequence[int]) -> int:
    return min(xs)


def solve_forest(
    g: BiGraph, root_choice: RootChoice = lowest_root
) -> tuple[PathXCover, DeficiencyCertificate]:
    """Cover X by at most def(G, S) paths and return S as the certificate.

    ``root_choice`` picks the root among the X vertices (original indices) of
    the tree being handled; any choice is valid.
    """
    if girth(g) != math.inf:
        raise PreconditionError("solve_forest needs an acyclic graph")
    nx_ = g.x_count
    adj: list[set[int]] = [set(a) for a in g.adjacency_lists()]
    alive_x = set(range(nx_))
    actions: list[tuple] = []

    def delete(v: int) -> None:
        for w in adj[v]:
            adj[w].discard(v)
        adj[v].clear()
        alive_x.discard(v)

    def strip_y_leaves() -> None:
        for v in range(nx_, g.n_vertices):
            if len(adj[v]) == 1:
                delete(v)

    while alive_x:
        strip_y_leaves()
        start = min(alive_x)
        # tree containing the lowest remaining X vertex
        comp, stack, seen = [], [start], {start}
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comp_x = sorted(v for v in comp if v < nx_)
        if len(comp_x) == 1:
            actions.append(("single", comp_x[0]))
            delete(comp_x[0])
            continue

        root = root_choice(comp_x)
        parent = {root: -1}
        depth = {root: 0}
        children: dict[int, list[int]] = {v: [] for v in comp}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if w not in parent:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    children[v].append(w)
                    queue.append(w)
        deepest = max(depth[v] for v in comp_x)
        x = min(v for v in comp_x if depth[v] == deepest)
        y = parent[x]

        if len(children[y]) >= 2:
            actions.append(_case1(y, children[y]))
            for v in children[y] + [y]:
                delete(v)
            continue

        x_star = parent[y]
        if len(adj[x_star]) <= 2:
            actions.append(("2a", x_star, y, x))
            delete(x)
            delete(y)
            continue

        ys = children[x_star]
        crowded = [yi for yi in ys if len(children[yi]) >= 2]
        if crowded:
            # another child of x* has several leaf children: handle it as Case 1
            yi = min(crowded)
            actions.append(_case1(yi, children[yi]))
            for v in children[yi] + [yi]:
                delete(v)
            continue
        x1 = min(children[yi][0] for yi in ys if yi != y)
        actions.append(("2b", x_star, x1, x))
        delete(x)
        delete(y)

    paths: list[list[int]] = []
    where: dict[int, int] = {}
    subset: set[int] = set()
    for act in reversed(actions):
        kind = act[0]
        if kind == "single":
            where[act[1]] = len(paths)
            paths.append([act[1]])
            subset.add(act[1])
        elif kind == "1":
            _, y, kids = act
            where.update({kids[0]: len(paths), kids[1]: len(paths)})
            paths.append([kids[0], y, kids[1]])
            for k in kids[2:]:
                where[k] = len(paths)
                paths.append([k])
            subset.update(kids)
        elif kind == "2a":
            _, x_star, y, x = act
            k = where[x_star]
            p = paths[k]
            if p[-1] != x_star:
                p.reverse()
            if p[-1] != x_star:
                raise InvariantViolation(f"x{x_star} is not an endpoint of its path")
            p += [y, x]
            where[x] = k
        else:
            _, x_star, x1, xk = act
            if x_star in subset:
                if x1 not in subset:
                    subset.add(x1)
                subset.discard(x_star)
            where[xk] = len(paths)
            paths.append([xk])
            subset.add(xk)
        log.debug("forest step %s -> %d paths", act, len(paths))

    cover = PathXCover(tuple(tuple(g.ref(v) for v in p) for p in paths))
    return cover, deficiency_of(g, subset)


def _case1(y: int, kids: list[int]) -> tuple:
    return ("1", y, sorted(kids))
