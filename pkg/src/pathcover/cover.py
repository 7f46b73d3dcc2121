"""Paths, path X-covers, verification and the exhaustive minimum-cover oracle."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .bigraph import BiGraph, GraphError, Side, VertexRef
from .deficiency import DeficiencyCertificate

Path = tuple[VertexRef, ...]

DEFAULT_ORACLE_CAP = 18


class OracleCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PathXCover:
    paths: tuple[Path, ...]

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    @classmethod
    def of(cls, paths) -> "PathXCover":
        return cls(tuple(tuple(VertexRef(Side(s), int(i)) for s, i in p) for p in paths))

    def vertex_count(self) -> int:
        return sum(len(p) for p in self.paths)

    def to_json_obj(self) -> dict:
        return {"paths": [[[v.side.value, v.index] for v in p] for p in self.paths]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PathXCover":
        try:
            return cls.of(obj["paths"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed cover JSON: {exc}") from exc


@dataclass
class Verdict:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "Valid" if self.ok else "; ".join(self.violations)


def path_violations(g: BiGraph, path: Sequence[VertexRef], label: str = "path") -> list[str]:
    out = []
    if not path:
        return [f"{label} is empty"]
    for v in path:
        try:
            g.check_ref(v)
        except GraphError as exc:
            out.append(f"{label}: {exc}")
    if out:
        return out
    if len(set(path)) != len(path):
        out.append(f"{label} repeats a vertex")
    for a, b in zip(path, path[1:]):
        if not g.adjacent(a, b):
            out.append(f"{label}: {a!r} and {b!r} are not adjacent")
    return out


def verify_cover(g: BiGraph, cover: PathXCover | Sequence[Path]) -> Verdict:
    paths = cover.paths if isinstance(cover, PathXCover) else tuple(cover)
    verdict = Verdict()
    owner: dict[VertexRef, int] = {}
    for k, p in enumerate(paths):
        verdict.violations += path_violations(g, p, f"path {k}")
        for v in p:
            if v in owner and owner[v] != k:
                verdict.violations.append(f"vertex {v!r} repeated across paths {owner[v]} and {k}")
            owner.setdefault(v, k)
    for i in range(g.x_count):
        if VertexRef.x(i) not in owner:
            verdict.violations.append(f"x{i} uncovered")
    return verdict


def certify(g: BiGraph, cover: PathXCover, cert: DeficiencyCertificate) -> Verdict:
    verdict = verify_cover(g, cover)
    if not cert.is_consistent(g):
        verdict.violations.append("certificate is inconsistent with the graph")
    if len(cover) > cert.value:
        verdict.violations.append(f"cover has {len(cover)} paths > certificate value {cert.value}")
    return verdict


def trim_y_ends(path: Sequence[VertexRef]) -> Path:
    """Drop Y endpoints; they cover nothing in X.  A path with no X vertex becomes empty."""
    p = list(path)
    while p and p[0].side is Side.Y:
        p.pop(0)
    while p and p[-1].side is Side.Y:
        p.pop()
    return tuple(p)


def min_cover_oracle(g: BiGraph, cap: int = DEFAULT_ORACLE_CAP) -> tuple[int, PathXCover]:
    """Exact minimum number of paths in a path X-cover, with a witness.

    Paths are grown one at a time, always starting at an X vertex and only
    ever stepping X -> Y -> X, so every path begins and ends in X (a Y
    endpoint never helps).  A state is (covered X mask, used Y mask, open
    endpoint); stepping costs nothing and opening a path costs one, and a
    0-1 breadth-first search returns the cheapest state covering all of X.
    The next path must contain the lowest uncovered X vertex at the time it
    is opened, which fixes the order of the paths.
    """
    n = g.n_vertices
    if n > cap:
        raise OracleCapExceeded(f"oracle cap: |X|+|Y| = {n} > {cap}")
    nx_ = g.x_count
    if nx_ == 0:
        return 0, PathXCover(())
    full = (1 << nx_) - 1
    adj_x = g.adj_x
    adj_y = g.adj_y

    # state: (covered, used_y, end, target); target is the X vertex the open
    # path has promised to cover, -1 once it is covered
    start_states = []
    dist: dict[tuple, int] = {}
    parent: dict[tuple, tuple | None] = {}
    dq: deque = deque()

    def push(state, d, prev, front):
        if state in dist and dist[state] <= d:
            return
        dist[state] = d
        parent[state] = prev
        (dq.appendleft if front else dq.append)((d, state))

    def open_paths(covered, used, d, prev):
        low = (~covered & full & -(~covered & full)).bit_length() - 1
        for a in range(nx_):
            if not covered >> a & 1:
                target = -1 if a == low else low
                push((covered | 1 << a, used, a, target), d + 1, prev, False)

    open_paths(0, 0, 0, None)
    goal = None
    while dq:
        d, state = dq.popleft()
        if dist.get(state) != d:
            continue
        covered, used, end, target = state
        if covered == full and target == -1:
            goal = state
            break
        # extend the open path end -> y -> x
        for y in adj_x[end]:
            if used >> y & 1:
                continue
            for x in adj_y[y]:
                if covered >> x & 1:
                    continue
                t = -1 if x == target else target
                push((covered | 1 << x, used | 1 << y, x, t), d, state, True)
        if target == -1:
            open_paths(covered, used, d, state)
    assert goal is not None

    # walk back, splitting into paths at every open step
    chain = []
    s = goal
    while s is not None:
        chain.append(s)
        s = parent[s]
    chain.reverse()
    paths: list[list[VertexRef]] = []
    prev = None
    for s in chain:
        covered, used, end, _ = s
        if prev is None or dist[s] != dist[prev]:
            paths.append([VertexRef.x(end)])
        else:
            y = (used & ~prev[1]).bit_length() - 1
            paths[-1] += [VertexRef.y(y), VertexRef.x(end)]
        prev = s
    return dist[goal], PathXCover(tuple(tuple(p) for p in paths))


def dumps_cover(cover: PathXCover) -> str:
    return json.dumps(cover.to_json_obj(), separators=(",", ":"))
