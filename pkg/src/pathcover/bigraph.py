"""(X,Y)-bigraphs: data model, structural queries and serialization.

Vertices are dense integer indices per side.  Solvers that want a single
index space use the *unified id*: X vertex ``i`` is ``i`` and Y vertex ``j``
is ``x_count + j``.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex references."""


class Side(str, Enum):
    X = "X"
    Y = "Y"


class VertexRef(NamedTuple):
    side: Side
    index: int

    @classmethod
    def x(cls, i: int) -> "VertexRef":
        return cls(Side.X, i)

    @classmethod
    def y(cls, j: int) -> "VertexRef":
        return cls(Side.Y, j)

    def __repr__(self) -> str:
        return f"{self.side.value.lower()}{self.index}"


@dataclass(frozen=True)
class BiGraph:
    x_count: int
    y_count: int
    adj_x: tuple[tuple[int, ...], ...]
    adj_y: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj_x) != self.x_count or len(self.adj_y) != self.y_count:
            raise GraphError("adjacency length does not match partite set size")
        for i, nbrs in enumerate(self.adj_x):
            if any(b <= a for a, b in zip(nbrs, nbrs[1:])):
                raise GraphError(f"neighbors of x{i} not strictly sorted")
            for j in nbrs:
                if not 0 <= j < self.y_count:
                    raise GraphError(f"edge (x{i}, y{j}) out of range")
                if i not in self.adj_y[j]:
                    raise GraphError(f"asymmetric adjacency at (x{i}, y{j})")
        for j, nbrs in enumerate(self.adj_y):
            if any(b <= a for a, b in zip(nbrs, nbrs[1:])):
                raise GraphError(f"neighbors of y{j} not strictly sorted")
            for i in nbrs:
                if not 0 <= i < self.x_count or j not in self.adj_x[i]:
                    raise GraphError(f"asymmetric adjacency at (x{i}, y{j})")

    # -- basic queries ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self.x_count + self.y_count

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.adj_x)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nbrs in enumerate(self.adj_x) for j in nbrs]

    def has_edge(self, i: int, j: int) -> bool:
        return 0 <= i < self.x_count and j in self.adj_x[i]

    def neighbors(self, v: VertexRef) -> list[VertexRef]:
        self.check_ref(v)
        if v.side is Side.X:
            return [VertexRef.y(j) for j in self.adj_x[v.index]]
        return [VertexRef.x(i) for i in self.adj_y[v.index]]

    def degree(self, v: VertexRef) -> int:
        self.check_ref(v)
        adj = self.adj_x if v.side is Side.X else self.adj_y
        return len(adj[v.index])

    def adjacent(self, u: VertexRef, v: VertexRef) -> bool:
        if u.side == v.side:
            return False
        if u.side is Side.Y:
            u, v = v, u
        return self.has_edge(u.index, v.index)

    def check_ref(self, v: VertexRef) -> None:
        size = self.x_count if v.side is Side.X else self.y_count
        if not 0 <= v.index < size:
            raise GraphError(f"vertex {v!r} out of range")

    def vertices(self) -> list[VertexRef]:
        return [VertexRef.x(i) for i in range(self.x_count)] + [
            VertexRef.y(j) for j in range(self.y_count)
        ]

    # -- unified ids -----------------------------------------------------

    def vid(self, v: VertexRef) -> int:
        return v.index if v.side is Side.X else self.x_count + v.index

    def ref(self, vid: int) -> VertexRef:
        if vid < self.x_count:
            return VertexRef.x(vid)
        return VertexRef.y(vid - self.x_count)

    def is_x(self, vid: int) -> bool:
        return vid < self.x_count

    def adjacency_lists(self) -> list[list[int]]:
        """Neighbor lists over unified ids."""
        nx_ = self.x_count
        out = [[nx_ + j for j in nbrs] for nbrs in self.adj_x]
        out += [list(nbrs) for nbrs in self.adj_y]
        return out

    # -- derived graphs --------------------------------------------------

    def delete_vertices(
        self, xs: Iterable[int] = (), ys: Iterable[int] = ()
    ) -> tuple["BiGraph", list[int], list[int]]:
        """Return the graph without the given vertices and the new->old index maps."""
        dx, dy = set(xs), set(ys)
        keep_x = [i for i in range(self.x_count) if i not in dx]
        keep_y = [j for j in range(self.y_count) if j not in dy]
        return self.induced(keep_x, keep_y), keep_x, keep_y

    def induced(self, keep_x: Sequence[int], keep_y: Sequence[int]) -> "BiGraph":
        new_x = {old: new for new, old in enumerate(keep_x)}
        new_y = {old: new for new, old in enumerate(keep_y)}
        edges = [
            (new_x[i], new_y[j])
            for i in keep_x
            for j in self.adj_x[i]
            if j in new_y
        ]
        return build(len(keep_x), len(keep_y), edges)

    def disjoint_union(self, other: "BiGraph") -> "BiGraph":
        edges = self.edges() + [
            (i + self.x_count, j + self.y_count) for i, j in other.edges()
        ]
        return build(self.x_count + other.x_count, self.y_count + other.y_count, edges)


def build(x_count: int, y_count: int, edge_list: Iterable[tuple[int, int]]) -> BiGraph:
    """Construct a BiGraph, collapsing duplicate edges."""
    if x_count < 0 or y_count < 0:
        raise GraphError("partite set sizes must be non-negative")
    ax: list[set[int]] = [set() for _ in range(x_count)]
    ay: list[set[int]] = [set() for _ in range(y_count)]
    for pair in edge_list:
        i, j = pair
        if not (0 <= i < x_count and 0 <= j < y_count):
            raise GraphError(f"edge ({i}, {j}) out of range for a {x_count}x{y_count} bigraph")
        ax[i].add(j)
        ay[j].add(i)
    return BiGraph(
        x_count,
        y_count,
        tuple(tuple(sorted(s)) for s in ax),
        tuple(tuple(sorted(s)) for s in ay),
    )


# -- structural queries ------------------------------------------------------


def max_degree(g: BiGraph) -> int:
    return max((len(a) for a in g.adj_x + g.adj_y), default=0)


def is_regular(g: BiGraph) -> int | None:
    """Common degree of every vertex, or None if degrees differ."""
    degs = {len(a) for a in g.adj_x + g.adj_y}
    if not degs:
        return 0
    return degs.pop() if len(degs) == 1 else None


def components(g: BiGraph) -> list[list[int]]:
    """Connected components as sorted lists of unified ids, ordered by smallest id."""
    adj = g.adjacency_lists()
    seen = [False] * g.n_vertices
    comps = []
    for s in range(g.n_vertices):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: BiGraph) -> bool:
    return len(components(g)) <= 1


def cycle_rank(g: BiGraph) -> int:
    """|E| - |V| + #components; zero exactly for forests."""
    return g.n_edges - g.n_vertices + len(components(g))


def girth(g: BiGraph) -> float | int:
    """Length of a shortest cycle, ``math.inf`` for forests.

    Breadth-first search from every vertex; a non-tree edge (u, w) seen from
    root r closes a closed walk of length dist[u] + dist[w] + 1 through r,
    and the minimum over all roots is the girth.
    """
    adj = g.adjacency_lists()
    n = g.n_vertices
    best = math.inf
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- cycles ----------------------------------------------------------------------


def cycle_is_valid(g: BiGraph, cycle: Sequence[VertexRef]) -> bool:
    n = len(cycle)
    if n < 4 or n % 2 or len(set(cycle)) != n:
        return False
    for v in cycle:
        try:
            g.check_ref(v)
        except GraphError:
            return False
    return all(g.adjacent(cycle[k], cycle[(k + 1) % n]) for k in range(n))


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cyclic id sequence to start at its minimum, heading to the smaller neighbor."""
    n = len(cycle)
    k = min(range(n), key=lambda t: cycle[t])
    fwd = [cycle[(k + t) % n] for t in range(n)]
    if n > 2 and fwd[-1] < fwd[1]:
        fwd = [fwd[0]] + fwd[:0:-1]
    return tuple(fwd)


# -- serialization -----------------------------------------------------------


def to_json_obj(g: BiGraph) -> dict:
    return {"x_count": g.x_count, "y_count": g.y_count, "edges": [list(e) for e in g.edges()]}


def from_json_obj(obj: dict) -> BiGraph:
    try:
        nx_, ny_ = int(obj["x_count"]), int(obj["y_count"])
        edges = [(int(a), int(b)) for a, b in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    return build(nx_, ny_, edges)


def dumps(g: BiGraph) -> str:
    return json.dumps(to_json_obj(g), separators=(",", ":"))


def loads(text: str) -> BiGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    return from_json_obj(obj)


def to_edge_list(g: BiGraph) -> str:
    lines = [f"{g.x_count} {g.y_count}"]
    lines += [f"{i} {j}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> BiGraph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("empty edge-list input")
    try:
        nx_, ny_ = (int(t) for t in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from exc
    return build(nx_, ny_, edges)


def parse_graph(text: str) -> BiGraph:
    """Accept either the JSON object format or the plain edge list."""
    if text.lstrip().startswith("{"):
        return loads(text)
    return from_edge_list(text)
