"""Hypergraphs and their incidence bigraphs: Berge paths and strong independence."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .bigraph import BiGraph, GraphError, Side, build
from .cover import PathXCover, trim_y_ends
from .deficiency import DEFAULT_CAP, LambdaIndependentSet, alpha_lambda


@dataclass(frozen=True)
class Hypergraph:
    vertex_count: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        seen = set()
        for k, e in enumerate(self.edges):
            if not e:
                raise GraphError(f"edge {k} is empty")
            if any(not 0 <= v < self.vertex_count for v in e):
                raise GraphError(f"edge {k} = {sorted(e)} leaves the vertex range")
            if e in seen:
                raise GraphError(f"edge {k} = {sorted(e)} is a duplicate")
            seen.add(e)

    @classmethod
    def of(cls, vertex_count: int, edges) -> "Hypergraph":
        return cls(vertex_count, tuple(frozenset(e) for e in edges))

    def to_json_obj(self) -> dict:
        return {"vertex_count": self.vertex_count, "edges": [sorted(e) for e in self.edges]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Hypergraph":
        try:
            return cls.of(int(obj["vertex_count"]), [[int(v) for v in e] for e in obj["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"malformed hypergraph JSON: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


@dataclass(frozen=True)
class BergePath:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]  # edges[i] joins vertices[i] and vertices[i + 1]

    def is_valid(self, h: Hypergraph) -> bool:
        if len(self.edges) != len(self.vertices) - 1 or not self.vertices:
            return False
        if len(set(self.vertices)) != len(self.vertices) or len(set(self.edges)) != len(self.edges):
            return False
        return all(
            0 <= e < len(h.edges) and {a, b} <= h.edges[e]
            for a, b, e in zip(self.vertices, self.vertices[1:], self.edges)
        )

    def sequence(self) -> list:
        out: list = [self.vertices[0]]
        for e, v in zip(self.edges, self.vertices[1:]):
            out += [e, v]
        return out


def incidence_graph(h: Hypergraph) -> BiGraph:
    return build(h.vertex_count, len(h.edges), [(v, k) for k, e in enumerate(h.edges) for v in e])


def to_berge_cover(h: Hypergraph, c: PathXCover) -> list[BergePath]:
    out = []
    for p in c.paths:
        p = trim_y_ends(p)
        if not p:
            continue
        vs = tuple(v.index for v in p if v.side is Side.X)
        es = tuple(v.index for v in p if v.side is Side.Y)
        bp = BergePath(vs, es)
        if not bp.is_valid(h):
            raise GraphError(f"path {p} is not a Berge path of the hypergraph")
        out.append(bp)
    return out


def berge_cover_ok(h: Hypergraph, paths: list[BergePath]) -> bool:
    vs = [v for p in paths for v in p.vertices]
    es = [e for p in paths for e in p.edges]
    return (
        all(p.is_valid(h) for p in paths)
        and len(vs) == len(set(vs)) == h.vertex_count
        and len(es) == len(set(es))
    )


def is_strongly_independent(h: Hypergraph, s) -> bool:
    s = set(s)
    return all(len(e & s) <= 1 for e in h.edges)


def strong_independence(h: Hypergraph, cap: int = DEFAULT_CAP) -> LambdaIndependentSet:
    best = alpha_lambda(incidence_graph(h), cap)
    if not is_strongly_independent(h, best.subset):
        raise AssertionError("Lambda-independent set is not strongly independent")
    return best


def subhypergraph(h: Hypergraph, s) -> Hypergraph:
    """Hypergraph on ``s`` (relabelled 0.. in sorted order) with edges e & s, deduplicated."""
    s = sorted(set(s))
    if any(not 0 <= v < h.vertex_count for v in s):
        raise GraphError(f"vertex set {s} leaves the range 0..{h.vertex_count - 1}")
    index = {v: k for k, v in enumerate(s)}
    edges: list[frozenset[int]] = []
    for e in h.edges:
        r = frozenset(index[v] for v in e if v in index)
        if r and r not in edges:
            edges.append(r)
    return Hypergraph(len(s), tuple(edges))


def restricted_incidence_graph(h: Hypergraph, s) -> BiGraph:
    """Incidence graph of h with the X vertices outside ``s`` deleted.

    This keeps one Y vertex per original edge, so edges that restrict to
    the same set stay separate (the multiset reading of restriction).
    """
    s = sorted(set(s))
    if any(not 0 <= v < h.vertex_count for v in s):
        raise GraphError(f"vertex set {s} leaves the range 0..{h.vertex_count - 1}")
    keep = set(s)
    g, _, _ = incidence_graph(h).delete_vertices([v for v in range(h.vertex_count) if v not in keep], [])
    return g


def fano() -> Hypergraph:
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    return Hypergraph.of(7, lines)


def random_hypergraph(n: int, m: int, seed: int, max_size: int | None = None) -> Hypergraph:
    """Up to ``m`` distinct random non-empty edges on ``n`` vertices."""
    rng = random.Random(seed)
    max_size = max_size or n
    edges: list[frozenset[int]] = []
    for _ in range(m):
        if n == 0:
            break
        e = frozenset(rng.sample(range(n), rng.randint(1, min(max_size, n))))
        if e not in edges:
            edges.append(e)
    return Hypergraph(n, tuple(edges))
