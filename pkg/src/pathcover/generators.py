"""Instance generators: named fixtures, parametric families and seeded random graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .bigraph import BiGraph, GraphError, build, is_connected, max_degree


class GenerationError(RuntimeError):
    pass


# -- named fixtures ------------------------------------------------------------


def p3() -> BiGraph:
    return build(2, 1, [(0, 0), (1, 0)])


def cycle(length: int) -> BiGraph:
    """Single cycle on ``length`` vertices; x_i ~ y_i and x_i ~ y_(i-1 mod m)."""
    if length < 4 or length % 2:
        raise GraphError("a bipartite cycle needs even length >= 4")
    m = length // 2
    return build(m, m, [(i, i) for i in range(m)] + [(i, (i - 1) % m) for i in range(m)])


def c6() -> BiGraph:
    return cycle(6)


def star3() -> BiGraph:
    return build(3, 1, [(0, 0), (1, 0), (2, 0)])


def caterpillar() -> BiGraph:
    # x1 - y1 - x* - y2 - x2 with x1, x*, x2 = x0, x1, x2
    return build(3, 2, [(0, 0), (1, 0), (1, 1), (2, 1)])


def complete(a: int, b: int) -> BiGraph:
    return build(a, b, product(range(a), range(b)))


def k23() -> BiGraph:
    return complete(2, 3)


def k33() -> BiGraph:
    return complete(3, 3)


def hypercube(dim: int) -> BiGraph:
    """Q_dim with even-weight words in X and odd-weight words in Y."""
    words = range(1 << dim)
    even = [w for w in words if bin(w).count("1") % 2 == 0]
    odd = [w for w in words if bin(w).count("1") % 2 == 1]
    xi = {w: k for k, w in enumerate(even)}
    yi = {w: k for k, w in enumerate(odd)}
    edges = [(xi[w], yi[w ^ (1 << b)]) for w in even for b in range(dim)]
    return build(len(even), len(odd), edges)


def q3() -> BiGraph:
    return hypercube(3)


def c6_pendant() -> BiGraph:
    g = c6()
    return build(4, 3, g.edges() + [(3, 0)])


def disjoint_cycles(lengths) -> BiGraph:
    g = build(0, 0, [])
    for m in lengths:
        g = g.disjoint_union(cycle(m))
    return g


def linked_cycles(lengths, links) -> BiGraph:
    """Disjoint cycles plus one new Y vertex per link.

    A link ``(a, i, b, j)`` joins the i-th X vertex of cycle a to the j-th X
    vertex of cycle b through a fresh Y vertex of degree 2.
    """
    base = disjoint_cycles(lengths)
    offset = [0]
    for m in lengths:
        offset.append(offset[-1] + m // 2)
    edges = list(base.edges())
    for t, (a, i, b, j) in enumerate(links):
        y = base.y_count + t
        edges += [(offset[a] + i, y), (offset[b] + j, y)]
    return build(base.x_count, base.y_count + len(links), edges)


def two_c50_linked() -> BiGraph:
    return linked_cycles([50, 50], [(0, 0, 1, 0)])


def fam(n: int, k: int) -> BiGraph:
    """x_i y_j is an edge iff i <= k or j <= k (1-based)."""
    if not 1 <= k <= n:
        raise GraphError("FAM(n, k) needs 1 <= k <= n")
    edges = [
        (i - 1, j - 1)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i <= k or j <= k
    ]
    return build(n, n, edges)


def fano_incidence() -> BiGraph:
    from .hypergraph import fano, incidence_graph

    return incidence_graph(fano())


NAMED = {
    "p3": p3,
    "c6": c6,
    "star3": star3,
    "caterpillar": caterpillar,
    "k23": k23,
    "k33": k33,
    "q3": q3,
    "c6_pendant": c6_pendant,
    "c50": lambda: cycle(50),
    "two_c50": lambda: disjoint_cycles([50, 50]),
    "two_c50_linked": two_c50_linked,
}


# -- random families -------------------------------------------------------------


def random_regular(n: int, d: int, seed: int, max_tries: int = 1000) -> BiGraph:
    """Uniform-ish simple d-regular bigraph with |X| = |Y| = n (bipartite configuration model)."""
    if n < 1 or d < 0 or d > n:
        raise GraphError(f"no simple {d}-regular bigraph with {n} vertices per side")
    rng = random.Random(seed)
    stubs = [i for i in range(n) for _ in range(d)]
    for _ in range(max_tries):
        ys = [j for j in range(n) for _ in range(d)]
        rng.shuffle(ys)
        pairs = list(zip(stubs, ys))
        if len(set(pairs)) == len(pairs):
            return build(n, n, pairs)
    raise GenerationError(f"no simple {d}-regular bigraph found after {max_tries} tries")


def cubic_from_squares(m: int, seed: int, max_tries: int = 1000) -> BiGraph:
    """3-regular bigraph made of m disjoint 4-cycles plus a random perfect matching.

    Its 2-factors tend to have many short cycles, which is what the cycle
    merging needs to be exercised.
    """
    rng = random.Random(seed)
    base = {(a, b) for c in range(m) for a in (2 * c, 2 * c + 1) for b in (2 * c, 2 * c + 1)}
    ys = list(range(2 * m))
    for _ in range(max_tries):
        rng.shuffle(ys)
        extra = set(zip(range(2 * m), ys))
        if not extra & base:
            return build(2 * m, 2 * m, base | extra)
    raise GenerationError(f"no matching avoiding the squares after {max_tries} tries")


def sparse_squares(m: int, extra_x: int, extra_y: int, p: float, seed: int) -> BiGraph:
    """m disjoint 4-cycles plus extra vertices, with random extra edges kept at degree <= 3."""
    rng = random.Random(seed)
    nx_, ny_ = 2 * m + extra_x, 2 * m + extra_y
    edges = {(a, b) for c in range(m) for a in (2 * c, 2 * c + 1) for b in (2 * c, 2 * c + 1)}
    dx, dy = [0] * nx_, [0] * ny_
    for a, b in edges:
        dx[a] += 1
        dy[b] += 1
    pairs = [(i, j) for i in range(nx_) for j in range(ny_) if (i, j) not in edges]
    rng.shuffle(pairs)
    for i, j in pairs:
        if dx[i] < 3 and dy[j] < 3 and rng.random() < p:
            edges.add((i, j))
            dx[i] += 1
            dy[j] += 1
    return build(nx_, ny_, edges)


def random_forest(n: int, seed: int, p_new_tree: float = 0.1) -> BiGraph:
    """Random forest on n vertices; sides are assigned by depth parity."""
    if n < 1:
        raise GraphError("forest needs at least one vertex")
    rng = random.Random(seed)
    parent = [-1] * n
    side = [0] * n
    for v in range(n):
        if v == 0 or rng.random() < p_new_tree:
            side[v] = rng.randrange(2)
        else:
            parent[v] = rng.randrange(v)
            side[v] = 1 - side[parent[v]]
    xs = [v for v in range(n) if side[v] == 0]
    ys = [v for v in range(n) if side[v] == 1]
    xi = {v: k for k, v in enumerate(xs)}
    yi = {v: k for k, v in enumerate(ys)}
    edges = []
    for v in range(n):
        u = parent[v]
        if u >= 0:
            a, b = (u, v) if side[u] == 0 else (v, u)
            edges.append((xi[a], yi[b]))
    return build(len(xs), len(ys), edges)


def random_bigraph(nx: int, ny: int, p: float, seed: int) -> BiGraph:
    rng = random.Random(seed)
    return build(nx, ny, [(i, j) for i in range(nx) for j in range(ny) if rng.random() < p])


def random_max_degree(nx: int, ny: int, max_deg: int, seed: int, density: float = 0.8) -> BiGraph:
    """Random bigraph with every degree <= max_deg.

    Edges are proposed in random order and kept while both endpoints have
    spare degree; ``density`` is the fraction of proposals attempted.
    """
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(nx) for j in range(ny)]
    rng.shuffle(pairs)
    pairs = pairs[: int(round(density * len(pairs)))]
    dx, dy = [0] * nx, [0] * ny
    edges = []
    for i, j in pairs:
        if dx[i] < max_deg and dy[j] < max_deg:
            edges.append((i, j))
            dx[i] += 1
            dy[j] += 1
    return build(nx, ny, edges)


@dataclass(frozen=True)
class Family:
    """Parameter record for :func:`generate`.

    kind is one of ``fam``, ``cycle``, ``regular``, ``squares``, ``forest``,
    ``random``, ``maxdeg`` or a named fixture; unused parameters are ignored.
    """

    kind: str
    n: int = 0
    k: int = 0
    d: int = 0
    nx: int = 0
    ny: int = 0
    p: float = 0.5
    seed: int = 0


def generate(family: Family) -> BiGraph:
    kind = family.kind
    if kind == "fam":
        return fam(family.n, family.k)
    if kind == "cycle":
        return cycle(family.n)
    if kind == "regular":
        return random_regular(family.n, family.d, family.seed)
    if kind == "squares":
        return cubic_from_squares(family.n, family.seed)
    if kind == "forest":
        return random_forest(family.n, family.seed)
    if kind == "random":
        return random_bigraph(family.nx, family.ny, family.p, family.seed)
    if kind == "maxdeg":
        return random_max_degree(family.nx, family.ny, family.d, family.seed)
    if kind in NAMED:
        return NAMED[kind]()
    raise GraphError(f"unknown family {kind!r}")


# -- exhaustive enumeration --------------------------------------------------------


def all_bigraphs(nx: int, ny: int):
    """Every labelled bigraph with the given side sizes (2^(nx*ny) of them)."""
    cells = [(i, j) for i in range(nx) for j in range(ny)]
    for mask in range(1 << len(cells)):
        yield build(nx, ny, [c for b, c in enumerate(cells) if mask >> b & 1])


def connected_bigraphs(max_vertices: int, max_deg: int | None = None) -> list[BiGraph]:
    """All connected bigraphs with 1..max_vertices vertices, one per isomorphism class.

    Isomorphism respects the ordered bipartition.  Built vertex by vertex:
    every connected graph has a vertex whose removal keeps it connected, so
    each class on n vertices arises from a class on n - 1 vertices.
    """
    import networkx as nx_

    def to_nx(g: BiGraph):
        h = nx_.Graph()
        h.add_nodes_from((("x", i), {"side": "X"}) for i in range(g.x_count))
        h.add_nodes_from((("y", j), {"side": "Y"}) for j in range(g.y_count))
        h.add_edges_from((("x", i), ("y", j)) for i, j in g.edges())
        return h

    match = lambda a, b: a["side"] == b["side"]  # noqa: E731
    level = [build(1, 0, []), build(0, 1, [])]
    out = list(level)
    for _ in range(2, max_vertices + 1):
        buckets: dict[str, list] = {}
        nxt = []
        for g in level:
            for add_x in (True, False):
                others = g.y_count if add_x else g.x_count
                own = g.adj_y if add_x else g.adj_x
                cap = max_deg if max_deg is not None else others
                for r in range(1, min(cap, others) + 1):
                    for nbrs in combinations(range(others), r):
                        if max_deg is not None and any(len(own[t]) >= max_deg for t in nbrs):
                            continue
                        if add_x:
                            h = build(g.x_count + 1, g.y_count, g.edges() + [(g.x_count, t) for t in nbrs])
                        else:
                            h = build(g.x_count, g.y_count + 1, g.edges() + [(t, g.y_count) for t in nbrs])
                        hn = to_nx(h)
                        key = nx_.weisfeiler_lehman_graph_hash(hn, node_attr="side")
                        key = f"{h.x_count}:{h.y_count}:{h.n_edges}:{key}"
                        bucket = buckets.setdefault(key, [])
                        if any(nx_.is_isomorphic(hn, other, node_match=match) for other in bucket):
                            continue
                        bucket.append(hn)
                        nxt.append(h)
        level = nxt
        out.extend(level)
    assert all(is_connected(g) for g in out)
    assert max_deg is None or all(max_degree(g) <= max_deg for g in out)
    return out


def trees(max_vertices: int):
    """Every tree with 1..max_vertices vertices up to isomorphism, once per choice of X side."""
    import networkx as nx_

    yield build(1, 0, [])
    yield build(0, 1, [])
    for n in range(2, max_vertices + 1):
        for t in nx_.nonisomorphic_trees(n):
            color = nx_.bipartite.color(t)
            for x_color in (0, 1):
                xs = sorted(v for v in t if color[v] == x_color)
                ys = sorted(v for v in t if color[v] != x_color)
                xi = {v: k for k, v in enumerate(xs)}
                yi = {v: k for k, v in enumerate(ys)}
                edges = [(xi[a], yi[b]) if a in xi else (xi[b], yi[a]) for a, b in t.edges()]
                yield build(len(xs), len(ys), edges)
