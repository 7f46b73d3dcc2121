"""Bigraphs of maximum degree 3: a path X-cover with at most def(G) paths.

Pipeline:

1. an optimal cycle packing; the uncovered part F is a forest;
2. a processing phase that gives each cycle C a designated vertex x(C),
   with cycle-neighbors y+(C), y-(C), and sorts it into good, bad or ugly;
3. the auxiliary forest F*: F plus x(C) and an artificial y*(C) per bad C,
   covered by the forest solver;
4. stitching: one new path per good cycle (absorbing its ugly cycles), and
   rewriting the F* paths through x(C) / y*(C) into paths of G that cover
   each bad cycle and its ugly cycles.

The certificate is S' (from the forest solver) plus x(C) for the good
cycles.  def(G, S') can fall one short of def(F*, S') for a bad cycle whose
x(C), and the F-neighbors of both y+(C) and y-(C), are all in S': y*(C)
counts once in F* but y+(C) and y-(C) both count in G.  Dropping such an
x(C) from S' restores the bound, so that repair is applied and reported.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from .bigraph import BiGraph, build, girth, max_degree
from .cover import PathXCover, path_violations
from .cycles import CyclePacking, Ring, optimal_cycle_packing, rings, DEFAULT_PACKING_CAP
from .deficiency import DeficiencyCertificate, deficiency_of
from .errors import InvariantViolation, PreconditionError
from .forest import solve_forest

log = logging.getLogger(__name__)

GOOD, BAD, UGLY = "good", "bad", "ugly"


@dataclass
class CycleState:
    cls: str
    x: int
    y_plus: int
    y_minus: int
    host: int | None = None  # ugly: the cycle D it attaches to
    port: int | None = None  # ugly: endpoint u of e(C) on D
    near: int | None = None  # ugly: endpoint of e(C) on C


@dataclass
class FStar:
    graph: BiGraph
    x_orig: list[int]  # F* X index -> unified id in G
    y_orig: list[int]  # F* Y index -> unified id in G, or -(c+1) for y*(C)
    collapsed: int = 0  # parallel y*-edges merged (y+ and y- share an F-neighbor)


@dataclass
class Maxdeg3Result:
    cover: PathXCover
    cert: DeficiencyCertificate
    packing: CyclePacking
    states: dict[int, CycleState]
    fstar: FStar
    forest_paths: int
    s_prime: tuple[int, ...]  # as returned by the forest solver, ids of G
    def_fstar: int  # def(F*, S')
    def_g_s_prime: int  # def(G, S') before repair
    dropped: tuple[int, ...]  # x(C) removed from S' by the repair
    additivity_holds: bool
    trace: list[str] = field(default_factory=list)
    branches: list[str] = field(default_factory=list)  # stitching case taken per good/bad cycle

    @property
    def good(self) -> list[int]:
        return [c for c, s in self.states.items() if s.cls == GOOD]

    @property
    def identity_holds(self) -> bool:
        return self.def_g_s_prime == self.def_fstar


def solve_maxdeg3(g: BiGraph, **kw) -> tuple[PathXCover, DeficiencyCertificate]:
    res = run_maxdeg3(g, **kw)
    return res.cover, res.cert


def run_maxdeg3(
    g: BiGraph,
    packing_cap: int = DEFAULT_PACKING_CAP,
    heuristic: bool = False,
    trace: bool = False,
) -> Maxdeg3Result:
    if max_degree(g) > 3:
        raise PreconditionError("solve_maxdeg3 needs maximum degree at most 3")
    adj = g.adjacency_lists()
    nx_ = g.x_count
    packing = optimal_cycle_packing(g, packing_cap, heuristic)
    cyc = rings(g, packing)
    cycle_of = {v: k for k, r in enumerate(cyc) for v in r.ids}
    in_f = [v not in cycle_of for v in range(g.n_vertices)]
    lines: list[str] = []

    def note(msg: str) -> None:
        lines.append(msg)
        if trace:
            log.info(msg)

    states = _process(g, adj, cyc, cycle_of, in_f, note)
    fstar = _build_fstar(g, adj, cyc, states, in_f)
    if girth(fstar.graph) != math.inf:
        raise InvariantViolation("auxiliary graph F* has a cycle")

    fcover, fcert = solve_forest(fstar.graph)
    paths = []
    for p in fcover.paths:
        toks = [fstar.x_orig[v.index] if v.side.value == "X" else fstar.y_orig[v.index] for v in p]
        while toks and not _is_x_token(toks[0], nx_):
            toks.pop(0)
        while toks and not _is_x_token(toks[-1], nx_):
            toks.pop()
        paths.append(toks)
    n_forest = len(paths)

    uglies: dict[int, dict[int, int]] = {}
    for c, st in states.items():
        if st.cls == UGLY:
            ports = uglies.setdefault(st.host, {})
            if st.port in ports:
                raise InvariantViolation(f"two ugly cycles attach to cycle {st.host} at {st.port}")
            ports[st.port] = c

    branches = []
    for c in sorted(states):
        if states[c].cls == BAD:
            branches.append(_rewrite_bad(g, c, cyc, states, uglies.get(c, {}), paths))
    for p in paths:
        if any(t < 0 for t in p):
            raise InvariantViolation("an artificial y* vertex survived stitching")
    good = [c for c in sorted(states) if states[c].cls == GOOD]
    for c in good:
        paths.append(_good_path(c, cyc, states, uglies.get(c, {})))
        branches.append(f"good-{len(uglies.get(c, {}))}")
    if len(paths) != n_forest + len(good):
        raise InvariantViolation("path count is not |P'| + #good")

    cover = PathXCover(tuple(tuple(g.ref(v) for v in p) for p in paths))
    for k, p in enumerate(cover.paths):
        bad = path_violations(g, p, f"path {k}")
        if bad:
            raise InvariantViolation("; ".join(bad))

    s_prime = tuple(sorted(fstar.x_orig[i] for i in fcert.subset))
    def_fstar = fcert.value
    def_g_sp = deficiency_of(g, s_prime).value
    kept = set(s_prime)
    dropped = []
    for c in sorted(states):
        x = states[c].x
        if states[c].cls == BAD and x in kept:
            if deficiency_of(g, kept - {x}).value > deficiency_of(g, kept).value:
                kept.discard(x)
                dropped.append(x)
    good_x = {states[c].x for c in good}
    cert = deficiency_of(g, kept | good_x)
    additive = cert.value == deficiency_of(g, kept).value + len(good)
    if not additive:
        raise InvariantViolation("good designated vertices are not Lambda-separated from S'")
    if deficiency_of(g, kept).value < def_fstar:
        raise InvariantViolation(
            f"def(G, S') = {deficiency_of(g, kept).value} < def(F*, S') = {def_fstar} after repair"
        )
    if len(cover) > cert.value:
        raise InvariantViolation(f"{len(cover)} paths exceed certificate value {cert.value}")
    note(
        f"|P'|={n_forest} good={len(good)} def(F*,S')={def_fstar} def(G,S')={def_g_sp} "
        f"dropped={dropped} cert={cert.value}"
    )
    return Maxdeg3Result(
        cover, cert, packing, states, fstar, n_forest, s_prime, def_fstar, def_g_sp,
        tuple(dropped), additive, lines, branches,
    )


def _is_x_token(t: int, nx_: int) -> bool:
    return 0 <= t < nx_


def _external(ring: Ring, v: int, adj) -> list[int]:
    return [w for w in adj[v] if w != ring.succ(v) and w != ring.pred(v)]


def _process(g, adj, cyc, cycle_of, in_f, note) -> dict[int, CycleState]:
    states: dict[int, CycleState] = {}
    pending: tuple[int, int] | None = None

    def dse_from(v: int, ring: Ring) -> tuple[int, int] | None:
        for w in _external(ring, v, adj):
            if w in cycle_of and cycle_of[w] not in states:
                return cycle_of[w], w
        return None

    while len(states) < len(cyc):
        forbidden = None
        if pending is not None:
            c, forbidden = pending
            pending = None
            if c in states:
                raise InvariantViolation("Do Something Else names a processed cycle")
        else:
            c = min(k for k in range(len(cyc)) if k not in states)
        ring = cyc[c]
        xs = sorted(v for v in ring.ids if v < g.x_count and v != forbidden)
        if not xs:
            raise InvariantViolation(f"cycle {c} has no admissible designated vertex")
        x = xs[0]
        st = CycleState(GOOD, x, ring.succ(x), ring.pred(x))
        states[c] = st  # processed from here on

        # Case 1: attach to an earlier good or bad cycle
        for d in sorted(states):
            dst = states[d]
            if d == c or dst.cls == UGLY:
                continue
            options = [
                (x, dst.y_plus, dst.y_plus, x),
                (x, dst.y_minus, dst.y_minus, x),
                (st.y_plus, dst.x, dst.x, st.y_plus),
                (st.y_minus, dst.x, dst.x, st.y_minus),
            ]
            hit = next((o for o in options if o[1] in adj[o[0]]), None)
            if hit is None:
                continue
            st.cls, st.host, st.port, st.near = UGLY, d, hit[2], hit[3]
            if hit[2] in (dst.y_plus, dst.y_minus):
                other = dst.y_minus if hit[2] == dst.y_plus else dst.y_plus
                pending = dse_from(other, cyc[d])
            break
        else:
            # Case 2: x(C), y+(C) or y-(C) sees the forest
            f_plus = any(in_f[w] for w in adj[st.y_plus])
            f_minus = any(in_f[w] for w in adj[st.y_minus])
            if f_plus or f_minus or any(in_f[w] for w in adj[x]):
                st.cls = BAD
                if f_plus and not f_minus:
                    pending = dse_from(st.y_minus, ring)
                elif f_minus and not f_plus:
                    pending = dse_from(st.y_plus, ring)
        note(
            f"cycle {c}: x(C)={x} y+={st.y_plus} y-={st.y_minus} class={st.cls}"
            + (f" attaches to {st.host} at {st.port}" if st.cls == UGLY else "")
            + (f" dse={pending}" if pending else "")
        )
    return states


def _build_fstar(g, adj, cyc, states, in_f) -> FStar:
    nx_ = g.x_count
    bad = [c for c in sorted(states) if states[c].cls == BAD]
    xs = sorted([v for v in range(nx_) if in_f[v]] + [states[c].x for c in bad])
    ys = [v for v in range(nx_, g.n_vertices) if in_f[v]] + [-(c + 1) for c in bad]
    xi = {v: k for k, v in enumerate(xs)}
    yi = {v: k for k, v in enumerate(ys)}
    edges = []
    for v in range(nx_, g.n_vertices):
        if in_f[v]:
            edges += [(xi[w], yi[v]) for w in adj[v] if in_f[w] or w in xi]
    collapsed = 0
    for c in bad:
        st = states[c]
        star = yi[-(c + 1)]
        edges.append((xi[st.x], star))
        outs = [w for yv in (st.y_plus, st.y_minus) for w in adj[yv] if in_f[w]]
        collapsed += len(outs) - len(set(outs))
        edges += [(xi[w], star) for w in outs]
    graph = build(len(xs), len(ys), edges)
    return FStar(graph, xs, ys, collapsed)


def _ugly_to(cyc, states, u: int) -> list[int]:
    """Cover ugly cycle ``u`` ending at its attachment endpoint."""
    return cyc[u].around_to(states[u].near)


def _ugly_from(cyc, states, u: int) -> list[int]:
    return cyc[u].around_from(states[u].near)


def _good_path(c, cyc, states, ports: dict[int, int]) -> list[int]:
    st = states[c]
    ring = cyc[c]
    if st.y_plus in ports and st.y_minus in ports:
        raise InvariantViolation(f"good cycle {c} has ugly cycles at both y+ and y-")
    if not ports:
        return ring.around_from(st.x)
    if len(ports) == 1:
        ((u, other),) = ports.items()
        return _ugly_to(cyc, states, other) + ring.around_from(u)
    if st.x not in ports or len(ports) > 2:
        raise InvariantViolation(f"good cycle {c} has ports {sorted(ports)}")
    y = st.y_plus if st.y_plus in ports else st.y_minus
    return (
        _ugly_to(cyc, states, ports[st.x])
        + ring.around(st.x, y)
        + _ugly_from(cyc, states, ports[y])
    )


def _rewrite_bad(g, c, cyc, states, ports: dict[int, int], paths: list[list[int]]) -> str:
    """Rewrite the paths through x(C) and y*(C) for bad cycle ``c``; returns the case taken."""
    st = states[c]
    ring = cyc[c]
    x, star = st.x, -(c + 1)
    px = next(k for k, p in enumerate(paths) if x in p)
    py = next((k for k, p in enumerate(paths) if star in p), None)
    if st.y_plus in ports and st.y_minus in ports:
        raise InvariantViolation(f"bad cycle {c} has ugly cycles at both y+ and y-")
    head = _ugly_to(cyc, states, ports[x]) if x in ports else []
    p = paths[px]

    if py is None:
        # x(C) ends its path; go round C, then on into an ugly cycle at y+/y-
        if p[-1] != x:
            p.reverse()
        if p[-1] != x or (head and len(p) != 1):
            raise InvariantViolation(f"x{x} misplaced in its path (bad cycle {c})")
        end = st.y_minus if st.y_minus in ports else st.y_plus
        tail = ring.around(x, end)
        if end in ports:
            tail += _ugly_from(cyc, states, ports[end])
        paths[px] = head + p[:-1] + tail
        return "bad-end" + ("+ugly" if ports else "")
    elif py == px:
        # x(C), y*(C), then a forest vertex adjacent to y+ or y-
        i, j = p.index(x), p.index(star)
        if i > j:
            p.reverse()
            i, j = p.index(x), p.index(star)
        if j != i + 1 or j + 1 >= len(p):
            raise InvariantViolation(f"y* of bad cycle {c} not between x(C) and the forest")
        f = p[j + 1]
        y_f = st.y_plus if f in g.adjacency_lists()[st.y_plus] else st.y_minus
        other = st.y_minus if y_f == st.y_plus else st.y_plus
        if other in ports or y_f in ports or (head and i != 0):
            raise InvariantViolation(f"bad cycle {c}: ugly attachment blocks the rewrite")
        paths[px] = head + p[:i] + ring.around(x, y_f) + p[j + 1:]
        return "bad-through" + ("+ugly" if ports else "")
    else:
        if p[-1] != x:
            p.reverse()
        if p[-1] != x or (head and len(p) != 1) or st.y_plus in ports or st.y_minus in ports:
            raise InvariantViolation(f"bad cycle {c}: unexpected shape around x{x}")
        paths[px] = head + p
        q = paths[py]
        j = q.index(star)
        if j == 0 or j == len(q) - 1:
            raise InvariantViolation(f"y* of bad cycle {c} is a path end")
        f1, f2 = q[j - 1], q[j + 1]
        adj = g.adjacency_lists()
        if f1 in adj[st.y_plus] and f2 in adj[st.y_minus]:
            seg = ring.around(st.y_plus, x)[:-1]
        elif f1 in adj[st.y_minus] and f2 in adj[st.y_plus]:
            seg = ring.around(st.y_minus, x)[:-1]
        else:
            raise InvariantViolation(f"y* of bad cycle {c} entered by unexpected edges")
        paths[py] = q[:j] + seg + q[j + 1:]
        return "bad-split" + ("+ugly" if ports else "")
