"""3-regular bigraphs: a spanning path cover with at most alpha_Lambda(G) paths.

Start from a 2-factor, pick a maximal Lambda-independent set S with at most
one vertex per cycle, and grow one component around each seed cycle.  Every
other cycle joins through a single edge incident to a seed s or to one of
the two cycle-neighbors y1(s), y2(s) of s.  A component stays traceable as
long as it never takes edges at both y1(s) and y2(s), which the Do Something
Else rule guarantees.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .bigraph import BiGraph, is_regular
from .cover import PathXCover
from .cycles import Ring, rings, two_factor
from .deficiency import LambdaIndependentSet
from .errors import InvariantViolation, PreconditionError

log = logging.getLogger(__name__)


@dataclass
class Attachment:
    cycle: int  # index of the absorbed cycle
    port: int  # vertex on the seed cycle: s, y1(s) or y2(s)
    far: int  # endpoint of the attaching edge on the absorbed cycle


@dataclass
class MergeState:
    seed_of_cycle: dict[int, int] = field(default_factory=dict)
    ports: dict[int, dict[int, Attachment]] = field(default_factory=dict)
    processed: set[int] = field(default_factory=set)
    pending_dse: tuple[int, int] | None = None
    trace: list[str] = field(default_factory=list)

    def check_ports(self, cyc: list[Ring], cycle_of: dict[int, int]) -> None:
        for s, used in self.ports.items():
            ring = cyc[cycle_of[s]]
            if ring.succ(s) in used and ring.pred(s) in used:
                raise InvariantViolation(f"seed x{s} extended at both y1 and y2")


def _external(g: BiGraph, ring: Ring, v: int, adj) -> list[int]:
    return [w for w in adj[v] if w != ring.succ(v) and w != ring.pred(v)]


def solve_cubic(g: BiGraph, trace: bool = False) -> tuple[PathXCover, LambdaIndependentSet]:
    if is_regular(g) != 3:
        raise PreconditionError("solve_cubic needs a 3-regular bigraph")
    adj = g.adjacency_lists()
    cyc = rings(g, two_factor(g))
    cycle_of = {v: k for k, r in enumerate(cyc) for v in r.ids}

    # maximal Lambda-independent set, at most one vertex per cycle, index order
    seeds: list[int] = []
    seeded: set[int] = set()
    touched: set[int] = set()
    for x in range(g.x_count):
        if cycle_of[x] in seeded or any(y in touched for y in adj[x]):
            continue
        seeds.append(x)
        seeded.add(cycle_of[x])
        touched.update(adj[x])

    st = MergeState()
    for s in seeds:
        st.seed_of_cycle[cycle_of[s]] = s
        st.ports[s] = {}
        st.processed.add(cycle_of[s])

    while len(st.processed) < len(cyc):
        forbidden = None
        if st.pending_dse is not None:
            c, forbidden = st.pending_dse
            st.pending_dse = None
            if c in st.processed:
                raise InvariantViolation("Do Something Else names a processed cycle")
        else:
            c = min(k for k in range(len(cyc)) if k not in st.processed)
        ring = cyc[c]
        xs = sorted(v for v in ring.ids if v < g.x_count and v != forbidden)
        if not xs:
            raise InvariantViolation(f"cycle {c} has no admissible designated vertex")
        xc = xs[0]

        choice = None
        for s in seeds:
            common = sorted(set(adj[xc]) & set(adj[s]))
            if not common:
                continue
            home = cyc[cycle_of[s]]
            on_home = [y for y in common if y in home]
            on_c = [y for y in common if y in ring]
            if len(on_home) + len(on_c) != len(common):
                raise InvariantViolation(f"common neighbor of x{xc} and x{s} on neither cycle")
            # prefer x(C)y with y on C(s); otherwise s y with y on C
            choice = (s, on_home[0], xc) if on_home else (s, s, on_c[0])
            break
        if choice is None:
            raise InvariantViolation(f"x{xc} shares no neighbor with S; S is not maximal")
        s, port, far = choice
        if port in st.ports[s]:
            raise InvariantViolation(f"port {port} of seed x{s} used twice")
        st.ports[s][port] = Attachment(c, port, far)
        st.seed_of_cycle[c] = s
        st.processed.add(c)

        home = cyc[cycle_of[s]]
        dse = None
        if port != s:
            other = home.pred(s) if port == home.succ(s) else home.succ(s)
            for w in _external(g, home, other, adj):
                if cycle_of[w] not in st.processed:
                    dse = (cycle_of[w], w)
            st.pending_dse = dse
        st.check_ports(cyc, cycle_of)
        line = f"cycle {c}: x(C)={xc} seed={s} edge=({port},{far}) dse={dse}"
        st.trace.append(line)
        if trace:
            log.info(line)

    paths = [_trace_component(cyc[cycle_of[s]], s, st.ports[s], cyc) for s in seeds]
    if sum(len(p) for p in paths) != g.n_vertices:
        raise InvariantViolation("component paths do not span the graph")
    cover = PathXCover(tuple(tuple(g.ref(v) for v in p) for p in paths))
    return cover, LambdaIndependentSet(tuple(sorted(seeds)))


def _trace_component(home: Ring, s: int, ports: dict[int, Attachment], cyc: list[Ring]) -> list[int]:
    """Hamiltonian path of a seed cycle plus the cycles hanging off its ports."""
    if not ports:
        return home.around_from(s)
    if len(ports) == 1:
        (a,) = ports.values()
        return home.around_to(a.port) + cyc[a.cycle].around_from(a.far)
    if len(ports) == 2 and s in ports:
        at_s = ports[s]
        (at_y,) = [a for p, a in ports.items() if p != s]
        # drop the cycle edge s-y_i: the seed cycle becomes an s..y_i path
        head = cyc[at_s.cycle].around_to(at_s.far)
        return head + home.around(s, at_y.port) + cyc[at_y.cycle].around_from(at_y.far)
    raise InvariantViolation(f"seed x{s} has ports {sorted(ports)}; component not traceable")
