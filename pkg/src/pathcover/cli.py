"""Command-line front end.

Exit codes: 0 success, 1 verification failed, 2 unreadable input or bad
flags, 3 no applicable solver, 4 solver precondition or invariant failure,
5 size cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import math
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import bigraph as bg
from . import generators as gen
from .bigraph import BiGraph, GraphError
from .cover import DEFAULT_ORACLE_CAP, OracleCapExceeded, PathXCover, certify, min_cover_oracle, verify_cover
from .cubic import solve_cubic
from .cycles import (
    DEFAULT_PACKING_CAP,
    HallViolation,
    PackingCapExceeded,
    optimal_cycle_packing,
    two_factor,
)
from .deficiency import DEFAULT_CAP, DeficiencyCertificate, InstanceTooLarge, alpha_lambda, max_deficiency
from .errors import InvariantViolation, PreconditionError
from .forest import solve_forest
from .highgirth import ResamplingExhausted, check_girth_condition, solve_high_girth
from .hypergraph import Hypergraph, incidence_graph
from .maxdeg3 import solve_maxdeg3

log = logging.getLogger("pathcover")

EXIT_FAIL, EXIT_PARSE, EXIT_NO_SOLVER, EXIT_SOLVER, EXIT_CAP = 1, 2, 3, 4, 5
SOLVERS = ("auto", "forest", "cubic", "maxdeg3", "girth")


class NoSolver(RuntimeError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def _read_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: malformed JSON: {exc}") from exc


# -- solving ---------------------------------------------------------------------------


def pick_solver(g: BiGraph, d: int | None = None) -> str:
    if girth_is_inf(g):
        return "forest"
    if bg.is_regular(g) == 3:
        return "cubic"
    if bg.max_degree(g) <= 3:
        return "maxdeg3"
    if check_girth_condition(g, d or bg.max_degree(g)):
        return "girth"
    raise NoSolver("no applicable solver: graph is cyclic, not cubic, has max degree > 3 and fails the girth condition")


def girth_is_inf(g: BiGraph) -> bool:
    return bg.girth(g) == math.inf


def run_solver(
    g: BiGraph,
    solver: str = "auto",
    seed: int = 0,
    d: int | None = None,
    force: bool = False,
    packing_cap: int = DEFAULT_PACKING_CAP,
    trace: bool = False,
) -> tuple[str, PathXCover, DeficiencyCertificate]:
    name = pick_solver(g, d) if solver == "auto" else solver
    if name == "forest":
        cover, cert = solve_forest(g)
    elif name == "cubic":
        cover, wit = solve_cubic(g, trace=trace)
        cert = wit.as_certificate()
    elif name == "maxdeg3":
        cover, cert = solve_maxdeg3(g, packing_cap=packing_cap, trace=trace)
    elif name == "girth":
        dd = d or bg.max_degree(g)
        packing = two_factor(g) if (bg.is_regular(g) or 0) >= 2 else optimal_cycle_packing(g, packing_cap)
        cover, wit = solve_high_girth(g, dd, packing, seed=seed, force=force)
        cert = wit.as_certificate()
    else:
        raise NoSolver(f"unknown solver {name!r}")
    return name, cover, cert


def solution_json(name: str, cover: PathXCover, cert: DeficiencyCertificate) -> dict:
    return {"solver": name, **cover.to_json_obj(), "certificate": cert.to_json_obj()}


# -- hunting ---------------------------------------------------------------------------


def graph_hash(g: BiGraph) -> str:
    return hashlib.sha256(bg.dumps(g).encode()).hexdigest()[:16]


def hunt_one(args: tuple[str, int, int]) -> dict:
    """Check one instance; ``args`` is (graph JSON, instance seed, oracle cap)."""
    text, seed, cap = args
    g = bg.loads(text)
    rec: dict = {"hash": graph_hash(g), "seed": seed, "x": g.x_count, "y": g.y_count}
    try:
        rec["def"] = max_deficiency(g).value
        rec["oracle_k"] = min_cover_oracle(g, cap)[0]
    except (OracleCapExceeded, InstanceTooLarge) as exc:
        rec["skipped"] = str(exc)
        return rec
    try:
        name, cover, cert = run_solver(g)
        rec["solver"] = name
        rec["solver_k"] = len(cover)
        ok = certify(g, cover, cert).ok and len(cover) <= rec["def"]
        if not ok:
            rec["solver_failure"] = "solver output does not certify within def(G)"
    except NoSolver:
        pass
    except (PreconditionError, InvariantViolation, PackingCapExceeded) as exc:
        rec["solver_failure"] = f"{type(exc).__name__}: {exc}"
    if rec["oracle_k"] > rec["def"]:
        rec["counterexample"] = bg.to_json_obj(g)
    return rec


def hunt_instances(args) -> list[tuple[str, int]]:
    out = []
    if args.family == "exhaustive":
        for nx in range(0, args.max_x + 1):
            for ny in range(0, args.max_y + 1):
                for g in gen.all_bigraphs(nx, ny):
                    out.append((bg.dumps(g), args.seed))
        return out
    rng = random.Random(args.seed)
    for t in range(args.count):
        s = rng.randrange(2**31)
        if args.family == "forest":
            g = gen.random_forest(rng.randint(1, args.max_x + args.max_y), s)
        else:
            g = gen.random_bigraph(rng.randint(1, args.max_x), rng.randint(0, args.max_y), args.p, s)
        out.append((bg.dumps(g), s))
    return out


def hunt_report(records: list[dict], family: str) -> dict:
    tested = [r for r in records if "skipped" not in r]
    return {
        "family": family,
        "instances_tested": len(tested),
        "instances_skipped": len(records) - len(tested),
        "counterexamples": [
            {"hash": r["hash"], "seed": r["seed"], "def": r["def"], "oracle_k": r["oracle_k"], "graph": r["counterexample"]}
            for r in records if "counterexample" in r
        ],
        "solver_failures": [r for r in records if "solver_failure" in r],
        "records": [{k: v for k, v in r.items() if k != "counterexample"} for r in records],
    }


# -- subcommands -----------------------------------------------------------------------


def cmd_solve(a) -> int:
    g = bg.parse_graph(_read(a.input))
    name, cover, cert = run_solver(g, a.solver, a.seed, a.d, a.force, a.packing_cap, a.trace)
    print(_dump(solution_json(name, cover, cert)))
    return 0


def cmd_verify(a) -> int:
    g = bg.parse_graph(_read(a.input))
    cover = PathXCover.from_json_obj(_read_json(a.cover))
    if a.cert:
        obj = _read_json(a.cert)
        try:
            cert = DeficiencyCertificate.from_json_obj(obj.get("certificate", obj))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed certificate JSON: {exc}") from exc
        verdict = certify(g, cover, cert)
    else:
        verdict = verify_cover(g, cover)
    print(_dump({"valid": verdict.ok, "paths": len(cover), "violations": verdict.violations}))
    return 0 if verdict.ok else EXIT_FAIL


def cmd_deficiency(a) -> int:
    g = bg.parse_graph(_read(a.input))
    print(_dump(max_deficiency(g, a.cap).to_json_obj()))
    return 0


def cmd_alpha(a) -> int:
    g = bg.parse_graph(_read(a.input))
    wit = alpha_lambda(g, a.cap)
    print(_dump({"subset": list(wit.subset), "size": wit.size}))
    return 0


def cmd_hunt(a) -> int:
    work = [(text, s, a.oracle_cap) for text, s in hunt_instances(a)]
    if a.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(a.jobs) as pool:
            records = list(pool.map(hunt_one, work, chunksize=16))
    else:
        records = [hunt_one(w) for w in work]
    report = hunt_report(records, a.family)
    if report["counterexamples"]:
        log.warning("COUNTEREXAMPLE FOUND: %d instance(s) need more than def(G) paths", len(report["counterexamples"]))
    print(_dump(report))
    return 0


def cmd_gen(a) -> int:
    if a.family == "fano":
        g = gen.fano_incidence()
    else:
        g = gen.generate(gen.Family(a.family, a.n, a.k, a.d, a.nx, a.ny, a.p, a.seed))
    sys.stdout.write(bg.to_edge_list(g) if a.format == "edges" else bg.dumps(g) + "\n")
    return 0


def cmd_convert(a) -> int:
    text = _read(a.input)
    if a.from_hypergraph:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed hypergraph JSON: {exc}") from exc
        g = incidence_graph(Hypergraph.from_json_obj(obj))
    else:
        g = bg.parse_graph(text)
    if a.to == "hypergraph":
        edges = [list(n) for n in g.adj_y]
        print(Hypergraph.of(g.x_count, edges).dumps())
    elif a.to == "edges":
        sys.stdout.write(bg.to_edge_list(g))
    else:
        print(bg.dumps(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pathcover", description="Path X-covers of bipartite graphs.")
    p.add_argument("--trace", action="store_true", help="log solver traces to standard error")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="cover X by paths and print the certificate")
    s.add_argument("--input", required=True)
    s.add_argument("--solver", choices=SOLVERS, default="auto")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--d", type=int, default=None, help="degree bound for the girth solver")
    s.add_argument("--force", action="store_true", help="run the girth solver without its precondition")
    s.add_argument("--packing-cap", type=int, default=DEFAULT_PACKING_CAP)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a cover, and optionally a certificate")
    s.add_argument("--input", required=True)
    s.add_argument("--cover", required=True)
    s.add_argument("--cert")
    s.set_defaults(func=cmd_verify)

    for name, fn, helptext in (
        ("deficiency", cmd_deficiency, "exact def(G) with a maximizing subset"),
        ("alpha", cmd_alpha, "maximum Lambda-independent set"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--input", required=True)
        s.add_argument("--cap", type=int, default=DEFAULT_CAP)
        s.set_defaults(func=fn)

    s = sub.add_parser("hunt", help="search small graphs for more than def(G) required paths")
    s.add_argument("--family", choices=("random", "exhaustive", "forest"), default="random")
    s.add_argument("--max-x", type=int, default=5)
    s.add_argument("--max-y", type=int, default=5)
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--p", type=float, default=0.4)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    s.set_defaults(func=cmd_hunt)

    s = sub.add_parser("gen", help="generate an instance")
    s.add_argument("--family", required=True)
    for flag in ("n", "k", "d", "nx", "ny", "seed"):
        s.add_argument(f"--{flag}", type=int, default=0)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--format", choices=("json", "edges"), default="json")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("convert", help="convert between graph formats")
    s.add_argument("--input", required=True)
    s.add_argument("--from-hypergraph", action="store_true")
    s.add_argument("--to", choices=("json", "edges", "hypergraph"), default="json")
    s.set_defaults(func=cmd_convert)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.trace else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (GraphError, gen.GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoSolver as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_SOLVER
    except (InstanceTooLarge, PackingCapExceeded, OracleCapExceeded) as exc:
        print(f"error: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PreconditionError, InvariantViolation, HallViolation, ResamplingExhausted) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
