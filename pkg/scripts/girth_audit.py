"""Local Lemma audit on linked long-cycle instances, written as JSON lines."""

import argparse
import json
import random

from pathcover import generators as G
from pathcover.cycles import greedy_cycle_packing
from pathcover.highgirth import dependency_audit


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=20)
    ap.add_argument("--cycles", type=int, default=4)
    ap.add_argument("--links", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    graphs = [("two_c50_linked", G.two_c50_linked())]
    for k in range(args.instances):
        lengths = [rng.choice([40, 50, 60]) for _ in range(args.cycles)]
        links = []
        for _ in range(args.links):
            a, b = rng.sample(range(args.cycles), 2)
            links.append((a, rng.randrange(lengths[a] // 2), b, rng.randrange(lengths[b] // 2)))
        graphs.append((f"linked-{k}", G.linked_cycles(lengths, links)))
    for name, g in graphs:
        rep = dependency_audit(g, greedy_cycle_packing(g)).to_json_obj()
        rep.pop("events")
        print(json.dumps({"instance": name, **rep}))


if __name__ == "__main__":
    main()
