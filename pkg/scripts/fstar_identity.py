"""Count instances where def(G, S') differs from def(F*, S') in the max-degree-3 solver.

Runs over all connected max-degree-3 bigraphs up to --max-vertices and prints
the smallest instance where the two values differ, with the repair applied.
"""

import argparse
import collections

from pathcover import generators as G
from pathcover.bigraph import dumps
from pathcover.deficiency import max_deficiency
from pathcover.maxdeg3 import run_maxdeg3


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=10)
    args = ap.parse_args()

    corpus = G.connected_bigraphs(args.max_vertices, 3)
    gaps = collections.Counter()
    smallest = None
    for g in corpus:
        r = run_maxdeg3(g)
        gaps[r.def_fstar - r.def_g_s_prime] += 1
        if not r.identity_holds and smallest is None:
            smallest = (g, r)
    print(f"instances: {len(corpus)}")
    print("def(F*,S') - def(G,S') histogram:", dict(sorted(gaps.items())))
    if smallest:
        g, r = smallest
        print("smallest break:", dumps(g))
        print(f"  S'={r.s_prime} def(F*,S')={r.def_fstar} def(G,S')={r.def_g_s_prime}")
        print(f"  repair dropped {r.dropped}; certificate {r.cert.value}; cover size {len(r.cover)}; "
              f"def(G)={max_deficiency(g).value}")


if __name__ == "__main__":
    main()
