"""Tally which stitching branches the max-degree-3 solver takes on seeded sparse instances."""

import argparse
import collections
import random

from pathcover import generators as G
from pathcover.maxdeg3 import run_maxdeg3


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = collections.Counter()
    for _ in range(args.count):
        g = G.sparse_squares(rng.randint(1, 4), rng.randint(0, 4), rng.randint(0, 4), rng.choice([0.2, 0.4]), rng.randrange(2**31))
        tally.update(run_maxdeg3(g).branches)
    for name, n in sorted(tally.items()):
        print(f"{name:24s} {n}")


if __name__ == "__main__":
    main()
