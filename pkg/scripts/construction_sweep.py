"""Run the K_6 / K_7 constructions on seeded random 2-lists and tally the cases used."""

import argparse
from collections import Counter

from kneser_dist.constructive_small import construct
from kneser_dist.kneser_graph import edge_view
from kneser_dist.list_distinguish import is_distinguishing, random_assignment


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--palettes", type=int, nargs="+", default=[2, 3, 4, 6, 8, 12, 20, 40, 100, 300])
    args = ap.parse_args()
    for n in (6, 7):
        tally, bad = Counter(), 0
        for i in range(args.instances):
            L = random_assignment(edge_view(n), 2, args.palettes[i % len(args.palettes)], args.seed + i)
            res = construct(L)
            tally[res.trace] += 1
            bad += not is_distinguishing(res.coloring).verdict
        print(f"n={n}: {dict(sorted(tally.items()))}, not distinguishing: {bad}")


if __name__ == "__main__":
    main()
