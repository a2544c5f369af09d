"""Trial counts of the random list colourer against the geometric expectation 1/(1-f(n))."""

import argparse
import statistics

from kneser_dist import fixation_bounds as fb
from kneser_dist.kneser_graph import edge_view, kneser_vertices
from kneser_dist.list_distinguish import ListAssignment, las_vegas_distinguish


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--runs", type=int, default=100)
    args = ap.parse_args()
    objs = edge_view(args.n) if args.r == 2 else kneser_vertices(args.n, args.r)
    L = ListAssignment.identical(objs, ["a", "b"])
    trials = [las_vegas_distinguish(L, seed=1000 * s).trials for s in range(args.runs)]
    print(f"K({args.n},{args.r}) identical 2-lists, {args.runs} runs")
    print(f"mean {statistics.mean(trials):.3f}  max {max(trials)}  histogram {sorted(trials)}")
    if args.r == 2 and args.n >= 8:
        f = fb.f_sum(args.n).total.to_fraction()
        print(f"union bound f(n) = {float(f):.4f}, 1/(1-f) = {float(1 / (1 - f)):.3f}")


if __name__ == "__main__":
    main()
