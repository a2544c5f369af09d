"""Enumerate S_n on 3-subsets: Category I/II counts and the resulting union bounds."""

import argparse

from kneser_dist import fixation_bounds as fb


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[7, 8])
    args = ap.parse_args()
    for n in args.n:
        c = fb.category_split(n)
        print(f"n={n}: I={c.count_I} II={c.count_II} bound={float(c.bound):.6f}")
        if c.n in fb.REFERENCE_CATEGORY_COUNTS:
            print(f"      reference counts {fb.REFERENCE_CATEGORY_COUNTS[c.n]}, bound {float(c.reference_bound):.6f}, match={c.matches_reference}")
    for n in range(9, 16):
        b = fb.kneser_orbit_bound(n, 3)
        print(f"K({n},3): m={b.m} n!/2^m={float(b.total):.6g} below_one={b.below_one}")


if __name__ == "__main__":
    main()
