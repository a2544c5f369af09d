"""Print f(n), the 20n^2/2^n envelope, P(n) and the recursion check for a range of n."""

import argparse
from fractions import Fraction

from kneser_dist import fixation_bounds as fb
from kneser_dist.dyadic import decimal_string


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=30)
    args = ap.parse_args()
    print(f"{'n':>3} {'f(n)':>16} {'20n^2/2^n':>14} {'P(n)':>16} recursion")
    for n in range(args.n_min, args.n_max + 1):
        f = fb.f_sum(n).total
        env = Fraction(20 * n * n, 2**n)
        rec = fb.recursion_rhs(n).holds if n >= 9 else "-"
        print(f"{n:>3} {decimal_string(f):>16} {float(env):>14.6g} {decimal_string(fb.p_full_cycle(n), 12):>16} {rec}")
    print()
    for n, i in [(7, 2), (6, 3), (5, 4)]:
        r = fb.f_min_sum(n, i)
        print(f"f>={i}({n}) = {r.decimal()}")
        for t in r.per_type:
            print(f"    {str(t.cycle_type):<12} N={t.count:<6} mu={t.mu}")


if __name__ == "__main__":
    main()
