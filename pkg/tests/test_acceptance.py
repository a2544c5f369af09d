"""One test per acceptance criterion, each at its stated tolerance.

Every test appends a "[PASS]/[FAIL] ACn ..." line that is also printed in the
terminal summary.  Failures are real: nothing here is loosened to pass.
"""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from kneser_dist import fixation_bounds as fb
from kneser_dist.constructive_small import construct_k6, construct_k7
from kneser_dist.dyadic import decimal_string
from kneser_dist.kneser_graph import edge_view
from kneser_dist.list_distinguish import (
    ListAssignment,
    brute_force_distinguishing_number,
    conjecture_explore,
    exact_fixation_probability,
    exact_list_distinguishable,
    is_distinguishing,
    las_vegas_distinguish,
    random_assignment,
)
from kneser_dist.perm_core import PAIRS, CycleType, Permutation, cycle_type_of, orbit_deficit, subsets_action

from conftest import all_perms


def record(log, tag, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {tag}: {detail}"
    log.append(line)
    print(line)
    assert ok, line


def test_ac01_f8(acceptance_log):
    t0 = time.perf_counter()
    total = fb.f_sum(8).total
    elapsed = time.perf_counter() - t0
    value = total.to_fraction()
    ok = abs(value - Fraction("0.874")) <= Fraction("0.001") and elapsed < 1
    record(acceptance_log, "AC1 f(8)", ok, f"f(8) = {decimal_string(total)} (target 0.874 +/- 0.001), {elapsed:.3f}s")


def test_ac02_small_min_cycle_sums(acceptance_log):
    f7 = fb.f_min_sum(7, 2)
    f6 = fb.f_min_sum(6, 3)
    f5 = fb.f_min_sum(5, 4)
    terms = {t.cycle_type: (t.count, t.mu) for t in f7.per_type}
    printed = {
        CycleType.from_lengths([2, 2, 3]): (math.factorial(7) // (4 * 2 * 3), 12),
        CycleType.from_lengths([3, 4]): (math.factorial(7) // 12, 2 + 4 + 11),
        CycleType.from_lengths([2, 5]): (math.factorial(7) // 10, 8 + 9),
        CycleType.from_lengths([7]): (math.factorial(7) // 7, 18),
    }
    mismatched = [f"{t}: (N, mu) = {terms.get(t)}, printed {v}" for t, v in printed.items() if terms.get(t) != v]
    checks = {
        "f>=2(7)~0.061": abs(f7.total.to_fraction() - Fraction("0.061")) <= Fraction("0.0005"),
        "f>=3(6)~0.0683": abs(f6.total.to_fraction() - Fraction("0.0683")) <= Fraction("0.0005"),
        "f>=4(5)=3/32": f5.total.to_fraction() == Fraction(3, 32),
        "per-term N, mu": not mismatched,
    }
    detail = (
        f"f>=2(7) = {f7.decimal()}, f>=3(6) = {f6.decimal()}, f>=4(5) = {f5.total}; "
        + ", ".join(f"{k} {'ok' if v else 'FAILED'}" for k, v in checks.items())
        + (f"; mismatches: {'; '.join(mismatched)}" if mismatched else "")
    )
    record(acceptance_log, "AC2 min-cycle sums", all(checks.values()), detail)


def test_ac03_p9(acceptance_log):
    p = fb.p_full_cycle(9)
    ok = p.to_fraction() == Fraction(math.factorial(8), 2**32) and abs(p.to_fraction() - Fraction("0.0000093")) <= Fraction(
        "0.0000001"
    )
    record(acceptance_log, "AC3 P(9)", ok, f"P(9) = {p} = {decimal_string(p, 12)} (target 0.0000093 +/- 1e-7)")


def test_ac04_f_below_one_and_decay(acceptance_log):
    t0 = time.perf_counter()
    bad = []
    for n in range(8, 31):
        f = fb.f_sum(n).total.to_fraction()
        if not (f < 1 and f <= Fraction(20 * n * n, 2**n)):
            bad.append(n)
    elapsed = time.perf_counter() - t0
    record(acceptance_log, "AC4 f(n) < 1 and <= 20n^2/2^n", not bad and elapsed < 30, f"n = 8..30, failures {bad}, {elapsed:.2f}s")


def test_ac05_extension_sweep(acceptance_log):
    violations = fb.check_extension_bounds(9, 12)
    detail = f"{len(violations)} violations for 9 <= n <= 12" + "".join(
        f"; n={v.n} {v.cycle_type} {v.rule} with R = {v.ratio}" for v in violations
    )
    record(acceptance_log, "AC5 extension-ratio sweep", not violations, detail)


def test_ac06_tightness(acceptance_log):
    t0 = time.perf_counter()
    bad, checked = [], 0
    for n in range(4, 9):
        for s in all_perms(n):
            if s.is_identity():
                continue
            checked += 1
            if orbit_deficit(s, PAIRS) != fb.mu(cycle_type_of(s)):
                bad.append(s)
    elapsed = time.perf_counter() - t0
    record(acceptance_log, "AC6 deficit = mu", not bad and elapsed < 10, f"{checked} permutations, {len(bad)} mismatches, {elapsed:.2f}s")


def test_ac07_three_subset_deficits(acceptance_log):
    t0 = time.perf_counter()
    bad, checked = [], 0
    action = subsets_action(3)
    for n in (7, 8):
        m = math.comb(n - 2, 2)
        for s in all_perms(n):
            if s.is_identity():
                continue
            checked += 1
            d = orbit_deficit(s, action)
            need = 2 * m if max(len(c) for c in s.cycles()) >= 3 else m
            if d < need:
                bad.append((n, s, d))
    elapsed = time.perf_counter() - t0
    record(acceptance_log, "AC7 3-subset deficits", not bad and elapsed < 30, f"{checked} permutations, {len(bad)} below bound, {elapsed:.2f}s")


def test_ac08_category_counts(acceptance_log):
    c7 = fb.category_split(7)
    c8 = fb.category_split(8)
    ok = (
        c7.count_I == 231
        and c7.count_I + c7.count_II == 5039
        and c7.bound < 1
        and c8.count_I + c8.count_II == math.factorial(8) - 1
        and c8.bound < 1
    )
    detail = (
        f"n=7: ({c7.count_I}, {c7.count_II}) bound {float(c7.bound):.4f}; "
        f"n=8: enumerated ({c8.count_I}, {c8.count_II}) vs printed {fb.REFERENCE_CATEGORY_COUNTS[8]}, "
        f"bound {float(c8.bound):.4f} (printed counts give {float(c8.reference_bound):.4f})"
    )
    record(acceptance_log, "AC8 category counts", ok, detail)


def test_ac09_distinguishing_numbers(acceptance_log):
    t0 = time.perf_counter()
    got = {(n, r): brute_force_distinguishing_number(n, r, 3) for n, r in [(5, 2), (6, 2), (7, 2), (7, 3)]}
    elapsed = time.perf_counter() - t0
    want = {(5, 2): 3, (6, 2): 2, (7, 2): 2, (7, 3): 2}
    record(acceptance_log, "AC9 D values", got == want and elapsed < 300, f"{got}, {elapsed:.2f}s")


def test_ac10_constructions(acceptance_log):
    t0 = time.perf_counter()
    palettes = [2, 3, 4, 6, 8, 12, 16, 24, 40, 60, 100, 300]
    failures, traces, oracle_checked = [], {}, 0
    for n, build in ((6, construct_k6), (7, construct_k7)):
        for i in range(200):
            L = random_assignment(edge_view(n), 2, palettes[i % len(palettes)], 10_000 + i)
            res = build(L)
            traces[res.trace] = traces.get(res.trace, 0) + 1
            if not (res.coloring.respects(L) and is_distinguishing(res.coloring).verdict):
                failures.append((n, i))
            if i % 20 == 0:
                oracle_checked += 1
                ok, _ = exact_list_distinguishable(L)
                if not ok:
                    failures.append((n, i, "oracle"))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300 and oracle_checked == 20
    record(
        acceptance_log,
        "AC10 K6/K7 constructions",
        ok,
        f"400 instances, {len(failures)} failures, oracle subsample {oracle_checked}, traces {dict(sorted(traces.items()))}, {elapsed:.1f}s",
    )


def test_ac11_las_vegas(acceptance_log):
    L = ListAssignment.identical(edge_view(9), ["a", "b"])
    f9 = fb.f_sum(9).total.to_fraction()
    limit = 1 / (1 - f9) + 1
    runs = [las_vegas_distinguish(L, max_trials=64, seed=1000 * s) for s in range(100)]
    mean = Fraction(sum(r.trials for r in runs), len(runs))
    ok = all(r.success for r in runs) and mean <= limit
    record(
        acceptance_log,
        "AC11 Las Vegas K(9,2)",
        ok,
        f"mean trials {float(mean):.2f} <= {float(limit):.3f}, successes {sum(r.success for r in runs)}/100, max {max(r.trials for r in runs)}",
    )


def test_ac12_exact_probability(acceptance_log):
    rng = np.random.default_rng(12)
    e = edge_view(6)
    samples = 100_000
    worst, bad = 0.0, []
    for i in range(50):
        sigma = Permutation(tuple(int(x) + 1 for x in rng.permutation(6)))
        L = random_assignment(e, 2, 3, 500 + i)
        exact = exact_fixation_probability(L, sigma)
        # Monte Carlo, independent of the exact routine: sample colourings, test c(sigma(x)) = c(x)
        codes = np.array([[ord(c[1]) for c in lst] for lst in L.lists])
        picks = rng.integers(0, 2, size=(samples, len(L.lists)))
        colours = codes[np.arange(len(L.lists)), picks]
        image = np.array(e.image_indices(sigma))
        est = float((colours[:, image] == colours).all(axis=1).mean())
        p = float(exact)
        se = math.sqrt(p * (1 - p) / samples)
        z = abs(est - p) / se if se > 0 else (0.0 if est == p else math.inf)
        worst = max(worst, z)
        same = ListAssignment.identical(e, ["a", "b"])
        if z > 3 or exact_fixation_probability(same, sigma) != Fraction(1, 2 ** fb.mu(cycle_type_of(sigma))):
            bad.append(i)
    record(acceptance_log, "AC12 exact vs Monte Carlo", not bad, f"50 permutations, worst |z| = {worst:.2f}, failures {bad}")


def test_ac13_conjecture_sample(acceptance_log):
    e = edge_view(5)
    palettes = [4, 5, 6, 7, 9, 12]
    samples = [random_assignment(e, 3, palettes[i % len(palettes)], 7000 + i) for i in range(50)]
    rep = conjecture_explore(5, 2, 3, samples)
    top = max(r.expected for r in rep.rows)
    record(
        acceptance_log,
        "AC13 identical lists maximise expected fixers (sampled)",
        rep.identical_max_expected,
        f"identical {rep.identical_row.expected}, sample max {top}, 51 assignments; exact p max at identical: {rep.identical_max_p}",
    )
