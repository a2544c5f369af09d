import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kneser_dist import fixation_bounds as fb
from kneser_dist.dyadic import DyadicRational
from kneser_dist.perm_core import (
    PAIRS,
    CycleType,
    Permutation,
    enumerate_cycle_types,
    orbit_deficit,
    subsets_action,
)

from conftest import all_perms, brute_cycle_lengths

T = CycleType.from_lengths


def representative(t: CycleType) -> Permutation:
    cycles, start = [], 1
    for a in t.lengths():
        cycles.append(tuple(range(start, start + a)))
        start += a
    return Permutation.from_cycles(t.n, cycles)


def test_g_values():
    assert fb.g_single(1) == 0
    assert fb.g_single(5) == 8
    assert fb.g_single(7) == 18
    assert all(fb.g_pair(1, k) == k - 1 for k in range(1, 10))
    assert fb.g_pair(3, 4) == 11
    assert fb.g_pair(2, 5) == 9


@pytest.mark.parametrize("n", range(2, 11))
def test_mu_is_pair_orbit_deficit(n):
    for t in enumerate_cycle_types(n):
        assert fb.mu(t) == orbit_deficit(representative(t), PAIRS), t


def test_mu_examples():
    for n in range(3, 12):
        assert fb.mu(T([1] * (n - 2) + [2])) == n - 2
        assert fb.mu(T([n])) == (n - 1) ** 2 // 2
    # closed form and orbit count both give 14 here
    assert fb.mu(T([2, 2, 3])) == 14
    assert fb.mu(T([3, 4])) == 17
    assert fb.mu(T([2, 5])) == 17


def test_p_sigma_and_p_lambda():
    assert fb.p_sigma_bound(T([1, 1, 1, 1, 2])) == DyadicRational(1, 4)
    assert fb.p_sigma_bound(T([7])) == DyadicRational(1, 18)
    with pytest.raises(ValueError):
        fb.p_sigma_bound(T([1] * 5))
    for n in range(3, 12):
        assert fb.p_lambda_bound(T([1] * (n - 2) + [2])).to_fraction() == Fraction(n * (n - 1), 2 ** (n - 1))
    assert fb.p_lambda_bound(T([2, 5])) == DyadicRational(504, 17)
    assert fb.p_lambda_bound(T([3, 4])) == DyadicRational(420, 17)
    with pytest.raises(ValueError):
        fb.p_lambda_bound(T([1, 1, 1]))


def test_extension_ratio_examples():
    for n in range(5, 15):
        assert fb.extension_ratio(T([1] * (n - 2) + [2])) == Fraction(n, 2 * (n - 2))
        assert fb.extension_ratio(T([1] * (n - 3) + [3])) == Fraction(n, 4 * (n - 3))


@pytest.mark.parametrize("n", range(3, 13))
def test_extension_multiplicativity(n):
    for t in enumerate_cycle_types(n):
        if t.is_identity() or len(t.lengths()) == 1:
            continue
        assert fb.extension_ratio(t) == fb._parent_ratio(t), t


@pytest.mark.parametrize("n", range(2, 8))
def test_f_sum_matches_enumeration(n):
    # independent route: every nontrivial permutation contributes 2^-(pair orbit deficit)
    total = Fraction(0)
    for s in all_perms(n):
        if not s.is_identity():
            total += Fraction(1, 2 ** orbit_deficit(s, PAIRS))
    assert fb.f_sum(n).total.to_fraction() == total


def test_f_sum_values():
    assert fb.f_sum(2).total == 1
    report = fb.f_sum(8)
    assert report.total == sum((t.contribution for t in report.per_type), DyadicRational(0))
    assert report.decimal() == "0.8544149399"
    for n in range(3, 25):
        assert fb.f_sum(n).total.to_fraction() >= Fraction(math.comb(n, 2), 2 ** (n - 2))


def test_f_min_sum_values():
    assert fb.f_min_sum(6, 3).total.to_fraction() == Fraction(40, 2**10) + Fraction(120, 2**12)
    assert fb.f_min_sum(5, 4).total.to_fraction() == Fraction(3, 32)
    expected_7 = Fraction(210, 2**14) + Fraction(420, 2**17) + Fraction(504, 2**17) + Fraction(720, 2**18)
    assert fb.f_min_sum(7, 2).total.to_fraction() == expected_7


def test_report_json_shape():
    js = fb.f_sum(8).to_json()
    first = js["terms"][0]
    assert first == {"type": [[1, 6], [2, 1]], "N": 28, "mu": 6, "contribution": "28/64"}
    assert js["excluded"] == "identity"
    assert fb.f_sum(8).to_csv().splitlines()[0] == "type,N,mu,contribution"


def test_p_full_cycle():
    assert fb.p_full_cycle(9) == DyadicRational(math.factorial(8), 32)
    assert fb.p_full_cycle(2) == 1
    values = [fb.p_full_cycle(n) for n in range(3, 31)]
    assert all(a > b for a, b in zip(values, values[1:]))
    for n in range(2, 12):
        assert fb.p_full_cycle(n) == fb.p_lambda_bound(T([n]))


@pytest.mark.parametrize("num,den", [(-9, 7), (9, 7), (-18, 7), (5, 3), (14, 7), (-1, 2)])
def test_pow2_bounds_bracket(num, den):
    lo, hi = fb.pow2_bounds(num, den, 80)
    assert lo <= hi
    assert hi - lo <= Fraction(1, 2**70)
    # x = 2^(num/den) iff x^den = 2^num
    assert lo**den <= Fraction(2) ** num <= hi**den
    assert float(lo) == pytest.approx(2 ** (num / den), rel=1e-12)


def test_extension_bound_sweep():
    violations = fb.check_extension_bounds(9, 12)
    # only the third inequality fails: (1^(n-4), 2^2) at every n, plus (1, 2^4) at n = 9
    assert {v.rule for v in violations} == {"R_1 <= n/(4(n-3))"}
    expected = {(n, T([1] * (n - 4) + [2, 2])) for n in range(9, 13)} | {(9, T([1] + [2] * 4))}
    assert {(v.n, v.cycle_type) for v in violations} == expected
    for v in violations:
        assert v.ratio == fb._parent_ratio(v.cycle_type)
        assert v.ratio > Fraction(v.n, 4 * (v.n - 3))


def test_extension_bound_special_cases():
    assert fb.extension_ratio(T([1] * 7 + [2])) == Fraction(9, 14)
    # (9) has no parent; a type with lambda_1 >= 2, checked against 2^(-n lambda_1 / 7)
    r = fb.extension_ratio(T([2, 7]))
    assert r**7 * 2 ** (9 * 2) < 1
    with pytest.raises(ValueError):
        fb.check_extension_bounds(8, 10)


@pytest.mark.parametrize("n", range(9, 17))
def test_recursion_holds(n):
    chk = fb.recursion_rhs(n)
    assert chk.holds
    assert chk.rhs_lo <= chk.rhs_hi <= chk.coarse_upper
    assert chk.f_n < chk.rhs_lo


def test_recursion_n9_below_one():
    assert fb.recursion_rhs(9).rhs_hi < 1


@pytest.mark.parametrize("n", range(9, 30))
def test_geometric_tail(n):
    assert fb.geometric_tail_bound(n) == (True, True)


def test_decay_bound():
    rows = fb.decay_bound_check(8, 20)
    assert all(r.upper_ok and r.lower_ok and r.below_one for r in rows)
    assert rows[0].upper == 5
    assert rows[4].upper == Fraction(20 * 144, 4096)
    with pytest.raises(ValueError):
        fb.decay_bound_check(7, 9)


def test_kneser_orbit_bound():
    b = fb.kneser_orbit_bound(9, 3)
    assert b.m == 21 and b.total == Fraction(math.factorial(9), 2**21) and b.below_one
    b = fb.kneser_orbit_bound(7, 3)
    assert b.m == 10 and b.total == Fraction(5040, 1024) and not b.below_one
    assert fb.kneser_orbit_bound(8, 3).m == 15
    with pytest.raises(ValueError):
        fb.kneser_orbit_bound(6, 3)
    with pytest.raises(ValueError):
        fb.kneser_orbit_bound(9, 2)


def test_category_split():
    c7 = fb.category_split(7)
    assert (c7.count_I, c7.count_II) == (231, 4808)
    assert c7.count_I + c7.count_II == 5039
    assert c7.bound == Fraction(231, 2**10) + Fraction(4808, 2**20) and c7.bound < 1
    c8 = fb.category_split(8)
    assert c8.count_I + c8.count_II == math.factorial(8) - 1
    # involutions of S_8 minus the identity
    assert c8.count_I == 763 and not c8.matches_reference
    assert c8.bound < 1 and c8.reference_bound < 1
    with pytest.raises(ValueError):
        fb.category_split(9)


def test_category_counts_match_cycle_types():
    for n in (7, 8):
        invol = sum(
            fb.count_permutations(t) for t in enumerate_cycle_types(n) if max(t.lengths()) <= 2 and not t.is_identity()
        )
        assert invol == fb.category_split(n).count_I


@pytest.mark.parametrize("n,r", [(7, 3), (8, 3), (9, 3), (9, 4)])
def test_three_subset_deficit_by_type(n, r):
    # one representative per type suffices for this fast check; the acceptance test is exhaustive
    m = math.comb(n - 2, r - 1)
    for t in enumerate_cycle_types(n):
        if t.is_identity():
            continue
        assert orbit_deficit(representative(t), subsets_action(r)) >= m
