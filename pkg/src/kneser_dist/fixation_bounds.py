"""Exact probability bounds for colour-class-fixing permutations.

A random colouring picks each edge colour of K_n uniformly from a 2-list.
For a permutation sigma of type Lambda the chance that sigma fixes every
colour class is at most 2^-mu(Lambda), with equality when all lists are the
same.  The functions below evaluate mu, the per-type union bounds and their
sums f(n), the extension ratios and the recursion used to show f(n) < 1 for
n >= 8, and the r >= 3 Kneser bounds.  No floating point feeds any verdict:
comparisons against powers 2^(p/q) go through integer roots.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .dyadic import DyadicRational, decimal_string
from .perm_core import CycleType, count_permutations, enumerate_cycle_types

__all__ = [
    "g_single",
    "g_pair",
    "mu",
    "p_sigma_bound",
    "p_lambda_bound",
    "extension_ratio",
    "TypeTerm",
    "BoundReport",
    "f_sum",
    "f_min_sum",
    "p_full_cycle",
    "check_extension_bounds",
    "ExtensionViolation",
    "RecursionCheck",
    "recursion_rhs",
    "geometric_tail_bound",
    "DecayRow",
    "decay_bound_check",
    "KneserOrbitBound",
    "kneser_orbit_bound",
    "CategorySplit",
    "category_split",
    "REFERENCE_CATEGORY_COUNTS",
    "pow2_bounds",
    "DEFAULT_N_CAP",
]

DEFAULT_N_CAP = 40

# Category I / II counts as printed for r = 3 (n = 8 does not match enumeration).
REFERENCE_CATEGORY_COUNTS = {7: (231, 4808), 8: (973, 39346)}


def g_single(lam: int) -> int:
    if lam < 1:
        raise ValueError("cycle length must be >= 1")
    return (lam - 1) ** 2 // 2


def g_pair(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise ValueError("cycle lengths must be >= 1")
    return a * b - math.gcd(a, b)


def mu(lam: CycleType) -> int:
    """Exponent of the fixation bound: pair-orbit deficit of a permutation of type lam."""
    total = 0
    parts = lam.parts
    for i, (a, la) in enumerate(parts):
        total += g_single(a) * la
        total += g_pair(a, a) * (la * (la - 1) // 2)
        for b, lb in parts[i + 1 :]:
            total += g_pair(a, b) * la * lb
    return total


def _require_nontrivial(lam: CycleType):
    if lam.is_identity():
        raise ValueError("identity type has no meaningful fixation bound")


def p_sigma_bound(lam: CycleType) -> DyadicRational:
    _require_nontrivial(lam)
    return DyadicRational(1, mu(lam))


def p_lambda_bound(lam: CycleType) -> DyadicRational:
    _require_nontrivial(lam)
    return DyadicRational(count_permutations(lam), mu(lam))


def _class_bound(lam: CycleType | None) -> Fraction:
    # P(Gamma) with the empty type and the identity type both taken as 1
    if lam is None or lam.is_identity():
        return Fraction(1)
    return p_lambda_bound(lam).to_fraction()


def extension_ratio(lam: CycleType) -> Fraction:
    """R such that P(lam) = R * P(parent), parent = lam minus one shortest cycle."""
    _require_nontrivial(lam)
    n = lam.n
    (a, la), rest = lam.parts[0], lam.parts[1:]
    if n - a < 1:
        # a single full cycle has no parent of positive degree
        raise ValueError("a single n-cycle does not extend a smaller type")
    falling = math.perm(n, a)
    exponent = g_single(a) + g_pair(a, a) * (la - 1) + sum(g_pair(a, b) * lb for b, lb in rest)
    return Fraction(falling, a * la * 2**exponent)


def _parent_ratio(lam: CycleType) -> Fraction:
    """Direct ratio P(lam)/P(parent); the independent side of the multiplicativity check."""
    return p_lambda_bound(lam).to_fraction() / _class_bound(lam.without_one_shortest())


# -- sums over cycle types -----------------------------------------------------


@dataclass(frozen=True)
class TypeTerm:
    cycle_type: CycleType
    count: int
    mu: int

    @property
    def contribution(self) -> DyadicRational:
        return DyadicRational(self.count, self.mu)

    def to_json(self) -> dict:
        return {
            "type": self.cycle_type.to_json(),
            "N": self.count,
            "mu": self.mu,
            "contribution": f"{self.count}/{2**self.mu}",
        }


@dataclass(frozen=True)
class BoundReport:
    """Exact sum of N(Lambda) 2^-mu(Lambda) over the nontrivial types of S_n.

    The identity type is excluded from every sum (its term would be 1).
    """

    n: int
    per_type: tuple[TypeTerm, ...]
    min_cycle: int = 1
    total: DyadicRational = field(init=False)

    def __post_init__(self):
        total = DyadicRational(0)
        for t in self.per_type:
            total = total + t.contribution
        object.__setattr__(self, "total", total)

    def decimal(self, digits: int = 10) -> str:
        return decimal_string(self.total, digits)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "min_cycle": self.min_cycle,
            "excluded": "identity",
            "terms": [t.to_json() for t in self.per_type],
            "total": str(self.total.to_fraction()),
            "decimal": self.decimal(),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["type", "N", "mu", "contribution"])
        for t in self.per_type:
            w.writerow([json.dumps(t.cycle_type.to_json(), separators=(",", ":")), t.count, t.mu, f"{t.count}/{2**t.mu}"])
        return buf.getvalue()


def _check_n(n: int, cap: int | None):
    if cap is not None and n > cap:
        raise ValueError(f"n={n} exceeds cap {cap}; raise the cap explicitly")


@lru_cache(maxsize=256)
def f_min_sum(n: int, i: int, cap: int | None = DEFAULT_N_CAP) -> BoundReport:
    """f_{>=i}(n): the sum restricted to types whose cycles all have length >= i."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got n={n}, i={i}")
    _check_n(n, cap)
    terms = tuple(
        TypeTerm(t, count_permutations(t), mu(t))
        for t in enumerate_cycle_types(n)
        if not t.is_identity() and t.min_length >= i
    )
    return BoundReport(n, terms, min_cycle=i)


def f_sum(n: int, cap: int | None = DEFAULT_N_CAP) -> BoundReport:
    """f(n), the expected number of nontrivial colour-fixing permutations (identical lists)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return f_min_sum(n, 1, cap)


def p_full_cycle(n: int) -> DyadicRational:
    """Class bound of the n-cycles: (n-1)! / 2^floor((n-1)^2/2)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return DyadicRational(math.factorial(n - 1), g_single(n))


# -- irrational powers of two ----------------------------------------------------


def _iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2:
        return x
    y = 1 << -(-x.bit_length() // k)  # over-estimate
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            break
        y = z
    while y**k > x:
        y -= 1
    while (y + 1) ** k <= x:
        y += 1
    return y


def pow2_bounds(num: int, den: int, bits: int = 64) -> tuple[Fraction, Fraction]:
    """Rationals lo <= 2^(num/den) <= hi with hi - lo <= 2^-bits (equal when exact)."""
    if den < 1:
        raise ValueError("den must be positive")
    q, rem = divmod(num, den)
    if rem == 0:
        v = Fraction(2) ** q
        return v, v
    # 2^(num/den) = 2^q * 2^(rem/den), with 1 < 2^(rem/den) < 2
    t = _iroot(1 << (rem + den * bits), den)
    lo = Fraction(t, 1 << bits)
    hi = Fraction(t + 1, 1 << bits)
    scale = Fraction(2) ** q
    return lo * scale, hi * scale


def _certify_less(lhs: Fraction, const: Fraction, terms: list[tuple[Fraction, int, int]]) -> tuple[bool, Fraction, Fraction]:
    """Decide lhs < const + sum(c * 2^(p/q)) with c >= 0; returns (verdict, lo, hi) of the rhs."""
    bits = 64
    while True:
        lo = hi = const
        for c, p, q in terms:
            a, b = pow2_bounds(p, q, bits)
            lo += c * a
            hi += c * b
        if lhs < lo:
            return True, lo, hi
        if lhs >= hi:
            return False, lo, hi
        if bits > 4096:
            raise ArithmeticError("comparison did not resolve; values may be equal")
        bits *= 2


# -- extension-ratio sweep -------------------------------------------------------


@dataclass(frozen=True)
class ExtensionViolation:
    n: int
    cycle_type: CycleType
    rule: str
    ratio: Fraction


def _r_below_pow(ratio: Fraction, n: int, a: int) -> bool:
    # R < 2^(-n a / 7)  <=>  R^7 * 2^(n a) < 1
    return ratio.numerator**7 * 2 ** (n * a) < ratio.denominator**7


def check_extension_bounds(n_min: int, n_max: int, cap: int | None = DEFAULT_N_CAP) -> list[ExtensionViolation]:
    """Check the three extension-ratio inequalities for every nontrivial type, n in range.

    Returns the violations; an empty list means the sweep passed.
    """
    if n_min < 9 or n_max < n_min:
        raise ValueError("need 9 <= n_min <= n_max")
    _check_n(n_max, cap)
    bad = []
    for n in range(n_min, n_max + 1):
        transposition = CycleType(((1, n - 2), (2, 1)))
        half = Fraction(n, 2 * (n - 2))
        quarter = Fraction(n, 4 * (n - 3))
        for t in enumerate_cycle_types(n):
            if t.is_identity() or t.parts == ((n, 1),):
                continue
            r = extension_ratio(t)
            a = t.min_length
            if a >= 2:
                if not _r_below_pow(r, n, a):
                    bad.append(ExtensionViolation(n, t, "R < 2^(-n*lambda1/7)", r))
                continue
            if r > half:
                bad.append(ExtensionViolation(n, t, "R_1 <= n/(2(n-2))", r))
            if (r == half) != (t == transposition):
                bad.append(ExtensionViolation(n, t, "equality only for (1^(n-2), 2)", r))
            if t != transposition and r > quarter:
                bad.append(ExtensionViolation(n, t, "R_1 <= n/(4(n-3))", r))
    return bad


# -- recursion for f(n) ------------------------------------------------------------


@dataclass(frozen=True)
class RecursionCheck:
    n: int
    f_n: Fraction
    leading: Fraction  # n/(2(n-2)) * f(n-1)
    tail_terms: tuple[tuple[int, Fraction], ...]  # (i, f_{>=i}(n-i)) weighted by 2^(-ni/7)
    full_cycle: Fraction
    rhs_lo: Fraction
    rhs_hi: Fraction
    coarse_upper: Fraction  # 2^(-ni/7) replaced by 2^(-floor(ni/7))
    holds: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "f": str(self.f_n),
            "f_decimal": decimal_string(self.f_n),
            "rhs_lower": decimal_string(self.rhs_lo),
            "rhs_upper": decimal_string(self.rhs_hi),
            "rhs_coarse_upper": str(self.coarse_upper),
            "holds": self.holds,
        }


def recursion_rhs(n: int, cap: int | None = DEFAULT_N_CAP) -> RecursionCheck:
    """Evaluate the recursive upper bound for f(n) with exact f values and certify f(n) < rhs."""
    if n < 9:
        raise ValueError("the recursion is asserted for n >= 9")
    _check_n(n, cap)
    f_n = f_sum(n, cap).total.to_fraction()
    leading = Fraction(n, 2 * (n - 2)) * f_sum(n - 1, cap).total.to_fraction()
    tail = tuple((i, f_min_sum(n - i, i, cap).total.to_fraction()) for i in range(2, n // 2 + 1))
    pn = p_full_cycle(n).to_fraction()
    const = leading + pn
    verdict, lo, hi = _certify_less(f_n, const, [(c, -n * i, 7) for i, c in tail])
    coarse = const + sum((c / 2 ** ((n * i) // 7) for i, c in tail), Fraction(0))
    return RecursionCheck(n, f_n, leading, tail, pn, lo, hi, coarse, verdict)


def geometric_tail_bound(n: int) -> tuple[bool, bool]:
    """For n >= 9: (sum_{i=2}^{n//2} 2^(-ni/7) < 1/(2^(n/7)(2^(n/7)-1)), that bound < 0.3).

    Both verdicts are certified with rational brackets on 2^(n/7).
    """
    bits = 64
    while True:
        tail_lo = tail_hi = Fraction(0)
        for i in range(2, n // 2 + 1):
            a, b = pow2_bounds(-n * i, 7, bits)
            tail_lo += a
            tail_hi += b
        x_lo, x_hi = pow2_bounds(n, 7, bits)
        if x_lo <= 1:
            raise ValueError("n too small")
        closed_lo = 1 / (x_hi * (x_hi - 1))
        closed_hi = 1 / (x_lo * (x_lo - 1))
        first = None
        if tail_hi < closed_lo:
            first = True
        elif tail_lo >= closed_hi:
            first = False
        second = None
        if closed_hi < Fraction(3, 10):
            second = True
        elif closed_lo >= Fraction(3, 10):
            second = False
        if first is not None and second is not None:
            return first, second
        bits *= 2
        if bits > 4096:
            raise ArithmeticError("comparison did not resolve")


# -- polynomial-over-exponential decay ----------------------------------------------


@dataclass(frozen=True)
class DecayRow:
    n: int
    f_n: Fraction
    upper: Fraction  # 20 n^2 / 2^n
    lower: Fraction  # C(n,2) / 2^(n-2)
    below_one: bool
    upper_ok: bool
    lower_ok: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "f": str(self.f_n),
            "f_decimal": decimal_string(self.f_n),
            "upper_20n2_over_2n": decimal_string(self.upper),
            "lower_binom_over_2n2": decimal_string(self.lower),
            "f_below_one": self.below_one,
            "upper_ok": self.upper_ok,
            "lower_ok": self.lower_ok,
        }


def decay_bound_check(n_min: int, n_max: int, cap: int | None = DEFAULT_N_CAP) -> list[DecayRow]:
    if n_min < 8 or n_max < n_min:
        raise ValueError("need 8 <= n_min <= n_max")
    _check_n(n_max, cap)
    rows = []
    for n in range(n_min, n_max + 1):
        f_n = f_sum(n, cap).total.to_fraction()
        upper = Fraction(20 * n * n, 2**n)
        lower = Fraction(math.comb(n, 2), 2 ** (n - 2))
        rows.append(DecayRow(n, f_n, upper, lower, f_n < 1, f_n <= upper, lower <= f_n))
    return rows


# -- Kneser graphs with r >= 3 ----------------------------------------------------------


@dataclass(frozen=True)
class KneserOrbitBound:
    n: int
    r: int
    m: int
    total: Fraction  # n! / 2^m

    @property
    def below_one(self) -> bool:
        return self.total < 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "m": self.m,
            "total": str(self.total),
            "decimal": decimal_string(self.total),
            "below_one": self.below_one,
        }


def _check_kneser_regime(n: int, r: int):
    if r < 3 or n < 2 * r + 1:
        raise ValueError(f"need r >= 3 and n >= 2r+1, got n={n}, r={r}")


def kneser_orbit_bound(n: int, r: int) -> KneserOrbitBound:
    """Union bound n!/2^m, m = C(n-2, r-1), over all automorphisms of K(n, r)."""
    _check_kneser_regime(n, r)
    m = math.comb(n - 2, r - 1)
    return KneserOrbitBound(n, r, m, Fraction(math.factorial(n), 2**m))


@dataclass(frozen=True)
class CategorySplit:
    n: int
    r: int
    m: int
    count_I: int
    count_II: int
    bound: Fraction  # count_I / 2^m + count_II / 2^(2m)
    reference_count_I: int
    reference_count_II: int

    @property
    def reference_bound(self) -> Fraction:
        return Fraction(self.reference_count_I, 2**self.m) + Fraction(self.reference_count_II, 2 ** (2 * self.m))

    @property
    def matches_reference(self) -> bool:
        return (self.count_I, self.count_II) == (self.reference_count_I, self.reference_count_II)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "m": self.m,
            "count_I": self.count_I,
            "count_II": self.count_II,
            "bound": str(self.bound),
            "decimal": decimal_string(self.bound),
            "below_one": self.bound < 1,
            "reference_count_I": self.reference_count_I,
            "reference_count_II": self.reference_count_II,
            "reference_bound_decimal": decimal_string(self.reference_bound),
            "matches_reference": self.matches_reference,
        }


def _max_cycle_at_most_two(images: tuple[int, ...]) -> bool:
    # 0-based images; every point has period 1 or 2
    return all(images[images[i]] == i for i in range(len(images)))


def category_split(n: int, r: int = 3) -> CategorySplit:
    """Count nontrivial permutations of S_n by whether every cycle has length <= 2."""
    _check_kneser_regime(n, r)
    if n not in REFERENCE_CATEGORY_COUNTS:
        raise ValueError("category split is defined for n in {7, 8}")
    count_i = count_ii = 0
    for p in permutations(range(n)):
        if _max_cycle_at_most_two(p):
            count_i += 1
        else:
            count_ii += 1
    count_i -= 1  # identity
    m = math.comb(n - 2, r - 1)
    bound = Fraction(count_i, 2**m) + Fraction(count_ii, 2 ** (2 * m))
    pi, pii = REFERENCE_CATEGORY_COUNTS[n]
    return CategorySplit(n, r, m, count_i, count_ii, bound, pi, pii)
