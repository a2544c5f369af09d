"""List assignments, colourings and the distinguishing verifier.

Verification is exhaustive over S_n: the induced action of every permutation
on the coloured objects is tabulated with numpy (cached for n <= 9, streamed
in chunks above that) and a colouring is checked against all rows at once.
The exhaustive oracles (``exact_list_distinguishable`` and the distinguishing
number search) enumerate many colourings, so they use a cheaper exact test:
colour-preserving permutations must preserve a stable refinement of the
points, and only permutations inside that refinement are tried.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import islice, permutations, product
from typing import Iterator, Mapping, Sequence

import numpy as np

from .kneser_graph import KN_EDGES, KNESER_VERTICES, ColorableObjectSet, object_key, parse_object_key
from .perm_core import Permutation, cycle_type_of

__all__ = [
    "ListAssignment",
    "Coloring",
    "FixationCertificate",
    "SampleResult",
    "ConjectureRow",
    "ConjectureReport",
    "fixes_all_classes",
    "is_distinguishing",
    "random_list_coloring",
    "las_vegas_distinguish",
    "exact_fixation_probability",
    "expected_fixing_automorphisms",
    "exact_list_distinguishable",
    "brute_force_distinguishing_number",
    "conjecture_explore",
    "random_assignment",
    "fixation_probability_of_assignment",
    "VERIFY_CAP",
    "EXPECTED_CAP",
    "COLORING_CAP",
    "DEFAULT_MAX_TRIALS",
]

log = logging.getLogger(__name__)

VERIFY_CAP = 10
EXPECTED_CAP = 9
COLORING_CAP = 2**24
DEFAULT_MAX_TRIALS = 64
_TABLE_CACHE_N = 9
_CHUNK = 40320


# -- data ----------------------------------------------------------------------


def _normalise_list(colors) -> tuple[str, ...]:
    if isinstance(colors, str):
        raise TypeError("a colour list must be a sequence of strings, not a string")
    out = tuple(sorted({str(c) for c in colors}))
    if not out:
        raise ValueError("colour lists must be nonempty")
    return out


@dataclass(frozen=True)
class ListAssignment:
    """Colour lists aligned with ``object_set.objects``; each list sorted, no repeats."""

    object_set: ColorableObjectSet
    lists: tuple[tuple[str, ...], ...]
    k: int | None = field(default=None, compare=False)

    def __post_init__(self):
        lists = tuple(_normalise_list(l) for l in self.lists)
        object.__setattr__(self, "lists", lists)
        if len(lists) != len(self.object_set):
            raise ValueError(f"expected {len(self.object_set)} lists, got {len(lists)}")
        if self.k is not None and any(len(l) != self.k for l in lists):
            raise ValueError(f"not a uniform {self.k}-list assignment")

    @classmethod
    def identical(cls, object_set: ColorableObjectSet, colors: Sequence[str]) -> "ListAssignment":
        colors = _normalise_list(colors)
        return cls(object_set, (colors,) * len(object_set))

    @classmethod
    def from_mapping(cls, object_set: ColorableObjectSet, lists: Mapping) -> "ListAssignment":
        by_obj = {}
        for key, colors in lists.items():
            obj = parse_object_key(key) if isinstance(key, str) else tuple(sorted(key))
            by_obj[obj] = colors
        missing = [o for o in object_set.objects if o not in by_obj]
        if missing:
            raise ValueError(f"no list for objects {[object_key(o) for o in missing[:5]]}")
        extra = set(by_obj) - set(object_set.objects)
        if extra:
            raise ValueError(f"unknown objects {sorted(extra)[:5]}")
        return cls(object_set, tuple(by_obj[o] for o in object_set.objects))

    @property
    def n(self) -> int:
        return self.object_set.n

    @property
    def r(self) -> int:
        return self.object_set.r

    def uniform_size(self) -> int | None:
        sizes = {len(l) for l in self.lists}
        return sizes.pop() if len(sizes) == 1 else None

    def is_identical(self) -> bool:
        return len(set(self.lists)) == 1

    def palette(self) -> tuple[str, ...]:
        return tuple(sorted({c for l in self.lists for c in l}))

    def list_of(self, obj) -> tuple[str, ...]:
        return self.lists[self.object_set.index(obj)]

    def colorings_count(self) -> int:
        return math.prod(len(l) for l in self.lists)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "objects": self.object_set.kind,
            "lists": {object_key(o): list(l) for o, l in zip(self.object_set.objects, self.lists)},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ListAssignment":
        objs = ColorableObjectSet(data.get("objects", KNESER_VERTICES), int(data["n"]), int(data["r"]))
        return cls.from_mapping(objs, data["lists"])


@dataclass(frozen=True)
class Coloring:
    object_set: ColorableObjectSet
    colors: tuple[str, ...]

    def __post_init__(self):
        colors = tuple(str(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != len(self.object_set):
            raise ValueError(f"expected {len(self.object_set)} colours, got {len(colors)}")

    @classmethod
    def from_mapping(cls, object_set: ColorableObjectSet, colors: Mapping) -> "Coloring":
        by_obj = {(parse_object_key(k) if isinstance(k, str) else tuple(sorted(k))): v for k, v in colors.items()}
        try:
            return cls(object_set, tuple(by_obj[o] for o in object_set.objects))
        except KeyError as exc:
            raise ValueError(f"object {exc.args[0]} has no colour") from None

    def color_of(self, obj) -> str:
        return self.colors[self.object_set.index(obj)]

    def respects(self, lists: ListAssignment) -> bool:
        return lists.object_set == self.object_set and all(c in l for c, l in zip(self.colors, lists.lists))

    def classes(self) -> dict[str, frozenset[int]]:
        out: dict[str, set[int]] = {}
        for i, c in enumerate(self.colors):
            out.setdefault(c, set()).add(i)
        return {c: frozenset(s) for c, s in out.items()}

    def codes(self) -> np.ndarray:
        _, inv = np.unique(np.array(self.colors, dtype=object).astype(str), return_inverse=True)
        return inv.astype(np.int32)

    def to_json(self) -> dict:
        return {
            "n": self.object_set.n,
            "r": self.object_set.r,
            "objects": self.object_set.kind,
            "colors": {object_key(o): c for o, c in zip(self.object_set.objects, self.colors)},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Coloring":
        objs = ColorableObjectSet(data.get("objects", KNESER_VERTICES), int(data["n"]), int(data["r"]))
        return cls.from_mapping(objs, data["colors"])


@dataclass(frozen=True)
class FixationCertificate:
    verdict: bool  # True: distinguishing
    witness: Permutation | None
    checked_count: int

    def to_json(self) -> dict:
        return {
            "distinguishing": self.verdict,
            "witness": None if self.witness is None else self.witness.to_json(),
            "checked_count": self.checked_count,
        }


# -- the induced-action table ----------------------------------------------------------


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("KNESER_DIST_THREADS", "1")))
    except ValueError:
        return 1


def _lookup(n: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    objs = ColorableObjectSet(KNESER_VERTICES, n, r)
    elems = np.array([[x - 1 for x in o] for o in objs.objects], dtype=np.int64)
    table = np.full(1 << n, -1, dtype=np.int64)
    table[np.array(objs.masks, dtype=np.int64)] = np.arange(len(objs))
    return elems, table


def _induced(perms: np.ndarray, elems: np.ndarray, lookup: np.ndarray) -> np.ndarray:
    # perms: (B, n) 0-based point images -> (B, m) object images
    images = perms[:, elems]
    masks = np.bitwise_or.reduce(np.left_shift(1, images), axis=-1)
    out = lookup[masks]
    dtype = np.int8 if lookup.max() < 127 else np.int16
    return out.astype(dtype)


def _perm_chunks(n: int, size: int = _CHUNK) -> Iterator[np.ndarray]:
    it = permutations(range(n))
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


@lru_cache(maxsize=4)
def _cached_table(n: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    elems, lookup = _lookup(n, r)
    perms = np.concatenate(list(_perm_chunks(n, 100_000)))
    return perms.astype(np.int8), _induced(perms, elems, lookup)


def _tables(n: int, r: int) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
    """Yield (offset, point perms, object images) blocks in lexicographic order of S_n."""
    if n <= _TABLE_CACHE_N:
        perms, table = _cached_table(n, r)
        yield 0, perms, table
        return
    elems, lookup = _lookup(n, r)
    offset = 0
    for perms in _perm_chunks(n):
        yield offset, perms, _induced(perms, elems, lookup)
        offset += len(perms)


def _first_fixer_in(codes: np.ndarray, table: np.ndarray) -> int:
    # index of the first row whose induced map preserves the colouring, or -1
    workers = _threads()
    if workers == 1 or len(table) < 50_000:
        hits = np.flatnonzero((codes[table] == codes).all(axis=1))
        return int(hits[0]) if len(hits) else -1
    bounds = np.linspace(0, len(table), workers + 1, dtype=int)

    def scan(lo_hi):
        lo, hi = lo_hi
        hits = np.flatnonzero((codes[table[lo:hi]] == codes).all(axis=1))
        return lo + int(hits[0]) if len(hits) else -1

    with ThreadPoolExecutor(workers) as pool:
        found = [i for i in pool.map(scan, zip(bounds[:-1], bounds[1:])) if i >= 0]
    return min(found) if found else -1


def _check_cap(n: int, cap: int, override: bool):
    if n > cap and not override:
        raise ValueError(f"exhaustive verification over S_{n} exceeds cap n <= {cap}; pass override=True")


# -- verifier ------------------------------------------------------------------------------


def fixes_all_classes(c: Coloring, sigma: Permutation) -> bool:
    """True iff every object has the same colour as its image under sigma."""
    image = c.object_set.image_indices(sigma)
    return all(c.colors[image[i]] == c.colors[i] for i in range(len(image)))


def is_distinguishing(c: Coloring, cap: int = VERIFY_CAP, override: bool = False) -> FixationCertificate:
    """Scan all of S_n; the witness, if any, is the first nontrivial fixer in lexicographic order."""
    n, r = c.object_set.n, c.object_set.r
    _check_cap(n, cap, override)
    codes = c.codes()
    total = 0
    for offset, perms, table in _tables(n, r):
        if offset == 0:
            # row 0 is the identity
            idx = _first_fixer_in(codes, table[1:])
            idx = idx + 1 if idx >= 0 else -1
        else:
            idx = _first_fixer_in(codes, table)
        if idx >= 0:
            witness = Permutation(tuple(int(x) + 1 for x in perms[idx]))
            return FixationCertificate(False, witness, offset + idx + 1)
        total = offset + len(table)
    return FixationCertificate(True, None, total)


# -- cheap exact check used by the enumerating oracles ----------------------------------------


class _FastChecker:
    """Exact test for 'some nontrivial sigma preserves this colouring' on one object set."""

    def __init__(self, object_set: ColorableObjectSet):
        self.n = object_set.n
        self.r = object_set.r
        self.objs = [tuple(x - 1 for x in o) for o in object_set.objects]
        self.incident = [[] for _ in range(self.n)]
        for i, o in enumerate(self.objs):
            for x in o:
                self.incident[x].append(i)
        self.index = {o: i for i, o in enumerate(self.objs)}

    def _stable_labels(self, codes) -> list[int]:
        label = [0] * self.n
        classes = 1
        while True:
            sig = []
            for x in range(self.n):
                nb = sorted(
                    (codes[i], tuple(sorted(label[y] for y in self.objs[i] if y != x))) for i in self.incident[x]
                )
                sig.append((label[x], tuple(nb)))
            ranks = {s: k for k, s in enumerate(sorted(set(sig)))}
            new = [ranks[s] for s in sig]
            if len(ranks) == classes:
                return new
            label, classes = new, len(ranks)

    def has_fixer(self, codes) -> bool:
        label = self._stable_labels(codes)
        groups: dict[int, list[int]] = {}
        for x, l in enumerate(label):
            groups.setdefault(l, []).append(x)
        cells = [g for g in groups.values() if len(g) > 1]
        if not cells:
            return False
        space = math.prod(math.factorial(len(g)) for g in cells)
        if space > 720:
            return self._table_has_fixer(codes, label)
        for choice in product(*(permutations(g) for g in cells)):
            img = list(range(self.n))
            for g, p in zip(cells, choice):
                for a, b in zip(g, p):
                    img[a] = b
            if all(img[x] == x for x in range(self.n)):
                continue
            if all(
                codes[self.index[tuple(sorted(img[x] for x in o))]] == codes[i] for i, o in enumerate(self.objs)
            ):
                return True
        return False

    def _table_has_fixer(self, codes, label) -> bool:
        codes = np.asarray(codes)
        lab = np.asarray(label)
        for offset, perms, table in _tables(self.n, self.r):
            ok = (lab[perms] == lab).all(axis=1)
            if offset == 0:
                ok[0] = False
            rows = table[ok]
            if len(rows) and (codes[rows] == codes).all(axis=1).any():
                return True
        return False


@lru_cache(maxsize=16)
def _fast_checker(object_set: ColorableObjectSet) -> _FastChecker:
    return _FastChecker(object_set)


# -- random colourings -----------------------------------------------------------------------


def random_list_coloring(L: ListAssignment, seed: int) -> Coloring:
    """Each object's colour uniform and independent from its list (numpy PCG64 seeded by ``seed``)."""
    rng = np.random.default_rng(seed)
    sizes = np.fromiter((len(l) for l in L.lists), dtype=np.int64, count=len(L.lists))
    picks = rng.integers(0, sizes)
    return Coloring(L.object_set, tuple(l[int(p)] for l, p in zip(L.lists, picks)))


@dataclass(frozen=True)
class SampleResult:
    success: bool
    coloring: Coloring | None
    trials: int
    certificate: FixationCertificate | None = None
    bound: Fraction | None = None  # applicable union bound on the per-trial failure probability

    def to_json(self) -> dict:
        out = {"success": self.success, "trials": self.trials}
        if self.coloring is not None:
            out["coloring"] = self.coloring.to_json()
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.bound is not None:
            from .dyadic import decimal_string

            out["bound"] = str(self.bound)
            out["bound_decimal"] = decimal_string(self.bound)
        return out


def applicable_bound(L: ListAssignment) -> Fraction | None:
    """Union bound on the chance a random colouring is not distinguishing, when one applies."""
    from . import fixation_bounds as fb

    n, r = L.n, L.r
    if r == 2 and n >= 8:
        return fb.f_sum(n).total.to_fraction()
    if r >= 3 and n >= 2 * r + 1:
        if n in fb.REFERENCE_CATEGORY_COUNTS and r == 3:
            return fb.category_split(n, r).bound
        return fb.kneser_orbit_bound(n, r).total
    return None


def las_vegas_distinguish(
    L: ListAssignment,
    max_trials: int = DEFAULT_MAX_TRIALS,
    seed: int = 0,
    cap: int = VERIFY_CAP,
    override: bool = False,
) -> SampleResult:
    """Sample list colourings (trial t uses seed + t) until one verifies as distinguishing."""
    if any(len(l) == 0 for l in L.lists):
        raise ValueError("empty list")
    _check_cap(L.n, cap, override)
    bound = applicable_bound(L)
    for t in range(max_trials):
        c = random_list_coloring(L, seed + t)
        cert = is_distinguishing(c, cap, override)
        if cert.verdict:
            return SampleResult(True, c, t + 1, cert, bound)
    return SampleResult(False, None, max_trials, None, bound)


# -- exact probabilities ------------------------------------------------------------------------


def exact_fixation_probability(L: ListAssignment, sigma: Permutation) -> Fraction:
    """P(a random list colouring is constant on every <sigma>-orbit), exactly."""
    image = L.object_set.image_indices(sigma)
    seen = [False] * len(image)
    prob = Fraction(1)
    for start in range(len(image)):
        if seen[start]:
            continue
        common = None
        denom = 1
        i = start
        while not seen[i]:
            seen[i] = True
            lst = L.lists[i]
            common = set(lst) if common is None else common & set(lst)
            denom *= len(lst)
            i = image[i]
        if not common:
            return Fraction(0)
        prob *= Fraction(len(common), denom)
    return prob


def expected_fixing_automorphisms(
    L: ListAssignment, cap: int = EXPECTED_CAP, min_cycle: int = 1
) -> Fraction:
    """Sum of fixation probabilities over nontrivial sigma in S_n (optionally all cycles >= min_cycle)."""
    if L.n > cap:
        raise ValueError(f"n={L.n} exceeds enumeration cap {cap}")
    total = Fraction(0)
    for p in permutations(range(1, L.n + 1)):
        sigma = Permutation(p)
        if sigma.is_identity():
            continue
        if min_cycle > 1 and cycle_type_of(sigma).min_length < min_cycle:
            continue
        total += exact_fixation_probability(L, sigma)
    return total


# -- exhaustive oracles -------------------------------------------------------------------------


def _palette_codes(L: ListAssignment) -> tuple[tuple[str, ...], list[list[int]]]:
    palette = L.palette()
    idx = {c: i for i, c in enumerate(palette)}
    return palette, [[idx[c] for c in l] for l in L.lists]


def exact_list_distinguishable(
    L: ListAssignment, cap_colorings: int = COLORING_CAP, cap: int = VERIFY_CAP
) -> tuple[bool, Coloring | None]:
    """Enumerate every colouring from the lists; return the first distinguishing one (list order)."""
    _check_cap(L.n, cap, False)
    total = L.colorings_count()
    if total > cap_colorings:
        raise ValueError(f"{total} colourings exceed the oracle cap {cap_colorings}")
    palette, code_lists = _palette_codes(L)
    checker = _fast_checker(L.object_set)
    for codes in product(*code_lists):
        if not checker.has_fixer(codes):
            c = Coloring(L.object_set, tuple(palette[i] for i in codes))
            if not is_distinguishing(c, cap).verdict:  # pragma: no cover - the two checks must agree
                raise AssertionError("fast check and full verifier disagree")
            return True, c
    return False, None


def brute_force_distinguishing_number(
    n: int,
    r: int,
    k_max: int,
    prune: bool = True,
    seed: int = 0,
    random_trials: int = 200,
    cap_colorings: int = COLORING_CAP,
    cap: int = VERIFY_CAP,
) -> int | None:
    """Least k <= k_max with a distinguishing k-colouring of the r-subsets of {1..n}; None if none.

    Existence is settled by a verified witness, found first by seeded random
    sampling and otherwise by exhaustive enumeration; non-existence only by
    exhausting the colouring space.  With ``prune`` the first object is held at
    colour 0, which loses nothing because renaming colours maps distinguishing
    colourings to distinguishing colourings.
    """
    objs = ColorableObjectSet(KNESER_VERTICES, n, r)
    _check_cap(n, cap, False)
    m = len(objs)
    checker = _fast_checker(objs)
    rng = np.random.default_rng(seed)
    for k in range(1, k_max + 1):
        for _ in range(random_trials if k > 1 else 0):
            codes = tuple(int(x) for x in rng.integers(0, k, m))
            if not checker.has_fixer(codes):
                if is_distinguishing(Coloring(objs, tuple(map(str, codes))), cap).verdict:
                    return k
        space = k ** (m - 1) if prune else k**m
        if space > cap_colorings:
            raise ValueError(f"k={k}: {space} colourings exceed the cap and random search found no witness")
        head = [(0,)] if prune else [range(k)]
        for codes in product(*head, *([range(k)] * (m - 1))):
            if not checker.has_fixer(codes):
                return k
    return None


# -- conjecture exploration ----------------------------------------------------------------------


def random_assignment(object_set: ColorableObjectSet, k: int, palette_size: int, seed: int) -> ListAssignment:
    """Uniform k-lists, each a random k-subset of colours c1..c{palette_size}."""
    if palette_size < k:
        raise ValueError("palette smaller than list size")
    rng = np.random.default_rng(seed)
    palette = [f"c{i}" for i in range(1, palette_size + 1)]
    lists = tuple(tuple(palette[int(j)] for j in rng.choice(palette_size, size=k, replace=False)) for _ in range(len(object_set)))
    return ListAssignment(object_set, lists, k=k)


def fixation_probability_of_assignment(L: ListAssignment, cap_colorings: int = COLORING_CAP) -> Fraction:
    """p(L): probability that a uniform random list colouring is fixed by some nontrivial sigma."""
    total = L.colorings_count()
    if total > cap_colorings:
        raise ValueError(f"{total} colourings exceed the cap {cap_colorings}")
    if L.n > _TABLE_CACHE_N:
        raise ValueError(f"exact p(L) needs n <= {_TABLE_CACHE_N}")
    _, code_lists = _palette_codes(L)
    table = _cached_table(L.n, L.r)[1][1:]
    radices = np.array([len(c) for c in code_lists], dtype=np.int64)
    options = [np.array(c, dtype=np.int32) for c in code_lists]
    fixed = 0
    step = max(1, 2_000_000 // (len(table) * len(radices)))
    for start in range(0, total, step):
        idx = np.arange(start, min(total, start + step), dtype=np.int64)
        cols = []
        # mixed radix, last object varies fastest
        for pos in range(len(radices) - 1, -1, -1):
            idx, digit = np.divmod(idx, radices[pos])
            cols.append(options[pos][digit])
        C = np.stack(cols[::-1], axis=1)
        hit = (C[:, table] == C[:, None, :]).all(axis=2).any(axis=1)
        fixed += int(hit.sum())
    return Fraction(fixed, total)


@dataclass(frozen=True)
class ConjectureRow:
    label: str
    identical: bool
    expected: Fraction
    p_exact: Fraction | None

    def to_json(self) -> dict:
        from .dyadic import decimal_string

        return {
            "label": self.label,
            "identical": self.identical,
            "expected": str(self.expected),
            "expected_decimal": decimal_string(self.expected),
            "p_exact": None if self.p_exact is None else str(self.p_exact),
            "p_decimal": None if self.p_exact is None else decimal_string(self.p_exact),
        }


@dataclass(frozen=True)
class ConjectureReport:
    """Sampled comparison against identical lists. Exploratory only; proves nothing."""

    n: int
    r: int
    k: int
    rows: tuple[ConjectureRow, ...]
    note: str = field(default="exploratory sample, not a proof")

    @property
    def identical_row(self) -> ConjectureRow:
        return next(r for r in self.rows if r.identical)

    @property
    def identical_max_expected(self) -> bool:
        return all(r.expected <= self.identical_row.expected for r in self.rows)

    @property
    def identical_max_p(self) -> bool | None:
        if any(r.p_exact is None for r in self.rows):
            return None
        return all(r.p_exact <= self.identical_row.p_exact for r in self.rows)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "note": self.note,
            "identical_max_expected": self.identical_max_expected,
            "identical_max_p": self.identical_max_p,
            "rows": [r.to_json() for r in self.rows],
        }


def conjecture_explore(
    n: int,
    r: int,
    k: int,
    assignments: Sequence[ListAssignment],
    cap_colorings: int = COLORING_CAP,
) -> ConjectureReport:
    """Compare each assignment with identical k-lists on the same objects.

    The identical assignment is prepended; p(L) is computed exactly when every
    assignment is within ``cap_colorings``, otherwise only expected counts are
    reported.
    """
    kind = KN_EDGES if r == 2 else KNESER_VERTICES
    objs = ColorableObjectSet(kind, n, r)
    same = ListAssignment.identical(objs, [f"c{i}" for i in range(1, k + 1)])
    rows_in = [("identical", same)] + [(f"sample-{i}", a) for i, a in enumerate(assignments)]
    for _, a in rows_in:
        if a.uniform_size() != k:
            raise ValueError("every assignment must be a uniform k-list assignment")
        if (a.n, a.r) != (n, r):
            raise ValueError("assignment does not match (n, r)")
    exact_p = all(a.colorings_count() <= cap_colorings for _, a in rows_in) and n <= _TABLE_CACHE_N
    rows = []
    for label, a in rows_in:
        exp = expected_fixing_automorphisms(a)
        p = fixation_probability_of_assignment(a, cap_colorings) if exact_p else None
        rows.append(ConjectureRow(label, a is same, exp, p))
    return ConjectureReport(n, r, k, tuple(rows))
