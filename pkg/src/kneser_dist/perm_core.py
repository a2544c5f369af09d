"""Permutations of {1..n}, cycle types, partition enumeration and orbits.

Everything here is 1-based on the outside. r-subsets of {1..n} are handled
internally as bit sets (bit ``x-1`` set when ``x`` is a member) and are ordered
by the numeric value of that bit set.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

__all__ = [
    "Permutation",
    "CycleType",
    "Action",
    "OrbitPartition",
    "POINTS",
    "PAIRS",
    "subsets_action",
    "cycle_type_of",
    "enumerate_cycle_types",
    "enumerate_cycle_types_min",
    "count_permutations",
    "orbits_of",
    "orbit_deficit",
    "subset_masks",
    "mask_to_tuple",
    "tuple_to_mask",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i]`` is the image of ``i + 1``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise ValueError("permutation must act on at least one point")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection on 1..{len(images)}: {list(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(5, [(1, 2), (3, 4, 5)])``."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n or x in seen:
                    raise ValueError(f"cycles are not disjoint on 1..{n}: {cycles}")
                seen.add(x)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(x) == self(other(x))
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, y in enumerate(self.images, start=1):
            inv[y - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == i for i, y in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its least element."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x - 1]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def to_json(self) -> list[int]:
        return list(self.images)

    def __repr__(self):
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return f"Permutation(id_{self.n})"
        return "Permutation(" + "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial) + ")"


@dataclass(frozen=True)
class CycleType:
    """Cycle type as ``((length, multiplicity), ...)`` with strictly increasing lengths."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        parts = tuple((int(a), int(m)) for a, m in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("empty cycle type")
        for a, m in parts:
            if a < 1 or m < 1:
                raise ValueError(f"lengths and multiplicities must be positive: {parts}")
        lengths = [a for a, _ in parts]
        if any(x >= y for x, y in zip(lengths, lengths[1:])):
            raise ValueError(f"cycle lengths must be strictly increasing: {parts}")

    @classmethod
    def from_lengths(cls, lengths: Sequence[int]) -> "CycleType":
        return cls(tuple(sorted(Counter(lengths).items())))

    @property
    def n(self) -> int:
        return sum(a * m for a, m in self.parts)

    def lengths(self) -> tuple[int, ...]:
        """Cycle lengths expanded and ascending, e.g. (1, 1, 2)."""
        return tuple(a for a, m in self.parts for _ in range(m))

    @property
    def min_length(self) -> int:
        return self.parts[0][0]

    def is_identity(self) -> bool:
        return self.parts == ((1, self.n),)

    def without_one_shortest(self) -> "CycleType | None":
        """The type obtained by deleting one shortest cycle; None if nothing remains."""
        (a, m), rest = self.parts[0], self.parts[1:]
        parts = ((a, m - 1),) + rest if m > 1 else rest
        return CycleType(parts) if parts else None

    def to_json(self) -> list[list[int]]:
        return [[a, m] for a, m in self.parts]

    def __str__(self):
        return "(" + " ".join(f"{a}^{m}" if m > 1 else str(a) for a, m in self.parts) + ")"


def cycle_type_of(sigma: Permutation) -> CycleType:
    return CycleType.from_lengths([len(c) for c in sigma.cycles()])


def _partitions(n: int, smallest: int) -> Iterator[tuple[int, ...]]:
    # ascending part lists in lexicographic order
    if n == 0:
        yield ()
        return
    for k in range(smallest, n + 1):
        if k == n or n - k >= k:
            for rest in _partitions(n - k, k):
                yield (k,) + rest


@lru_cache(maxsize=64)
def _cycle_types(n: int) -> tuple[CycleType, ...]:
    return tuple(CycleType.from_lengths(p) for p in _partitions(n, 1))


def enumerate_cycle_types(n: int) -> list[CycleType]:
    """All cycle types of S_n, lexicographic on ascending part lists."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_cycle_types(n))


def enumerate_cycle_types_min(n: int, r: int, exact: bool = False) -> list[CycleType]:
    """Cycle types of S_n with every cycle of length >= r (or minimum exactly r)."""
    if n < 1 or r < 1:
        raise ValueError("n and r must be >= 1")
    if r > n:
        raise ValueError(f"minimum cycle length {r} exceeds n={n}")
    if exact:
        return [t for t in _cycle_types(n) if t.min_length == r]
    return [t for t in _cycle_types(n) if t.min_length >= r]


def count_permutations(lam: CycleType) -> int:
    """Number of permutations of type ``lam``: n! / prod(a^m * m!)."""
    denom = 1
    for a, m in lam.parts:
        denom *= a**m * math.factorial(m)
    return math.factorial(lam.n) // denom


# -- actions and orbits ------------------------------------------------------


@dataclass(frozen=True)
class Action:
    """How S_n acts on a set of objects: on points (r=1) or on r-subsets."""

    kind: str  # "points" | "subsets"
    r: int = 1

    def __post_init__(self):
        if self.kind not in ("points", "subsets"):
            raise ValueError(f"unknown action kind {self.kind!r}")
        if self.kind == "points" and self.r != 1:
            raise ValueError("point action has r=1")
        if self.r < 1:
            raise ValueError("r must be >= 1")


POINTS = Action("points")
PAIRS = Action("subsets", 2)


def subsets_action(r: int) -> Action:
    return Action("subsets", r)


def tuple_to_mask(subset: Sequence[int]) -> int:
    mask = 0
    for x in subset:
        mask |= 1 << (x - 1)
    return mask


def mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


@lru_cache(maxsize=128)
def subset_masks(n: int, r: int) -> tuple[int, ...]:
    """Bit sets of all r-subsets of {1..n}, ascending by numeric value."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")
    if n > 64:
        raise ValueError("n > 64 not supported")
    return tuple(sorted(tuple_to_mask(c) for c in combinations(range(1, n + 1), r)))


def _objects(n: int, action: Action) -> tuple[int, ...]:
    if action.kind == "points":
        return tuple(range(1, n + 1))
    return subset_masks(n, action.r)


def _induced_index_map(sigma: Permutation, action: Action) -> list[int]:
    n = sigma.n
    if action.kind == "points":
        return [y - 1 for y in sigma.images]
    masks = subset_masks(n, action.r)
    index = _mask_index(n, action.r)
    img = sigma.images
    out = []
    for mask in masks:
        m, x, new = mask, 0, 0
        while m:
            if m & 1:
                new |= 1 << (img[x] - 1)
            m >>= 1
            x += 1
        out.append(index[new])
    return out


@lru_cache(maxsize=128)
def _mask_index(n: int, r: int) -> dict[int, int]:
    return {m: i for i, m in enumerate(subset_masks(n, r))}


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits of <sigma> on an object set.

    Objects are points (ints) for the natural action and sorted tuples for
    subset actions. Each orbit lists its objects in the order sigma visits
    them, starting from the canonically smallest member.
    """

    orbits: tuple[tuple, ...]
    object_count: int

    @property
    def deficit(self) -> int:
        """Objects minus orbits."""
        return self.object_count - len(self.orbits)

    def sizes(self) -> list[int]:
        return [len(o) for o in self.orbits]


def orbits_of(sigma: Permutation, action: Action) -> OrbitPartition:
    objects = _objects(sigma.n, action)
    image = _induced_index_map(sigma, action)
    render = (lambda i: objects[i]) if action.kind == "points" else (lambda i: mask_to_tuple(objects[i]))
    seen = [False] * len(objects)
    orbits = []
    for start in range(len(objects)):
        if seen[start]:
            continue
        orbit = []
        i = start
        while not seen[i]:
            seen[i] = True
            orbit.append(render(i))
            i = image[i]
        orbits.append(tuple(orbit))
    return OrbitPartition(tuple(orbits), len(objects))


def orbit_deficit(sigma: Permutation, action: Action) -> int:
    """Number of objects minus number of <sigma>-orbits (no orbit materialisation)."""
    image = _induced_index_map(sigma, action)
    seen = [False] * len(image)
    count = 0
    for start in range(len(image)):
        if seen[start]:
            continue
        count += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = image[i]
    return len(image) - count
