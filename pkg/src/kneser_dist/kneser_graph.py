"""Kneser graphs K(n, r) and the edge view of K(n, 2).

Vertices are r-subsets of {1..n} in bit-set order.  For r = 2 the same
ordering is used for the edges of K_n, so vertex i of K(n, 2) *is* edge i of
K_n and the bijection is the identity on indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .perm_core import Permutation, mask_to_tuple, subset_masks, _mask_index

__all__ = [
    "KneserGraph",
    "ColorableObjectSet",
    "build",
    "induced_vertex_map",
    "edge_view",
    "kneser_vertices",
    "object_key",
    "parse_object_key",
    "MAX_N",
]

MAX_N = 64

KNESER_VERTICES = "kneser-vertices"
KN_EDGES = "kn-edges"
_KIND_ALIASES = {
    KNESER_VERTICES: KNESER_VERTICES,
    "vertices": KNESER_VERTICES,
    KN_EDGES: KN_EDGES,
    "edges": KN_EDGES,
    "k4-edges": KN_EDGES,
    "complete-graph-edges": KN_EDGES,
}


def object_key(obj: tuple[int, ...]) -> str:
    return ",".join(map(str, obj))


def parse_object_key(key: str) -> tuple[int, ...]:
    return tuple(sorted(int(x) for x in key.split(",")))


@dataclass(frozen=True)
class ColorableObjectSet:
    """The things being coloured: r-subsets of {1..n}, canonically ordered.

    ``kind`` is ``"kneser-vertices"`` or ``"kn-edges"`` (only with r = 2).
    """

    kind: str
    n: int
    r: int

    def __post_init__(self):
        kind = _KIND_ALIASES.get(self.kind)
        if kind is None:
            raise ValueError(f"unknown object kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if kind == KN_EDGES and self.r != 2:
            raise ValueError("edge view requires r = 2")
        if not 1 <= self.r <= self.n <= MAX_N:
            raise ValueError(f"need 1 <= r <= n <= {MAX_N}")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return subset_masks(self.n, self.r)

    @cached_property
    def objects(self) -> tuple[tuple[int, ...], ...]:
        return tuple(mask_to_tuple(m) for m in self.masks)

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {o: i for i, o in enumerate(self.objects)}

    def __len__(self):
        return len(self.masks)

    def index(self, obj) -> int:
        return self._index[tuple(sorted(obj))]

    def keys(self) -> list[str]:
        return [object_key(o) for o in self.objects]

    def image_indices(self, sigma: Permutation) -> list[int]:
        """Index permutation induced by sigma: position i goes to returned[i]."""
        if sigma.n != self.n:
            raise ValueError("permutation degree does not match n")
        index = _mask_index(self.n, self.r)
        img = sigma.images
        out = []
        for mask in self.masks:
            new = 0
            x = 0
            while mask:
                if mask & 1:
                    new |= 1 << (img[x] - 1)
                mask >>= 1
                x += 1
            out.append(index[new])
        return out

    def as_kneser(self) -> "ColorableObjectSet":
        return ColorableObjectSet(KNESER_VERTICES, self.n, self.r)


@dataclass(frozen=True)
class KneserGraph:
    n: int
    r: int

    def __post_init__(self):
        if self.r < 2 or self.n < 2 * self.r + 1:
            raise ValueError(f"K(n, r) needs r >= 2 and n >= 2r+1; got n={self.n}, r={self.r}")
        if self.n > MAX_N:
            raise ValueError(f"n <= {MAX_N} required")

    @cached_property
    def object_set(self) -> ColorableObjectSet:
        return ColorableObjectSet(KNESER_VERTICES, self.n, self.r)

    @property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return self.object_set.objects

    @property
    def num_vertices(self) -> int:
        return len(self.object_set)

    @property
    def degree(self) -> int:
        return math.comb(self.n - self.r, self.r)

    def adjacent(self, i: int, j: int) -> bool:
        masks = self.object_set.masks
        return masks[i] & masks[j] == 0

    def neighbours(self, i: int) -> list[int]:
        masks = self.object_set.masks
        m = masks[i]
        return [j for j, other in enumerate(masks) if m & other == 0]

    def edges(self) -> list[tuple[int, int]]:
        masks = self.object_set.masks
        return [(i, j) for i in range(len(masks)) for j in range(i + 1, len(masks)) if masks[i] & masks[j] == 0]


def build(n: int, r: int) -> KneserGraph:
    return KneserGraph(n, r)


def kneser_vertices(n: int, r: int) -> ColorableObjectSet:
    return ColorableObjectSet(KNESER_VERTICES, n, r)


def induced_vertex_map(g: KneserGraph, sigma: Permutation) -> Permutation:
    """sigma acting on vertex indices (returned 1-based, as a Permutation of 1..C(n,r))."""
    return Permutation(tuple(i + 1 for i in g.object_set.image_indices(sigma)))


def edge_view(n: int) -> ColorableObjectSet:
    if n < 3:
        raise ValueError("edge view needs n >= 3")
    return ColorableObjectSet(KN_EDGES, n, 2)
