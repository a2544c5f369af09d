"""Deterministic list-distinguishing edge colourings of K_6 and K_7.

Given 2-lists on the edges of K_n (n = 6, 7) the colourer finds a longest
monochromatic path P (a path whose edge lists share a colour c1), renames the
vertices so that P is 1-2-...-|P|, and fills in a case-specific scheme: the
path edges get c1 and the remaining edges are constrained by forbidden
colours and by pairwise "different colour" requirements.  The scheme is
solved by backtracking in a fixed edge order, preferring the
lexicographically smaller colour, so whenever a greedy left-to-right choice
works it is exactly the colouring returned.

Every colouring is checked against all of S_n before it is returned.  If a
scheme has no solution on the actual lists or its output fails verification,
the exhaustive oracle is used instead and the event is logged.  When no
monochromatic path has two edges the random colourer is used.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .kneser_graph import KN_EDGES, ColorableObjectSet
from .list_distinguish import (
    DEFAULT_MAX_TRIALS,
    Coloring,
    ListAssignment,
    exact_list_distinguishable,
    is_distinguishing,
    random_list_coloring,
)

__all__ = [
    "MonoPath",
    "AvoidanceScheme",
    "ConstructionResult",
    "max_mono_path",
    "no_p2_random_distinguish",
    "construct_k6",
    "construct_k7",
    "construct",
    "scheme_for",
    "relabel_lists",
    "TRACES",
]

log = logging.getLogger(__name__)

Edge = tuple[int, int]

TRACES = ("P7", "P6", "P5", "P4", "P3-table1", "P3-table2", "P3-table3", "lemma9-random", "oracle-fallback")


def _e(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def _edge_lists(L: ListAssignment) -> dict[Edge, tuple[str, ...]]:
    return {tuple(o): l for o, l in zip(L.object_set.objects, L.lists)}


def _check_input(L: ListAssignment, n: int | None = None):
    if L.r != 2:
        raise ValueError("constructive colourings are for K(n, 2) / edges of K_n")
    if n is not None and L.n != n:
        raise ValueError(f"expected n={n}, got n={L.n}")
    if L.uniform_size() != 2:
        raise ValueError("constructive colourings need uniform 2-lists")


# -- monochromatic paths -----------------------------------------------------------


@dataclass(frozen=True)
class MonoPath:
    """A longest path whose edge lists share ``common_colors``; ``c1`` is the one used."""

    vertices: tuple[int, ...]
    common_colors: tuple[str, ...]
    c1: str

    def __len__(self):
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        return [_e(a, b) for a, b in zip(self.vertices, self.vertices[1:])]


def max_mono_path(L: ListAssignment) -> MonoPath | None:
    """Longest monochromatic path (most vertices); ties by vertex sequence, then colour.

    Returns None when no monochromatic path has two or more edges.
    """
    _check_input(L)
    n = L.n
    lists = _edge_lists(L)
    best_key = None
    best = None
    for color in L.palette():
        adj = {v: [] for v in range(1, n + 1)}
        for (a, b), lst in lists.items():
            if color in lst:
                adj[a].append(b)
                adj[b].append(a)
        for v in adj:
            adj[v].sort()
        # lexicographic DFS: the first path of a given length found is the smallest sequence
        for start in range(1, n + 1):
            stack = [(start, (start,))]
            while stack:
                v, path = stack.pop()
                key = (-len(path), path, color)
                if best_key is None or key < best_key:
                    best_key, best = key, (path, color)
                for w in reversed(adj[v]):
                    if w not in path:
                        stack.append((w, path + (w,)))
    if best is None or len(best[0]) < 3:
        return None
    path, color = best
    common = set(lists[_e(path[0], path[1])])
    for a, b in zip(path[1:], path[2:]):
        common &= set(lists[_e(a, b)])
    return MonoPath(path, tuple(sorted(common)), color)


# -- relabelling -----------------------------------------------------------------------


def _relabel_map(n: int, path: tuple[int, ...]) -> dict[int, int]:
    """old vertex -> new vertex, path vertices first in path order, the rest ascending."""
    rest = [v for v in range(1, n + 1) if v not in path]
    return {old: new for new, old in enumerate(list(path) + rest, start=1)}


def relabel_lists(L: ListAssignment, mapping: dict[int, int]) -> ListAssignment:
    objs = L.object_set
    lists = _edge_lists(L)
    moved = {_e(mapping[a], mapping[b]): lst for (a, b), lst in lists.items()}
    return ListAssignment(objs, tuple(moved[tuple(o)] for o in objs.objects))


def _relabel_coloring(c: Coloring, mapping: dict[int, int]) -> Coloring:
    objs = c.object_set
    moved = {_e(mapping[a], mapping[b]): col for (a, b), col in zip(objs.objects, c.colors)}
    return Coloring(objs, tuple(moved[tuple(o)] for o in objs.objects))


# -- schemes ------------------------------------------------------------------------------


@dataclass
class AvoidanceScheme:
    """Constraints in the relabelled frame.

    ``assignments`` force a colour, ``avoidances`` forbid fixed colours,
    ``distinct`` pairs must get different colours, ``soft`` colours are tried
    last on an edge, and ``priority`` edges are filled right after the forced
    ones.
    """

    name: str
    n: int
    assignments: dict[Edge, str] = field(default_factory=dict)
    avoidances: dict[Edge, set[str]] = field(default_factory=dict)
    distinct: list[tuple[Edge, Edge]] = field(default_factory=list)
    soft: dict[Edge, set[str]] = field(default_factory=dict)
    priority: list[Edge] = field(default_factory=list)

    def avoid(self, color: str, edges: Iterable[Edge]):
        for e in edges:
            self.avoidances.setdefault(_e(*e), set()).add(color)

    def differ(self, edge: Edge, others: Iterable[Edge]):
        for o in others:
            self.distinct.append((_e(*edge), _e(*o)))

    def order(self) -> list[Edge]:
        all_edges = [_e(i, j) for i, j in combinations(range(1, self.n + 1), 2)]
        out = list(self.assignments)
        for e in self.priority:
            if e not in out:
                out.append(e)
        out += sorted((e for e in all_edges if e not in out), key=lambda e: (e[1], e[0]))
        return out

    def solve(self, lists: dict[Edge, tuple[str, ...]]) -> dict[Edge, str] | None:
        order = self.order()
        neighbours: dict[Edge, list[Edge]] = {e: [] for e in order}
        for a, b in self.distinct:
            neighbours[a].append(b)
            neighbours[b].append(a)
        choice: dict[Edge, str] = {}

        def candidates(e):
            lst = lists[e]
            if e in self.assignments:
                return [self.assignments[e]] if self.assignments[e] in lst else []
            bad = self.avoidances.get(e, set())
            soft = self.soft.get(e, set())
            return sorted((c for c in lst if c not in bad), key=lambda c: (c in soft, c))

        def step(i):
            if i == len(order):
                return True
            e = order[i]
            for c in candidates(e):
                if any(choice.get(f) == c for f in neighbours[e]):
                    continue
                choice[e] = c
                if step(i + 1):
                    return True
                del choice[e]
            return False

        return dict(choice) if step(0) else None


def _path_scheme(name: str, n: int, k: int, c1: str, exempt: Iterable[Edge] = ()) -> AvoidanceScheme:
    """Path 1..k coloured c1; every other edge avoids c1 except the ``exempt`` ones (soft)."""
    s = AvoidanceScheme(name, n)
    path = [_e(i, i + 1) for i in range(1, k)]
    for e in path:
        s.assignments[e] = c1
    exempt = {_e(*e) for e in exempt}
    others = [_e(i, j) for i, j in combinations(range(1, n + 1), 2) if _e(i, j) not in path]
    s.avoid(c1, (e for e in others if e not in exempt))
    for e in exempt:
        s.soft[e] = {c1}
    return s


def scheme_for(n: int, size: int, c1: str, lists: dict[Edge, tuple[str, ...]]) -> AvoidanceScheme:
    """The case scheme for a longest monochromatic path 1-2-...-size (relabelled frame)."""
    if n == 6:
        if size == 6:
            s = _path_scheme("P6", 6, 6, c1, exempt=[(2, 4), (3, 5)])
            s.differ((2, 4), [(3, 5)])
        elif size == 5:
            s = _path_scheme("P5", 6, 5, c1)
            s.differ((1, 6), [(5, 6)])
        elif size == 4:
            s = _path_scheme("P4", 6, 4, c1)
            s.priority = [(1, 4), (1, 6), (4, 6), (4, 5)]
            s.differ((4, 5), [(1, 4), (1, 6), (4, 6)])
        elif size == 3:
            s = AvoidanceScheme("P3-table1", 6, assignments={(1, 2): c1, (2, 3): c1})
            s.priority = [(1, 6), (4, 6)]
            s.avoid(c1, [(2, 4), (2, 5), (2, 6), (1, 3), (4, 5)])
            for e in [(3, 4), (3, 5), (3, 6), (1, 4), (1, 5)]:
                s.differ(e, [(1, 6)])
            s.differ((5, 6), [(4, 6)])
        else:
            raise ValueError(f"no scheme for |P|={size}")
        return s
    if n == 7:
        if size == 7:
            s = _path_scheme("P7", 7, 7, c1, exempt=[(2, 4), (4, 6)])
            s.differ((2, 4), [(4, 6)])
        elif size == 6:
            s = _path_scheme("P6", 7, 6, c1, exempt=[(2, 4), (3, 5)])
            s.differ((2, 4), [(3, 5)])
        elif size == 5:
            s = _path_scheme("P5", 7, 5, c1)
            s.priority = [(1, 6), (1, 7), (5, 7), (5, 6)]
            s.differ((5, 6), [(1, 6), (1, 7), (5, 7)])
        elif size == 4:
            s = _path_scheme("P4", 7, 4, c1)
            s.priority = [(5, 6), (5, 7), (6, 7), (4, 7), (1, 7), (1, 5), (1, 6)]
            s.differ((5, 6), [(6, 7), (5, 7)])
            s.differ((1, 7), [(4, 7)])
            s.differ((1, 6), [(1, 5)])
        elif size == 3:
            if c1 in lists[(2, 7)]:
                s = AvoidanceScheme("P3-table2", 7, assignments={(1, 2): c1, (2, 3): c1})
                s.avoid(c1, [(2, 4), (2, 5), (2, 6), (1, 3), (4, 5), (2, 7)])
                for e in [(3, 4), (3, 5), (3, 6), (1, 4), (1, 5), (3, 7)]:
                    s.differ(e, [(1, 6)])
                for e in [(4, 7), (5, 6), (6, 7)]:
                    s.differ(e, [(4, 6)])
            else:
                s = AvoidanceScheme("P3-table3", 7, assignments={(1, 2): c1, (2, 3): c1})
                s.avoid(c1, [(2, 4), (2, 5), (2, 6), (1, 3), (4, 5), (4, 7), (5, 7), (6, 7)])
                for e in [(3, 4), (3, 5), (3, 6), (1, 4), (1, 5), (3, 7)]:
                    s.differ(e, [(1, 6)])
                s.differ((5, 6), [(4, 6)])
                s.differ((2, 7), [(2, 4)])
            s.differ((1, 7), [(1, 5)])
            s.differ((3, 7), [(3, 6)])  # e37 carries both constraints
            s.priority = [(1, 6), (4, 6), (1, 5), (3, 6), (2, 4)]
        else:
            raise ValueError(f"no scheme for |P|={size}")
        return s
    raise ValueError("schemes exist for n = 6 and n = 7 only")


# -- drivers ----------------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionResult:
    coloring: Coloring
    trace: str
    path: MonoPath | None = None
    fallback_reason: str | None = None

    def to_json(self) -> dict:
        out = self.coloring.to_json()
        out["trace"] = self.trace
        if self.path is not None:
            out["path"] = list(self.path.vertices)
            out["c1"] = self.path.c1
        if self.fallback_reason is not None:
            out["fallback_reason"] = self.fallback_reason
        return out


def _oracle(L: ListAssignment, reason: str, path: MonoPath | None = None) -> ConstructionResult:
    log.warning("falling back to exhaustive oracle: %s", reason)
    ok, c = exact_list_distinguishable(L)
    if not ok:
        raise RuntimeError(f"no distinguishing list colouring exists ({reason})")
    return ConstructionResult(c, "oracle-fallback", path, reason)


def no_p2_random_distinguish(
    L: ListAssignment, seed: int = 0, max_trials: int = DEFAULT_MAX_TRIALS
) -> ConstructionResult:
    """Random list colourings, verified; used when no monochromatic path has two edges."""
    _check_input(L)
    if L.n < 6:
        raise ValueError("needs n >= 6")
    for t in range(max_trials):
        c = random_list_coloring(L, seed + t)
        if is_distinguishing(c).verdict:
            return ConstructionResult(c, "lemma9-random")
    return _oracle(L, f"random colouring budget of {max_trials} trials exhausted")


def _construct(L: ListAssignment, n: int, seed: int, max_trials: int) -> ConstructionResult:
    _check_input(L, n)
    path = max_mono_path(L)
    if path is None:
        return no_p2_random_distinguish(L, seed, max_trials)
    mapping = _relabel_map(n, path.vertices)
    inverse = {v: k for k, v in mapping.items()}
    local = relabel_lists(L, mapping)
    lists = _edge_lists(local)
    scheme = scheme_for(n, len(path), path.c1, lists)
    solved = scheme.solve(lists)
    if solved is None:
        return _oracle(L, f"{scheme.name}: constraints infeasible on the given lists", path)
    objs = local.object_set
    local_coloring = Coloring(objs, tuple(solved[tuple(o)] for o in objs.objects))
    coloring = _relabel_coloring(local_coloring, inverse)
    if not coloring.respects(L):  # pragma: no cover - solver only picks list colours
        return _oracle(L, f"{scheme.name}: output violates the lists", path)
    if not is_distinguishing(coloring).verdict:
        return _oracle(L, f"{scheme.name}: output not distinguishing", path)
    return ConstructionResult(coloring, scheme.name, path)


def construct_k6(L: ListAssignment, seed: int = 0, max_trials: int = DEFAULT_MAX_TRIALS) -> ConstructionResult:
    return _construct(L, 6, seed, max_trials)


def construct_k7(L: ListAssignment, seed: int = 0, max_trials: int = DEFAULT_MAX_TRIALS) -> ConstructionResult:
    return _construct(L, 7, seed, max_trials)


def construct(L: ListAssignment, seed: int = 0, max_trials: int = DEFAULT_MAX_TRIALS) -> ConstructionResult:
    if L.n == 6:
        return construct_k6(L, seed, max_trials)
    if L.n == 7:
        return construct_k7(L, seed, max_trials)
    raise ValueError(f"constructive colourings cover n = 6, 7 only (got n={L.n}); use `sample` instead")


def as_edge_lists(L: ListAssignment) -> ListAssignment:
    """View a K(n, 2) vertex assignment as lists on the edges of K_n (same order)."""
    if L.object_set.kind == KN_EDGES:
        return L
    return ListAssignment(ColorableObjectSet(KN_EDGES, L.n, 2), L.lists)
