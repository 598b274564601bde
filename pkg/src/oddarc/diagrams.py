"""Crossingless matchings, their closures W(b)a and stacked diagrams.

Points on the line are numbered ``1..2n``.  Circles of a closed diagram are
sorted by their leftmost end point, which is the left-to-right reading
order used for exterior monomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

MAX_N = 8

Arc = Tuple[int, int]


class SizeError(ValueError):
    pass


@dataclass(frozen=True)
class Matching:
    n: int
    arcs: Tuple[Arc, ...]

    def __post_init__(self):
        arcs = tuple(sorted((min(i, j), max(i, j)) for i, j in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        pts = sorted(p for arc in arcs for p in arc)
        if len(arcs) != self.n or pts != list(range(1, 2 * self.n + 1)):
            raise ValueError(f"not a perfect matching of 1..{2 * self.n}: {arcs}")
        for i, j in arcs:
            for k, l in arcs:
                if i < k < j < l:
                    raise ValueError(f"arcs {(i, j)} and {(k, l)} cross")

    @property
    def partner(self) -> Dict[int, int]:
        p = {}
        for i, j in self.arcs:
            p[i] = j
            p[j] = i
        return p

    def nested_in(self, arc: Arc) -> List[Arc]:
        """Arcs strictly inside ``arc``."""
        i, j = arc
        return [(k, l) for k, l in self.arcs if i < k and l < j]

    def children(self, arc: Arc) -> List[Arc]:
        inner = self.nested_in(arc)
        return [b for b in inner if not any(c[0] < b[0] and b[1] < c[1] for c in inner)]

    def padded(self, extra: int) -> "Matching":
        """Append ``extra`` small arcs ``(2n+1, 2n+2), ...`` on the right."""
        arcs = list(self.arcs)
        for t in range(extra):
            arcs.append((2 * self.n + 2 * t + 1, 2 * self.n + 2 * t + 2))
        return Matching(self.n + extra, tuple(arcs))

    def to_json(self):
        return [list(a) for a in self.arcs]

    def __str__(self):
        return "{" + ",".join(f"({i},{j})" for i, j in self.arcs) + "}"


def _raw_matchings(n: int) -> List[Tuple[Arc, ...]]:
    if n == 0:
        return [()]
    out = []
    for k in range(1, n + 1):
        for inner in _raw_matchings(k - 1):
            for outer in _raw_matchings(n - k):
                arcs = [(1, 2 * k)]
                arcs += [(i + 1, j + 1) for i, j in inner]
                arcs += [(i + 2 * k, j + 2 * k) for i, j in outer]
                out.append(tuple(sorted(arcs)))
    return out


@lru_cache(maxsize=None)
def enumerate_matchings(n: int, max_n: int = MAX_N) -> Tuple[Matching, ...]:
    """All crossingless matchings of ``2n`` points in canonical order.

    The first arc ``(1, 2k)`` splits the points into an interior and an
    exterior block; ``k`` increases, and for each ``k`` the interior
    matching is the outer loop.  The position in this tuple is the
    matching's ID.
    """
    if n < 1 or n > max_n:
        raise SizeError(f"n={n} outside 1..{max_n}")
    return tuple(Matching(n, arcs) for arcs in _raw_matchings(n))


@lru_cache(maxsize=None)
def _index(n: int) -> Dict[Tuple[Arc, ...], int]:
    return {m.arcs: k for k, m in enumerate(enumerate_matchings(n))}


def matching_id(m: Matching) -> int:
    return _index(m.n)[m.arcs]


def matching_label(m: Matching) -> str:
    return f"{m.n}:{matching_id(m)}"


def parse_matching(n: int, spec) -> Matching:
    """Accept an ID, an ``"n:k"`` label, or a list of arcs."""
    if isinstance(spec, int):
        return enumerate_matchings(n)[spec]
    if isinstance(spec, str):
        nn, k = spec.split(":")
        if int(nn) != n:
            raise SizeError(f"label {spec} is not for n={n}")
        return enumerate_matchings(n)[int(k)]
    return Matching(n, tuple(tuple(a) for a in spec))


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


@dataclass(frozen=True)
class ClosedDiagram:
    """The closure W(top)bottom: ``bottom`` below the line, ``top`` reflected above."""

    top: Matching
    bottom: Matching
    circles: Tuple[Tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        if self.top.n != self.bottom.n:
            raise SizeError("top and bottom have different n")
        n = self.top.n
        uf = UnionFind(2 * n + 1)
        for i, j in self.top.arcs + self.bottom.arcs:
            uf.union(i, j)
        groups: Dict[int, List[int]] = {}
        for p in range(1, 2 * n + 1):
            groups.setdefault(uf.find(p), []).append(p)
        circles = tuple(sorted(tuple(g) for g in groups.values()))
        object.__setattr__(self, "circles", circles)

    @property
    def n(self) -> int:
        return self.top.n

    def __len__(self):
        return len(self.circles)

    def circle_of(self, point: int) -> int:
        for k, c in enumerate(self.circles):
            if point in c:
                return k
        raise KeyError(point)


@lru_cache(maxsize=None)
def close(top: Matching, bottom: Matching) -> ClosedDiagram:
    return ClosedDiagram(top, bottom)


@dataclass(frozen=True)
class StackedDiagram:
    """``upper`` on top of ``lower``; global circle indices list upper circles first."""

    upper: ClosedDiagram
    lower: ClosedDiagram

    def __post_init__(self):
        if self.upper.n != self.lower.n:
            raise SizeError("stacked diagrams have different n")

    def __len__(self):
        return len(self.upper) + len(self.lower)

    def global_index(self, layer: str, k: int) -> int:
        return k if layer == "upper" else len(self.upper) + k


def stack(upper: ClosedDiagram, lower: ClosedDiagram) -> StackedDiagram:
    return StackedDiagram(upper, lower)


def contraction_components(c: Matching, b: Matching, a: Matching,
                           contracted: Iterable[Arc]) -> List[FrozenSet[int]]:
    """Circles of W(c)bW(b)a after contracting some arcs of ``b``.

    Vertex ``i - 1`` is end point ``i`` of the upper diagram, vertex
    ``2n + i - 1`` the same end point of the lower diagram.
    """
    n = b.n
    up = lambda i: i - 1
    lo = lambda i: 2 * n + i - 1
    uf = UnionFind(4 * n)
    done = set(contracted)
    for i, j in c.arcs:
        uf.union(up(i), up(j))
    for i, j in a.arcs:
        uf.union(lo(i), lo(j))
    for i, j in b.arcs:
        if (i, j) in done:
            uf.union(up(i), lo(i))
            uf.union(up(j), lo(j))
        else:
            uf.union(up(i), up(j))
            uf.union(lo(i), lo(j))
    groups: Dict[int, set] = {}
    for v in range(4 * n):
        groups.setdefault(uf.find(v), set()).add(v)
    return [frozenset(g) for g in groups.values()]


def step_kinds(c: Matching, b: Matching, a: Matching, order: Sequence[Arc]) -> List[str]:
    """``"merge"`` or ``"split"`` for each contraction in ``order``."""
    n = b.n
    kinds = []
    done: List[Arc] = []
    for arc in order:
        comps = contraction_components(c, b, a, done)
        i = arc[0]
        cu = next(g for g in comps if i - 1 in g)
        kinds.append("merge" if 2 * n + i - 1 not in cu else "split")
        done.append(arc)
    return kinds


def catalan(n: int) -> int:
    from math import comb
    return comb(2 * n, n) // (n + 1)
