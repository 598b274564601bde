"""Khovanov's even arc algebra H^n, used for mod 2 comparison.

Each circle carries ``A = Z[X]/(X^2)``.  A basis vector of ``A^{(x)m}`` is a
bitmask: bit ``k`` set means circle ``k`` carries ``X``, otherwise ``1``.
Products contract the arcs of the middle matching left to right: a merge
multiplies, a split applies ``D(1) = X(x)1 + 1(x)X`` and ``D(X) = X(x)X``.
"""

from __future__ import annotations

import itertools
from typing import Dict, Optional, Tuple

from .diagrams import close, contraction_components, enumerate_matchings


class FrobElement:
    """An element of ``A^{(x)m}`` with integer coefficients and degree shift."""

    __slots__ = ("ncircles", "terms", "shift")

    def __init__(self, ncircles: int, terms: Optional[Dict[int, int]] = None, shift: int = 0):
        self.ncircles = ncircles
        self.shift = shift
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return FrobElement(self.ncircles, out, self.shift)

    def __neg__(self):
        return FrobElement(self.ncircles, {m: -c for m, c in self.terms.items()}, self.shift)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, FrobElement) and self.ncircles == other.ncircles and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def qdeg(self):
        ds = {2 * m.bit_count() - self.ncircles + self.shift for m in self.terms}
        if not ds:
            return None
        return ds.pop() if len(ds) == 1 else "inhomogeneous"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            word = "".join("X" if m >> k & 1 else "1" for k in range(self.ncircles))
            parts.append(f"{c:+d}*{word}")
        return " ".join(parts)


def _merge(terms: Dict[int, int], keep: int, drop: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for m, c in terms.items():
        xk, xd = m >> keep & 1, m >> drop & 1
        if xk and xd:
            continue
        m2 = (m & ~(1 << drop)) | ((xk | xd) << keep)
        out[m2] = out.get(m2, 0) + c
    return out


def _split(terms: Dict[int, int], old: int, new: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for m, c in terms.items():
        if m >> old & 1:
            images = [m | (1 << new)]
        else:
            images = [m | (1 << old), m | (1 << new)]
        for m2 in images:
            out[m2] = out.get(m2, 0) + c
    return out


def even_execute(c, b, a, x: FrobElement) -> FrobElement:
    """The Khovanov functor of the contraction cobordism on a stacked element."""
    n = b.n
    up, lo = close(c, b), close(b, a)
    labels = [up.circle_of(i) for i in range(1, 2 * n + 1)]
    labels += [len(up) + lo.circle_of(i) for i in range(1, 2 * n + 1)]
    terms = dict(x.terms)
    next_id = len(up) + len(lo)
    done = []
    for arc in b.arcs:
        i, j = arc
        ui, li = i - 1, 2 * n + i - 1
        p, q = labels[ui], labels[li]
        done.append(arc)
        if p != q:
            keep, drop = min(p, q), max(p, q)
            terms = _merge(terms, keep, drop)
            labels = [keep if lab == drop else lab for lab in labels]
        else:
            comps = contraction_components(c, b, a, done)
            left = next(g for g in comps if ui in g)
            r = next_id
            next_id += 1
            for v in range(4 * n):
                if labels[v] == p and v not in left:
                    labels[v] = r
            terms = _split(terms, p, r)
    final = close(c, a)
    target = {}
    for v in range(4 * n):
        target[labels[v]] = final.circle_of(v % (2 * n) + 1)
    out: Dict[int, int] = {}
    for m, coeff in terms.items():
        m2 = 0
        for k in range(next_id):
            if m >> k & 1:
                m2 |= 1 << target[k]
        out[m2] = out.get(m2, 0) + coeff
    return FrobElement(len(final), out, n)


class EvenArcAlgebra:
    """H^n with structure constants cached per triple and monomial pair."""

    def __init__(self, n: int):
        self.n = n
        self.B = enumerate_matchings(n)
        self._table: Dict[Tuple[int, int, int, int, int], FrobElement] = {}

    @property
    def size(self) -> int:
        return len(self.B)

    def ncircles(self, b: int, a: int) -> int:
        return len(close(self.B[b], self.B[a]))

    def basis(self):
        return [(b, a, m) for b, a in itertools.product(range(self.size), repeat=2)
                for m in range(1 << self.ncircles(b, a))]

    def qdeg(self, b: int, a: int, mask: int) -> int:
        return 2 * mask.bit_count() - self.ncircles(b, a) + self.n

    def structure(self, c: int, b: int, a: int, mx: int, my: int) -> FrobElement:
        key = (c, b, a, mx, my)
        hit = self._table.get(key)
        if hit is None:
            nu, nl = self.ncircles(c, b), self.ncircles(b, a)
            x = FrobElement(nu + nl, {mx | (my << nu): 1}, 2 * self.n)
            hit = even_execute(self.B[c], self.B[b], self.B[a], x)
            self._table[key] = hit
        return hit

    def multiply(self, x: Dict[Tuple[int, int, int], int], y: Dict[Tuple[int, int, int], int]):
        """Product of elements given as ``{(b, a, mask): coeff}``."""
        out: Dict[Tuple[int, int, int], int] = {}
        for (c, b1, mx), cx in x.items():
            for (b2, a, my), cy in y.items():
                if b1 != b2:
                    continue
                for m, v in self.structure(c, b1, a, mx, my).terms.items():
                    key = (c, a, m)
                    out[key] = out.get(key, 0) + cx * cy * v
        return {k: v for k, v in out.items() if v}


def even_multiply(alg: EvenArcAlgebra, x, y):
    return alg.multiply(x, y)
