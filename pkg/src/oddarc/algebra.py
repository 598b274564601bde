"""The odd arc algebra OH^n_C.

``OH^n`` is the direct sum over pairs of matchings of the pieces
``b(OH^n)a = Ext(W(b)a){n}``.  A basis vector is a triple ``(b, a, mask)``
with ``b``, ``a`` matching IDs and ``mask`` a monomial in the circles of
W(b)a.  Products go through the odd functor on the contraction cobordism
chosen by a :class:`~oddarc.chronology.ChoiceC`.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Optional, Tuple

from .chronology import ChoiceC, canonical_choice
from .diagrams import ClosedDiagram, close, enumerate_matchings
from .exterior import ExtElement, bits
from .tqft import execute

Piece = Tuple[int, int]
BasisVector = Tuple[int, int, int]


class ArcElement:
    """A finite sum of pieces ``(b, a) -> ExtElement``."""

    __slots__ = ("n", "pieces")

    def __init__(self, n: int, pieces: Optional[Dict[Piece, ExtElement]] = None):
        self.n = n
        self.pieces: Dict[Piece, ExtElement] = {k: v for k, v in (pieces or {}).items() if v}

    def __add__(self, other: "ArcElement") -> "ArcElement":
        out = dict(self.pieces)
        for k, v in other.pieces.items():
            out[k] = out[k] + v if k in out else v
        return ArcElement(self.n, out)

    def __neg__(self):
        return ArcElement(self.n, {k: -v for k, v in self.pieces.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "ArcElement":
        return ArcElement(self.n, {p: v.scale(k) for p, v in self.pieces.items()})

    def __rmul__(self, k):
        return self.scale(k)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.pieces
        if not isinstance(other, ArcElement):
            return NotImplemented
        return self.n == other.n and self.pieces == other.pieces

    def __bool__(self):
        return bool(self.pieces)

    def terms(self) -> Iterable[Tuple[BasisVector, object]]:
        for (b, a), e in sorted(self.pieces.items()):
            for m, c in e:
                yield (b, a, m), c

    def __str__(self):
        if not self.pieces:
            return "0"
        return " + ".join(f"[{b},{a}]({e})" for (b, a), e in sorted(self.pieces.items()))

    __repr__ = __str__


class OddArcAlgebra:
    """OH^n_C with structure constants cached per triple of matchings."""

    def __init__(self, n: int, choice: Optional[ChoiceC] = None):
        self.n = n
        self.B = enumerate_matchings(n)
        self.choice = choice if choice is not None else canonical_choice(n)
        if self.choice.n != n:
            raise ValueError("choice is for a different n")
        self._table: Dict[Tuple[int, int, int, int, int], ExtElement] = {}

    # -- pieces and basis ---------------------------------------------
    @property
    def size(self) -> int:
        return len(self.B)

    def diagram(self, b: int, a: int) -> ClosedDiagram:
        return close(self.B[b], self.B[a])

    def ncircles(self, b: int, a: int) -> int:
        return len(self.diagram(b, a))

    def pieces(self) -> List[Piece]:
        return list(itertools.product(range(self.size), repeat=2))

    def basis(self) -> List[BasisVector]:
        return [(b, a, m) for b, a in self.pieces() for m in range(1 << self.ncircles(b, a))]

    def piece_element(self, b: int, a: int, e: ExtElement) -> ArcElement:
        return ArcElement(self.n, {(b, a): e})

    def ext(self, b: int, a: int, terms=None) -> ExtElement:
        return ExtElement(self.ncircles(b, a), terms, self.n)

    def element(self, b: int, a: int, mask: int, coeff=1) -> ArcElement:
        return self.piece_element(b, a, self.ext(b, a, {mask: coeff}))

    def one(self, b: int, a: int) -> ArcElement:
        """The unit ``_b1_a`` of Ext(W(b)a); an idempotent only when ``a == b``."""
        return self.element(b, a, 0)

    def gen(self, b: int, a: int, k: int) -> ArcElement:
        """The ``k``-th circle of W(b)a, counted from the left, starting at 0."""
        return self.element(b, a, 1 << k)

    def unit(self) -> ArcElement:
        return ArcElement(self.n, {(a, a): self.ext(a, a, {0: 1}) for a in range(self.size)})

    def qdeg(self, b: int, a: int, mask: int) -> int:
        return 2 * mask.bit_count() - self.ncircles(b, a) + self.n

    @staticmethod
    def parity(mask: int) -> int:
        return mask.bit_count() % 2

    # -- multiplication -----------------------------------------------
    def structure(self, c: int, b: int, a: int, mx: int, my: int) -> ExtElement:
        """Product of basis monomials ``mx`` in c(OH)b and ``my`` in b(OH)a."""
        key = (c, b, a, mx, my)
        hit = self._table.get(key)
        if hit is None:
            nu, nl = self.ncircles(c, b), self.ncircles(b, a)
            stacked = ExtElement(nu + nl, {mx | (my << nu): 1}, 2 * self.n)
            # the stacked monomial is x ^ y with x's circles first: no reordering sign
            hit = execute(self.choice[(c, b, a)], stacked)
            self._table[key] = hit
        return hit

    def multiply_pieces(self, c: int, b: int, a: int, ex: ExtElement, ey: ExtElement) -> ExtElement:
        out = self.ext(c, a)
        acc: Dict[int, object] = {}
        for mx, cx in ex.terms.items():
            for my, cy in ey.terms.items():
                for m, v in self.structure(c, b, a, mx, my).terms.items():
                    s = acc.get(m, 0) + cx * cy * v
                    if s:
                        acc[m] = s
                    else:
                        acc.pop(m, None)
        out.terms = acc
        return out

    def multiply(self, x: ArcElement, y: ArcElement) -> ArcElement:
        out: Dict[Piece, ExtElement] = {}
        for (c, b1), ex in x.pieces.items():
            for (b2, a), ey in y.pieces.items():
                if b1 != b2:
                    continue
                p = self.multiply_pieces(c, b1, a, ex, ey)
                out[(c, a)] = out[(c, a)] + p if (c, a) in out else p
        return ArcElement(self.n, out)

    def table(self, c: int, b: int, a: int) -> Dict[Tuple[int, int], ExtElement]:
        """All products of basis monomials for one triple."""
        return {(mx, my): self.structure(c, b, a, mx, my)
                for mx in range(1 << self.ncircles(c, b)) for my in range(1 << self.ncircles(b, a))}


def circle_word(alg: OddArcAlgebra, b: int, a: int, mask: int) -> str:
    """Plain-text name of a basis monomial, e.g. ``1``, ``c1``, ``c1^c2``."""
    ks = [k + 1 for k in bits(mask)]
    return "^".join(f"c{k}" for k in ks) if ks else "1"


# -- small-n checks -------------------------------------------------------

def nonassoc_witness(n: int, choice: Optional[ChoiceC] = None):
    """The triple ``x = b_1``, ``y = _b1_a``, ``z = _a1_b`` and both bracketings.

    ``a`` and ``b`` are the two matchings of four points, padded with small
    arcs on the right for ``n > 2``; ``b_1`` is the outer circle of W(b)b.
    Returns ``(x, y, z, (xy)z, x(yz))``.
    """
    if n < 2:
        raise ValueError("the witness needs n >= 2")
    from .diagrams import Matching, matching_id
    base_a = Matching(2, ((1, 2), (3, 4))).padded(n - 2)
    base_b = Matching(2, ((1, 4), (2, 3))).padded(n - 2)
    alg = OddArcAlgebra(n, choice)
    a, b = matching_id(base_a), matching_id(base_b)
    outer = alg.diagram(b, b).circle_of(1)
    x = alg.gen(b, b, outer)
    y = alg.one(b, a)
    z = alg.one(a, b)
    lhs = alg.multiply(alg.multiply(x, y), z)
    rhs = alg.multiply(x, alg.multiply(y, z))
    return x, y, z, lhs, rhs


def diagonal_subalgebra(alg: OddArcAlgebra) -> Dict[int, bool]:
    """For each ``a``: is a(OH)a -> a(OH)a multiplication the exterior product?"""
    report = {}
    for a in range(alg.size):
        m = alg.ncircles(a, a)
        ok = True
        for mx in range(1 << m):
            for my in range(1 << m):
                expect = ExtElement(m, {mx: 1}, alg.n).wedge(ExtElement(m, {my: 1}, alg.n))
                if alg.structure(a, a, a, mx, my) != expect:
                    ok = False
        report[a] = ok
    return report
