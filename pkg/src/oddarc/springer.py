"""Odd cohomology of the (n, n) Springer variety.

Odd polynomials in ``x_1..x_2n`` anticommute pairwise.  Every square
``x_i^2`` lies in the ideal of odd partially symmetric functions, so the
quotient is computed inside the exterior algebra on ``x_1..x_2n``: a
polynomial is an :class:`ExtElement` with ``2n`` generators, and
``x_i`` is generator ``i - 1``.  The degree of ``x_i`` is 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterator, List, Sequence, Tuple

from .exterior import ExtElement, bits
from .intlinalg import RowLattice, smith_diagonal

SPRINGER_MAX_N = 4


class TorsionError(ArithmeticError):
    pass


def variable(n: int, i: int) -> ExtElement:
    """``x_i`` for ``1 <= i <= 2n``."""
    return ExtElement.gen(2 * n, i - 1)


def monomial(n: int, indices: Sequence[int], coeff: int = 1) -> ExtElement:
    """``x_{i1} x_{i2} ...`` in the given order (1-based indices)."""
    return ExtElement.from_word(2 * n, [i - 1 for i in indices], coeff)


def admissible(n: int) -> Iterator[Tuple[int, Tuple[int, ...]]]:
    """All ``(r, S)`` indexing a generator of the ideal."""
    for k in range(1, n + 1):
        for S in itertools.combinations(range(1, 2 * n + 1), n + k):
            for r in range(n - k + 1, n + k + 1):
                yield r, S


def epsilon(n: int, r: int, S: Sequence[int]) -> ExtElement:
    """Sum over ``r``-subsets of ``S`` of signed products, ``x_i`` signed by its position in ``S``."""
    S = tuple(sorted(S))
    k = len(S) - n
    if not (1 <= k <= n) or not (n - k + 1 <= r <= n + k) or not set(S) <= set(range(1, 2 * n + 1)):
        raise ValueError(f"(r={r}, S={S}) is not admissible for n={n}")
    terms: Dict[int, int] = {}
    for R in itertools.combinations(range(len(S)), r):
        mask = 0
        for pos in R:
            mask |= 1 << (S[pos] - 1)
        sign = -1 if sum(R) % 2 else 1
        terms[mask] = terms.get(mask, 0) + sign
    return ExtElement(2 * n, terms)


def _monomials(ngens: int, length: int) -> List[int]:
    return [sum(1 << i for i in c) for c in itertools.combinations(range(ngens), length)]


@dataclass
class QuotientBasis:
    """Per word length: relation lattice, representatives and normal forms.

    Columns are ordered from the largest monomial down, so reduction
    rewrites large monomials in terms of small ones.
    """

    n: int
    columns: Dict[int, List[int]] = field(default_factory=dict)
    lattices: Dict[int, RowLattice] = field(default_factory=dict)
    representatives: Dict[int, List[int]] = field(default_factory=dict)
    divisors: Dict[int, List[int]] = field(default_factory=dict)

    @property
    def ngens(self) -> int:
        return 2 * self.n

    def graded_rank(self) -> Dict[int, int]:
        """``{q-degree: rank}``; word length ``d`` sits in q-degree ``2d``."""
        return {2 * d: len(reps) for d, reps in sorted(self.representatives.items()) if reps}

    @property
    def rank(self) -> int:
        return sum(len(r) for r in self.representatives.values())

    def basis(self) -> List[ExtElement]:
        return [ExtElement(self.ngens, {m: 1}) for d in sorted(self.representatives)
                for m in self.representatives[d]]

    def _vector(self, d: int, p: ExtElement) -> List[int]:
        idx = {m: j for j, m in enumerate(self.columns[d])}
        v = [0] * len(idx)
        for m, c in p.terms.items():
            v[idx[m]] = c
        return v

    def normal_form(self, p: ExtElement) -> ExtElement:
        if p.ngens != self.ngens:
            raise ValueError("polynomial has the wrong number of variables")
        out: Dict[int, int] = {}
        for d in sorted({m.bit_count() for m in p.terms}):
            if d not in self.columns:
                raise ValueError(f"degree {2 * d} is beyond the table")
            part = ExtElement(self.ngens, {m: c for m, c in p.terms.items() if m.bit_count() == d})
            rem = self.lattices[d].reduce(self._vector(d, part))
            for j, c in enumerate(rem):
                if c:
                    out[self.columns[d][j]] = c
        return ExtElement(self.ngens, out)

    def relation_matrix(self, d: int) -> List[List[int]]:
        return self.lattices[d].rows()


def relations(n: int, d: int) -> Iterator[ExtElement]:
    """Left multiples ``m * eps`` of word length ``d`` spanning the ideal there."""
    ngens = 2 * n
    for r, S in admissible(n):
        if r > d:
            continue
        e = epsilon(n, r, S)
        for m in _monomials(ngens, d - r):
            prod = ExtElement(ngens, {m: 1}).wedge(e)
            if prod:
                yield prod


def quotient_basis(n: int) -> QuotientBasis:
    if not 1 <= n <= SPRINGER_MAX_N:
        raise ValueError(f"n={n} outside 1..{SPRINGER_MAX_N}")
    qb = QuotientBasis(n)
    ngens = 2 * n
    for d in range(ngens + 1):
        cols = sorted(_monomials(ngens, d), reverse=True)
        qb.columns[d] = cols
        lat = RowLattice(len(cols))
        seen = set()
        for rel in relations(n, d):
            key = tuple(sorted(rel.terms.items()))
            if key in seen:
                continue
            seen.add(key)
            lat.insert(qb._vector(d, rel))
        lat.reduce_all()
        qb.lattices[d] = lat
        divs = smith_diagonal(lat.rows(), len(cols))
        qb.divisors[d] = divs
        if any(x != 1 for x in divs):
            raise TorsionError(f"degree {2 * d}: elementary divisors {divs}")
        if any(lat.pivots[j][j] != 1 for j in lat.pivots):
            raise TorsionError(f"degree {2 * d}: echelon pivots are not units in this column order")
        qb.representatives[d] = [cols[j] for j in range(len(cols)) if j not in lat.pivots]
    if qb.rank != comb(2 * n, n):
        raise TorsionError(f"rank {qb.rank} differs from C({2 * n},{n})")
    return qb


def word(mask: int) -> str:
    return "*".join(f"x{i + 1}" for i in bits(mask)) or "1"
