"""Odd center of OH^n, center of H^n, and the map h from the Springer quotient.

Central elements live on the diagonal pieces a(OH)a, where the product is
the exterior product on the circles of W(a)a.  An element is odd-central
exactly when ``z_b * 1_ba = 1_ba * z_a`` for every pair ``(b, a)``; those
equations are solved degree by degree over Z.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import ArcElement, OddArcAlgebra
from .chronology import enumerate_choices
from .diagrams import close
from .even import EvenArcAlgebra
from .exterior import ExtElement
from .intlinalg import integer_kernel, smith_diagonal
from .springer import QuotientBasis, admissible, epsilon, quotient_basis

CENTER_MAX_N = 4

Unknown = Tuple[int, int]  # (a, mask) on the diagonal piece a(OH)a


@dataclass
class CenterResult:
    n: int
    basis: Dict[int, List[ArcElement]] = field(default_factory=dict)  # q-degree -> elements
    divisors: Dict[int, List[int]] = field(default_factory=dict)

    def graded_rank(self) -> Dict[int, int]:
        return {q: len(v) for q, v in sorted(self.basis.items()) if v}

    @property
    def rank(self) -> int:
        return sum(len(v) for v in self.basis.values())

    def elements(self) -> List[ArcElement]:
        return [z for q in sorted(self.basis) for z in self.basis[q]]


def _diagonal_unknowns(alg, k: int) -> List[Unknown]:
    n = alg.n
    return [(a, m) for a in range(alg.size) for m in range(1 << n) if m.bit_count() == k]


def odd_center_system(alg: OddArcAlgebra, k: int) -> Tuple[List[Unknown], List[List[int]]]:
    """Equations ``z_b * 1_ba - 1_ba * z_a = 0`` restricted to word length ``k``."""
    unknowns = _diagonal_unknowns(alg, k)
    col = {u: j for j, u in enumerate(unknowns)}
    rows = []
    for b, a in itertools.product(range(alg.size), repeat=2):
        if a == b:
            continue
        eqs: Dict[int, List[int]] = {}
        for (c, m), j in col.items():
            if c == b:
                prod = alg.structure(b, b, a, m, 0)
                sign = 1
            elif c == a:
                prod = alg.structure(b, a, a, 0, m)
                sign = -1
            else:
                continue
            for mm, v in prod.terms.items():
                eqs.setdefault(mm, [0] * len(unknowns))[j] += sign * v
        rows.extend(r for _, r in sorted(eqs.items()) if any(r))
    return unknowns, rows


def _vector_to_element(alg, unknowns: Sequence[Unknown], v: Sequence[int]) -> ArcElement:
    pieces: Dict[Tuple[int, int], ExtElement] = {}
    for (a, m), c in zip(unknowns, v):
        if c:
            e = pieces.setdefault((a, a), ExtElement(alg.n, None, alg.n))
            e.terms[m] = c
    return ArcElement(alg.n, pieces)


def element_to_vector(unknowns: Sequence[Unknown], z: ArcElement) -> List[int]:
    idx = {u: j for j, u in enumerate(unknowns)}
    v = [0] * len(unknowns)
    for (b, a), e in z.pieces.items():
        if a != b:
            raise ValueError("element is not supported on diagonal pieces")
        for m, c in e.terms.items():
            v[idx[(a, m)]] = c
    return v


def odd_center(n: int, alg: Optional[OddArcAlgebra] = None) -> CenterResult:
    if not 1 <= n <= CENTER_MAX_N:
        raise ValueError(f"n={n} outside 1..{CENTER_MAX_N}")
    alg = alg or OddArcAlgebra(n)
    res = CenterResult(n)
    for k in range(n + 1):
        unknowns, rows = odd_center_system(alg, k)
        kern = integer_kernel(rows, len(unknowns)) if rows else [
            [int(i == j) for j in range(len(unknowns))] for i in range(len(unknowns))]
        res.basis[2 * k] = [_vector_to_element(alg, unknowns, v) for v in kern]
        res.divisors[2 * k] = smith_diagonal(kern, len(unknowns)) if kern else []
    return res


def is_odd_central(alg: OddArcAlgebra, z: ArcElement, parity: int) -> bool:
    """Check ``z x = (-1)^{p(x) p(z)} x z`` against every basis vector ``x``."""
    for b, a, m in alg.basis():
        x = alg.element(b, a, m)
        sign = -1 if parity * (m.bit_count() % 2) else 1
        if alg.multiply(z, x) != alg.multiply(x, z).scale(sign):
            return False
    return True


# -- even center ----------------------------------------------------------

def even_center(n: int, alg: Optional[EvenArcAlgebra] = None) -> Dict[int, List[Dict]]:
    """Z(H^n) degree by degree from the full commutation system ``zx = xz``.

    Returns ``{q-degree: basis}``; each basis element maps
    ``(a, a, mask)`` to a coefficient.
    """
    if not 1 <= n <= CENTER_MAX_N:
        raise ValueError(f"n={n} outside 1..{CENTER_MAX_N}")
    alg = alg or EvenArcAlgebra(n)
    basis = alg.basis()
    out = {}
    for k in range(n + 1):
        unknowns = _diagonal_unknowns(alg, k)
        rows: Dict[Tuple, List[int]] = {}
        for j, (a, m) in enumerate(unknowns):
            z = {(a, a, m): 1}
            for x in basis:
                for key, v in alg.multiply(z, {x: 1}).items():
                    rows.setdefault((x, key), [0] * len(unknowns))[j] += v
                for key, v in alg.multiply({x: 1}, z).items():
                    rows.setdefault((x, key), [0] * len(unknowns))[j] -= v
        mat = [r for r in rows.values() if any(r)]
        kern = integer_kernel(mat, len(unknowns)) if mat else [
            [int(i == j) for j in range(len(unknowns))] for i in range(len(unknowns))]
        out[2 * k] = [{(a, a, m): c for (a, m), c in zip(unknowns, v) if c} for v in kern]
    return out


def graded_rank(basis_by_degree: Dict[int, list]) -> Dict[int, int]:
    return {q: len(v) for q, v in sorted(basis_by_degree.items()) if v}


# -- the map h ------------------------------------------------------------

def h_image(alg: OddArcAlgebra, p: ExtElement) -> ArcElement:
    """Image of an odd polynomial: ``x_i`` goes to the sum over ``a`` of the
    circle of W(a)a through end point ``i``."""
    n = alg.n
    pieces = {}
    for a in range(alg.size):
        d = alg.diagram(a, a)
        target = {i: d.circle_of(i + 1) for i in range(2 * n)}
        pieces[(a, a)] = p.substitute(target, ngens=n, shift=n)
    return ArcElement(n, pieces)


def h_generators(alg: OddArcAlgebra) -> List[ArcElement]:
    return [h_image(alg, ExtElement.gen(2 * alg.n, i)) for i in range(2 * alg.n)]


@dataclass
class IsoReport:
    n: int
    kills_generators: bool = False
    images_central: bool = False
    bijective: bool = False
    multiplicative: bool = False
    center_rank: int = 0
    quotient_rank: int = 0
    witnesses: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.kills_generators and self.images_central and self.bijective and self.multiplicative

    def to_json(self):
        return {"n": self.n, "ok": self.ok, "kills_generators": self.kills_generators,
                "images_central": self.images_central, "bijective": self.bijective,
                "multiplicative": self.multiplicative, "center_rank": self.center_rank,
                "quotient_rank": self.quotient_rank, "witnesses": self.witnesses}


def verify_iso(n: int, alg: Optional[OddArcAlgebra] = None, qb: Optional[QuotientBasis] = None,
               center: Optional[CenterResult] = None) -> IsoReport:
    alg = alg or OddArcAlgebra(n)
    qb = qb or quotient_basis(n)
    center = center or odd_center(n, alg)
    rep = IsoReport(n, center_rank=center.rank, quotient_rank=qb.rank)

    bad = [(r, S) for r, S in admissible(n) if h_image(alg, epsilon(n, r, S))]
    rep.kills_generators = not bad
    rep.witnesses += [f"h(eps_{r}^{S}) != 0" for r, S in bad[:5]]

    rep.images_central = True
    rep.bijective = True
    for k in range(n + 1):
        unknowns, rows = odd_center_system(alg, k)
        reps = qb.representatives.get(k, [])
        images = [element_to_vector(unknowns, h_image(alg, ExtElement(2 * n, {m: 1}))) for m in reps]
        for m, v in zip(reps, images):
            if any(sum(r[j] * v[j] for j in range(len(v))) for r in rows):
                rep.images_central = False
                rep.witnesses.append(f"h of monomial {m:b} is not central")
        divs = smith_diagonal(images, len(unknowns)) if images else []
        if len(divs) != len(center.basis.get(2 * k, [])) or any(d != 1 for d in divs):
            rep.bijective = False
            rep.witnesses.append(f"degree {2 * k}: image divisors {divs}, center rank "
                                 f"{len(center.basis.get(2 * k, []))}")

    rep.multiplicative = True
    basis = qb.basis()
    for p, q in itertools.product(basis, repeat=2):
        lhs = h_image(alg, qb.normal_form(p.wedge(q)))
        rhs = alg.multiply(h_image(alg, p), h_image(alg, q))
        if lhs != rhs:
            rep.multiplicative = False
            rep.witnesses.append(f"h({p}*{q}) != h({p})h({q})")
            break
    return rep


def center_choice_independence(n: int) -> Dict[str, object]:
    """Compare, across all chronologies, the products that define the odd center.

    Those are ``b(OH)b x b(OH)a`` and ``b(OH)a x a(OH)a`` with one factor a
    unit ``_b1_a``; they are computed from cobordisms without splits.
    """
    from .tqft import execute
    from .diagrams import enumerate_matchings
    B = enumerate_matchings(n)
    compared = 0
    identical = True
    for b, a in itertools.product(range(len(B)), repeat=2):
        for triple, side in (((b, b, a), "left"), ((b, a, a), "right")):
            c_, b_, a_ = (B[t] for t in triple)
            nu, nl = len(close(c_, b_)), len(close(b_, a_))
            tables = []
            for ch in enumerate_choices(n, (c_, b_, a_)):
                if "split" in ch.kinds():
                    identical = False
                tab = []
                for m in range(1 << n):
                    mask = m if side == "left" else m << nu
                    x = ExtElement(nu + nl, {mask: 1}, 2 * n)
                    tab.append(tuple(sorted(execute(ch, x).terms.items())))
                tables.append(tuple(tab))
                compared += 1
            if len(set(tables)) != 1:
                identical = False
    return {"n": n, "identical": identical, "chronologies_compared": compared}


# -- combinatorics of free points, used as an independent test oracle ------

def arcs_of(a_arcs, S: Sequence[int]) -> List[Tuple[int, int]]:
    s = set(S)
    return [(i, j) for i, j in a_arcs if i in s and j in s]


def free_points(a_arcs, S: Sequence[int]) -> List[int]:
    inside = {p for arc in arcs_of(a_arcs, S) for p in arc}
    return [x for x in S if x not in inside]


def exchange_parity(a_arcs, R: Sequence[int], S: Sequence[int], arc: Tuple[int, int]) -> int:
    """Free points of ``S`` inside ``arc`` plus points of ``R`` inside it, mod 2."""
    j, jj = arc
    free = set(free_points(a_arcs, S))
    return (sum(1 for x in S if j < x < jj and x in free) + sum(1 for y in R if j < y < jj)) % 2


def h_a_epsilon_R(alg: OddArcAlgebra, a: int, R: Sequence[int], S: Sequence[int]) -> ExtElement:
    """``h_a`` of the single signed product over ``R`` inside ``eps^S``."""
    S = sorted(S)
    n = alg.n
    sign = 1
    for x in sorted(R):
        if S.index(x) % 2:
            sign = -sign
    d = alg.diagram(a, a)
    return ExtElement.from_word(n, [d.circle_of(x) for x in sorted(R)], sign, n)


def expected_rank(n: int) -> int:
    return comb(2 * n, n)
