"""Exact linear algebra over Z and over Z/p^k.

Matrices are lists of rows of Python ints.  The integer routines keep an
echelon basis of a row lattice and insert rows one at a time, which keeps
entries small for the sparse, unit-coefficient systems met here.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

Row = List[int]


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """``(g, s, t)`` with ``g = s*a + t*b = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


class RowLattice:
    """Echelon basis of the Z-span of inserted rows.

    ``pivots[col]`` is a row whose first nonzero entry sits in ``col`` and is
    positive.  Pivot rows are kept reduced against each other on insertion
    only loosely; call :meth:`reduce_all` for a Hermite normal form.
    """

    def __init__(self, width: int):
        self.width = width
        self.pivots: Dict[int, Row] = {}

    def _first(self, v: Row) -> int:
        for j, x in enumerate(v):
            if x:
                return j
        return -1

    def insert(self, v: Sequence[int]) -> bool:
        """Add ``v``; return ``True`` if it changed the lattice."""
        v = list(v)
        changed = False
        while True:
            j = self._first(v)
            if j < 0:
                return changed
            p = self.pivots.get(j)
            if p is None:
                if v[j] < 0:
                    v = [-x for x in v]
                self.pivots[j] = v
                return True
            a, b = p[j], v[j]
            if b % a == 0:
                f = b // a
                v = [x - f * y for x, y in zip(v, p)]
                continue
            g, s, t = _xgcd(a, b)
            new_p = [s * x + t * y for x, y in zip(p, v)]
            v = [(a // g) * y - (b // g) * x for x, y in zip(p, v)]
            self.pivots[j] = new_p
            changed = True

    def reduce_all(self):
        """Reduce entries above each pivot into ``[0, pivot)``."""
        cols = sorted(self.pivots)
        for k in reversed(range(len(cols))):
            j = cols[k]
            p = self.pivots[j]
            for j2 in cols[:k]:
                q = self.pivots[j2]
                f = q[j] // p[j]
                if f:
                    self.pivots[j2] = [x - f * y for x, y in zip(q, p)]

    def reduce(self, v: Sequence[int]) -> Row:
        """Remainder of ``v`` modulo the lattice, using the pivot columns."""
        v = list(v)
        for j in sorted(self.pivots):
            if v[j]:
                p = self.pivots[j]
                f = v[j] // p[j]
                if f:
                    v = [x - f * y for x, y in zip(v, p)]
        return v

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> List[Row]:
        return [self.pivots[j] for j in sorted(self.pivots)]


def hermite(rows: Sequence[Sequence[int]], width: Optional[int] = None) -> RowLattice:
    width = width if width is not None else (len(rows[0]) if rows else 0)
    lat = RowLattice(width)
    for r in rows:
        lat.insert(r)
    lat.reduce_all()
    return lat


def smith_diagonal(rows: Sequence[Sequence[int]], width: Optional[int] = None) -> List[int]:
    """Nonzero elementary divisors of the matrix, in increasing divisibility order."""
    m = [list(r) for r in hermite(rows, width).rows()]
    diag: List[int] = []
    while True:
        m = [r for r in m if any(r)]
        if not m:
            return diag
        # a smallest nonzero entry goes to the top-left corner
        _, i, j = min((abs(x), i, j) for i, r in enumerate(m) for j, x in enumerate(r) if x)
        m[0], m[i] = m[i], m[0]
        for r in m:
            r[0], r[j] = r[j], r[0]
        p = m[0][0]
        clean = True
        for i in range(1, len(m)):
            f = m[i][0] // p
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[0])]
            clean &= m[i][0] == 0
        for j in range(1, len(m[0])):
            f = m[0][j] // p
            if f:
                for r in m:
                    r[j] -= f * r[0]
            clean &= m[0][j] == 0
        if not clean:
            continue
        bad = next((i for i in range(1, len(m)) if any(x % p for x in m[i])), None)
        if bad is not None:
            m[0] = [x + y for x, y in zip(m[0], m[bad])]
            continue
        diag.append(abs(p))
        m = [r[1:] for r in m[1:]]


def integer_kernel(rows: Sequence[Sequence[int]], width: int) -> List[Row]:
    """A Z-basis of ``{v : M v = 0}``; the kernel is always a direct summand."""
    height = len(rows)
    aug = []
    for j in range(width):
        col = [rows[i][j] for i in range(height)]
        unit = [0] * width
        unit[j] = 1
        aug.append(col + unit)
    lat = RowLattice(height + width)
    for r in aug:
        lat.insert(r)
    lat.reduce_all()
    basis = [r[height:] for j, r in sorted(lat.pivots.items()) if j >= height]
    return basis


def coordinates(basis: Sequence[Sequence[int]], v: Sequence[int]) -> Optional[List[int]]:
    """Integer coordinates of ``v`` in the span of ``basis``, or ``None``."""
    k = len(basis)
    width = len(v)
    aug = [list(b) + [1 if i == t else 0 for t in range(k)] for i, b in enumerate(basis)]
    lat = RowLattice(width + k)
    for r in aug:
        lat.insert(r)
    rem = list(v) + [0] * k
    for j in sorted(lat.pivots):
        if j >= width:
            break
        p = lat.pivots[j]
        if rem[j] % p[j]:
            return None
        f = rem[j] // p[j]
        rem = [x - f * y for x, y in zip(rem, p)]
    if any(rem[:width]):
        return None
    return [-x for x in rem[width:]]


# -- Z / p^k --------------------------------------------------------------

def _valuation(x: np.ndarray, p: int, k: int) -> np.ndarray:
    """p-adic valuation of entries in ``[0, p^k)``, with ``k`` for zero."""
    val = np.full(x.shape, k, dtype=np.int64)
    rest = x.copy()
    for v in range(k):
        hit = (rest % p != 0) & (val == k) & (x != 0)
        val[hit] = v
        rest = rest // p
    return val


def solve_mod(A: Sequence[Sequence[int]], b: Sequence[int], p: int = 2, k: int = 2):
    """Solve ``A x = b`` over ``Z/p^k``; ``None`` if there is no solution.

    Full pivoting on an entry of least valuation makes every other entry in
    its row and column a multiple of the pivot, so the matrix diagonalises
    as ``U A V = D`` without dividing by zero divisors.
    """
    m = p ** k
    A = np.array(A, dtype=np.int64).reshape(len(A), -1) % m
    b = np.array(b, dtype=np.int64) % m
    rows, cols = A.shape
    V = np.eye(cols, dtype=np.int64)
    diag = []
    r = 0
    while r < min(rows, cols):
        sub = A[r:, r:]
        nz = np.nonzero(sub)
        if len(nz[0]) == 0:
            break
        vals = _valuation(sub[nz], p, k)
        t = int(np.argmin(vals))
        i, j = int(nz[0][t]) + r, int(nz[1][t]) + r
        v = int(vals[t])
        if i != r:
            A[[r, i]] = A[[i, r]]
            b[[r, i]] = b[[i, r]]
        if j != r:
            A[:, [r, j]] = A[:, [j, r]]
            V[:, [r, j]] = V[:, [j, r]]
        unit = int(A[r, r]) // p ** v
        inv = pow(unit, -1, m)
        A[r] = (A[r] * inv) % m
        b[r] = (b[r] * inv) % m
        pv = p ** v
        col = A[r + 1:, r]
        hit = np.nonzero(col)[0] + r + 1
        if len(hit):
            f = A[hit, r] // pv
            A[hit] = (A[hit] - np.outer(f, A[r])) % m
            b[hit] = (b[hit] - f * b[r]) % m
        row = A[r, r + 1:]
        hitc = np.nonzero(row)[0] + r + 1
        if len(hitc):
            f = A[r, hitc] // pv
            A[:, hitc] = (A[:, hitc] - np.outer(A[:, r], f)) % m
            V[:, hitc] = (V[:, hitc] - np.outer(V[:, r], f)) % m
        diag.append(pv)
        r += 1
    y = np.zeros(cols, dtype=np.int64)
    for i, d in enumerate(diag):
        if b[i] % d:
            return None
        y[i] = b[i] // d
    if np.any(b[len(diag):] % m):
        return None
    x = (V @ y) % m
    return [int(t) for t in x]


def rank_mod_p(A: Sequence[Sequence[int]], p: int = 2) -> int:
    A = np.array(A, dtype=np.int64).reshape(len(A), -1) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        piv = np.nonzero(A[r:, c])[0]
        if len(piv) == 0:
            continue
        i = int(piv[0]) + r
        A[[r, i]] = A[[i, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        hit = np.nonzero(A[:, c])[0]
        hit = hit[hit != r]
        A[hit] = (A[hit] - np.outer(A[hit, c], A[r])) % p
        r += 1
        if r == rows:
            break
    return r
