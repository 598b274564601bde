"""Exact exterior algebras on an ordered, finite set of generators.

Monomials are bitmasks: bit ``i`` set means generator ``g_i`` occurs, and a
monomial is always read in increasing generator order.  Coefficients are
Python ints, or :class:`Gaussian` integers once a twist by powers of ``i``
is involved.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Union


class Gaussian:
    """An element ``re + im*i`` of the Gaussian integers."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = int(re)
        self.im = int(im)

    @staticmethod
    def coerce(x) -> "Gaussian":
        if isinstance(x, Gaussian):
            return x
        return Gaussian(int(x), 0)

    def __add__(self, other):
        o = Gaussian.coerce(other)
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-Gaussian.coerce(other))

    def __rsub__(self, other):
        return Gaussian.coerce(other) - self

    def __mul__(self, other):
        o = Gaussian.coerce(other)
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Gaussian)):
            o = Gaussian.coerce(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re or self.im)

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        return f"({self.re}{self.im:+d}i)"


_I_POWERS = (Gaussian(1, 0), Gaussian(0, 1), Gaussian(-1, 0), Gaussian(0, -1))


def i_power(k: int) -> Gaussian:
    """Return ``i**k``; the exponent is read mod 4."""
    return _I_POWERS[k % 4]


Coeff = Union[int, Gaussian]


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def wedge_sign(a: int, b: int) -> int:
    """Koszul sign of sorting the concatenated word ``a b`` (disjoint masks)."""
    inversions = 0
    for j in bits(b):
        inversions += (a >> (j + 1)).bit_count()
    return -1 if inversions & 1 else 1


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting a sequence of distinct integers."""
    inv = 0
    s = list(seq)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                inv += 1
    return -1 if inv & 1 else 1


class GeneratorMismatch(ValueError):
    pass


class ExtElement:
    """An element of the exterior algebra on ``ngens`` generators.

    ``shift`` is the degree shift of the ambient graded group: a monomial of
    word length ``k`` has quantum degree ``2k - ngens + shift``.
    """

    __slots__ = ("ngens", "terms", "shift")

    def __init__(self, ngens: int, terms: Optional[Mapping[int, Coeff]] = None, shift: int = 0):
        self.ngens = ngens
        self.shift = shift
        self.terms: Dict[int, Coeff] = {}
        if terms:
            top = 1 << ngens
            for m, c in terms.items():
                if m >= top or m < 0:
                    raise GeneratorMismatch(f"monomial {m:b} outside {ngens} generators")
                if c:
                    self.terms[m] = c

    # -- constructors -----------------------------------------------------
    @classmethod
    def one(cls, ngens: int, shift: int = 0) -> "ExtElement":
        return cls(ngens, {0: 1}, shift)

    @classmethod
    def zero(cls, ngens: int, shift: int = 0) -> "ExtElement":
        return cls(ngens, None, shift)

    @classmethod
    def gen(cls, ngens: int, i: int, shift: int = 0) -> "ExtElement":
        if not 0 <= i < ngens:
            raise GeneratorMismatch(f"no generator {i} among {ngens}")
        return cls(ngens, {1 << i: 1}, shift)

    @classmethod
    def monomial(cls, ngens: int, mask: int, coeff: Coeff = 1, shift: int = 0) -> "ExtElement":
        return cls(ngens, {mask: coeff}, shift)

    @classmethod
    def from_word(cls, ngens: int, word: Iterable[int], coeff: Coeff = 1, shift: int = 0) -> "ExtElement":
        """The product ``g_{w1} ^ g_{w2} ^ ...`` in the given (unsorted) order."""
        word = list(word)
        if len(set(word)) != len(word):
            return cls.zero(ngens, shift)
        mask = 0
        for w in word:
            if not 0 <= w < ngens:
                raise GeneratorMismatch(f"no generator {w} among {ngens}")
            mask |= 1 << w
        return cls(ngens, {mask: coeff * permutation_sign(word)}, shift)

    # -- linear structure -------------------------------------------------
    def _check(self, other: "ExtElement"):
        if self.ngens != other.ngens:
            raise GeneratorMismatch(f"{self.ngens} vs {other.ngens} generators")

    def copy(self) -> "ExtElement":
        e = ExtElement(self.ngens, None, self.shift)
        e.terms = dict(self.terms)
        return e

    def __add__(self, other: "ExtElement") -> "ExtElement":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        e = ExtElement(self.ngens, None, self.shift)
        e.terms = out
        return e

    def __neg__(self) -> "ExtElement":
        e = ExtElement(self.ngens, None, self.shift)
        e.terms = {m: -c for m, c in self.terms.items()}
        return e

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def scale(self, k: Coeff) -> "ExtElement":
        return ExtElement(self.ngens, {m: k * c for m, c in self.terms.items()}, self.shift)

    def __rmul__(self, k: Coeff) -> "ExtElement":
        return self.scale(k)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self.ngens == other.ngens and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    # -- products ---------------------------------------------------------
    def wedge(self, other: "ExtElement") -> "ExtElement":
        self._check(other)
        out: Dict[int, Coeff] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                if ma & mb:
                    continue
                m = ma | mb
                v = out.get(m, 0) + wedge_sign(ma, mb) * ca * cb
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        e = ExtElement(self.ngens, None, self.shift)
        e.terms = out
        return e

    __xor__ = wedge

    def substitute(self, mapping: Union[Mapping[int, int], Callable[[int], int]], ngens: Optional[int] = None,
                   shift: Optional[int] = None) -> "ExtElement":
        """Send each generator ``g_i`` to ``g_{mapping(i)}`` and renormalize.

        Repeated images annihilate the monomial; the reordering into
        increasing order contributes its Koszul sign.
        """
        ngens = self.ngens if ngens is None else ngens
        shift = self.shift if shift is None else shift
        f = mapping if callable(mapping) else mapping.__getitem__
        out: Dict[int, Coeff] = {}
        for m, c in self.terms.items():
            try:
                word = [f(i) for i in bits(m)]
            except (KeyError, IndexError):
                raise GeneratorMismatch(f"monomial {m:b} uses an unmapped generator") from None
            if len(set(word)) != len(word):
                continue
            mask = 0
            for w in word:
                if not 0 <= w < ngens:
                    raise GeneratorMismatch(f"image {w} outside {ngens} generators")
                mask |= 1 << w
            v = out.get(mask, 0) + permutation_sign(word) * c
            if v:
                out[mask] = v
            else:
                out.pop(mask, None)
        e = ExtElement(ngens, None, shift)
        e.terms = out
        return e

    def contract(self, g: int) -> "ExtElement":
        """Interior product with the dual of ``g_g``."""
        if not 0 <= g < self.ngens:
            raise GeneratorMismatch(f"no generator {g} among {self.ngens}")
        bit = 1 << g
        out = {}
        for m, c in self.terms.items():
            if m & bit:
                below = (m & (bit - 1)).bit_count()
                out[m ^ bit] = -c if below & 1 else c
        return ExtElement(self.ngens, out, self.shift)

    def extend(self, ngens: int) -> "ExtElement":
        """The same element seen in an exterior algebra with more generators."""
        if ngens < self.ngens:
            raise GeneratorMismatch("cannot shrink the generator set")
        e = ExtElement(ngens, None, self.shift)
        e.terms = dict(self.terms)
        return e

    # -- gradings ---------------------------------------------------------
    def lengths(self) -> set:
        return {m.bit_count() for m in self.terms}

    def qdeg(self):
        """Quantum degree, or the string ``"inhomogeneous"``; ``None`` for zero."""
        ks = self.lengths()
        if not ks:
            return None
        if len(ks) > 1:
            return "inhomogeneous"
        (k,) = ks
        return 2 * k - self.ngens + self.shift

    def parity(self) -> int:
        ks = {k % 2 for k in self.lengths()}
        if len(ks) != 1:
            raise ValueError("element has no single parity")
        return ks.pop()

    # -- output -----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "^".join(f"g{i + 1}" for i in bits(m)) or "1"
            if c == 1:
                parts.append(f"+{mono}")
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                s = str(c)
                parts.append(f"{s if s.startswith('-') else '+' + s}*{mono}")
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def __repr__(self):
        return f"ExtElement({self.ngens}, {dict(sorted(self.terms.items()))}, shift={self.shift})"

    def to_json(self):
        def enc(c):
            return [c.re, c.im] if isinstance(c, Gaussian) else c
        return {"ngens": self.ngens, "shift": self.shift,
                "terms": [[list(bits(m)), enc(c)] for m, c in sorted(self.terms.items())]}


def gens_difference(ngens: int, i: int, j: int, shift: int = 0) -> ExtElement:
    """``g_i - g_j``."""
    return ExtElement(ngens, {1 << i: 1, 1 << j: -1}, shift)
