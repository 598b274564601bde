"""Named multiplication tables for n = 2 (odd, even and twisted).

Matching 0 is ``a = {(1,2),(3,4)}`` and matching 1 is ``b = {(1,4),(2,3)}``.
Basis vectors get the usual short names: ``a1, a2`` are the circles of
W(a)a from the left, ``_a1_b`` and ``x`` span a(OH)b, ``_b1_a`` and ``y``
span b(OH)a.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .algebra import OddArcAlgebra
from .even import EvenArcAlgebra
from .exterior import Gaussian, i_power

A, B = 0, 1

SYMBOLS: Dict[Tuple[int, int], Tuple[str, ...]] = {
    (A, A): ("1_a", "a1", "a2", "a1^a2"),
    (B, B): ("1_b", "b1", "b2", "b1^b2"),
    (A, B): ("_a1_b", "x"),
    (B, A): ("_b1_a", "y"),
}

KINDS = ("odd", "even", "twisted")


def symbol(b: int, a: int, mask: int) -> str:
    return SYMBOLS[(b, a)][mask]


def lookup(name: str) -> Tuple[int, int, int]:
    for piece, names in SYMBOLS.items():
        if name in names:
            return piece + (names.index(name),)
    raise KeyError(name)


def layout(side: str) -> Tuple[List[Tuple[int, int, int]], List[Tuple[int, int, int]]]:
    """Rows and columns of the table for products through matching ``side``."""
    s, t = (A, B) if side == "a" else (B, A)
    rows = [(s, s, m) for m in range(4)] + [(t, s, m) for m in range(2)]
    cols = [(s, s, m) for m in range(4)] + [(s, t, m) for m in range(2)]
    return rows, cols


def _coeff_json(c):
    g = Gaussian.coerce(c)
    return g.re if g.im == 0 else str(g)


def format_entry(terms: Dict[str, object]) -> str:
    if not terms:
        return "0"
    out = ""
    for name, c in terms.items():
        g = Gaussian.coerce(c)
        if g.im == 0:
            sign = "-" if g.re < 0 else "+"
            mag = "" if abs(g.re) == 1 else f"{abs(g.re)}*"
            word = f"{mag}{name}"
        else:
            sign, word = "+", f"({g})*{name}"
        if not out:
            out = word if sign == "+" else f"-{word}"
        else:
            out += f" {sign} {word}"
    return out


def product_terms(kind: str, alg, tau, x, y) -> Dict[str, object]:
    """Product of two named basis vectors as ``{name: coefficient}``."""
    (c, b1, mx), (b2, a, my) = x, y
    if b1 != b2:
        return {}
    prod = alg.structure(c, b1, a, mx, my).terms
    if kind == "twisted":
        from .twist import degree_of
        scale = i_power(tau(degree_of(alg, c, b1, mx), degree_of(alg, b1, a, my)))
        return {symbol(c, a, m): Gaussian.coerce(v) * scale for m, v in sorted(prod.items())}
    return {symbol(c, a, m): v for m, v in sorted(prod.items())}


def n2_table(side: str = "a", kind: str = "odd", choice=None, tau=None) -> Dict[str, object]:
    if side not in ("a", "b"):
        raise ValueError("side must be 'a' or 'b'")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if kind == "even":
        alg = EvenArcAlgebra(2)
    else:
        alg = OddArcAlgebra(2, choice)
    if kind == "twisted" and tau is None:
        from .twist import explicit_twist_n2
        tau = explicit_twist_n2()
    rows, cols = layout(side)
    entries = []
    for x in rows:
        entries.append([product_terms(kind, alg, tau, x, y) for y in cols])
    return {
        "n": 2, "side": side, "kind": kind,
        "rows": [symbol(*x) for x in rows],
        "cols": [symbol(*y) for y in cols],
        "entries": [[{k: _coeff_json(v) for k, v in e.items()} for e in row] for row in entries],
    }


def render_text(table: Dict[str, object]) -> str:
    head = [f"{table['kind']} {table['side']}"] + list(table["cols"])
    body = [[r] + [format_entry(e) for e in row] for r, row in zip(table["rows"], table["entries"])]
    widths = [max(len(line[j]) for line in [head] + body) for j in range(len(head))]
    lines = []
    for k, line in enumerate([head] + body):
        lines.append(" | ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
        if k == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
