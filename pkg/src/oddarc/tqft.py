"""The odd functor OF on contraction cobordisms W(c)bW(b)a -> W(c)a.

Elementary maps act on :class:`ExtElement` values whose generators are the
current circles.  :func:`execute` walks a chronology step by step: a merge
identifies two generators, a split renames the old generator to the left
piece and wedges ``(g_L - g_R)`` (or its negative) on the left.
"""

from __future__ import annotations

from typing import List, Tuple

from .chronology import LR, Chronology, canonical_chronology
from .diagrams import Matching, close, contraction_components
from .exterior import ExtElement, gens_difference


class StateError(RuntimeError):
    pass


# -- elementary cobordisms ------------------------------------------------

def birth(x: ExtElement) -> ExtElement:
    """A new circle appended as the last generator; ``v -> 1 ^ v``."""
    return x.extend(x.ngens + 1)


def merge(x: ExtElement, keep: int, drop: int) -> ExtElement:
    """Quotient by ``g_keep - g_drop``; generator indices are left unchanged."""
    return x.substitute(lambda i: keep if i == drop else i)


def split(x: ExtElement, old: int, left: int, right: int, orientation: str = LR) -> ExtElement:
    """Replace ``g_old`` by ``g_left`` and wedge ``(g_left - g_right)`` on the left.

    ``RL`` orientation negates the map.
    """
    y = x.substitute(lambda i: left if i == old else i)
    w = gens_difference(y.ngens, left, right, y.shift)
    if orientation != LR:
        w = -w
    return w.wedge(y)


def positive_death(x: ExtElement, g: int) -> ExtElement:
    return x.contract(g)


def negative_death(x: ExtElement, g: int) -> ExtElement:
    return -x.contract(g)


def twist(x: ExtElement, i: int, j: int) -> ExtElement:
    return x.substitute(lambda k: j if k == i else (i if k == j else k))


# -- contraction cobordisms -----------------------------------------------

def _initial_labels(c: Matching, b: Matching, a: Matching) -> Tuple[List[int], int]:
    """Global circle index of every vertex of W(c)bW(b)a, upper circles first."""
    n = b.n
    up, lo = close(c, b), close(b, a)
    labels = [0] * (4 * n)
    for i in range(1, 2 * n + 1):
        labels[i - 1] = up.circle_of(i)
        labels[2 * n + i - 1] = len(up) + lo.circle_of(i)
    return labels, len(up) + len(lo)


def execute(ch: Chronology, x: ExtElement, trace: list = None) -> ExtElement:
    """Apply OF of the chronological cobordism ``ch`` to ``x``.

    ``x`` lives on the stacked diagram (upper circles, then lower).  The
    result lives on W(c)a with its circles in left-to-right order and has
    degree shift ``n``.
    """
    c, b, a = ch.triple
    n = b.n
    labels, m = _initial_labels(c, b, a)
    if x.ngens != m:
        raise StateError(f"element has {x.ngens} generators, stacked diagram has {m} circles")
    y = x
    next_id = m
    done = []
    for step in ch.steps:
        i, j = step.arc
        if step.arc not in b.arcs:
            raise StateError(f"{step.arc} is not an arc of {b}")
        ui, li, uj = i - 1, 2 * n + i - 1, j - 1
        p, q = labels[ui], labels[li]
        done.append(step.arc)
        comps = contraction_components(c, b, a, done)
        if p != q:
            keep, drop = min(p, q), max(p, q)
            y = merge(y, keep, drop)
            labels = [keep if lab == drop else lab for lab in labels]
            if trace is not None:
                trace.append(("merge", step.arc, keep, drop))
        else:
            comp_left = next(g for g in comps if ui in g)
            if uj in comp_left:
                raise StateError(f"contracting {step.arc} should split a circle")
            r = next_id
            next_id += 1
            y = y.extend(next_id)
            for v in range(4 * n):
                if labels[v] == p and v not in comp_left:
                    labels[v] = r
            y = split(y, p, p, r, step.orientation)
            if trace is not None:
                trace.append(("split", step.arc, p, r, step.orientation))
    final = close(c, a)
    target = {}
    for v in range(4 * n):
        pt = v % (2 * n) + 1
        k = final.circle_of(pt)
        if target.setdefault(labels[v], k) != k:
            raise StateError("final circles do not match the closure W(c)a")
    if len(set(target.values())) != len(final):
        raise StateError("final circle count does not match W(c)a")
    return y.substitute(target, ngens=len(final), shift=n)


def split_count(c: Matching, b: Matching, a: Matching) -> int:
    """Number of splits in C_cba (the same for every chronology)."""
    return canonical_chronology(c, b, a).kinds().count("split")


def split_count_formula(c: Matching, b: Matching, a: Matching) -> int:
    """Euler-characteristic count: ``(n + |W(c)a| - |W(c)b| - |W(b)a|) / 2``."""
    n = b.n
    twice = n + len(close(c, a)) - len(close(c, b)) - len(close(b, a))
    assert twice % 2 == 0
    return twice // 2
