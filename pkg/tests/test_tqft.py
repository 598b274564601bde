import itertools

import pytest

from oddarc.chronology import canonical_chronology, enumerate_choices
from oddarc.diagrams import close, enumerate_matchings
from oddarc.exterior import ExtElement
from oddarc.tqft import (birth, execute, merge, negative_death, positive_death, split, split_count,
                         split_count_formula, twist)

A, B = enumerate_matchings(2)


def test_elementary_maps():
    g0, g1 = ExtElement.gen(2, 0), ExtElement.gen(2, 1)
    assert merge(g1, 0, 1) == g0
    assert not merge(g0.wedge(g1), 0, 1)
    # split: 1 -> (g_L - g_R), with the old generator renamed to the left piece
    one = ExtElement.one(2)
    assert split(one, 0, 0, 1) == g0 - g1
    assert split(one, 0, 0, 1, "RL") == g1 - g0
    assert split(g0, 0, 0, 1) == g0.wedge(g1)
    assert birth(g0) == ExtElement.gen(3, 0)
    assert positive_death(g0.wedge(g1), 0) == g1
    assert negative_death(g0.wedge(g1), 0) == -g1
    assert twist(g0, 0, 1) == g1


def test_bab_unit():
    ch = canonical_chronology(B, A, B)
    x = ExtElement(2, {0: 1}, 4)
    out = execute(ch, x)
    assert out.terms == {0b01: -1, 0b10: 1}  # b2 - b1


def test_aaa_unit():
    ch = canonical_chronology(A, A, A)
    assert execute(ch, ExtElement(4, {0: 1}, 4)).terms == {0: 1}


def test_bbb_composite():
    # b1 in the upper copy times b1 - b2 in the lower copy: two merges give -b1^b2
    ch = canonical_chronology(B, B, B)
    x = ExtElement(4, {0b0101: 1, 0b1001: -1}, 4)
    assert execute(ch, x).terms == {0b11: -1}


def test_split_counts_n2():
    assert split_count(A, A, A) == 0
    assert split_count(B, A, B) == 1
    assert split_count(B, B, B) == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_split_count_formula(n):
    for t in itertools.product(enumerate_matchings(n), repeat=3):
        assert split_count(*t) == split_count_formula(*t)


@pytest.mark.parametrize("n", [2, 3])
def test_products_are_degree_n(n):
    """Every chronology lands on W(c)a and has degree n before shifts."""
    for c, b, a in itertools.product(enumerate_matchings(n), repeat=3):
        nu, nl = len(close(c, b)), len(close(b, a))
        for ch in enumerate_choices(n, (c, b, a))[:4]:
            for m in range(1 << (nu + nl)):
                out = execute(ch, ExtElement(nu + nl, {m: 1}, 2 * n))
                assert out.ngens == len(close(c, a))
                if out:
                    assert out.qdeg() == ExtElement(nu + nl, {m: 1}, 2 * n).qdeg()
