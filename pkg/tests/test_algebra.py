import itertools

import pytest
from hypothesis import given, strategies as st

from oddarc.algebra import OddArcAlgebra, diagonal_subalgebra, nonassoc_witness
from oddarc.chronology import iter_all_choices, reversed_choice
from oddarc.even import EvenArcAlgebra

A, B = 0, 1


@pytest.fixture(scope="module")
def oh2():
    return OddArcAlgebra(2)


def test_basis_size(oh2):
    assert len(oh2.basis()) == 12
    assert len(oh2.pieces()) == 4


def test_table_signs(oh2):
    a1, a2 = oh2.gen(A, A, 0), oh2.gen(A, A, 1)
    top = oh2.element(A, A, 0b11)
    assert oh2.multiply(a1, a2) == top
    assert oh2.multiply(a2, a1) == -top
    assert oh2.multiply(oh2.one(B, A), oh2.one(A, B)) == oh2.gen(B, B, 1) - oh2.gen(B, B, 0)
    assert oh2.multiply(oh2.one(A, B), oh2.one(B, A)) == oh2.gen(A, A, 0) - oh2.gen(A, A, 1)


def test_unit(oh2):
    one = oh2.unit()
    for v in oh2.basis():
        x = oh2.element(*v)
        assert oh2.multiply(one, x) == x == oh2.multiply(x, one)


def test_parity():
    assert OddArcAlgebra.parity(0) == 0
    assert OddArcAlgebra.parity(0b01) == 1
    assert OddArcAlgebra.parity(0b11) == 0


def test_mismatched_pieces_vanish(oh2):
    assert not oh2.multiply(oh2.one(A, A), oh2.one(B, B))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_diagonal_is_exterior(n):
    assert all(diagonal_subalgebra(OddArcAlgebra(n)).values())


def test_n1_is_exterior_algebra():
    alg = OddArcAlgebra(1)
    x = alg.gen(0, 0, 0)
    assert not alg.multiply(x, x)
    assert alg.size == 1 and len(alg.basis()) == 2


def test_nonassoc_canonical():
    x, y, z, lhs, rhs = nonassoc_witness(2)
    assert lhs and lhs == -rhs
    assert set(lhs.pieces[(B, B)].terms) == {0b11}


@pytest.mark.parametrize("n", [3, 4])
def test_nonassoc_padded(n):
    *_, lhs, rhs = nonassoc_witness(n)
    assert lhs and lhs == -rhs


def test_nonassoc_every_choice():
    for C in itertools.islice(iter_all_choices(2), 0, None, 7):
        *_, lhs, rhs = nonassoc_witness(2, C)
        assert lhs and lhs == -rhs


@pytest.mark.parametrize("n", [2, 3])
def test_degree_and_grading(n):
    alg = OddArcAlgebra(n)
    N = alg.size
    for c, b, a in itertools.product(range(N), repeat=3):
        for (mx, my), p in alg.table(c, b, a).items():
            if p:
                assert p.qdeg() == alg.qdeg(c, b, mx) + alg.qdeg(b, a, my)
                assert p.ngens == alg.ncircles(c, a)


@pytest.mark.parametrize("choice", [None, "reversed"])
@pytest.mark.parametrize("n", [2, 3])
def test_mod2_agreement(n, choice):
    alg = OddArcAlgebra(n, reversed_choice(n) if choice else None)
    ev = EvenArcAlgebra(n)
    N = alg.size
    for c, b, a in itertools.product(range(N), repeat=3):
        for (mx, my), p in alg.table(c, b, a).items():
            q = ev.structure(c, b, a, mx, my)
            keys = set(p.terms) | set(q.terms)
            assert all((p.terms.get(k, 0) - q.terms.get(k, 0)) % 2 == 0 for k in keys)


@given(st.data())
def test_bilinear(data):
    alg = OddArcAlgebra(2)
    basis = alg.basis()

    def element():
        vs = data.draw(st.lists(st.sampled_from(basis), min_size=1, max_size=3))
        cs = data.draw(st.lists(st.integers(-2, 2), min_size=len(vs), max_size=len(vs)))
        out = alg.element(*vs[0], cs[0])
        for v, c in zip(vs[1:], cs[1:]):
            out = out + alg.element(*v, c)
        return out

    x, y, z = element(), element(), element()
    assert alg.multiply(x, y + z) == alg.multiply(x, y) + alg.multiply(x, z)
    assert alg.multiply(x + y, z) == alg.multiply(x, z) + alg.multiply(y, z)
