import pytest
from hypothesis import given, strategies as st

from oddarc.exterior import ExtElement, Gaussian, GeneratorMismatch, i_power, permutation_sign, wedge_sign

NG = 5


def g(i, ngens=2):
    return ExtElement.gen(ngens, i)


def elements(ngens=NG):
    terms = st.dictionaries(st.integers(0, (1 << ngens) - 1), st.integers(-3, 3), max_size=6)
    return terms.map(lambda t: ExtElement(ngens, t))


def monomials(ngens=NG):
    return st.integers(0, (1 << ngens) - 1).map(lambda m: ExtElement(ngens, {m: 1}))


def test_anticommute():
    assert g(1).wedge(g(0)) == -g(0).wedge(g(1))


def test_square_is_zero():
    assert not g(0).wedge(g(0))


def test_difference_wedge():
    assert (g(0) - g(1)).wedge(g(0)) == ExtElement(2, {0b11: 1})


def test_substitute_examples():
    top = ExtElement(2, {0b11: 1})
    assert not top.substitute({0: 0, 1: 0})
    assert g(1).substitute({1: 0}) == g(0)
    assert ExtElement.from_word(2, [1, 0]) == -top


def test_substitute_unmapped():
    with pytest.raises(GeneratorMismatch):
        g(1).substitute({0: 0})


def test_contract():
    top = ExtElement(2, {0b11: 1})
    assert top.contract(0) == g(1)
    assert not g(1).contract(0)
    assert top.contract(1) == -g(0)


def test_qdeg():
    assert ExtElement(1, {0: 1}, 2).qdeg() == 1
    assert ExtElement(2, {0b11: 1}, 2).qdeg() == 4
    assert (g(0) + ExtElement(2, {0b11: 1})).qdeg() == "inhomogeneous"
    assert ExtElement(2).qdeg() is None


def test_i_power_cycles():
    assert [i_power(k) for k in range(4)] == [1, Gaussian(0, 1), -1, Gaussian(0, -1)]
    assert i_power(5) == i_power(1)
    assert i_power(1) * i_power(3) == 1


def test_signs():
    assert wedge_sign(0b01, 0b10) == 1
    assert wedge_sign(0b10, 0b01) == -1
    assert permutation_sign([2, 0, 1]) == 1
    assert permutation_sign([1, 0]) == -1


def test_generator_mismatch():
    with pytest.raises(GeneratorMismatch):
        g(0, 2) + g(0, 3)


@given(elements(), elements(), elements())
def test_wedge_associative(x, y, z):
    assert x.wedge(y).wedge(z) == x.wedge(y.wedge(z))


@given(elements(), elements(), elements())
def test_wedge_bilinear(x, y, z):
    assert x.wedge(y + z) == x.wedge(y) + x.wedge(z)
    assert (x + y).wedge(z) == x.wedge(z) + y.wedge(z)


@given(monomials(), monomials())
def test_graded_commutative(x, y):
    sign = -1 if x.parity() and y.parity() else 1
    assert x.wedge(y) == y.wedge(x).scale(sign)


@given(monomials(), monomials())
def test_degree_and_parity_add(x, y):
    p = x.wedge(y)
    if p:
        assert p.qdeg() == x.qdeg() + y.qdeg() + NG
        assert p.parity() == (x.parity() + y.parity()) % 2


@given(monomials(), elements(), st.integers(0, NG - 1))
def test_contract_is_odd_derivation(x, y, i):
    sign = -1 if x.parity() else 1
    assert x.wedge(y).contract(i) == x.contract(i).wedge(y) + x.wedge(y.contract(i)).scale(sign)


@given(elements(), elements(), st.permutations(range(NG)))
def test_substitute_is_multiplicative(x, y, perm):
    f = dict(enumerate(perm))
    assert x.wedge(y).substitute(f) == x.substitute(f).wedge(y.substitute(f))
