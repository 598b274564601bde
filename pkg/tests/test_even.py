import itertools

import pytest

from oddarc.even import EvenArcAlgebra

A, B = 0, 1


def test_examples():
    ev = EvenArcAlgebra(2)
    assert ev.multiply({(B, A, 0): 1}, {(A, B, 0): 1}) == {(B, B, 0b01): 1, (B, B, 0b10): 1}
    assert ev.multiply({(A, A, 0): 1}, {(A, A, 0): 1}) == {(A, A, 0): 1}
    assert ev.multiply({(A, A, 1): 1}, {(A, A, 1): 1}) == {}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_associative(n):
    ev = EvenArcAlgebra(n)
    N = ev.size
    for d, c, b, a in itertools.product(range(N), repeat=4):
        for mx in range(1 << ev.ncircles(d, c)):
            for my in range(1 << ev.ncircles(c, b)):
                for mz in range(1 << ev.ncircles(b, a)):
                    x, y, z = {(d, c, mx): 1}, {(c, b, my): 1}, {(b, a, mz): 1}
                    assert ev.multiply(ev.multiply(x, y), z) == ev.multiply(x, ev.multiply(y, z))


def test_commutative_diagonal():
    ev = EvenArcAlgebra(2)
    for mx, my in itertools.product(range(4), repeat=2):
        assert ev.multiply({(A, A, mx): 1}, {(A, A, my): 1}) == ev.multiply({(A, A, my): 1}, {(A, A, mx): 1})
