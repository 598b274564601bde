import pytest

from oddarc.center import even_center, graded_rank
from oddarc.exterior import ExtElement
from oddarc.springer import admissible, epsilon, monomial, quotient_basis, variable, word


def test_epsilon_examples():
    x = lambda i: variable(2, i)
    assert epsilon(2, 1, (1, 2, 3, 4)) == x(1) - x(2) + x(3) - x(4)
    i, j, k = 1, 3, 4
    assert epsilon(2, 2, (i, j, k)) == -monomial(2, [i, j]) + monomial(2, [i, k]) - monomial(2, [j, k])
    assert epsilon(2, 4, (1, 2, 3, 4)) == monomial(2, [1, 2, 3, 4])


def test_epsilon_rejects_bad_index():
    with pytest.raises(ValueError):
        epsilon(2, 1, (1, 2))


def test_n1():
    qb = quotient_basis(1)
    assert qb.rank == 2
    assert [word(m) for d in sorted(qb.representatives) for m in qb.representatives[d]] == ["1", "x1"]


@pytest.mark.parametrize("n,rank", [(1, 2), (2, 6), (3, 20)])
def test_ranks(n, rank):
    qb = quotient_basis(n)
    assert qb.rank == rank
    assert all(d == 1 for ds in qb.divisors.values() for d in ds)


def test_graded_rank_n2():
    assert quotient_basis(2).graded_rank() == {0: 1, 2: 3, 4: 2}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_generators_vanish(n):
    qb = quotient_basis(n)
    for r, S in admissible(n):
        assert not qb.normal_form(epsilon(n, r, S))


def test_normal_forms():
    qb = quotient_basis(2)
    x = lambda i: variable(2, i)
    assert qb.normal_form(x(4)) == x(1) - x(2) + x(3)
    assert not qb.normal_form(ExtElement(4))


def test_squares_vanish():
    # x_i^2 is in the ideal, so the quotient can live inside the exterior algebra
    qb = quotient_basis(2)
    for i in range(1, 5):
        assert not qb.normal_form(variable(2, i).wedge(variable(2, i)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_graded_rank_matches_even_center(n):
    assert quotient_basis(n).graded_rank() == graded_rank(even_center(n))


def test_wrong_variable_count():
    with pytest.raises(ValueError):
        quotient_basis(2).normal_form(ExtElement(6, {1: 1}))


def test_size_guard():
    with pytest.raises(ValueError):
        quotient_basis(5)
