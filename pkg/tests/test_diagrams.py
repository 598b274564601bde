import itertools

import pytest

from oddarc.diagrams import (Matching, SizeError, catalan, close, enumerate_matchings, matching_id,
                             parse_matching, stack)

A = Matching(2, ((1, 2), (3, 4)))
B = Matching(2, ((1, 4), (2, 3)))


def test_small_lists():
    assert [m.arcs for m in enumerate_matchings(1)] == [((1, 2),)]
    assert enumerate_matchings(2) == (A, B)


@pytest.mark.parametrize("n", range(1, 7))
def test_catalan_counts(n):
    assert len(enumerate_matchings(n)) == catalan(n)


def test_n5():
    assert len(enumerate_matchings(5)) == 42


def test_stable_order():
    assert enumerate_matchings(4) == enumerate_matchings(4)
    assert [matching_id(m) for m in enumerate_matchings(4)] == list(range(14))


def test_size_guard():
    with pytest.raises(SizeError):
        enumerate_matchings(9)


def test_bad_matchings():
    with pytest.raises(ValueError):
        Matching(2, ((1, 3), (2, 4)))
    with pytest.raises(ValueError):
        Matching(2, ((1, 2), (2, 3)))


def test_parse():
    assert parse_matching(2, 1) == B
    assert parse_matching(2, "2:0") == A
    assert parse_matching(2, [[2, 3], [1, 4]]) == B


def test_closures():
    assert close(A, A).circles == ((1, 2), (3, 4))
    assert close(B, A).circles == ((1, 2, 3, 4),)
    assert close(B, B).circles == ((1, 4), (2, 3))


def test_stacks():
    assert len(stack(close(B, A), close(A, B))) == 2
    assert len(stack(close(A, A), close(A, A))) == 4
    assert len(stack(close(B, B), close(B, A))) == 3


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reflection_symmetry(n):
    Bn = enumerate_matchings(n)
    for a, b in itertools.product(Bn, repeat=2):
        assert len(close(a, b)) == len(close(b, a))


def test_total_rank_n2():
    Bn = enumerate_matchings(2)
    assert sum(2 ** len(close(b, a)) for a, b in itertools.product(Bn, repeat=2)) == 12


@pytest.mark.parametrize("n", [1, 2, 3])
def test_diagonal_has_n_circles(n):
    for a in enumerate_matchings(n):
        assert len(close(a, a)) == n


def test_padding():
    assert A.padded(1).arcs == ((1, 2), (3, 4), (5, 6))
