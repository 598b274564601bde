import pytest
from hypothesis import given, strategies as st

from oddarc.algebra import OddArcAlgebra
from oddarc.center import (arcs_of, center_choice_independence, exchange_parity, expected_rank, free_points,
                           h_a_epsilon_R, h_image, is_odd_central, odd_center, verify_iso)
from oddarc.chronology import reversed_choice
from oddarc.exterior import ExtElement
from oddarc.springer import variable
from oddarc.twist import Twist, TwistedAlgebra, twisted_center

A, B = 0, 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rank_and_freeness(n):
    res = odd_center(n)
    assert res.rank == expected_rank(n)
    assert all(d == 1 for ds in res.divisors.values() for d in ds)


def test_graded_ranks():
    assert odd_center(2).graded_rank() == {0: 1, 2: 3, 4: 2}
    assert odd_center(3).graded_rank() == {0: 1, 2: 5, 4: 9, 6: 5}


def test_basis_is_odd_central():
    alg = OddArcAlgebra(2)
    for q, zs in odd_center(2, alg).basis.items():
        for z in zs:
            assert is_odd_central(alg, z, (q // 2) % 2)


def test_reversed_choice_same_ranks():
    assert odd_center(2, OddArcAlgebra(2, reversed_choice(2))).graded_rank() == {0: 1, 2: 3, 4: 2}


def test_h_examples():
    alg = OddArcAlgebra(2)
    x = lambda i: variable(2, i)
    assert h_image(alg, x(1)) == alg.gen(A, A, 0) + alg.gen(B, B, 0)
    assert h_image(alg, ExtElement.one(4)) == alg.unit()
    h12 = h_image(alg, x(1).wedge(x(2)))
    assert h12 == alg.element(B, B, 0b11)
    assert not h_image(alg, x(1) - x(2) + x(3) - x(4))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_verify_iso(n):
    rep = verify_iso(n)
    assert rep.ok, rep.witnesses


@pytest.mark.parametrize("n", [1, 2, 3])
def test_choice_independence(n):
    assert center_choice_independence(n)["identical"]


def test_center_inside_odd_center():
    alg = OddArcAlgebra(2)
    z = twisted_center(TwistedAlgebra(alg, Twist(2, {})), odd=False)
    for q, elems in z.items():
        for e in elems:
            parity = {m.bit_count() % 2 for (_, _, m), _ in e.terms()}
            assert parity == {0}
            assert is_odd_central(alg, e, 0)


# -- free-point combinatorics as an independent oracle ----------------------

@st.composite
def configurations(draw, nmax=3):
    n = draw(st.integers(2, nmax))
    alg = OddArcAlgebra(n)
    a = draw(st.integers(0, alg.size - 1))
    k = draw(st.integers(1, n))
    S = sorted(draw(st.sets(st.integers(1, 2 * n), min_size=n + k, max_size=n + k)))
    return alg, a, k, S


@given(configurations())
def test_free_point_bound(cfg):
    alg, a, k, S = cfg
    arcs = alg.B[a].arcs
    assert len(arcs_of(arcs, S)) >= k
    assert len(free_points(arcs, S)) <= alg.n - k


@given(configurations(), st.randoms(use_true_random=False))
def test_arc_in_R_kills(cfg, rng):
    alg, a, k, S = cfg
    arcs = arcs_of(alg.B[a].arcs, S)
    arc = rng.choice(arcs)
    rest = [x for x in S if x not in arc]
    R = sorted(list(arc) + rng.sample(rest, rng.randint(0, len(rest))))
    assert not h_a_epsilon_R(alg, a, R, S)


@given(configurations(), st.randoms(use_true_random=False))
def test_sign_exchange(cfg, rng):
    alg, a, k, S = cfg
    arc = rng.choice(arcs_of(alg.B[a].arcs, S))
    j, jj = arc
    rest = [x for x in S if x not in arc]
    R = sorted([j] + rng.sample(rest, rng.randint(0, len(rest))))
    R2 = sorted([x for x in R if x != j] + [jj])
    sign = -1 if (exchange_parity(alg.B[a].arcs, R, S, arc) + 1) % 2 else 1
    assert h_a_epsilon_R(alg, a, R, S) == h_a_epsilon_R(alg, a, R2, S).scale(sign)


def test_n4_center_and_iso():
    res = odd_center(4)
    assert res.rank == 70
    assert res.graded_rank() == {0: 1, 2: 7, 4: 20, 6: 28, 8: 14}
    assert verify_iso(4, center=res).ok
