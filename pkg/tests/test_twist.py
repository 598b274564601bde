import itertools
import json

import pytest

from oddarc.algebra import OddArcAlgebra
from oddarc.chronology import iter_all_choices, reversed_choice
from oddarc.exterior import i_power
from oddarc.tables import n2_table
from oddarc.twist import (Associator, GroupoidDegree, Twist, TwistedAlgebra, classify, classify_twisted,
                          compose, degree_of, eta, explicit_twist_n2, reference_associator, sign_twist_search,
                          solve_twist, verify_cocycle, verify_quasi_associativity, verify_twist,
                          verify_twisted_associativity)

A, B = 0, 1


@pytest.fixture(scope="module")
def assoc2():
    return reference_associator(2)


def test_compose():
    g = compose(GroupoidDegree(0, 1, 1), GroupoidDegree(1, 0, 3))
    assert g == GroupoidDegree(0, 0, 4)
    with pytest.raises(ValueError):
        compose(GroupoidDegree(0, 1, 1), GroupoidDegree(0, 0, 0))


def test_chronology_signs_n2(assoc2):
    assert assoc2.phi_ch(B, B, A, B) == 0
    assert len(assoc2.ch) == 16
    for d in range(2):
        assert assoc2.phi_ch(d, d, d, d) == 0
    assert len(assoc2.determined) == 14


def test_commutation_part(assoc2):
    alg = assoc2.alg
    even = degree_of(alg, B, B, 0)
    odd = degree_of(alg, B, B, 0b01)
    ba, ab = degree_of(alg, B, A, 0), degree_of(alg, A, B, 0)
    assert assoc2.phi_com(even, ba, ab) == 0
    assert assoc2.phi_com(odd, ba, ab) == 2
    assert assoc2.phi_com(odd, degree_of(alg, B, B, 0), degree_of(alg, B, A, 0)) == 0


def test_psi_at_witness(assoc2):
    alg = assoc2.alg
    x = degree_of(alg, B, B, 0b01)
    assert assoc2.psi(x, degree_of(alg, B, A, 0), degree_of(alg, A, B, 0)) == 2


def test_psi_unit_slots(assoc2):
    alg = assoc2.alg
    for a, b in itertools.product(range(2), repeat=2):
        one = degree_of(alg, b, b, 0)
        for m in range(1 << alg.ncircles(b, a)):
            g = degree_of(alg, b, a, m)
            assert assoc2.psi(one, one, g) == 0
            assert assoc2.psi(g, degree_of(alg, a, a, 0), degree_of(alg, a, a, 0)) == 0


@pytest.mark.parametrize("n", [1, 2])
def test_cocycle(n):
    assert verify_cocycle(reference_associator(n))["ok"]


def test_psi_predicts_products(assoc2):
    """``(xy)z = i^psi x(yz)`` compared directly on every basis triple."""
    alg = assoc2.alg
    for d, c, b, a in itertools.product(range(2), repeat=4):
        for mx, my, mz in itertools.product(range(1 << alg.ncircles(d, c)), range(1 << alg.ncircles(c, b)),
                                            range(1 << alg.ncircles(b, a))):
            x, y, z = alg.element(d, c, mx), alg.element(c, b, my), alg.element(b, a, mz)
            lhs = alg.multiply(alg.multiply(x, y), z)
            rhs = alg.multiply(x, alg.multiply(y, z))
            psi = assoc2.psi(degree_of(alg, d, c, mx), degree_of(alg, c, b, my), degree_of(alg, b, a, mz))
            assert lhs == rhs.scale(i_power(psi))


def test_quasi_associativity_other_choices():
    for C in itertools.islice(iter_all_choices(2), 0, None, 101):
        assert verify_quasi_associativity(Associator(OddArcAlgebra(2, C)))["ok"]


def test_eta_relates_associators(assoc2):
    for C in itertools.islice(iter_all_choices(2), 0, None, 37):
        other = Associator(OddArcAlgebra(2, C))
        et = eta(assoc2.alg, other.alg)
        for (d, c, b, a), v in other.determined.items():
            d_eta = sum(et[t] for t in ((c, b, a), (d, b, a), (d, c, a), (d, c, b)))
            assert (d_eta - v + assoc2.determined[(d, c, b, a)]) % 2 == 0


def test_n1_twist_is_zero():
    assoc = reference_associator(1)
    assert solve_twist(assoc).values == {}


def test_solved_twist_n2(assoc2):
    tau = solve_twist(assoc2)
    assert verify_twist(assoc2, tau)["ok"]
    assert verify_twisted_associativity(assoc2.alg, tau)["ok"]


def test_explicit_twist(assoc2):
    tau = explicit_twist_n2()
    assert verify_twist(assoc2, tau, "even")["ok"]
    assert verify_twisted_associativity(assoc2.alg, tau)["ok"]


def test_explicit_twist_needs_basis_degrees(assoc2):
    # off the degrees that basis vectors can have, the explicit twist is not a solution
    assert not verify_twist(assoc2, explicit_twist_n2(), "all")["ok"]


def test_twisted_table_changes():
    t = n2_table("a", "twisted")
    entry = lambda r, c: t["entries"][t["rows"].index(r)][t["cols"].index(c)]
    assert entry("a1", "_a1_b") == {"x": -1}
    assert entry("a2", "_a1_b") == {"x": -1}
    assert entry("y", "_a1_b") == {"b1^b2": 1}
    assert t["entries"][0] == n2_table("a", "odd")["entries"][0]
    assert n2_table("b", "twisted")["entries"] == n2_table("b", "odd")["entries"]


def test_odd_elements_anticommute_after_twist(assoc2):
    alg = assoc2.alg
    for tau in (explicit_twist_n2(), solve_twist(assoc2)):
        tw = TwistedAlgebra(alg, tau)
        for a in range(alg.size):
            for i, j in itertools.product(range(2), repeat=2):
                x, y = alg.gen(a, a, i), alg.gen(a, a, j)
                assert tw.multiply(x, y) == -tw.multiply(y, x)


def test_twist_json_roundtrip(assoc2):
    tau = solve_twist(assoc2)
    back = Twist.from_json(json.loads(json.dumps(tau.to_json())))
    assert back.values == tau.values


def test_sign_twist_n2(assoc2):
    tau = sign_twist_search(assoc2)
    assert tau is not None
    assert set(tau.values.values()) <= {2}
    assert verify_twisted_associativity(assoc2.alg, tau)["ok"]


def test_classify_same_choice(assoc2):
    res = classify(assoc2, assoc2)
    assert res.status == "isomorphic" and res.verified
    assert not any(res.lam.values())


def test_classify_reversed(assoc2):
    other = Associator(OddArcAlgebra(2, reversed_choice(2)))
    res = classify(assoc2, other)
    assert res.status == "isomorphic" and res.verified
    tw = classify_twisted(assoc2, solve_twist(assoc2), other, solve_twist(other))
    assert tw.status == "isomorphic" and tw.verified


def test_classify_twisted_explicit_vs_solved(assoc2):
    res = classify_twisted(assoc2, explicit_twist_n2(), assoc2, solve_twist(assoc2))
    assert res.status == "isomorphic" and res.verified


def test_n3_quasi_associativity():
    assert verify_quasi_associativity(reference_associator(3))["ok"]


def test_n3_sign_twist():
    assoc = reference_associator(3)
    tau = sign_twist_search(assoc)
    assert tau is not None
    assert verify_twist(assoc, tau, "even")["ok"]
    assert verify_twisted_associativity(assoc.alg, tau)["ok"]


def test_n3_reversed_choice_twisted_iso():
    first = reference_associator(3)
    other = Associator(OddArcAlgebra(3, reversed_choice(3)))
    assert verify_cocycle(other)["ok"]
    tau_other = sign_twist_search(other)
    res = classify_twisted(first, sign_twist_search(first), other, tau_other)
    assert res.status == "isomorphic" and res.verified
