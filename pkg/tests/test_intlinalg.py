from hypothesis import given, strategies as st

from oddarc.intlinalg import coordinates, hermite, integer_kernel, rank_mod_p, smith_diagonal, solve_mod


def matrices(rows=4, cols=5, lo=-4, hi=4):
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols), min_size=1, max_size=rows)


def test_smith_example():
    assert smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3) == [2, 6, 12]


def test_kernel_example():
    kern = integer_kernel([[1, 1, 0], [0, 1, 1]], 3)
    assert len(kern) == 1 and kern[0] in ([1, -1, 1], [-1, 1, -1])


def test_solve_mod4():
    # 2x = 2 mod 4 has a solution, 2x = 1 does not
    assert solve_mod([[2]], [2], 2, 2) in ([1], [3])
    assert solve_mod([[2]], [1], 2, 2) is None
    assert solve_mod([[1, 1], [1, 3]], [0, 2], 2, 2) is not None


@given(matrices())
def test_kernel_is_kernel_and_saturated(m):
    width = len(m[0])
    kern = integer_kernel(m, width)
    for v in kern:
        assert all(sum(r[j] * v[j] for j in range(width)) == 0 for r in m)
    assert len(kern) + len(smith_diagonal(m, width)) == width
    if kern:
        assert all(d == 1 for d in smith_diagonal(kern, width))


@given(matrices())
def test_smith_divisibility(m):
    d = smith_diagonal(m, len(m[0]))
    assert all(y % x == 0 for x, y in zip(d, d[1:]))
    assert len(d) == hermite(m, len(m[0])).rank


@given(matrices(), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_coordinates_roundtrip(m, coeffs):
    v = [sum(c * r[j] for c, r in zip(coeffs, m)) for j in range(len(m[0]))]
    xs = coordinates(m, v)
    assert xs is not None
    assert [sum(c * r[j] for c, r in zip(xs, m)) for j in range(len(m[0]))] == v


@given(matrices(lo=0, hi=3), st.lists(st.integers(0, 3), min_size=5, max_size=5))
def test_solve_mod_on_consistent_systems(m, x):
    b = [sum(r[j] * x[j] for j in range(5)) % 4 for r in m]
    y = solve_mod(m, b, 2, 2)
    assert y is not None
    assert [sum(r[j] * y[j] for j in range(5)) % 4 for r in m] == b


def test_rank_mod_p():
    assert rank_mod_p([[1, 1], [1, 1]], 2) == 1
    assert rank_mod_p([[2, 0], [0, 1]], 2) == 1
