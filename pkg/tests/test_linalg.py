from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplexkit import linalg
from simplexkit.linalg import UnimodularAffineMap


def cofactor_det(A):
    """Laplace expansion along the first row; an oracle independent of the Smith form."""
    if not A:
        return 1
    if len(A) == 1:
        return A[0][0]
    total = 0
    for j, a in enumerate(A[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in A[1:]]
            total += (-1) ** j * a * cofactor_det(minor)
    return total


def square(max_n=5, lo=-10, hi=10):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


def rect(max_dim=5, lo=-10, hi=10):
    return st.tuples(st.integers(1, max_dim), st.integers(1, max_dim)).flatmap(
        lambda rc: st.lists(st.lists(st.integers(lo, hi), min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


def test_hermite_identity():
    H, U = linalg.hermite_form(linalg.identity(3))
    assert H == linalg.identity(3)
    assert U == linalg.identity(3)


def test_hermite_already_reduced():
    H, _ = linalg.hermite_form([[2, 0], [0, 2]])
    assert H == [[2, 0], [0, 2]]


def test_hermite_two_by_two():
    A = [[1, 2], [3, 4]]
    H, U = linalg.hermite_form(A)
    assert linalg.matmul(U, A) == H
    assert abs(H[0][0] * H[1][1]) == 2
    assert H[1][0] == 0


@given(rect())
@settings(max_examples=150, deadline=None)
def test_hermite_shape(A):
    H, U = linalg.hermite_form(A)
    assert linalg.matmul(U, A) == H
    assert abs(linalg.det(U)) == 1
    # pivots strictly move right, entries above a pivot are reduced
    last = -1
    for i, row in enumerate(H):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            assert all(not any(r) for r in H[i:])
            break
        p = nz[0]
        assert p > last and row[p] > 0
        for k in range(i):
            assert 0 <= H[k][p] < row[p]
        last = p


def test_smith_identity():
    assert linalg.smith_form(linalg.identity(4)).invariant_factors == (1, 1, 1, 1)


def test_smith_diagonal_pair():
    assert linalg.smith_form([[2, 0], [0, 3]]).invariant_factors == (1, 6)


def test_smith_two_by_two_counterexample_matrix():
    verts = [(0, 0, 0, 0, 0), (0, 0, 1, 0, 0), (1, 0, 0, 0, 0),
             (1, 0, 1, 2, 0), (0, 1, 0, 0, 0), (0, 1, 1, 0, 2)]
    M = [list(v) + [1] for v in verts]
    assert linalg.smith_form(M).invariant_factors == (1, 1, 1, 1, 2, 2)


@given(rect())
@settings(max_examples=200, deadline=None)
def test_smith_reconstructs(A):
    sf = linalg.smith_form(A)
    D = linalg.matmul(linalg.matmul(sf.U, A), sf.V)
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            assert x == (sf.diagonal[i] if i == j and i < len(sf.diagonal) else 0)
    nonzero = [d for d in sf.diagonal if d]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert all(d >= 0 for d in sf.diagonal)
    assert sf.rank == len(nonzero)
    assert abs(linalg.det(sf.U)) == 1 and abs(linalg.det(sf.V)) == 1


@given(square(6, -6, 6))
@settings(max_examples=200, deadline=None)
def test_det_against_cofactor_expansion(A):
    expected = cofactor_det(A)
    assert linalg.det(A) == expected
    sf = linalg.smith_form(A)
    prod = 1
    for d in sf.diagonal:
        prod *= d
    assert prod == abs(expected)


@given(rect(4, -5, 5))
@settings(max_examples=100, deadline=None)
def test_rank_matches_smith(A):
    assert linalg.rank(A) == linalg.smith_form(A).rank


def test_solve_identity():
    assert linalg.solve_rational(linalg.identity(3), [4, -1, 2]) == [4, -1, 2]


def test_solve_one_by_one():
    assert linalg.solve_rational([[2]], [1]) == [Fraction(1, 2)]


def test_solve_barycentric_coordinates():
    M = [[0, 0, 0, 1], [1, 0, 0, 1], [0, 1, 0, 1], [1, 1, 2, 1]]
    x = (1, 1, 1)
    lam = linalg.solve_rational(linalg.transpose(M), list(x) + [1])
    assert sum(lam) == 1
    assert [sum(l * row[j] for l, row in zip(lam, M)) for j in range(3)] == list(x)


def test_solve_inconsistent():
    assert linalg.solve_rational([[1, 1], [2, 2]], [1, 3]) is None


@given(square(5), st.data())
@settings(max_examples=150, deadline=None)
def test_solve_recovers_vector(A, data):
    if cofactor_det(A) == 0:
        return
    x = data.draw(st.lists(st.fractions(max_denominator=7), min_size=len(A), max_size=len(A)))
    b = [sum(a * xi for a, xi in zip(row, x)) for row in A]
    den = lcm(*(v.denominator for v in b))
    got = linalg.solve_rational(A, [int(v * den) for v in b])
    assert [g / den for g in got] == x


@given(square(5))
@settings(max_examples=100, deadline=None)
def test_adjugate_identity(A):
    d = cofactor_det(A)
    if d == 0:
        return
    adj, det = linalg.adjugate(A)
    assert det == d
    n = len(A)
    assert linalg.matmul(A, adj) == [[d * (i == j) for j in range(n)] for i in range(n)]


def test_inverse_unimodular_rejects_singular_index():
    with pytest.raises(ValueError):
        linalg.inverse_unimodular([[2, 0], [0, 1]])


def test_affine_map_requires_unimodular():
    with pytest.raises(ValueError):
        UnimodularAffineMap(((2, 0), (0, 1)), (0, 0))


def test_affine_map_compose_and_inverse():
    f = UnimodularAffineMap(((1, 2), (0, 1)), (3, -1))
    g = UnimodularAffineMap(((0, 1), (-1, 0)), (1, 1))
    x = (5, -7)
    assert f.compose(g)(x) == f(g(x))
    assert f.inverse()(f(x)) == x
    assert f.compose(f.inverse()) == UnimodularAffineMap.identity(2)
