import random
from dataclasses import replace
from fractions import Fraction
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplexkit.cayley import (
    cayley_build,
    cayley_decompose,
    cayley_point,
    delta_family,
    scramble,
    verify_decomposition,
)
from simplexkit.errors import (
    DegenerateSimplex,
    FacetNotBasic,
    InvalidParams,
    NotLatticeFree,
    SimplexKitError,
)
from simplexkit.linalg import UnimodularAffineMap
from simplexkit.simplex import LatticeSimplex, h_star, is_basic, lattice_points_in_dilate
from simplexkit.suites import counterexample


def unit(D):
    return LatticeSimplex(((0,) * D,) + tuple(tuple(int(i == j) for j in range(D)) for i in range(D)))


@st.composite
def family(draw, d_max=4, n_max=11):
    d = draw(st.integers(1, d_max))
    n = draw(st.integers(1, n_max))
    a = draw(st.lists(st.integers(0, n - 1), min_size=d - 1, max_size=d - 1)
             .filter(lambda a: gcd(prod(a), n) == 1))
    return tuple(a), n


def test_cayley_point_drops_first_coordinate():
    assert cayley_point(0, (5, 6), 2) == (0, 5, 6)
    assert cayley_point(1, (5, 6), 2) == (1, 5, 6)
    assert cayley_point(2, (7, 8, 9), 3) == (0, 1, 7, 8, 9)


def test_two_segments_give_white_tetrahedron():
    a, n = 2, 5
    S = cayley_build([((0, 0), (1, 0)), ((0, 0), (a, n))])
    assert S.vertices == ((0, 0, 0), (0, 1, 0), (1, 0, 0), (1, a, n))
    assert S == delta_family((a,), n)
    assert sorted(lattice_points_in_dilate(S, 1)) == sorted(S.vertices)


def test_counterexample_vertices():
    S = counterexample(2, 3)
    assert S.vertices == ((0, 0, 0, 0, 0), (0, 0, 1, 0, 0), (1, 0, 0, 0, 0),
                          (1, 0, 1, 2, 0), (0, 1, 0, 0, 0), (0, 1, 1, 0, 3))


def test_parallel_segments_are_degenerate():
    with pytest.raises(DegenerateSimplex):
        cayley_build([((0, 0), (1, 0)), ((0, 1), (2, 1))])
    with pytest.raises(DegenerateSimplex):
        cayley_build([((0, 0), (0, 0)), ((0, 0), (1, 1))])


def test_delta_family_examples():
    assert h_star(delta_family((1, 1), 1)).coefficients == (1, 0, 0, 0, 0, 0)
    assert is_basic(delta_family((1, 1), 1))
    assert str(h_star(delta_family((1, 2), 5))) == "1 + 4*t^3"


def test_delta_family_rejects_bad_parameters():
    with pytest.raises(InvalidParams):
        delta_family((2,), 4)
    with pytest.raises(InvalidParams):
        delta_family((1,), 0)
    with pytest.raises(InvalidParams):
        delta_family((0, 1), 3)


def test_decompose_delta_125():
    S = delta_family((1, 2), 5)
    dec = cayley_decompose(S)
    assert dec.n == 5 and dec.d == 3
    assert verify_decomposition(S, dec)
    assert dec.pairing is not None and dec.pairing.verify()


def test_decompose_scrambled_delta_125():
    T, _ = scramble(delta_family((1, 2), 5), 1234)
    dec = cayley_decompose(T)
    assert dec.n == 5
    assert verify_decomposition(T, dec)


def test_decompose_unit_simplex():
    S = unit(5)
    dec = cayley_decompose(S)
    assert dec.n == 1 and dec.a == (0, 0)
    assert verify_decomposition(S, dec)


def test_corrupted_translation_fails_verification():
    S = delta_family((1, 2), 5)
    dec = cayley_decompose(S)
    t = list(dec.map.translation)
    t[0] += 1
    bad = replace(dec, map=UnimodularAffineMap(dec.map.linear, tuple(t)))
    assert not verify_decomposition(S, bad)


def test_counterexample_is_rejected():
    for p, q in ((2, 2), (2, 3), (3, 3), (4, 2)):
        with pytest.raises((FacetNotBasic, NotLatticeFree)):
            cayley_decompose(counterexample(p, q))


def test_even_dimension_rejected():
    with pytest.raises(InvalidParams):
        cayley_decompose(unit(4))


def test_non_empty_tetrahedron_rejected():
    S = LatticeSimplex(((0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)))
    with pytest.raises(SimplexKitError):
        cayley_decompose(S)


def test_scramble_is_deterministic():
    S = delta_family((2, 3), 7)
    assert scramble(S, 99) == scramble(S, 99)
    assert scramble(S, 99)[0] != scramble(S, 100)[0]


def test_scramble_of_unit_is_basic():
    for seed in range(10):
        T, f = scramble(unit(5), seed)
        assert is_basic(T)
        assert sorted(T.vertices) == sorted(f(v) for v in unit(5).vertices)


@given(family(d_max=3, n_max=9), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_scramble_preserves_h_star(params, seed):
    S = delta_family(*params)
    T, _ = scramble(S, seed)
    assert h_star(T) == h_star(S)


@given(family(), st.integers(0, 2**32))
@settings(max_examples=80, deadline=None)
def test_round_trip(params, seed):
    a, n = params
    T, _ = scramble(delta_family(a, n), seed)
    dec = cayley_decompose(T)
    assert dec.n == n
    assert verify_decomposition(T, dec)
    # the decomposition lands on Delta(a', n) whose weights are units
    assert all(gcd(x, n) == 1 for x in dec.a) or n == 1


@given(family(n_max=13))
@settings(max_examples=80, deadline=None)
def test_generator_weights_sum_to_d(params):
    # for the normalized generator weights w, sum_i {t * w_i / n} = d for every unit t
    a, n = params
    if n == 1:
        return
    dec = cayley_decompose(delta_family(a, n))
    for t in range(1, n):
        if gcd(t, n) == 1:
            assert sum(Fraction(t * w % n, n) for w in dec.weights) == dec.d


def test_segment_images():
    dec = cayley_decompose(delta_family((3,), 7))
    segs = dec.segment_images
    assert segs[-1] == ((0, 0), dec.a + (7,))
    assert segs[0] == ((0, 0), (1, 0))


def test_many_seeds_recover_same_class():
    rng = random.Random(5)
    S = delta_family((2, 4), 9)
    seen = set()
    for _ in range(10):
        T, _ = scramble(S, rng.getrandbits(32))
        dec = cayley_decompose(T)
        assert dec.n == 9
        seen.add(dec.a)
    # every recovered parameter vector gives a simplex with the same h*
    assert all(h_star(delta_family(a, 9)) == h_star(S) for a in seen)
