import cmath
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplexkit.cyclotomic import CyclotomicNumber, cyclotomic_polynomial, rank_over_field


def to_complex(x: CyclotomicNumber) -> complex:
    z = cmath.exp(2j * cmath.pi / x.m)
    return sum(float(c) * z ** i for i, c in enumerate(x.coeffs))


@pytest.mark.parametrize("m, coeffs", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (3, (1, 1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)),
    (12, (1, 0, -1, 0, 1)),
    (15, (1, -1, 0, 1, -1, 1, 0, -1, 1)),
])
def test_cyclotomic_polynomials(m, coeffs):
    assert cyclotomic_polynomial(m) == coeffs


def test_zeta_has_order_m():
    for m in (3, 4, 5, 8, 12):
        z = CyclotomicNumber.zeta(m)
        p = CyclotomicNumber.rational(m, 1)
        for k in range(1, m + 1):
            p = p * z
            assert (p == 1) == (k == m)


def test_sum_of_primitive_roots_is_mobius():
    # sum of primitive m-th roots of unity is mu(m)
    mobius = {5: -1, 6: 1, 8: 0, 9: 0, 10: 1, 7: -1}
    for m, mu in mobius.items():
        total = sum((CyclotomicNumber.zeta(m, k) for k in range(m) if gcd(k, m) == 1), CyclotomicNumber(m))
        assert total.as_rational() == mu


def test_str():
    x = CyclotomicNumber(5, [Fraction(-3, 5), Fraction(-1, 5)])
    assert str(x) == "-3/5 - 1/5*z5"
    assert str(CyclotomicNumber(4)) == "0"
    assert str(CyclotomicNumber.zeta(3, 2)) == "-1 - z3"


def elements(m):
    deg = len(cyclotomic_polynomial(m)) - 1
    small = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
    return st.lists(small, min_size=deg, max_size=deg).map(lambda c: CyclotomicNumber(m, c))


@given(st.sampled_from([3, 4, 5, 7, 8, 9, 12]).flatmap(lambda m: st.tuples(elements(m), elements(m))))
@settings(max_examples=150, deadline=None)
def test_field_operations_match_complex_numbers(pair):
    x, y = pair
    assert abs(to_complex(x + y) - (to_complex(x) + to_complex(y))) < 1e-9
    assert abs(to_complex(x * y) - to_complex(x) * to_complex(y)) < 1e-6
    if not y.is_zero():
        assert x / y * y == x
        assert y * y.inverse() == 1


@given(st.sampled_from([(3, 6), (4, 12), (5, 20), (2, 8)]).flatmap(
    lambda mM: st.tuples(elements(mM[0]), elements(mM[0]), st.just(mM[1]))))
@settings(max_examples=80, deadline=None)
def test_embedding_is_a_ring_map(triple):
    x, y, M = triple
    assert (x * y).embed(M) == x.embed(M) * y.embed(M)
    assert (x + y).embed(M) == x.embed(M) + y.embed(M)
    assert abs(to_complex(x.embed(M)) - to_complex(x)) < 1e-9


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        CyclotomicNumber.zeta(3) + CyclotomicNumber.zeta(4)
    with pytest.raises(ValueError):
        CyclotomicNumber.zeta(3).embed(4)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber(5).inverse()


def test_rank_over_field():
    z = CyclotomicNumber.zeta(4)
    one = CyclotomicNumber.rational(4, 1)
    assert rank_over_field([[one, z], [z, z * z]]) == 1
    assert rank_over_field([[one, z], [z, one]]) == 2
    assert rank_over_field([]) == 0
