"""
Exact polynomial arithmetic and mod-4 graded dimension vectors.
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algebra.polyalg import (
    ALPHA,
    BETA,
    GAMMA,
    ONE,
    ONE_PLUS_T3,
    ZERO,
    Monomial,
    PoincarePoly,
    Polynomial,
    evaluate,
    poly_add,
    poly_mul,
    specialize_beta,
    z4_poincare_of_monomials,
)

EXPONENT = st.integers(min_value=0, max_value=3)
COEFF = st.integers(min_value=-6, max_value=6)
MONOMIALS = st.tuples(EXPONENT, EXPONENT, EXPONENT)
Polynomials = st.dictionaries(MONOMIALS, COEFF, max_size=6).map(Polynomial)
Scalars = st.fractions(min_value=-5, max_value=5, max_denominator=4)
PoincarePolys = st.tuples(*[st.integers(min_value=0, max_value=50)] * 4).map(PoincarePoly)


def dense(p: Polynomial, size: int = 4) -> np.ndarray:
    array = np.zeros((size, size, size), dtype=object)
    array[...] = Fraction(0)
    for mono, coeff in p.terms.items():
        array[mono] = coeff
    return array


def dense_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    result = np.zeros((2 * n - 1,) * 3, dtype=object)
    result[...] = Fraction(0)
    for index in zip(*np.nonzero(a != 0)):
        i, j, k = index
        result[i:i + n, j:j + n, k:k + n] += a[index] * b
    return result


def test_monomial_gradings():
    mono = Monomial(1, 1, 1)
    assert mono.degree == 12
    assert mono.z4_degree == 0
    assert Monomial(1, 0, 0).z4_degree == 2
    assert Monomial(0, 5, 0).z4_degree == 0
    assert Monomial(2, 0, 3).total_exponent == 5


def test_monomial_division_and_lcm():
    a, b = Monomial(2, 0, 1), Monomial(1, 3, 0)
    assert a.lcm(b) == Monomial(2, 3, 1)
    assert Monomial(1, 0, 1).divides(a)
    assert a.quotient(Monomial(1, 0, 1)) == Monomial(1, 0, 0)
    with pytest.raises(ValueError):
        a.quotient(b)
    assert Monomial(2, 0, 0).is_coprime_to(Monomial(0, 1, 4))
    assert not a.is_coprime_to(b)


def test_monomial_rendering():
    assert Monomial(2, 0, 1).to_string() == "α²γ"
    assert Monomial(2, 0, 1).to_string(ascii_names=True) == "alpha^2*gamma"
    assert Monomial().to_string() == "1"


def test_polynomial_rendering():
    assert (ALPHA ** 2 + BETA - 8).to_string() == "α² + β - 8"
    assert str(ZERO) == "0"
    assert (-2 * GAMMA).to_string(ascii_names=True) == "-2*gamma"
    assert (ALPHA * Fraction(1, 2)).to_string() == "1/2α"


def test_zero_coefficients_are_dropped():
    assert Polynomial({(1, 0, 0): 0}).is_zero()
    assert (ALPHA - ALPHA).is_zero()
    assert len(ALPHA + ALPHA) == 1
    assert (ALPHA + ALPHA).coefficient((1, 0, 0)) == 2


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Polynomial({(-1, 0, 0): 1})


def test_constants_compare_and_hash_like_scalars():
    assert ONE == 1
    assert Polynomial.constant(Fraction(3, 2)) == Fraction(3, 2)
    assert hash(Polynomial.constant(5)) == hash(5)
    assert len({ALPHA, ALPHA + ZERO, BETA}) == 2


def test_leading_terms_and_homogeneity():
    p = 3 * ALPHA * GAMMA + BETA ** 4 + 1
    assert p.leading_monomial() == Monomial(1, 0, 1)
    assert p.leading_coefficient() == 3
    assert p.monic().leading_coefficient() == 1
    assert not p.is_homogeneous()
    assert (ALPHA ** 2 + BETA).is_homogeneous()
    assert (ALPHA ** 2 + BETA).z4_degree == 0
    with pytest.raises(ValueError):
        (ALPHA + 1).z4_degree
    with pytest.raises(ValueError):
        ZERO.leading_monomial()


def test_substitutions():
    p = ALPHA * BETA ** 2 + GAMMA
    assert p.substitute_beta(8) == 64 * ALPHA + GAMMA
    assert p.drop_gamma() == ALPHA * BETA ** 2
    assert p.drop_alpha() == GAMMA
    assert specialize_beta(BETA ** 2 - 64, 1).is_zero()
    assert specialize_beta(BETA - 8, -1) == -16
    with pytest.raises(ValueError):
        specialize_beta(BETA, 2)
    assert evaluate(p, 2, 3, 5) == 2 * 9 + 5


def test_power_rejects_negative_exponent():
    assert ALPHA ** 0 == ONE
    with pytest.raises(ValueError):
        ALPHA ** -1


@given(Polynomials, Polynomials, Polynomials)
def test_ring_axioms(p, q, r):
    assert poly_add(p, q) == poly_add(q, p)
    assert poly_mul(p, q) == poly_mul(q, p)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@given(Polynomials, Polynomials, Scalars, Scalars, Scalars)
def test_evaluation_is_a_ring_homomorphism(p, q, a, b, c):
    assert (p * q).evaluate(a, b, c) == p.evaluate(a, b, c) * q.evaluate(a, b, c)
    assert (p + q).evaluate(a, b, c) == p.evaluate(a, b, c) + q.evaluate(a, b, c)


@given(Polynomials, Polynomials)
def test_specialization_is_a_ring_homomorphism(p, q):
    for sign in (1, -1):
        assert specialize_beta(p * q, sign) == specialize_beta(p, sign) * specialize_beta(q, sign)


@settings(max_examples=50)
@given(Polynomials, Polynomials)
def test_product_matches_dense_oracle(p, q):
    expected = dense_product(dense(p), dense(q))
    assert np.array_equal(dense(p * q, size=7), expected)


@given(MONOMIALS, MONOMIALS, COEFF, COEFF)
def test_grading_is_additive(m1, m2, c1, c2):
    p = Polynomial.monomial(m1, c1 or 1)
    q = Polynomial.monomial(m2, c2 or 1)
    product = p * q
    assert product.degree == p.degree + q.degree
    assert product.z4_degree == (p.z4_degree + q.z4_degree) % 4


def test_poincare_poly_arithmetic():
    assert ONE_PLUS_T3 * ONE_PLUS_T3 == PoincarePoly((1, 0, 1, 2))
    assert PoincarePoly.t_power(6, 3) == PoincarePoly((0, 0, 3, 0))
    assert PoincarePoly((1, 2, 3, 4)).shift(1) == PoincarePoly((4, 1, 2, 3))
    assert PoincarePoly((1, 2, 3, 4)).relabel(1) == (2, 3, 4, 1)
    assert PoincarePoly((1, 2, 3, 4)).total == 10
    assert PoincarePoly((1, 2, 3, 4)).euler_characteristic == -2
    assert 2 * PoincarePoly((1, 0, 0, 0)) == PoincarePoly((2, 0, 0, 0))
    assert str(PoincarePoly((2, 0, 2, 0))) == "2 + 2t^2"
    assert str(PoincarePoly()) == "0"


def test_poincare_poly_validation():
    with pytest.raises(ValueError):
        PoincarePoly((1, 2, 3))
    with pytest.raises(ValueError):
        PoincarePoly((1, -1, 0, 0))


def test_poincare_of_monomials():
    basis = [Monomial(0, 0, 0), Monomial(1, 0, 0), Monomial(0, 3, 0), Monomial(1, 0, 1)]
    assert z4_poincare_of_monomials(basis) == PoincarePoly((3, 0, 1, 0))


@given(PoincarePolys, PoincarePolys, st.integers(min_value=-8, max_value=8))
def test_poincare_shift_and_product(a, b, k):
    assert a.shift(k).shift(-k) == a
    assert a.shift(4) == a
    assert (a * b).total == a.total * b.total
    assert (a + b).shift(k) == a.shift(k) + b.shift(k)
    assert a * PoincarePoly.t_power(k) == a.shift(k)
