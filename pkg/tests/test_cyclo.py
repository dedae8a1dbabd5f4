import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quintic.cyclo import (
    CyclotomicInt,
    LAMBDA,
    ONE,
    ZETA,
    divmod_round,
    exact_div,
    zeta_power,
)

from conftest import poly_mul_mod_phi5, poly_norm

coeff = st.integers(min_value=-40, max_value=40)
elements = st.builds(CyclotomicInt, coeff, coeff, coeff, coeff)
nonzero = elements.filter(lambda a: not a.is_zero())


def test_fixed_products():
    # (1+z)(1+z^4) = 1 - z^2 - z^3
    assert (ONE + ZETA) * (ONE + zeta_power(4)) == CyclotomicInt(1, 0, -1, -1)
    assert ZETA.conjugate(2) == zeta_power(2)
    assert ZETA**5 == ONE


def test_fixed_norms():
    assert LAMBDA.norm() == 5  # Phi_5(1)
    assert CyclotomicInt(7).norm() == 7**4
    assert (ONE + ZETA).norm() == 1
    assert CyclotomicInt(0).norm() == 0


def test_lambda_coefficients():
    assert LAMBDA.coeffs == (1, -1, 0, 0)


@given(elements, elements)
def test_mul_matches_polynomial_oracle(a, b):
    assert (a * b).coeffs == poly_mul_mod_phi5(a.coeffs, b.coeffs)


@given(elements)
def test_norm_matches_polynomial_oracle(a):
    assert a.norm() == poly_norm(a.coeffs)


@given(elements, elements)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


@given(elements)
def test_additive_identity(a):
    assert a + CyclotomicInt(0) == a
    assert a - a == CyclotomicInt(0)


@given(elements, st.sampled_from([2, 3, 4]), st.sampled_from([2, 3, 4]))
def test_conjugation_composes(a, r, s):
    assert a.conjugate(r).conjugate(s) == a.conjugate((r * s) % 5)
    assert a.conjugate(r).norm() == a.norm()


@given(elements, elements, st.sampled_from([2, 3, 4]))
def test_conjugation_is_ring_map(a, b, r):
    assert (a + b).conjugate(r) == a.conjugate(r) + b.conjugate(r)
    assert (a * b).conjugate(r) == a.conjugate(r) * b.conjugate(r)


@settings(max_examples=200)
@given(elements, nonzero)
def test_euclidean_division(a, b):
    q, r = divmod_round(a, b)
    assert a == q * b + r
    assert r.norm() < b.norm()


def test_division_corner_case():
    # residual in the worst corner of the rounding box needs the correction
    q, r = divmod_round(CyclotomicInt(1, -1, -1, 1), CyclotomicInt(2))
    assert CyclotomicInt(1, -1, -1, 1) == q * CyclotomicInt(2) + r
    assert r.norm() < 16


@given(nonzero, nonzero)
def test_exact_div_roundtrip(a, b):
    assert exact_div(a * b, b) == a


def test_exact_div_rejects_non_divisor():
    assert exact_div(CyclotomicInt(3), CyclotomicInt(2)) is None
    with pytest.raises(ZeroDivisionError):
        exact_div(ONE, CyclotomicInt(0))
