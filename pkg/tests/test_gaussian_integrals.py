import random
from fractions import Fraction

import pytest

from hermkit.classical_polys import hermite_poly
from hermkit.exact_arith import factorial
from hermkit.gaussian_integrals import (
    GaussSqrtPi,
    derivative_kernel_integral,
    inner_product,
    integral_of_poly,
    moment,
)
from hermkit.polynomial import Polynomial

from oracles import monomial_kernel_branch, random_polynomial


def test_moment_examples():
    assert moment(1) == GaussSqrtPi(0)
    assert moment(2) == GaussSqrtPi(Fraction(1, 2))
    assert moment(4) == GaussSqrtPi(Fraction(3, 4))
    assert moment(0) == GaussSqrtPi(1)


def test_moment_rejects_negative():
    with pytest.raises(ValueError):
        moment(-2)


def test_integral_of_poly_examples():
    assert integral_of_poly(Polynomial([1])) == GaussSqrtPi(1)
    assert integral_of_poly(Polynomial([0, 1, 0, 1])).is_zero  # odd function
    assert integral_of_poly(Polynomial([-2, 0, 4])).is_zero  # H_2 against H_0
    assert integral_of_poly(Polynomial.zero()).is_zero


def test_derivative_kernel_examples():
    assert derivative_kernel_integral(3, Polynomial.monomial(2)).is_zero  # n > m
    assert derivative_kernel_integral(2, Polynomial.monomial(4)) == GaussSqrtPi(6)
    assert derivative_kernel_integral(1, Polynomial.monomial(2)).is_zero  # opposite parity
    assert derivative_kernel_integral(4, Polynomial.zero()).is_zero


def test_derivative_kernel_matches_branch_formula():
    for n in range(15):
        for m in range(15):
            got = derivative_kernel_integral(n, Polynomial.monomial(m))
            assert got.coeff == monomial_kernel_branch(n, m), (n, m)


def test_derivative_kernel_integration_by_parts():
    rng = random.Random(43)
    for _ in range(40):
        p = random_polynomial(rng, 10)
        n = rng.randint(0, 6)
        nth = p
        for _ in range(n):
            nth = nth.derivative()
        expected = integral_of_poly(nth) * Fraction((-1) ** n)
        assert derivative_kernel_integral(n, p) == expected


def test_hermite_orthogonality():
    for n in range(13):
        for m in range(13):
            got = inner_product(hermite_poly(n), hermite_poly(m))
            if n == m:
                assert got == GaussSqrtPi(2**n * factorial(n))
            else:
                assert got.is_zero, (n, m)


def test_inner_product_examples():
    h1, h2, h3 = hermite_poly(1), hermite_poly(2), hermite_poly(3)
    assert inner_product(h2, h2) == GaussSqrtPi(8)
    assert inner_product(h1, h3).is_zero
    assert inner_product(Polynomial([1]), Polynomial([1])) == GaussSqrtPi(1)


def test_inner_product_symmetric_and_bilinear():
    rng = random.Random(47)
    for _ in range(30):
        p = random_polynomial(rng, 8)
        q = random_polynomial(rng, 8)
        r = random_polynomial(rng, 8)
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        assert inner_product(p, q) == inner_product(q, p)
        assert inner_product(p.scale(a) + r, q) == a * inner_product(p, q) + inner_product(r, q)


def test_inner_product_positive_definite():
    rng = random.Random(53)
    for _ in range(50):
        p = random_polynomial(rng, 10, nonzero=True)
        assert inner_product(p, p).coeff > 0


def test_gauss_sqrt_pi_algebra():
    a = GaussSqrtPi(Fraction(1, 2))
    b = GaussSqrtPi(Fraction(1, 3))
    assert a + b == GaussSqrtPi(Fraction(5, 6))
    assert a - b == GaussSqrtPi(Fraction(1, 6))
    assert -a == GaussSqrtPi(Fraction(-1, 2))
    assert 3 * a == a * 3 == GaussSqrtPi(Fraction(3, 2))
    assert Fraction(2, 3) * b == GaussSqrtPi(Fraction(2, 9))
    assert str(a) == "1/2*sqrt(pi)"


def test_gauss_sqrt_pi_serialization():
    assert GaussSqrtPi(Fraction(-3, 4)).to_json_dict() == {"sqrt_pi_coeff": "-3/4"}
    assert GaussSqrtPi(0).to_json_dict() == {"sqrt_pi_coeff": "0/1"}
