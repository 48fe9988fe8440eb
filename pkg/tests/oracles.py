"""Independent computation paths used only to cross-check the library.

Nothing here is imported by production code. Each oracle derives its result
by a different route than the implementation it checks:

* truncated power series over polynomial coefficients extract the Euler,
  Genocchi and Hermite families straight from their generating functions
  (the library uses recurrences);
* a triangular back-substitution solves for Hermite expansion coefficients
  as a linear system (the library projects via Gaussian inner products);
* the Bernstein basis is expanded term by term with the binomial theorem
  (the library multiplies out (1-x)^(n-k));
* the derivative-kernel integral of a monomial is evaluated by its branch
  formula (the library goes through the Rodrigues factor).
"""

from __future__ import annotations

from fractions import Fraction

from hermkit import hermite_poly
from hermkit.exact_arith import binomial, factorial
from hermkit.polynomial import Polynomial

# A truncated power series in t is a list of Polynomial coefficients in x:
# entry i is the coefficient of t**i.
Series = list[Polynomial]


def series_mul(a: Series, b: Series, order: int) -> Series:
    out = [Polynomial.zero() for _ in range(order + 1)]
    for i, pa in enumerate(a[: order + 1]):
        if pa.is_zero:
            continue
        for j, pb in enumerate(b[: order + 1 - i]):
            out[i + j] = out[i + j] + pa * pb
    return out


def series_div(num: Series, den: Series, order: int) -> Series:
    """num/den to the given order; den must start with a nonzero constant."""
    d0 = den[0]
    assert d0.degree == 0
    inv = 1 / d0.coeff(0)
    out: Series = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else Polynomial.zero()
        for i in range(1, n + 1):
            if i < len(den):
                acc = acc - den[i] * out[n - i]
        out.append(acc.scale(inv))
    return out


def _exp_xt(order: int, coeff_base: int = 1) -> Series:
    """e^(c*x*t): entry i is (c*x)^i / i!."""
    return [
        Polynomial.monomial(i, Fraction(coeff_base**i, factorial(i)))
        for i in range(order + 1)
    ]


def _exp_t_plus_one(order: int) -> Series:
    """e^t + 1 as a constant-coefficient series: [2, 1/1!, 1/2!, ...]."""
    out = [Polynomial.constant(2)]
    for i in range(1, order + 1):
        out.append(Polynomial.constant(Fraction(1, factorial(i))))
    return out


def euler_polys_by_series(count: int) -> list[Polynomial]:
    """E_0..E_{count-1} extracted from 2 e^(xt) / (e^t + 1)."""
    order = count - 1
    num = [p.scale(2) for p in _exp_xt(order)]
    q = series_div(num, _exp_t_plus_one(order), order)
    return [q[i].scale(factorial(i)) for i in range(count)]


def genocchi_polys_by_series(count: int) -> list[Polynomial]:
    """G_0..G_{count-1} extracted from 2 t e^(xt) / (e^t + 1)."""
    order = count - 1
    num = [Polynomial.zero()]
    if order >= 1:
        num += [p.scale(2) for p in _exp_xt(order - 1)]
    q = series_div(num, _exp_t_plus_one(order), order)
    return [q[i].scale(factorial(i)) for i in range(count)]


def hermite_polys_by_series(count: int) -> list[Polynomial]:
    """H_0..H_{count-1} extracted from e^(2tx) * e^(-t^2)."""
    order = count - 1
    gauss = [Polynomial.zero() for _ in range(order + 1)]
    for m in range(0, order + 1, 2):
        gauss[m] = Polynomial.constant(Fraction((-1) ** (m // 2), factorial(m // 2)))
    prod = series_mul(_exp_xt(order, coeff_base=2), gauss, order)
    return [prod[i].scale(factorial(i)) for i in range(count)]


def hermite_coeffs_by_backsolve(p: Polynomial) -> list[Fraction]:
    """Solve p = sum_k C_k H_k by back-substitution on the triangular system.

    H_k has degree k with leading coefficient 2^k, so working down from the
    top degree peels off one coefficient at a time.
    """
    if p.is_zero:
        return []
    out = [Fraction(0)] * (p.degree + 1)
    work = p
    for k in range(p.degree, -1, -1):
        c = work.coeff(k) / 2**k
        out[k] = c
        work = work - hermite_poly(k).scale(c)
    assert work.is_zero
    return out


def bernstein_by_binomial_theorem(k: int, n: int) -> Polynomial:
    """C(n,k) x^k (1-x)^(n-k) with the (1-x) power expanded term by term."""
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n - k + 1):
        coeffs[k + j] = Fraction((-1) ** j * binomial(n - k, j) * binomial(n, k))
    return Polynomial(coeffs)


def monomial_kernel_branch(n: int, m: int) -> Fraction:
    """Branch formula for integral (d^n/dx^n e^(-x^2)) x^m dx, over sqrt(pi).

    Zero whenever n > m or n and m have opposite parity; otherwise
    m! (-1)^n / (2^(m-n) ((m-n)/2)!).
    """
    if n > m or (m - n) % 2 == 1:
        return Fraction(0)
    return Fraction(factorial(m) * (-1) ** n, 2 ** (m - n) * factorial((m - n) // 2))


def random_polynomial(rng, max_degree: int, *, nonzero: bool = False) -> Polynomial:
    """Random rational polynomial with numerators in [-9, 9], denominators in [1, 9]."""
    degree = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree + 1)]
    p = Polynomial(coeffs)
    if nonzero and p.is_zero:
        p = Polynomial(coeffs[:-1] + [Fraction(1)])
    return p


def random_rational(rng) -> Fraction:
    return Fraction(rng.randint(-99, 99), rng.randint(1, 99))
