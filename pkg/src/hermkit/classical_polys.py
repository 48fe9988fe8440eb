"""Generators for the classical polynomial families used by this package.

Four families, all with exact rational coefficients:

* Euler polynomials E_n(x), generating function 2*e^(x*t)/(e^t + 1);
* Genocchi polynomials G_n(x), generating function 2*t*e^(x*t)/(e^t + 1),
  so G_n(x) = n*E_{n-1}(x) and G_0 is the zero polynomial;
* Hermite polynomials H_n(x), generating function e^(2*t*x - t^2);
* Bernstein basis polynomials B_{k,n}(x) = C(n,k) * x^k * (1-x)^(n-k).

Production code computes each family by a concrete recurrence (stated on the
individual functions); the generating functions themselves are exercised in
the test suite through a separate truncated-power-series oracle, so the two
derivations check each other.

Results are memoized per family. The caches behave as append-only tables:
entries are only ever written once with a value that any later recomputation
reproduces exactly, so racing readers in free-threaded use can at worst write
identical values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact_arith import binomial
from .polynomial import Coeff, Polynomial

__all__ = [
    "bernstein_operator",
    "bernstein_poly",
    "clear_caches",
    "euler_number",
    "euler_poly",
    "genocchi_number",
    "genocchi_poly",
    "hermite_poly",
    "hermite_rodrigues",
    "rodrigues_factor",
]

_euler: dict[int, Polynomial] = {}
_hermite: dict[int, Polynomial] = {}
_rodrigues: dict[int, Polynomial] = {}
_bernstein: dict[tuple[int, int], Polynomial] = {}


def clear_caches() -> None:
    """Drop all memoized entries (recomputation must reproduce them exactly)."""
    _euler.clear()
    _hermite.clear()
    _rodrigues.clear()
    _bernstein.clear()


def euler_poly(n: int) -> Polynomial:
    """Euler polynomial E_n(x).

    Computed by the recurrence E_n(x) = x^n - (1/2) * sum_{k<n} C(n,k) E_k(x),
    which is coefficient extraction from (e^t + 1) * GF = 2*e^(x*t).
    """
    if n < 0:
        raise ValueError(f"euler_poly requires n >= 0, got {n}")
    if n not in _euler:
        for m in range(n + 1):
            if m in _euler:
                continue
            correction = Polynomial.zero()
            for k in range(m):
                correction = correction + _euler[k].scale(binomial(m, k))
            _euler[m] = Polynomial.monomial(m) - correction.scale(Fraction(1, 2))
    return _euler[n]


def euler_number(n: int) -> Fraction:
    """Euler number E_n = E_n(0), the constant term of E_n(x)."""
    return euler_poly(n).coeff(0)


def genocchi_poly(n: int) -> Polynomial:
    """Genocchi polynomial G_n(x): zero for n = 0, otherwise n * E_{n-1}(x).

    The Genocchi generating function is t times the Euler one, which shifts
    indices by one and multiplies by n; there is no t^0 term, hence G_0 = 0.
    """
    if n < 0:
        raise ValueError(f"genocchi_poly requires n >= 0, got {n}")
    if n == 0:
        return Polynomial.zero()
    return euler_poly(n - 1).scale(n)


def genocchi_number(n: int) -> Fraction:
    """Genocchi number G_n = G_n(0); integer-valued for every n."""
    return genocchi_poly(n).coeff(0)


def hermite_poly(n: int) -> Polynomial:
    """Hermite polynomial H_n(x) (physicists' convention, weight e^(-x^2)).

    Three-term recurrence: H_0 = 1, H_1 = 2x, H_{n+1} = 2x*H_n - 2n*H_{n-1}.
    """
    if n < 0:
        raise ValueError(f"hermite_poly requires n >= 0, got {n}")
    if n not in _hermite:
        two_x = Polynomial.monomial(1, 2)
        for m in range(n + 1):
            if m in _hermite:
                continue
            if m == 0:
                _hermite[m] = Polynomial.constant(1)
            elif m == 1:
                _hermite[m] = two_x
            else:
                _hermite[m] = two_x * _hermite[m - 1] - _hermite[m - 2].scale(2 * (m - 1))
    return _hermite[n]


def rodrigues_factor(n: int) -> Polynomial:
    """The polynomial q_n with d^n/dx^n e^(-x^2) = q_n(x) * e^(-x^2).

    Differentiating once more gives the recursion q_0 = 1,
    q_{n+1} = q_n' - 2x*q_n. Note q_n = (-1)^n * H_n(x).
    """
    if n < 0:
        raise ValueError(f"rodrigues_factor requires n >= 0, got {n}")
    if n not in _rodrigues:
        two_x = Polynomial.monomial(1, 2)
        for m in range(n + 1):
            if m in _rodrigues:
                continue
            if m == 0:
                _rodrigues[m] = Polynomial.constant(1)
            else:
                q = _rodrigues[m - 1]
                _rodrigues[m] = q.derivative() - two_x * q
    return _rodrigues[n]


def hermite_rodrigues(n: int) -> Polynomial:
    """H_n(x) via the Rodrigues form (-1)^n e^(x^2) d^n/dx^n e^(-x^2).

    Independent of hermite_poly's recurrence; the two must agree exactly.
    """
    q = rodrigues_factor(n)
    return q if n % 2 == 0 else -q


def bernstein_poly(k: int, n: int) -> Polynomial:
    """Bernstein basis polynomial B_{k,n}(x) = C(n,k) x^k (1-x)^(n-k), expanded."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"bernstein_poly requires 0 <= k <= n, got k={k}, n={n}")
    key = (k, n)
    if key not in _bernstein:
        one_minus_x = Polynomial([1, -1])
        _bernstein[key] = Polynomial.monomial(k, binomial(n, k)) * one_minus_x ** (n - k)
    return _bernstein[key]


def bernstein_operator(samples: Sequence[Coeff]) -> Polynomial:
    """Degree-(n) Bernstein approximant from the n+1 samples f(0/n), ..., f(n/n).

    Returns sum_k samples[k] * B_{k,n}(x) with n = len(samples) - 1. Samples
    are taken pre-evaluated so the result stays exact.
    """
    if len(samples) == 0:
        raise ValueError("bernstein_operator requires at least one sample")
    n = len(samples) - 1
    acc = Polynomial.zero()
    for k, value in enumerate(samples):
        acc = acc + bernstein_poly(k, n).scale(value)
    return acc
