"""Hermite-basis projection and the closed-form coefficient identities.

Any p in Q[x] expands uniquely as p(x) = sum_k C_k H_k(x) with

    C_k = <p, H_k> / (2^k k! sqrt(pi)),

and the sqrt(pi) factors cancel, so every C_k is rational. ``expand`` computes
these projections through exact Gaussian inner products and is the ground
truth ("the oracle") of this module.

Three closed-form identities claim to give the same coefficients directly:

* identity 1: the Hermite coefficients of the Genocchi polynomial G_n;
* identity 2: the Hermite coefficients of the Bernstein basis B_{l,n};
* identity 3: the Hermite coefficients of sum_{k<=n} E_k(x) x^(n-k), stated
  through a companion Euler-polynomial summation identity.

Identity 3 circulates with a (-1)^(n+k) factor on its second term that
contradicts the integration-by-parts derivation (k-fold parts yields (-1)^k,
which cancels against the projection prefactor). Both readings are
implemented, as the "verbatim" and "corrected" variants, and verify_theorem
reports exact mismatches as data rather than silently fixing the sign.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .classical_polys import (
    bernstein_poly,
    euler_number,
    euler_poly,
    genocchi_number,
    genocchi_poly,
    hermite_poly,
)
from .exact_arith import binomial, factorial, falling_factorial, format_rational
from .gaussian_integrals import inner_product
from .polynomial import Polynomial

__all__ = [
    "Case",
    "HermiteExpansion",
    "VerificationReport",
    "VARIANTS",
    "expand",
    "kim_identity_rhs",
    "kim_sum_poly",
    "theorem1_coeffs",
    "theorem2_coeffs",
    "theorem3_coeffs",
    "verify_theorem",
]

VARIANTS = ("verbatim", "corrected")


@dataclass(frozen=True)
class HermiteExpansion:
    """Coefficients (C_0, ..., C_n) of a polynomial in the Hermite basis.

    Expansions produced by ``expand`` end at the source polynomial's degree
    (the top coefficient is lead/2^deg, never zero); the closed-form identity
    evaluators keep trailing zero entries so every claimed index is visible
    to the comparison harness.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def coeff(self, k: int) -> Fraction:
        """C_k, zero beyond the stored length."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def reconstruct(self) -> Polynomial:
        """sum_k C_k H_k(x); inverts expand exactly."""
        acc = Polynomial.zero()
        for k, c in enumerate(self.coeffs):
            acc = acc + hermite_poly(k).scale(c)
        return acc

    def to_json_dict(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}


def expand(p: Polynomial) -> HermiteExpansion:
    """Project p onto the Hermite basis: C_k = <p, H_k> / (2^k k!), k <= deg p.

    The inner product carries the sqrt(pi) factor of the normalization, so
    only its rational coefficient is divided out. The zero polynomial gives
    the empty expansion.
    """
    if p.is_zero:
        return HermiteExpansion(())
    out = []
    for k in range(p.degree + 1):
        ip = inner_product(p, hermite_poly(k))
        out.append(ip.coeff / (2**k * factorial(k)))
    return HermiteExpansion(tuple(out))


def theorem1_coeffs(n: int) -> HermiteExpansion:
    """Closed form for the Hermite coefficients of G_n(x) (identity 1).

    Coefficient of H_k:

        n!/(2^k k!) * sum_{0 <= l <= n-k, l even}
            G_{n-k-l} / ((n-k-l)! 2^l (l/2)!)

    with G_j the Genocchi numbers. Returns all n+1 claimed entries; the top
    one is zero since deg G_n = n-1.
    """
    if n < 0:
        raise ValueError(f"theorem1_coeffs requires n >= 0, got {n}")
    out = []
    for k in range(n + 1):
        inner = Fraction(0)
        for l in range(0, n - k + 1, 2):
            inner += genocchi_number(n - k - l) / (
                factorial(n - k - l) * 2**l * factorial(l // 2)
            )
        out.append(Fraction(factorial(n), 2**k * factorial(k)) * inner)
    return HermiteExpansion(tuple(out))


def theorem2_coeffs(l: int, n: int) -> HermiteExpansion:
    """Closed form for the Hermite coefficients of B_{l,n}(x) (identity 2).

    Coefficient of H_k:

        n!/k! * sum over 0 <= j <= n-l with k-l-j even and k <= l+j of
            C(l+j, l) (-1)^j / ((n-l-j)! 2^(l+j) ((l+j-k)/2)!)

    The constraint k <= l+j is required for ((l+j-k)/2)! to exist; the terms
    it removes correspond to vanishing integrals (derivative order above the
    monomial degree), so omitting them is the only consistent reading.
    """
    if n < 0 or l < 0 or l > n:
        raise ValueError(f"theorem2_coeffs requires 0 <= l <= n, got l={l}, n={n}")
    out = []
    for k in range(n + 1):
        inner = Fraction(0)
        for j in range(n - l + 1):
            if (k - l - j) % 2 != 0 or l + j < k:
                continue
            sign = -1 if j % 2 else 1
            inner += Fraction(sign * binomial(l + j, l)) / (
                factorial(n - l - j) * 2 ** (l + j) * factorial((l + j - k) // 2)
            )
        out.append(Fraction(factorial(n), factorial(k)) * inner)
    return HermiteExpansion(tuple(out))


def kim_sum_poly(n: int) -> Polynomial:
    """The Euler convolution polynomial sum_{k=0}^{n} E_k(x) x^(n-k)."""
    if n < 0:
        raise ValueError(f"kim_sum_poly requires n >= 0, got {n}")
    acc = Polynomial.zero()
    for k in range(n + 1):
        acc = acc + euler_poly(k) * Polynomial.monomial(n - k)
    return acc


def kim_identity_rhs(n: int) -> Polynomial:
    """The companion closed form for kim_sum_poly(n), n >= 1:

        (1/2) sum_{j=0}^{n-1} C(n+1, j) * (2 - sum_{l=j}^{n-1} E_{l-j}) * E_j(x)
            + (n+1) E_n(x)

    with E_i the Euler numbers inside the braces. Must equal kim_sum_poly(n)
    exactly; the test suite verifies the two independent evaluations agree.
    """
    if n < 1:
        raise ValueError(f"kim_identity_rhs requires n >= 1, got {n}")
    acc = euler_poly(n).scale(n + 1)
    for j in range(n):
        brace = Fraction(2) - sum(euler_number(i) for i in range(n - j))
        acc = acc + euler_poly(j).scale(Fraction(binomial(n + 1, j), 2) * brace)
    return acc


def theorem3_coeffs(n: int, variant: str) -> HermiteExpansion:
    """Closed form for the Hermite coefficients of kim_sum_poly(n) (identity 3).

    Coefficient of H_k is term1 + term2 with

        term1 = (1/2) sum_{j=0}^{n-1} C(n+1, j)
                * (2 - sum_{l=j}^{n-1} E_{l-j})
                * j!/(j-k)!
                * sum_{0 <= m <= j-k, m even}
                      C(j-k, m) E_{j-k-m} m! / (2^(m+k) k! (m/2)!)

        term2 = (n+1) * [(-1)^(n+k) if variant == "verbatim" else 1]
                * sum_{0 <= s <= n-k, s even}
                      C(n, k) C(n-k, s) E_{n-k-s} s! / (2^(s+k) (s/2)!)

    j!/(j-k)! is the falling factorial, zero for j < k (that is what k-fold
    differentiation produces). The two variants differ only in the sign
    factor on term2; "corrected" follows the integration-by-parts derivation.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if n < 1:
        raise ValueError(f"theorem3_coeffs requires n >= 1, got {n}")
    out = []
    for k in range(n + 1):
        term1 = Fraction(0)
        for j in range(k, n):
            brace = Fraction(2) - sum(euler_number(i) for i in range(n - j))
            inner = Fraction(0)
            for m in range(0, j - k + 1, 2):
                inner += (
                    binomial(j - k, m)
                    * euler_number(j - k - m)
                    * Fraction(factorial(m), 2 ** (m + k) * factorial(k) * factorial(m // 2))
                )
            term1 += binomial(n + 1, j) * brace * falling_factorial(j, k) * inner
        term1 /= 2

        term2 = Fraction(0)
        for s in range(0, n - k + 1, 2):
            term2 += (
                binomial(n, k)
                * binomial(n - k, s)
                * euler_number(n - k - s)
                * Fraction(factorial(s), 2 ** (s + k) * factorial(s // 2))
            )
        term2 *= n + 1
        if variant == "verbatim" and (n + k) % 2 == 1:
            term2 = -term2

        out.append(term1 + term2)
    return HermiteExpansion(tuple(out))


@dataclass(frozen=True)
class Case:
    """One exact closed-form vs oracle comparison at Hermite index k."""

    n: int
    k: int
    closed: Fraction
    oracle: Fraction
    match: bool
    l: int | None = None

    def to_json_dict(self) -> dict:
        d: dict = {"n": self.n}
        if self.l is not None:
            d["l"] = self.l
        d.update(
            k=self.k,
            closed=format_rational(self.closed),
            oracle=format_rational(self.oracle),
            match=self.match,
        )
        return d


@dataclass(frozen=True)
class VerificationReport:
    """Every (n[, l], k) comparison for one identity and one variant."""

    theorem: int
    variant: str
    cases: tuple[Case, ...] = field(default_factory=tuple)

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def matched(self) -> int:
        return sum(1 for c in self.cases if c.match)

    @property
    def all_match(self) -> bool:
        return self.matched == self.total

    def first_mismatch(self) -> Case | None:
        for c in self.cases:
            if not c.match:
                return c
        return None

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "variant": self.variant,
            "cases": [c.to_json_dict() for c in self.cases],
            "summary": {"total": self.total, "matched": self.matched},
        }


def _compare(closed: HermiteExpansion, oracle: HermiteExpansion, n: int, l: int | None = None):
    for k in range(n + 1):
        c, o = closed.coeff(k), oracle.coeff(k)
        yield Case(n=n, k=k, closed=c, oracle=o, match=c == o, l=l)


def verify_theorem(theorem: int, variant: str, max_n: int) -> VerificationReport:
    """Compare one identity's closed form against the projection oracle.

    For every n up to max_n (identities 1 and 3 over G_n and kim_sum_poly;
    identity 2 additionally over every 0 <= l <= n for B_{l,n}), the claimed
    coefficients are compared entry by entry against expand() of the target
    polynomial. Mismatches are recorded, not raised. Identity 3 starts at
    n = 1; identities 1 and 2 include n = 0 and accept only the "verbatim"
    variant (they have no corrected reading).
    """
    if theorem not in (1, 2, 3):
        raise ValueError(f"theorem must be 1, 2 or 3, got {theorem}")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if theorem in (1, 2) and variant != "verbatim":
        raise ValueError(f"theorem {theorem} has only the verbatim form")
    if max_n < 0 or (theorem == 3 and max_n < 1):
        raise ValueError(f"max_n too small for theorem {theorem}: {max_n}")

    cases: list[Case] = []
    if theorem == 1:
        for n in range(max_n + 1):
            cases.extend(_compare(theorem1_coeffs(n), expand(genocchi_poly(n)), n))
    elif theorem == 2:
        for n in range(max_n + 1):
            for l in range(n + 1):
                cases.extend(_compare(theorem2_coeffs(l, n), expand(bernstein_poly(l, n)), n, l))
    else:
        for n in range(1, max_n + 1):
            cases.extend(_compare(theorem3_coeffs(n, variant), expand(kim_sum_poly(n)), n))
    return VerificationReport(theorem=theorem, variant=variant, cases=tuple(cases))
