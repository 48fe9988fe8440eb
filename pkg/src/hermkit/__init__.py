"""Exact Hermite-basis expansion of classical polynomial families.

Everything is computed in arbitrary-precision rational arithmetic: the
polynomial families (Euler, Genocchi, Hermite, Bernstein), the Gaussian
integrals behind the Hermite inner product, the basis projection, and the
differential verification of the closed-form coefficient identities.
"""

from .classical_polys import (
    bernstein_operator,
    bernstein_poly,
    euler_number,
    euler_poly,
    genocchi_number,
    genocchi_poly,
    hermite_poly,
    hermite_rodrigues,
    rodrigues_factor,
)
from .exact_arith import (
    Rational,
    binomial,
    factorial,
    falling_factorial,
    format_rational,
    parse_rational,
)
from .gaussian_integrals import (
    GaussSqrtPi,
    derivative_kernel_integral,
    inner_product,
    integral_of_poly,
    moment,
)
from .hermite_expansion import (
    Case,
    HermiteExpansion,
    VerificationReport,
    expand,
    kim_identity_rhs,
    kim_sum_poly,
    theorem1_coeffs,
    theorem2_coeffs,
    theorem3_coeffs,
    verify_theorem,
)
from .polynomial import Polynomial

__version__ = "0.1.0"

__all__ = [
    "Case",
    "GaussSqrtPi",
    "HermiteExpansion",
    "Polynomial",
    "Rational",
    "VerificationReport",
    "bernstein_operator",
    "bernstein_poly",
    "binomial",
    "derivative_kernel_integral",
    "euler_number",
    "euler_poly",
    "expand",
    "factorial",
    "falling_factorial",
    "format_rational",
    "genocchi_number",
    "genocchi_poly",
    "hermite_poly",
    "hermite_rodrigues",
    "inner_product",
    "integral_of_poly",
    "kim_identity_rhs",
    "kim_sum_poly",
    "moment",
    "parse_rational",
    "rodrigues_factor",
    "theorem1_coeffs",
    "theorem2_coeffs",
    "theorem3_coeffs",
    "verify_theorem",
]
