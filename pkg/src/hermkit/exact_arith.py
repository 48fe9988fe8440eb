"""Exact rational scalars and the combinatorial helpers used everywhere else.

Every coefficient in this package is a rational number. ``fractions.Fraction``
already provides arbitrary-precision rationals in canonical form (reduced to
lowest terms, positive denominator, zero stored as 0/1), so it is the scalar
type, re-exported here as ``Rational``. No floating point is used anywhere.

Coefficients serialize as the string ``"numerator/denominator"`` with the
denominator always present, e.g. ``"-3/4"`` and ``"0/1"``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "binomial",
    "factorial",
    "falling_factorial",
    "format_rational",
    "parse_rational",
]


def factorial(n: int) -> int:
    """Exact n! as an arbitrary-precision integer; n must be >= 0."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Exact C(n, k), with the convention C(n, k) = 0 for k outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(j: int, k: int) -> int:
    """j (j-1) ... (j-k+1), i.e. j!/(j-k)!; zero when k > j."""
    if j < 0 or k < 0:
        raise ValueError(f"falling_factorial requires j, k >= 0, got ({j}, {k})")
    if k > j:
        return 0
    return math.perm(j, k)


def format_rational(q: Fraction) -> str:
    """Render q as "numerator/denominator" (the denominator is never omitted)."""
    return f"{q.numerator}/{q.denominator}"


_TOKEN_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")


def parse_rational(token: str) -> Fraction:
    """Parse an optionally signed integer or an "a/b" string.

    Whitespace in and around the token is ignored. Anything else (floats,
    empty tokens, stray characters) raises ValueError naming the bad token.
    """
    text = "".join(token.split())
    m = _TOKEN_RE.match(text)
    if m is None:
        raise ValueError(f"bad rational token {token!r}: expected an integer or 'a/b'")
    if m.group(2) is not None and int(m.group(2)) == 0:
        raise ValueError(f"bad rational token {token!r}: zero denominator")
    return Fraction(int(m.group(1)), int(m.group(2)) if m.group(2) is not None else 1)
