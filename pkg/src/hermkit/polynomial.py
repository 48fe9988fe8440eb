"""Dense univariate polynomials over exact rationals.

Coefficients are stored lowest order first: ``coeffs[i]`` multiplies ``x**i``.
Every constructor strips trailing zeros, so two polynomials are equal exactly
when their coefficient tuples are equal, and the zero polynomial is uniquely
the empty tuple. All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .exact_arith import format_rational

__all__ = ["Polynomial"]

Coeff = Fraction | int


class Polynomial:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def constant(cls, c: Coeff) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, coeff: Coeff = 1) -> "Polynomial":
        """coeff * x**power."""
        if power < 0:
            raise ValueError(f"monomial power must be >= 0, got {power}")
        return cls([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial (use is_zero)."""
        return len(self._coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        """Coefficient of x**i, zero beyond the stored length."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def evaluate(self, x: Coeff) -> Fraction:
        """Exact value at x, by Horner's rule."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coeff) -> "Polynomial":
        c = Fraction(c)
        return Polynomial([c * a for a in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other):
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError(f"polynomial power must be >= 0, got {n}")
        out = Polynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def derivative(self) -> "Polynomial":
        """Exact formal derivative."""
        return Polynomial([i * c for i, c in enumerate(self._coeffs)][1:])

    def compose_affine(self, a: Coeff, b: Coeff) -> "Polynomial":
        """The polynomial p(a*x + b), expanded exactly (Horner in a*x + b)."""
        inner = Polynomial([b, a])
        acc = Polynomial()
        for c in reversed(self._coeffs):
            acc = acc * inner + Polynomial.constant(c)
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                x = "x" if i == 1 else f"x^{i}"
                body = x if mag == 1 else f"{mag}*{x}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        """JSON form: {"coeffs": ["c0", "c1", ...]} with "a/b" encoded values."""
        return {"coeffs": [format_rational(c) for c in self._coeffs]}

    def to_csv_rows(self) -> list[tuple[int, str]]:
        """CSV form: one (power, value) row per stored coefficient."""
        return [(i, format_rational(c)) for i, c in enumerate(self._coeffs)]
