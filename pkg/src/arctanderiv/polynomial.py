"""Dense univariate polynomials over exact rationals, and the rational-function
form P(x) / (1+x^2)^k in which every arctan derivative lives.

Both classes are immutable values: arithmetic returns new objects, equality is
structural, and instances can be shared freely between threads.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

__all__ = ["Polynomial", "ArctanRational", "ONE_PLUS_X2"]


@dataclasses.dataclass(init=False, frozen=True)
class Polynomial:
    """Coefficients in ascending powers; the zero polynomial is the empty tuple.

    >>> str(Polynomial((-1, 0, 3)))
    '3*x^2 - 1'
    >>> Polynomial((1, 0, 1)) * Polynomial((1, 0, 1))
    Polynomial((1, 0, 2, 0, 1))
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 stands in for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return Polynomial(summed)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> Polynomial:
        return _as_poly(other) + (-self)

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coefficients)
        prod = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients))
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                prod[i + j] += a * b
        return Polynomial(prod)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Quotient and remainder over the rational field (always exact)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient = [Fraction(0)] * max(len(self.coefficients) - len(divisor.coefficients) + 1, 0)
        rest = list(self.coefficients)
        lead = divisor.leading_coefficient
        dlen = len(divisor.coefficients)
        while len(rest) >= dlen:
            factor = rest[-1] / lead
            shift = len(rest) - dlen
            quotient[shift] = factor
            for i, c in enumerate(divisor.coefficients):
                rest[shift + i] -= factor * c
            while rest and rest[-1] == 0:
                rest.pop()
        return Polynomial(quotient), Polynomial(rest)

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coefficients) if i)

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at a rational point, by Horner's scheme."""
        x = Fraction(x)
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def compose(self, inner: Polynomial) -> Polynomial:
        """The polynomial self(inner(x))."""
        result = Polynomial()
        for c in reversed(self.coefficients):
            result = result * inner + c
        return result

    def __repr__(self) -> str:
        rendered = ", ".join(
            str(c) if c.denominator == 1 else f"Fraction({c.numerator}, {c.denominator})"
            for c in self.coefficients
        )
        return f"Polynomial(({rendered}))"

    def __str__(self) -> str:
        """Deterministic text form: descending powers, exact coefficients."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                variable = "x" if power == 1 else f"x^{power}"
                body = variable if magnitude == 1 else f"{magnitude}*{variable}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)


def _as_poly(value: Polynomial | Scalar) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial((value,))


ONE_PLUS_X2 = Polynomial((1, 0, 1))


@dataclasses.dataclass(init=False, frozen=True)
class ArctanRational:
    """P(x) / (1+x^2)^k, stored with the smallest possible exponent k.

    Construction divides out every exact (1+x^2) factor of the numerator, so
    mathematically equal values always compare equal field by field.
    Exponent 0 is a plain polynomial.
    """

    numerator: Polynomial
    exponent: int

    def __init__(self, numerator: Polynomial | Scalar, exponent: int = 0):
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        poly = _as_poly(numerator)
        while exponent > 0:
            quotient, rest = divmod(poly, ONE_PLUS_X2)
            if not rest.is_zero():
                break
            poly = quotient
            exponent -= 1
        object.__setattr__(self, "numerator", poly)
        object.__setattr__(self, "exponent", exponent)

    def derivative(self) -> ArctanRational:
        """Quotient rule: (P'(1+x^2) - 2kxP) / (1+x^2)^(k+1), re-canonicalized."""
        p, k = self.numerator, self.exponent
        top = p.derivative() * ONE_PLUS_X2 - Polynomial((0, 2 * k)) * p
        return ArctanRational(top, k + 1)

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at a rational point; 1+x^2 >= 1 so never a pole."""
        x = Fraction(x)
        return self.numerator.evaluate(x) / (1 + x * x) ** self.exponent

    def __add__(self, other: ArctanRational) -> ArctanRational:
        k = max(self.exponent, other.exponent)
        left = self.numerator * ONE_PLUS_X2 ** (k - self.exponent)
        right = other.numerator * ONE_PLUS_X2 ** (k - other.exponent)
        return ArctanRational(left + right, k)

    def __neg__(self) -> ArctanRational:
        return ArctanRational(-self.numerator, self.exponent)

    def __sub__(self, other: ArctanRational) -> ArctanRational:
        return self + (-other)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"({self.numerator}) / (1+x^2)^{self.exponent}"
