"""Higher-order chain rules over exact derivative jets.

A jet is the value sequence (f(y0), f'(y0), ..., f^(n)(y0)) at one point; the
composition rules consume jets only, so they are indifferent to how the
underlying functions are represented.  Contents:

* the generic n-th derivative of f(g(x)) as a weighted sum over partition
  multiplicity vectors,
* the specialized closed sum for h(x) = f(a + x^2), whose inner derivatives
  vanish beyond order two,
* the same specialization's coefficient family rebuilt by a differentiation
  recurrence, as an independent derivation of identical coefficients.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .combinatorics import factorial
from .polynomial import Polynomial, Scalar

__all__ = [
    "MultiplicityVector",
    "multiplicity_vectors",
    "DerivativeJet",
    "faa_di_bruno",
    "square_chain_rule",
    "square_chain_coefficients",
]

# Vector (l_1, ..., l_n) with sum(i * l_i) == n: l_i counts the parts of size
# i in one integer partition of n.
MultiplicityVector = tuple[int, ...]


def multiplicity_vectors(n: int) -> list[MultiplicityVector]:
    """All multiplicity vectors of n, in ascending lexicographic order.

    The order is part of the contract so downstream golden outputs stay
    stable.  The list has one entry per integer partition of n.
    """
    if n < 1:
        raise ValueError("multiplicity_vectors requires n >= 1")
    out: list[MultiplicityVector] = []
    vec: list[int] = []

    def extend(part: int, remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(vec) + (0,) * (n - len(vec)))
            return
        if part > n or part > remaining:
            return
        for count in range(remaining // part + 1):
            vec.append(count)
            extend(part + 1, remaining - part * count)
            vec.pop()

    extend(1, n)
    return out


@dataclasses.dataclass(init=False, frozen=True)
class DerivativeJet:
    """Derivative values (f(point), f'(point), ..., f^(order)(point))."""

    point: Fraction
    values: tuple[Fraction, ...]

    def __init__(self, point: Scalar, values) -> None:
        rendered = tuple(Fraction(v) for v in values)
        if not rendered:
            raise ValueError("a jet needs at least the order-0 value")
        object.__setattr__(self, "point", Fraction(point))
        object.__setattr__(self, "values", rendered)

    @property
    def order(self) -> int:
        return len(self.values) - 1

    @classmethod
    def of_polynomial(cls, poly: Polynomial, point: Scalar, order: int) -> DerivativeJet:
        """Jet of a polynomial, by repeated symbolic differentiation."""
        at = Fraction(point)
        values = []
        current = poly
        for _ in range(order + 1):
            values.append(current.evaluate(at))
            current = current.derivative()
        return cls(at, values)

    @classmethod
    def of_reciprocal(cls, point: Scalar, order: int) -> DerivativeJet:
        """Jet of y -> 1/y: the k-th derivative at y0 is k! (-1)^k / y0^(k+1)."""
        y0 = Fraction(point)
        if y0 == 0:
            raise ZeroDivisionError("reciprocal jet undefined at 0")
        values = [1 / y0]
        for k in range(1, order + 1):
            values.append(values[-1] * (-k) / y0)
        return cls(y0, values)


def faa_di_bruno(n: int, f_jet: DerivativeJet, g_jet: DerivativeJet) -> Fraction:
    """n-th derivative of f(g(x)) at g_jet.point, from the two jets alone.

    Sums, over every multiplicity vector (l_1, ..., l_n) of n,

        n!/(l_1! ... l_n!) * f^(l_1+...+l_n)(g(x0)) * prod_i (g^(i)(x0)/i!)^l_i.

    n = 0 returns the plain composed value.  Jets shorter than n, or an f jet
    not anchored at the value of g, are invalid arguments.
    """
    if n < 0:
        raise ValueError("derivative order must be >= 0")
    if f_jet.order < n or g_jet.order < n:
        raise ValueError(f"faa_di_bruno needs jets of order >= {n}")
    if f_jet.point != g_jet.values[0]:
        raise ValueError("the f jet must be taken at the value of g")
    if n == 0:
        return f_jet.values[0]
    n_fact = factorial(n)
    total = Fraction(0)
    for vec in multiplicity_vectors(n):
        denominator = 1
        inner = Fraction(1)
        order = 0
        for i, li in enumerate(vec, start=1):
            if li == 0:
                continue
            order += li
            denominator *= factorial(li) * factorial(i) ** li
            inner *= g_jet.values[i] ** li
        total += Fraction(n_fact, denominator) * f_jet.values[order] * inner
    return total


def square_chain_rule(n: int, x: Scalar, f_jet: DerivativeJet) -> Fraction:
    """n-th derivative at x of h(x) = f(a + x^2), given the jet of f at a + x^2.

    Because the inner function has vanishing derivatives beyond order two, the
    generic composition sum collapses to

        sum_{k=0}^{n//2} n!/(k!(n-2k)!) * (2x)^(n-2k) * f^(n-k)(a + x^2).

    The jet is trusted to be anchored at the intended inner value; only its
    order is validated.
    """
    if n < 0:
        raise ValueError("derivative order must be >= 0")
    if f_jet.order < n:
        raise ValueError(f"square_chain_rule needs a jet of order >= {n}")
    two_x = 2 * Fraction(x)
    total = Fraction(0)
    for k in range(n // 2 + 1):
        weight = factorial(n) // (factorial(k) * factorial(n - 2 * k))
        total += weight * two_x ** (n - 2 * k) * f_jet.values[n - k]
    return total


def square_chain_coefficients(n: int) -> list[int]:
    """Coefficients c_k of the h(x) = f(a + x^2) expansion, for one order n,
    rebuilt purely by the differentiation recurrence.

    The expansion reads h^(n)(x) = sum_k c_k (2x)^(n-2k) f^(n-k)(a + x^2).
    Differentiating the order-m sum term by term sends c_k unchanged into the
    order-(m+1) term k (the chain factor 2x joins the power) and carries
    2*(m-2k)*c_k into term k+1 (the power-rule factor, rewritten on the (2x)
    basis).  Seeded with (1,) at order 1; the factorial closed form is never
    used here, so this is an independent derivation of the same family.
    """
    if n < 1:
        raise ValueError("square_chain_coefficients requires n >= 1")
    coeffs = [1]
    for m in range(1, n):
        nxt = []
        for k in range((m + 1) // 2 + 1):
            value = coeffs[k] if k < len(coeffs) else 0
            if 1 <= k <= len(coeffs):
                value += 2 * (m - 2 * (k - 1)) * coeffs[k - 1]
            nxt.append(value)
        coeffs = nxt
    return coeffs
