"""Four independent routes to the n-th derivative of arctan, cross-checked
for exact agreement.

* closed: (n-1)! q_{n-1}(x) / (1+x^2)^n with the integer polynomial family q.
* expanded: prefactored alternating-binomial coefficient expansion.
* pointwise: chain rule for 1/(1 + x^2) = reciprocal composed with 1 + x^2,
  evaluated at a point through derivative jets.
* oracle: brute-force repeated quotient-rule differentiation, the ground
  truth the other three are measured against.

All routes take n = the derivative order of arctan itself (n >= 1).
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .combinatorics import binomial, factorial
from .composition import DerivativeJet, square_chain_rule
from .polynomial import ArctanRational, Polynomial, Scalar
from .reports import CheckReport

__all__ = [
    "DEFAULT_SAMPLE_POINTS",
    "CoefficientRow",
    "q_polynomial",
    "arctan_derivative_closed",
    "expansion_coefficient",
    "expansion_coefficients",
    "arctan_derivative_expanded",
    "arctan_derivative_pointwise",
    "arctan_derivative_oracle",
    "crosscheck",
]

DEFAULT_SAMPLE_POINTS: tuple[Fraction, ...] = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(3, 7),
)


def _require_order(n: int) -> None:
    if n < 1:
        raise ValueError("arctan derivative order must be >= 1 (arctan itself is not rational)")


def q_polynomial(n: int) -> Polynomial:
    """Degree-n integer polynomial q_n with
    arctan^(n+1)(x) = n! q_n(x) / (1+x^2)^(n+1):

        q_n(x) = (-1)^n * sum over even k in [0, n] of
                 C(n+1, k+1) (-1)^(k/2) x^(n-k).

    Only even k contribute, so q_n has parity (-1)^n; the k = 0 term makes the
    leading coefficient (-1)^n (n+1).
    """
    if n < 0:
        raise ValueError("q_polynomial requires n >= 0")
    sign = (-1) ** n
    coeffs = [0] * (n + 1)
    for k in range(0, n + 1, 2):
        coeffs[n - k] = sign * binomial(n + 1, k + 1) * (-1) ** (k // 2)
    return Polynomial(coeffs)


def arctan_derivative_closed(n: int) -> ArctanRational:
    """arctan^(n) as (n-1)! q_{n-1}(x) / (1+x^2)^n, n >= 1."""
    _require_order(n)
    return ArctanRational(factorial(n - 1) * q_polynomial(n - 1), n)


def expansion_coefficient(m: int, n: int) -> Fraction:
    """Coefficient of x^(n-2m) in the expanded form of arctan^(n+1), before
    the common prefactor n! 2^n (-1)^n / (1+x^2)^(n+1):

        sum_{k=m}^{n//2} (-1)^k 4^(-k) C(k, m) C(n-k, k).

    Always evaluated as this literal sum; its closed form is exactly what the
    identity sweeps verify, so using it here would make those checks circular.
    """
    if n < 0 or m < 0 or m > n // 2:
        raise ValueError("expansion_coefficient requires 0 <= m <= n//2")
    total = Fraction(0)
    for k in range(m, n // 2 + 1):
        total += Fraction((-1) ** k * binomial(k, m) * binomial(n - k, k), 4**k)
    return total


@dataclasses.dataclass(frozen=True)
class CoefficientRow:
    """All expansion coefficients (m = 0..n//2) for one expansion order n."""

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.n // 2 + 1:
            raise ValueError("coefficient row must have n//2 + 1 entries")


def expansion_coefficients(n: int) -> CoefficientRow:
    if n < 0:
        raise ValueError("expansion_coefficients requires n >= 0")
    return CoefficientRow(n, tuple(expansion_coefficient(m, n) for m in range(n // 2 + 1)))


def arctan_derivative_expanded(n: int) -> ArctanRational:
    """arctan^(n) assembled from the alternating-binomial expansion:

        p! 2^p (-1)^p / (1+x^2)^(p+1) * sum_m c_m x^(p-2m),   p = n - 1,

    with c_m = expansion_coefficient(m, p).
    """
    _require_order(n)
    p = n - 1
    row = expansion_coefficients(p)
    coeffs = [Fraction(0)] * (p + 1)
    for m, value in enumerate(row.values):
        coeffs[p - 2 * m] = value
    prefactor = factorial(p) * 2**p * (-1) ** p
    return ArctanRational(prefactor * Polynomial(coeffs), p + 1)


def arctan_derivative_pointwise(n: int, x: Scalar) -> Fraction:
    """arctan^(n)(x) for one rational x, through derivative jets.

    arctan' = 1/(1 + x^2) is the reciprocal composed with a + x^2 (a = 1), so
    arctan^(n) is the (n-1)-st derivative of that composition: build the jet
    of y -> 1/y at 1 + x^2 and apply the specialized chain rule.
    """
    _require_order(n)
    at = Fraction(x)
    jet = DerivativeJet.of_reciprocal(1 + at * at, n - 1)
    return square_chain_rule(n - 1, at, jet)


def arctan_derivative_oracle(n: int) -> ArctanRational:
    """Brute force: differentiate 1/(1+x^2) through n-1 quotient-rule steps."""
    _require_order(n)
    value = ArctanRational(Polynomial((1,)), 1)
    for _ in range(n - 1):
        value = value.derivative()
    return value


def crosscheck(n_max: int, sample_points=DEFAULT_SAMPLE_POINTS) -> CheckReport:
    """Exact agreement of all four routes for every n <= n_max.

    The closed and expanded forms must equal the quotient-rule oracle
    structurally (same canonical numerator and exponent); the jet route must
    match the oracle's value at every sample point.  Results are keyed by n,
    so the report does not depend on evaluation order.
    """
    if n_max < 1:
        raise ValueError("crosscheck requires n_max >= 1")
    points = tuple(Fraction(p) for p in sample_points)
    report = CheckReport(
        "crosscheck", {"n_max": n_max, "points": [str(p) for p in points]}
    )
    oracle = ArctanRational(Polynomial((1,)), 1)
    for n in range(1, n_max + 1):
        if n > 1:
            oracle = oracle.derivative()
        closed = arctan_derivative_closed(n)
        expanded = arctan_derivative_expanded(n)
        report.count_case(
            closed == oracle, n=n, pair="closed vs oracle", closed=closed, oracle=oracle
        )
        report.count_case(
            expanded == oracle, n=n, pair="expanded vs oracle", expanded=expanded, oracle=oracle
        )
        for x in points:
            pointwise = arctan_derivative_pointwise(n, x)
            expected = oracle.evaluate(x)
            report.count_case(
                pointwise == expected,
                n=n,
                pair="pointwise vs oracle",
                point=x,
                pointwise=pointwise,
                oracle=expected,
            )
    return report
