"""Exact verification of the alternating binomial-sum identities and of their
terminating Gauss hypergeometric form.

Every check here is an exact-equality sweep over big rationals.  The Gamma
function never appears: the hypergeometric series is only ever evaluated where
it terminates, so the classical Gamma-ratio closed form is exercised purely
through its combinatorial consequence, never numerically.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .combinatorics import binomial, factorial, pochhammer
from .polynomial import Scalar
from .reports import CheckReport

__all__ = [
    "NonTerminatingSeriesError",
    "alternating_binomial_sum",
    "alternating_binomial_closed_form",
    "check_binomial_identity",
    "weighted_binomial_sum",
    "weighted_binomial_closed_form",
    "check_weighted_identity",
    "HypergeometricParams",
    "truncation_index",
    "terminating_2f1",
    "check_hypergeometric_form",
    "check_hypergeometric_sweep",
]


class NonTerminatingSeriesError(ArithmeticError):
    """No upper series parameter truncates the series within the term bound."""


def _require_half_range(n: int, m: int) -> None:
    if n < 0 or m < 0 or m > n // 2:
        raise ValueError("requires 0 <= m <= n//2")


def alternating_binomial_sum(n: int, m: int) -> Fraction:
    """sum_{i=m}^{n//2} (-1)^i 4^(-i) C(i, m) C(n-i, i), evaluated literally.

    Accumulated as integers over the common denominator 4^(n//2); this is a
    deliberately different evaluation strategy from the term-by-term rational
    accumulation in :func:`arctanderiv.arctan.expansion_coefficient`, so the
    equality test between the two modules can catch transcription drift.
    """
    _require_half_range(n, m)
    top = n // 2
    numerator = 0
    for i in range(m, top + 1):
        numerator += (-1) ** i * 4 ** (top - i) * binomial(i, m) * binomial(n - i, i)
    return Fraction(numerator, 4**top)


def alternating_binomial_closed_form(n: int, m: int) -> Fraction:
    """(-1)^m 2^(-n) C(n+1, 2m+1)."""
    _require_half_range(n, m)
    return Fraction((-1) ** m * binomial(n + 1, 2 * m + 1), 2**n)


def check_binomial_identity(n_max: int) -> CheckReport:
    """Literal sum == closed form for every n <= n_max, 0 <= m <= n//2."""
    report = CheckReport("check-identity", {"n_max": n_max})
    for n in range(n_max + 1):
        for m in range(n // 2 + 1):
            lhs = alternating_binomial_sum(n, m)
            rhs = alternating_binomial_closed_form(n, m)
            report.count_case(lhs == rhs, n=n, m=m, lhs=lhs, rhs=rhs)
    return report


def weighted_binomial_sum(n: int) -> Fraction:
    """sum_{i=0}^{n} (-1)^i C(2n+1-i, i) / (4^i (n+1-i)), evaluated literally."""
    if n < 0:
        raise ValueError("requires n >= 0")
    total = Fraction(0)
    for i in range(n + 1):
        total += Fraction(
            (-1) ** i * binomial(2 * n + 1 - i, i), 4**i * (n + 1 - i)
        )
    return total


def weighted_binomial_closed_form(n: int) -> Fraction:
    """0 for odd n; 4^(-n)/(n+1) for even n."""
    if n < 0:
        raise ValueError("requires n >= 0")
    if n % 2:
        return Fraction(0)
    return Fraction(1, 4**n * (n + 1))


def check_weighted_identity(n_max: int) -> CheckReport:
    """The weighted sum vs its parity-split closed form for every n <= n_max,
    plus the first-difference recurrence behind it.

    With S_j = alternating_binomial_sum(2j, 0), the derivation rests on
    S_{j+1} - S_j/4 = 2/4^(j+1); that recurrence is swept for j <= n_max//2
    so the two halves of the argument are checked together.
    """
    report = CheckReport("check-corollary", {"n_max": n_max})
    for n in range(n_max + 1):
        lhs = weighted_binomial_sum(n)
        rhs = weighted_binomial_closed_form(n)
        report.count_case(lhs == rhs, n=n, lhs=lhs, rhs=rhs)
    prefix = alternating_binomial_sum(0, 0)
    for j in range(n_max // 2 + 1):
        following = alternating_binomial_sum(2 * (j + 1), 0)
        difference = following - prefix / 4
        expected = Fraction(2, 4 ** (j + 1))
        report.count_case(
            difference == expected,
            recurrence_j=j,
            difference=difference,
            expected=expected,
        )
        prefix = following
    return report


@dataclasses.dataclass(init=False, frozen=True)
class HypergeometricParams:
    """Upper parameters a, b and lower parameter c of a 2F1 series at z = 1."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __init__(self, a: Scalar, b: Scalar, c: Scalar) -> None:
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))


def truncation_index(params: HypergeometricParams) -> int | None:
    """Index of the last nonzero series term, or None when nothing truncates.

    The rising factorial (q)_k first vanishes at k = 1 - q for a nonpositive
    integer q, so the last surviving term has index -q; half-integers never
    reach zero.
    """
    candidates = [
        -int(p) for p in (params.a, params.b) if p <= 0 and p.denominator == 1
    ]
    return min(candidates) if candidates else None


def terminating_2f1(params: HypergeometricParams, max_terms: int = 10**6) -> Fraction:
    """Exact finite value of sum_k (a)_k (b)_k / ((c)_k k!) at argument 1.

    The sum runs k = 0..K with K the truncation index.  Term k = 0 is 1 and
    is produced before any division, so c is never touched when K = 0.  Each
    later step divides by c + k after proving it nonzero; a vanishing factor
    there is a genuine division by zero and raises.  If neither upper
    parameter truncates the series within max_terms the series is not finite
    and no value exists.
    """
    last = truncation_index(params)
    if last is None or last >= max_terms:
        raise NonTerminatingSeriesError(
            f"no upper parameter truncates the series within {max_terms} terms"
        )
    term = Fraction(1)
    total = Fraction(1)
    for k in range(last):
        lower = params.c + k
        if lower == 0:
            raise ZeroDivisionError(f"lower-parameter factor c + {k} vanishes before truncation")
        term = term * (params.a + k) * (params.b + k) / (lower * (k + 1))
        total += term
    return total


def _hypergeometric_case(n: int, m: int, report: CheckReport) -> None:
    # Series form of the literal sum: 2F1(m - n/2, m - n/2 + 1/2; m - n; 1)
    # times (-1)^m / (m! 4^m) * (n - 2m + 1)_m.  Exactly one upper parameter
    # is a nonpositive integer (which one depends on the parity of n), so the
    # series terminates after the term of index n//2 - m: the same number of
    # terms as the literal sum.
    params = HypergeometricParams(
        Fraction(2 * m - n, 2), Fraction(2 * m - n + 1, 2), m - n
    )
    expected_index = n // 2 - m
    index = truncation_index(params)
    report.count_case(
        index == expected_index,
        n=n,
        m=m,
        kind="truncation index",
        index=index,
        expected=expected_index,
    )
    prefactor = Fraction((-1) ** m, factorial(m) * 4**m) * pochhammer(n - 2 * m + 1, m)
    series_value = terminating_2f1(params) * prefactor
    literal = alternating_binomial_sum(n, m)
    report.count_case(
        series_value == literal,
        n=n,
        m=m,
        kind="value",
        series=series_value,
        literal=literal,
    )


def check_hypergeometric_form(n: int, m: int) -> CheckReport:
    """One case: the prefactored terminating series against the literal sum,
    plus the truncation-index pin at n//2 - m.

    m <= n//2 forces m < n for every n >= 1, so the lower parameter m - n is
    a negative integer except at n = m = 0, where the first upper parameter
    is 0 and the series is the bare k = 0 term (produced before any division
    by the lower parameter).
    """
    _require_half_range(n, m)
    report = CheckReport("check-2f1", {"n": n, "m": m})
    _hypergeometric_case(n, m, report)
    return report


def check_hypergeometric_sweep(n_max: int) -> CheckReport:
    """check_hypergeometric_form over every n <= n_max and valid m."""
    report = CheckReport("check-2f1", {"n_max": n_max})
    for n in range(n_max + 1):
        for m in range(n // 2 + 1):
            _hypergeometric_case(n, m, report)
    return report
