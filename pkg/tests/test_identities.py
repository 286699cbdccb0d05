from fractions import Fraction

import pytest

from arctanderiv import (
    HypergeometricParams,
    NonTerminatingSeriesError,
    alternating_binomial_closed_form,
    alternating_binomial_sum,
    check_binomial_identity,
    check_hypergeometric_form,
    check_hypergeometric_sweep,
    check_weighted_identity,
    expansion_coefficient,
    terminating_2f1,
    truncation_index,
    weighted_binomial_closed_form,
    weighted_binomial_sum,
)


def test_alternating_sum_values():
    assert alternating_binomial_sum(0, 0) == 1
    assert alternating_binomial_sum(2, 0) == Fraction(3, 4)
    assert alternating_binomial_sum(4, 1) == Fraction(-5, 8)


def test_closed_form_values():
    assert alternating_binomial_closed_form(0, 0) == 1
    assert alternating_binomial_closed_form(2, 0) == Fraction(3, 4)
    assert alternating_binomial_closed_form(4, 1) == Fraction(-10, 16)


def test_range_validation():
    for fn in (alternating_binomial_sum, alternating_binomial_closed_form):
        with pytest.raises(ValueError):
            fn(4, 3)
        with pytest.raises(ValueError):
            fn(-1, 0)


def test_identity_sweep_case_counts():
    assert check_binomial_identity(0).cases == 1
    report = check_binomial_identity(4)
    assert report.passed
    assert report.cases == 9


def test_identity_sweep_wide():
    report = check_binomial_identity(120)
    assert report.passed


def test_matches_expansion_coefficients():
    # Same sum, two independently written evaluation strategies.
    for n in range(101):
        for m in range(n // 2 + 1):
            assert expansion_coefficient(m, n) == alternating_binomial_sum(n, m)


def test_weighted_sum_values():
    assert weighted_binomial_sum(0) == 1
    assert weighted_binomial_sum(1) == 0
    assert weighted_binomial_sum(2) == Fraction(1, 48)


def test_weighted_closed_form_values():
    assert weighted_binomial_closed_form(0) == 1
    assert weighted_binomial_closed_form(1) == 0
    assert weighted_binomial_closed_form(2) == Fraction(1, 48)
    assert weighted_binomial_closed_form(7) == 0


def test_weighted_identity_sweep():
    report = check_weighted_identity(100)
    assert report.passed
    # 101 direct comparisons plus 51 recurrence steps.
    assert report.cases == 152


def test_even_prefix_recurrence():
    for j in range(101):
        lhs = alternating_binomial_sum(2 * (j + 1), 0) - alternating_binomial_sum(2 * j, 0) / 4
        assert lhs == Fraction(2, 4 ** (j + 1))


def test_truncation_index():
    assert truncation_index(HypergeometricParams(0, Fraction(1, 2), 3)) == 0
    assert truncation_index(HypergeometricParams(-2, -5, 3)) == 2
    assert truncation_index(HypergeometricParams(Fraction(1, 2), Fraction(3, 2), 3)) is None
    assert truncation_index(HypergeometricParams(Fraction(-3, 2), -1, 3)) == 1


def test_terminating_series_values():
    for b, c in ((Fraction(5), Fraction(3)), (Fraction(-1, 2), Fraction(7, 2))):
        assert terminating_2f1(HypergeometricParams(0, b, c)) == 1
        assert terminating_2f1(HypergeometricParams(-1, b, c)) == 1 - b / c
    assert terminating_2f1(HypergeometricParams(-1, Fraction(-3, 2), -2)) == Fraction(1, 4)


def test_non_terminating_series_raises():
    with pytest.raises(NonTerminatingSeriesError):
        terminating_2f1(HypergeometricParams(Fraction(1, 2), Fraction(3, 2), 5))
    with pytest.raises(NonTerminatingSeriesError):
        terminating_2f1(HypergeometricParams(-100, Fraction(1, 2), 5), max_terms=50)


def test_vanishing_lower_parameter_raises():
    with pytest.raises(ZeroDivisionError):
        terminating_2f1(HypergeometricParams(-5, Fraction(1, 2), -3))


def test_hypergeometric_form_cases():
    for n, m, expected in (
        (2, 1, Fraction(-1, 4)),
        (4, 1, Fraction(-5, 8)),
        (6, 0, Fraction(7, 64)),
    ):
        report = check_hypergeometric_form(n, m)
        assert report.passed, report.failures
        assert alternating_binomial_sum(n, m) == expected
    assert alternating_binomial_closed_form(6, 0) == Fraction(7, 64)


def test_hypergeometric_form_validates_range():
    with pytest.raises(ValueError):
        check_hypergeometric_form(4, 3)


def test_hypergeometric_sweep():
    report = check_hypergeometric_sweep(20)
    assert report.passed
    # Two cases (index pin + value) per (n, m) pair.
    assert report.cases == 2 * sum(n // 2 + 1 for n in range(21))
