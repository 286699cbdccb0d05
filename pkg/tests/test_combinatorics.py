import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arctanderiv import binomial, factorial, pochhammer, set_binomial_cache_limit
from oracles import pascal_triangle


def test_factorial_small_values():
    assert factorial(0) == 1
    assert factorial(1) == 1
    product = 1
    for i in range(1, 11):
        product *= i
    assert factorial(10) == product == 3628800


def test_binomial_against_pascal_oracle():
    table = pascal_triangle(30)
    for n in range(31):
        for k in range(n + 1):
            assert binomial(n, k) == table[n][k]
    assert binomial(5, 3) == 10


def test_binomial_out_of_range_is_zero():
    assert binomial(4, 7) == 0
    assert binomial(4, -1) == 0
    for n in (0, 3, 17):
        assert binomial(n, 0) == 1


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_pascal_recurrence_up_to_200():
    # Exercises the k = 0 edge through the out-of-range convention.
    for n in range(1, 201):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_binomial_beyond_cache_limit():
    set_binomial_cache_limit(8)
    try:
        assert binomial(20, 10) == 184756
        assert binomial(200, 100) == math.comb(200, 100)
    finally:
        set_binomial_cache_limit(1024)


def test_pochhammer_empty_product():
    for q in (0, 2, -3, Fraction(1, 2), Fraction(-7, 3)):
        assert pochhammer(q, 0) == 1


def test_pochhammer_examples():
    assert pochhammer(2, 3) == 24
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(-2, 4) == 0


def test_pochhammer_vs_factorial_for_naturals():
    for q in range(1, 31):
        for k in range(16):
            assert pochhammer(q, k) == Fraction(factorial(q + k - 1), factorial(q - 1))


@given(
    st.lists(
        st.tuples(
            st.sampled_from("+-*/"),
            st.integers(-50, 50),
            st.integers(1, 50),
        ),
        min_size=1,
        max_size=25,
    )
)
def test_rational_arithmetic_stays_canonical(operations):
    value = Fraction(3, 7)
    for op, a, b in operations:
        other = Fraction(a, b)
        if op == "+":
            value = value + other
        elif op == "-":
            value = value - other
        elif op == "*":
            value = value * other
        elif other != 0:
            value = value / other
    assert value.denominator > 0
    assert math.gcd(abs(value.numerator), value.denominator) == 1


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 0)
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)
