from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasigenera.arith import bernoulli, binomial, divisor_sigma, factorial, format_fraction, parse_fraction


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


@pytest.mark.parametrize("n", range(2, 41, 2))
def test_bernoulli_against_mpmath(n):
    mpmath.mp.dps = 60
    b = bernoulli(n)
    assert abs(mpmath.mpf(b.numerator) / b.denominator - mpmath.bernoulli(n)) < mpmath.mpf(10) ** -40


def test_bernoulli_odd_vanish():
    assert all(bernoulli(n) == 0 for n in range(3, 40, 2))


def test_bernoulli_von_staudt_denominators():
    # denominator of B_{2n} is the product of primes p with (p - 1) | 2n
    for n in range(1, 16):
        primes = [p for p in range(2, 2 * n + 2) if all(p % d for d in range(2, p)) and (2 * n) % (p - 1) == 0]
        expected = 1
        for p in primes:
            expected *= p
        assert bernoulli(2 * n).denominator == expected


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_binomial_matches_pascal():
    rows = [[1]]
    for n in range(1, 30):
        prev = rows[-1]
        rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1])
    for n, row in enumerate(rows):
        assert [binomial(n, k) for k in range(n + 1)] == row


def test_binomial_out_of_range():
    with pytest.raises(ValueError):
        binomial(3, 4)


def test_factorial():
    assert [factorial(n) for n in range(6)] == [1, 1, 2, 6, 24, 120]


@given(st.integers(1, 400), st.integers(0, 5))
def test_divisor_sigma_brute_force(n, power):
    assert divisor_sigma(n, power) == sum(d**power for d in range(1, n + 1) if n % d == 0)


@given(st.fractions())
def test_fraction_text_round_trip(x):
    assert parse_fraction(format_fraction(x)) == x


def test_format_fraction_style():
    assert format_fraction(Fraction(-1, 24)) == "-1/24"
    assert format_fraction(Fraction(3)) == "3"
