"""Exact integer/rational helpers and classical number sequences.

Rationals are :class:`fractions.Fraction` throughout the package; this module
adds Bernoulli numbers, divisor sums and the string forms used by the JSON
emitters.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = [
    "Fraction",
    "bernoulli",
    "binomial",
    "divisor_sigma",
    "factorial",
    "format_fraction",
    "parse_fraction",
]

_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Return the Bernoulli number B_n with the convention B_1 = -1/2.

    Values come from the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 and are
    memoized; the cache is extended under a lock.
    """
    if n < 0:
        raise ValueError(f"bernoulli index must be >= 0, got {n}")
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _BERNOULLI_LOCK:
        table = _BERNOULLI
        for m in range(len(table), n + 1):
            if m > 1 and m % 2 == 1:
                table.append(Fraction(0))
                continue
            acc = sum((math.comb(m + 1, j) * table[j] for j in range(m)), Fraction(0))
            table.append(-acc / (m + 1))
        return table[n]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial({n}, {k}) requires 0 <= k <= n")
    return math.comb(n, k)


def divisor_sigma(n: int, power: int) -> int:
    """sigma_power(n) = sum of d**power over the positive divisors d of n."""
    if n < 1:
        raise ValueError(f"divisor_sigma needs n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**power
            e = n // d
            if e != d:
                total += e**power
        d += 1
    return total


def format_fraction(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str | int) -> Fraction:
    return Fraction(text)
