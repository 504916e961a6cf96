"""Text and LaTeX rendering of partition-indexed polynomials.

Monomials are listed in reverse-lexicographic order of their partitions and a
common denominator is pulled out, e.g. ``(7p2 - p1^2)/45`` or
``\\frac{1}{45}(7p_2-p_1^2)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Mapping

from .arith import format_fraction
from .partitions import Partition

IndexMap = Callable[[int], int]


def _identity(j: int) -> int:
    return j


def monomial_text(lam: Partition, letter: str, index: IndexMap = _identity) -> str:
    bits = []
    for j, m in lam.items():
        bits.append(f"{letter}{index(j)}" + (f"^{m}" if m > 1 else ""))
    return "".join(bits)


def _brace(x: int) -> str:
    s = str(x)
    return s if len(s) == 1 else "{" + s + "}"


def monomial_latex(lam: Partition, letter: str, index: IndexMap = _identity) -> str:
    bits = []
    for j, m in lam.items():
        bits.append(f"{letter}_{_brace(index(j))}" + (f"^{_brace(m)}" if m > 1 else ""))
    return "".join(bits)


def ordered_terms(terms: Mapping[Partition, Fraction]) -> list[tuple[Partition, Fraction]]:
    return sorted(((lam, c) for lam, c in terms.items() if c), key=lambda t: t[0].sort_key(), reverse=True)


def common_denominator(coeffs) -> int:
    d = 1
    for c in coeffs:
        d = d * c.denominator // math.gcd(d, c.denominator)
    return d


def _join(pieces: list[tuple[int, str]], sep_plus: str, sep_minus: str, first_minus: str) -> str:
    out = []
    for i, (sign, body) in enumerate(pieces):
        if i == 0:
            out.append(body if sign > 0 else first_minus + body)
        else:
            out.append((sep_plus if sign > 0 else sep_minus) + body)
    return "".join(out)


def _scaled(c: Fraction, mono: str, unit: str = "") -> str:
    if not mono:
        return format_fraction(abs(c))
    return mono if abs(c) == 1 else f"{format_fraction(abs(c))}{unit}{mono}"


def render_text(terms: Mapping[Partition, Fraction], letter: str, index: IndexMap = _identity) -> str:
    items = ordered_terms(terms)
    if not items:
        return "0"
    if len(items) == 1:
        lam, c = items[0]
        mono = monomial_text(lam, letter, index)
        if not mono or abs(c) == 1:
            return ("-" if c < 0 else "") + _scaled(c, mono)
        return f"{format_fraction(c)} {mono}"
    d = common_denominator(c for _, c in items)
    pieces = [(1 if c > 0 else -1, _scaled(c * d, monomial_text(lam, letter, index))) for lam, c in items]
    body = _join(pieces, " + ", " - ", "-")
    return body if d == 1 else f"({body})/{d}"


def render_latex(terms: Mapping[Partition, Fraction], letter: str, index: IndexMap = _identity) -> str:
    items = ordered_terms(terms)
    if not items:
        return "0"
    d = common_denominator(c for _, c in items)
    if len(items) == 1:
        lam, c = items[0]
        mono = monomial_latex(lam, letter, index)
        sign = "-" if c < 0 else ""
        if not mono:
            a = abs(c)
            return sign + (str(a.numerator) if a.denominator == 1 else f"\\frac{{{a.numerator}}}{{{a.denominator}}}")
        a = abs(c)
        if a == 1:
            return sign + mono
        if a.denominator == 1:
            return f"{sign}{a.numerator}{mono}"
        return f"{sign}\\frac{{{a.numerator}}}{{{a.denominator}}}{mono}"
    pieces = [(1 if c > 0 else -1, _scaled(c * d, monomial_latex(lam, letter, index))) for lam, c in items]
    body = _join(pieces, "+", "-", "-")
    return body if d == 1 else f"\\frac{{1}}{{{d}}}({body})"


def terms_to_json(terms: Mapping[Partition, Fraction]) -> list:
    return [[list(lam.mult), format_fraction(c)] for lam, c in ordered_terms(terms)]


def terms_from_json(rows) -> dict[Partition, Fraction]:
    return {Partition(tuple(m)): Fraction(c) for m, c in rows}
