"""Symmetric-function polynomials and genus coefficients.

Genus coefficients are produced by the exponential formula: if
``log Q(z) = sum_j c_j z^j`` then ``prod_i Q(x_i t) = exp(sum_j c_j s_j t^j)``
with ``s_j`` the power sums of the formal roots ``x_i``. The roots themselves
are never materialized; polynomials are kept in the power-sum basis (s) or the
elementary/Pontryagin basis (p) and converted with the Newton identities.
"""

from __future__ import annotations

import enum
import json
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence, Union

from .partitions import Partition, cycle_index
from .render import render_latex, render_text, terms_from_json, terms_to_json
from .series import QSeries

__all__ = [
    "AHAT_SERIES",
    "Basis",
    "CharSeries",
    "L_SERIES",
    "SymPoly",
    "cycle_index_by_exponential",
    "genus_coefficient",
    "newton_girard_p_to_s",
    "newton_girard_s_to_p",
]


class Basis(str, enum.Enum):
    POWER_SUM = "s"
    PONTRYAGIN = "p"
    FORMAL = "x"


@dataclass(frozen=True)
class SymPoly:
    """Weighted-homogeneous polynomial; monomials are indexed by partitions.

    The partition with multiplicities (m_1, m_2, ...) stands for
    b_1^{m_1} b_2^{m_2} ... where b is the basis letter.
    """

    basis: Basis
    weight: int
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "basis", Basis(self.basis))
        clean = {}
        for lam, c in self.terms.items():
            c = Fraction(c)
            if not c:
                continue
            if lam.weight != self.weight:
                raise ValueError(f"monomial {lam} has weight {lam.weight}, expected {self.weight}")
            clean[lam] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls, basis: Basis) -> SymPoly:
        return cls(basis, 0, {Partition(): Fraction(1)})

    @classmethod
    def generator(cls, basis: Basis, j: int) -> SymPoly:
        return cls(basis, j, {Partition.from_parts([j]): Fraction(1)})

    def coefficient(self, lam: Partition) -> Fraction:
        return self.terms.get(lam, Fraction(0))

    def _check(self, other: SymPoly) -> None:
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis.value} vs {other.basis.value}")

    def __add__(self, other: SymPoly) -> SymPoly:
        self._check(other)
        if self.weight != other.weight:
            raise ValueError("sum of polynomials of different weight is not homogeneous")
        out = defaultdict(Fraction, self.terms)
        for lam, c in other.terms.items():
            out[lam] += c
        return SymPoly(self.basis, self.weight, out)

    def __neg__(self) -> SymPoly:
        return self.scale(-1)

    def __sub__(self, other: SymPoly) -> SymPoly:
        return self + (-other)

    def scale(self, factor) -> SymPoly:
        factor = Fraction(factor)
        return SymPoly(self.basis, self.weight, {lam: factor * c for lam, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            return self.scale(other)
        self._check(other)
        out: dict[Partition, Fraction] = defaultdict(Fraction)
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                out[a + b] += c * d
        return SymPoly(self.basis, self.weight + other.weight, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> SymPoly:
        out = SymPoly.one(self.basis)
        for _ in range(e):
            out = out * self
        return out

    def to_text(self) -> str:
        return render_text(self.terms, self.basis.value)

    def to_latex(self) -> str:
        return render_latex(self.terms, self.basis.value)

    def to_json(self) -> dict:
        return {"weight": self.weight, "basis": self.basis.value, "terms": terms_to_json(self.terms)}

    @classmethod
    def from_json(cls, data: dict | str) -> SymPoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Basis(data["basis"]), int(data["weight"]), terms_from_json(data["terms"]))

    def __str__(self) -> str:
        return self.to_text()


def _substitute(f: SymPoly, image: Callable[[int], SymPoly], target: Basis) -> SymPoly:
    """Replace each generator b_j of f by image(j) and expand."""
    out = SymPoly(target, f.weight)
    for lam, c in f.terms.items():
        term = SymPoly.one(target)
        for j, m in lam.items():
            term = term * image(j) ** m
        out = out + term.scale(c)
    return out


@lru_cache(maxsize=None)
def _power_sum_in_p(n: int) -> SymPoly:
    # s_n = p_1 s_{n-1} - p_2 s_{n-2} + ... + (-1)^{n-1} n p_n
    p = Basis.PONTRYAGIN
    acc = SymPoly.generator(p, n).scale((-1) ** (n - 1) * n)
    for i in range(1, n):
        acc = acc + (SymPoly.generator(p, i) * _power_sum_in_p(n - i)).scale((-1) ** (i - 1))
    return acc


@lru_cache(maxsize=None)
def _elementary_in_s(n: int) -> SymPoly:
    # n p_n = sum_{i=1}^{n} (-1)^{i-1} p_{n-i} s_i
    s = Basis.POWER_SUM
    if n == 0:
        return SymPoly.one(s)
    acc = SymPoly(s, n)
    for i in range(1, n + 1):
        acc = acc + (_elementary_in_s(n - i) * SymPoly.generator(s, i)).scale((-1) ** (i - 1))
    return acc.scale(Fraction(1, n))


def newton_girard_s_to_p(f: SymPoly) -> SymPoly:
    if f.basis != Basis.POWER_SUM:
        raise ValueError("expected a power-sum basis polynomial")
    return _substitute(f, _power_sum_in_p, Basis.PONTRYAGIN)


def newton_girard_p_to_s(f: SymPoly) -> SymPoly:
    if f.basis != Basis.PONTRYAGIN:
        raise ValueError("expected a Pontryagin basis polynomial")
    return _substitute(f, _elementary_in_s, Basis.POWER_SUM)


@dataclass(frozen=True)
class CharSeries:
    """A characteristic power series Q(z) with Q(0) = 1.

    ``expansion(order)`` returns Q through z^order; the log-coefficients
    c_j of log Q(z) are derived from it.
    """

    name: str
    expansion: Callable[[int], QSeries]

    def series(self, order: int) -> QSeries:
        return _cached_expansion(self, order)

    def log_coefficients(self, order: int) -> list[Fraction]:
        """[c_0, c_1, ..., c_order] with c_0 = 0."""
        return _cached_log(self, order).coefficients()


@lru_cache(maxsize=None)
def _cached_expansion(q: CharSeries, order: int) -> QSeries:
    return q.expansion(order)


@lru_cache(maxsize=None)
def _cached_log(q: CharSeries, order: int) -> QSeries:
    return q.series(order).log()


def _sinh_ratio(order: int, scale: int) -> QSeries:
    # sinh(y)/y with y^2 = z/scale: sum_n z^n / (scale^n (2n+1)!)
    return QSeries([Fraction(1, scale**n * math.factorial(2 * n + 1)) for n in range(order + 1)])


def _ahat_expansion(order: int) -> QSeries:
    # (sqrt(z)/2) / sinh(sqrt(z)/2)
    return _sinh_ratio(order, 4).inverse()


def _l_expansion(order: int) -> QSeries:
    # sqrt(z) / tanh(sqrt(z)) = cosh(sqrt z) / (sinh(sqrt z)/sqrt z)
    cosh = QSeries([Fraction(1, math.factorial(2 * n)) for n in range(order + 1)])
    return cosh / _sinh_ratio(order, 1)


AHAT_SERIES = CharSeries("ahat", _ahat_expansion)
L_SERIES = CharSeries("l", _l_expansion)


def genus_coefficient(q: Union[CharSeries, Sequence[Fraction]], k: int) -> SymPoly:
    """The weight-k genus coefficient in the power-sum basis.

    Uses the cycle index: b_k = Z(S_k) with x_j replaced by j c_j s_j.
    ``q`` may also be a plain sequence of log-coefficients c_0, c_1, ...
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    c = q.log_coefficients(k) if isinstance(q, CharSeries) else [Fraction(x) for x in q]
    if len(c) <= k and k > 0:
        raise ValueError(f"need log-coefficients through index {k}")
    terms = {}
    for lam, zinv in cycle_index(k).items():
        coeff = zinv
        for j, m in lam.items():
            coeff *= (j * c[j]) ** m
        terms[lam] = coeff
    return SymPoly(Basis.POWER_SUM, k, terms)


def cycle_index_by_exponential(order: int) -> list[SymPoly]:
    """Coefficients of t^0..t^order in exp(sum_k x_k t^k / k).

    Computed by the exponential recurrence n g_n = sum_{k=1}^{n} x_k g_{n-k},
    independently of partition enumeration.
    """
    x = Basis.FORMAL
    g = [SymPoly.one(x)]
    for n in range(1, order + 1):
        acc = SymPoly(x, n)
        for k in range(1, n + 1):
            acc = acc + SymPoly.generator(x, k) * g[n - k]
        g.append(acc.scale(Fraction(1, n)))
    return g


def cycle_index_poly(k: int) -> SymPoly:
    return SymPoly(Basis.FORMAL, k, cycle_index(k))
