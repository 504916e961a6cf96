"""Truncated power series with exact rational coefficients.

:class:`QSeries` is a univariate series trusted through ``x^order``; it is
used for q-expansions and for z-expansions of characteristic series alike.
:class:`ThetaSeries` is a Laurent polynomial in ``v`` (with ``v**2 = u``)
with q-series coefficients, used for the product side of the theta
function. Fractional prefactors such as ``u^{1/2}`` or ``q^{1/8}`` are never
stored; identities are compared after clearing them.
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .arith import bernoulli, divisor_sigma, format_fraction

__all__ = [
    "QSeries",
    "ThetaSeries",
    "eisenstein_E",
    "eisenstein_G",
    "eta_cubed",
    "euler_product",
    "exp_series",
    "jacobi_triple_sum",
    "log_series",
    "odd_power_theta_sum",
    "theta_product",
]

Scalar = Union[int, Fraction]


class QSeries:
    """Truncated power series ``sum_{n<=order} c_n x^n`` over the rationals.

    Binary operations truncate to the smaller order of the operands.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] | Mapping[int, Scalar], order: int | None = None):
        if isinstance(coeffs, Mapping):
            if order is None:
                order = max(coeffs, default=0)
            c = [Fraction(0)] * (order + 1)
            for n, v in coeffs.items():
                if n < 0:
                    raise ValueError(f"negative exponent {n}")
                if n <= order:
                    c[n] = Fraction(v)
        else:
            c = [Fraction(v) for v in coeffs]
            if order is None:
                order = len(c) - 1
            if len(c) > order + 1:
                c = c[: order + 1]
            else:
                c.extend([Fraction(0)] * (order + 1 - len(c)))
        if order < 0:
            raise ValueError(f"truncation order must be >= 0, got {order}")
        self._c = c

    @classmethod
    def _raw(cls, c: list[Fraction]) -> QSeries:
        obj = cls.__new__(cls)
        obj._c = c
        return obj

    @classmethod
    def constant(cls, value: Scalar, order: int) -> QSeries:
        return cls([value], order)

    @classmethod
    def monomial(cls, n: int, order: int, coeff: Scalar = 1) -> QSeries:
        return cls({n: coeff}, order)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} outside trusted range 0..{self.order}")
        return self._c[n]

    def coefficients(self) -> list[Fraction]:
        return list(self._c)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Nonzero (exponent, coefficient) pairs, exponents ascending."""
        return ((n, c) for n, c in enumerate(self._c) if c)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series trusted to {self.order} up to {order}")
        return QSeries._raw(self._c[: order + 1])

    def _coerce(self, other: QSeries | Scalar) -> QSeries:
        if isinstance(other, QSeries):
            return other
        return QSeries.constant(other, self.order)

    def __add__(self, other: QSeries | Scalar) -> QSeries:
        other = self._coerce(other)
        n = min(self.order, other.order)
        a, b = self._c, other._c
        return QSeries._raw([a[i] + b[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries._raw([-x for x in self._c])

    def __sub__(self, other: QSeries | Scalar) -> QSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> QSeries:
        return (-self) + other

    def scale(self, factor: Scalar) -> QSeries:
        factor = Fraction(factor)
        return QSeries._raw([factor * x for x in self._c])

    def __mul__(self, other: QSeries | Scalar) -> QSeries:
        if not isinstance(other, QSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self._c, other._c
        nz_a = [(i, x) for i, x in enumerate(a[: n + 1]) if x]
        nz_b = [(j, y) for j, y in enumerate(b[: n + 1]) if y]
        out = [Fraction(0)] * (n + 1)
        for i, x in nz_a:
            for j, y in nz_b:
                if i + j > n:
                    break
                out[i + j] += x * y
        return QSeries._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QSeries:
        if e < 0:
            return self.inverse() ** (-e)
        result = QSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> QSeries:
        a = self._c
        if not a[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, len(a)):
            acc = sum((a[k] * out[n - k] for k in range(1, n + 1) if a[k]), Fraction(0))
            out.append(-acc * inv0)
        return QSeries._raw(out)

    def __truediv__(self, other: QSeries | Scalar) -> QSeries:
        if isinstance(other, QSeries):
            return self * other.inverse()
        return self.scale(1 / Fraction(other))

    def derivative(self) -> QSeries:
        """d/dx; the result is trusted one order less."""
        if self.order == 0:
            return QSeries([0], 0)
        return QSeries._raw([n * self._c[n] for n in range(1, len(self._c))])

    def exp(self) -> QSeries:
        """exp of a series with zero constant term."""
        f = self._c
        if f[0]:
            raise ValueError("exp_series needs zero constant term")
        g = [Fraction(1)]
        for n in range(1, len(f)):
            acc = sum((k * f[k] * g[n - k] for k in range(1, n + 1) if f[k]), Fraction(0))
            g.append(acc / n)
        return QSeries._raw(g)

    def log(self) -> QSeries:
        """log of a series with constant term 1."""
        g = self._c
        if g[0] != 1:
            raise ValueError("log_series needs constant term 1")
        f = [Fraction(0)]
        for n in range(1, len(g)):
            acc = n * g[n] - sum((k * f[k] * g[n - k] for k in range(1, n) if g[n - k]), Fraction(0))
            f.append(acc / n)
        return QSeries._raw(f)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSeries):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c[0] == other and not any(self._c[1:])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._c))

    def __repr__(self) -> str:
        return f"QSeries({self.to_text()}, order={self.order})"

    def to_text(self, var: str = "q") -> str:
        pieces: list[str] = []
        for n, c in self.items():
            mono = "" if n == 0 else (var if n == 1 else f"{var}^{n}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{format_fraction(mag)}{mono}" if mag.denominator == 1 else f"{format_fraction(mag)} {mono}"
            else:
                body = format_fraction(mag)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces) if pieces else "0"

    def to_latex(self, var: str = "q") -> str:
        pieces: list[str] = []
        for n, c in self.items():
            mono = "" if n == 0 else (var if n == 1 else f"{var}^{{{n}}}")
            mag = abs(c)
            if mag.denominator != 1:
                body = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}{mono}"
            elif mono and mag == 1:
                body = mono
            else:
                body = f"{mag.numerator}{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'}{body}")
        return "".join(pieces) if pieces else "0"

    def to_json(self) -> dict:
        return {
            "truncation": self.order,
            "coeffs": [[n, format_fraction(c)] for n, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> QSeries:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(n): Fraction(c) for n, c in data["coeffs"]}, int(data["truncation"]))


def exp_series(f: QSeries) -> QSeries:
    return f.exp()


def log_series(g: QSeries) -> QSeries:
    return g.log()


@lru_cache(maxsize=None)
def eisenstein_G(k: int, order: int) -> QSeries:
    """G_{2k} = -B_{2k}/(2k) + 2 sum_n sigma_{2k-1}(n) q^n."""
    if k < 1:
        raise ValueError(f"eisenstein_G needs k >= 1, got {k}")
    c = [-bernoulli(2 * k) / (2 * k)]
    c.extend(Fraction(2 * divisor_sigma(n, 2 * k - 1)) for n in range(1, order + 1))
    return QSeries._raw(c)


@lru_cache(maxsize=None)
def eisenstein_E(j: int, order: int) -> QSeries:
    """E_{2j} = 1 - (4j / B_{2j}) sum_n sigma_{2j-1}(n) q^n = -(2j / B_{2j}) G_{2j}."""
    return eisenstein_G(j, order).scale(-Fraction(2 * j) / bernoulli(2 * j))


def _triangular_signed(order: int, power: int) -> QSeries:
    c = [Fraction(0)] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        c[n * (n + 1) // 2] = Fraction((-1) ** n * (2 * n + 1) ** power)
        n += 1
    return QSeries._raw(c)


def eta_cubed(order: int) -> QSeries:
    """q^{-1/8} eta^3 = sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}."""
    return _triangular_signed(order, 1)


def odd_power_theta_sum(k: int, order: int) -> QSeries:
    """sum_{n>=0} (-1)^n (2n+1)^{2k+1} q^{n(n+1)/2}."""
    return _triangular_signed(order, 2 * k + 1)


def euler_product(order: int, power: int = 1) -> QSeries:
    """prod_{n=1}^{order} (1 - q^n)^power, by direct multiplication."""
    c = [Fraction(0)] * (order + 1)
    c[0] = Fraction(1)
    for n in range(1, order + 1):
        for _ in range(abs(power)):
            if power > 0:
                for i in range(order, n - 1, -1):
                    c[i] -= c[i - n]
            else:
                for i in range(n, order + 1):
                    c[i] += c[i - n]
    return QSeries._raw(c)


class ThetaSeries:
    """Laurent polynomial in ``v`` with q-series coefficients.

    Stored sparsely as ``{(v_exponent, q_exponent): coefficient}``; every
    q-exponent is at most ``q_order``.
    """

    __slots__ = ("_c", "q_order")

    def __init__(self, coeffs: Mapping[tuple[int, int], Scalar], q_order: int):
        if any(n < 0 for _, n in coeffs):
            raise ValueError("negative q exponents are not supported")
        self.q_order = q_order
        self._c = {
            (int(a), int(n)): Fraction(c)
            for (a, n), c in coeffs.items()
            if c and n <= q_order
        }

    def coefficient(self, v_exp: int, q_exp: int) -> Fraction:
        if q_exp > self.q_order:
            raise IndexError(f"q^{q_exp} beyond trusted order {self.q_order}")
        return self._c.get((v_exp, q_exp), Fraction(0))

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(sorted(self._c.items(), key=lambda kv: (kv[0][1], kv[0][0])))

    def q_slice(self, q_exp: int) -> dict[int, Fraction]:
        """The Laurent polynomial in v multiplying q^q_exp."""
        return {a: c for (a, n), c in self._c.items() if n == q_exp}

    def __add__(self, other: ThetaSeries) -> ThetaSeries:
        order = min(self.q_order, other.q_order)
        out: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
        for src in (self._c, other._c):
            for key, c in src.items():
                if key[1] <= order:
                    out[key] += c
        return ThetaSeries(out, order)

    def scale(self, factor: Scalar) -> ThetaSeries:
        return ThetaSeries({k: factor * c for k, c in self._c.items()}, self.q_order)

    def __mul__(self, other: ThetaSeries | QSeries | Scalar) -> ThetaSeries:
        if isinstance(other, QSeries):
            other = ThetaSeries({(0, n): c for n, c in other.items()}, other.order)
        elif not isinstance(other, ThetaSeries):
            return self.scale(Fraction(other))
        order = min(self.q_order, other.q_order)
        out: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
        right = list(other._c.items())
        for (a, n), c in self._c.items():
            if n > order:
                continue
            for (b, m), d in right:
                if n + m <= order:
                    out[(a + b, n + m)] += c * d
        return ThetaSeries(out, order)

    __rmul__ = __mul__

    def substitute_v(self, power: int, sign: int = 1) -> ThetaSeries:
        """Apply ``v -> sign * v**power``."""
        return ThetaSeries({(power * a, n): c * sign**a for (a, n), c in self._c.items()}, self.q_order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ThetaSeries):
            return NotImplemented
        return self.q_order == other.q_order and self._c == other._c

    def __repr__(self) -> str:
        return f"ThetaSeries({len(self._c)} terms, q_order={self.q_order})"


@lru_cache(maxsize=None)
def theta_product(order: int) -> ThetaSeries:
    """(v - 1/v) prod_{n>=1} (1 - v^2 q^n)(1 - v^-2 q^n) / (1 - q^n)^2 through q^order."""
    # build the u-dependent numerator as {v_exp: dense q-list}
    rows: dict[int, list[Fraction]] = {1: [Fraction(0)] * (order + 1), -1: [Fraction(0)] * (order + 1)}
    rows[1][0] = Fraction(1)
    rows[-1][0] = Fraction(-1)
    for n in range(1, order + 1):
        # multiply by 1 - (v^2 + v^-2) q^n + q^{2n}
        new: dict[int, list[Fraction]] = {}
        for a, row in rows.items():
            for shift_v, shift_q, sign in ((0, 0, 1), (2, n, -1), (-2, n, -1), (0, 2 * n, 1)):
                target = new.setdefault(a + shift_v, [Fraction(0)] * (order + 1))
                for i in range(order - shift_q, -1, -1):
                    if row[i]:
                        target[i + shift_q] += sign * row[i]
        rows = {a: r for a, r in new.items() if any(r)}
    inv_sq = euler_product(order, -2)
    out: dict[tuple[int, int], Fraction] = {}
    for a, row in rows.items():
        prod = QSeries._raw(row) * inv_sq
        for n, c in prod.items():
            out[(a, n)] = c
    return ThetaSeries(out, order)


def jacobi_triple_sum(order: int) -> ThetaSeries:
    """sum_{n in Z} (-1)^n v^{2n+1} q^{n(n+1)/2} through q^order."""
    out: dict[tuple[int, int], Fraction] = {}
    n = 0
    while n * (n + 1) // 2 <= order:
        e = n * (n + 1) // 2
        out[(2 * n + 1, e)] = Fraction((-1) ** n)
        # n -> -n-1 has the same q-exponent
        out[(-2 * n - 1, e)] = Fraction((-1) ** (n + 1))
        n += 1
    return ThetaSeries(out, order)
