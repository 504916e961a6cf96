"""Quasimodular genus traces, Ramanujan's U-series and the Witten series.

A :class:`QuasiPoly` is a polynomial in Eisenstein series indexed by
partitions: the partition (1^{m_1} 2^{m_2} ...) stands for
G_2^{m_1} G_4^{m_2} ... (or the same monomial in the E_{2j}).
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .arith import bernoulli, format_fraction
from .partitions import Partition, PhiFunction, PhiKind, enumerate_partitions, phi_eval
from .render import render_latex, render_text, terms_from_json, terms_to_json
from .report import Report
from .series import (
    QSeries,
    eisenstein_E,
    eisenstein_G,
    eta_cubed,
    odd_power_theta_sum,
    theta_product,
)
from .symfun import (
    AHAT_SERIES,
    L_SERIES,
    Basis,
    CharSeries,
    SymPoly,
    genus_coefficient,
    newton_girard_s_to_p,
)

__all__ = [
    "GenusConsistencyError",
    "QuasiBasis",
    "QuasiPoly",
    "ahat_genus",
    "basis_convert",
    "fourier_basis_convert",
    "l_genus",
    "modular_decomposition",
    "quasi_to_qseries",
    "quasi_to_sympoly",
    "ramanujan_u",
    "ramanujan_u_quasi",
    "sigma_over_z_series",
    "trace",
    "verify_genus_routes",
    "verify_ramanujan_twist",
    "verify_witten_identity",
    "verify_witten_modularity",
    "witten_coefficient",
    "witten_quasi",
]


class QuasiBasis(str, enum.Enum):
    G = "G"
    E = "E"


def _double(j: int) -> int:
    return 2 * j


@dataclass(frozen=True)
class QuasiPoly:
    """Pure weight-2k polynomial in the G_{2j} or in the E_{2j}."""

    basis: QuasiBasis
    k: int
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "basis", QuasiBasis(self.basis))
        clean = {}
        for lam, c in self.terms.items():
            c = Fraction(c)
            if c:
                if lam.weight != self.k:
                    raise ValueError(f"{lam} does not have weight {self.k}")
                clean[lam] = c
        object.__setattr__(self, "terms", clean)

    @property
    def weight(self) -> int:
        return 2 * self.k

    def coefficient(self, lam: Partition) -> Fraction:
        return self.terms.get(lam, Fraction(0))

    def scale(self, factor) -> QuasiPoly:
        factor = Fraction(factor)
        return QuasiPoly(self.basis, self.k, {lam: factor * c for lam, c in self.terms.items()})

    def to_text(self) -> str:
        return render_text(self.terms, self.basis.value, _double)

    def to_latex(self) -> str:
        return render_latex(self.terms, self.basis.value, _double)

    def to_json(self) -> dict:
        return {"weight": self.weight, "basis": self.basis.value, "terms": terms_to_json(self.terms)}

    @classmethod
    def from_json(cls, data: dict | str) -> QuasiPoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(QuasiBasis(data["basis"]), int(data["weight"]) // 2, terms_from_json(data["terms"]))

    def __str__(self) -> str:
        return self.to_text()


PhiLike = Union[PhiKind, str, PhiFunction]


def trace(phi: PhiLike, k: int, basis: QuasiBasis | str = QuasiBasis.G) -> QuasiPoly:
    """sum_{lambda |- k} phi(lambda) X_lambda with X = G or E; the constant 1 at k = 0."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return QuasiPoly(basis, 0, {Partition(): Fraction(1)})
    return QuasiPoly(basis, k, {lam: phi_eval(phi, lam) for lam in enumerate_partitions(k)})


def _g_to_e_factor(lam: Partition, sign: int = 1) -> Fraction:
    out = Fraction(1)
    for j, m in lam.items():
        out *= (sign * bernoulli(2 * j) / (2 * j)) ** m
    return out


def _convert(f: QuasiPoly, sign: int) -> QuasiPoly:
    if f.basis == QuasiBasis.G:
        return QuasiPoly(QuasiBasis.E, f.k, {lam: c * _g_to_e_factor(lam, sign) for lam, c in f.terms.items()})
    return QuasiPoly(QuasiBasis.G, f.k, {lam: c / _g_to_e_factor(lam, sign) for lam, c in f.terms.items()})


def basis_convert(f: QuasiPoly) -> QuasiPoly:
    """Symbolic G <-> E conversion under G_{2j} = (B_{2j}/2j) E_{2j}.

    This is the correspondence under which E_{2j} plays the role of the
    power sum s_j, and it is the one used for the E-basis genus tables.
    The normalized q-series satisfy G_{2j} = -(B_{2j}/2j) E_{2j} instead, so
    the q-expansion of the converted form differs from the original by the
    sign (-1)^{len(lambda)} on each monomial; use
    :func:`fourier_basis_convert` to preserve q-expansions.
    """
    return _convert(f, 1)


def fourier_basis_convert(f: QuasiPoly) -> QuasiPoly:
    """G <-> E conversion that preserves the q-expansion."""
    return _convert(f, -1)


def to_basis(f: QuasiPoly, basis: QuasiBasis | str) -> QuasiPoly:
    return f if f.basis == QuasiBasis(basis) else basis_convert(f)


@lru_cache(maxsize=None)
def eisenstein_monomial(basis: QuasiBasis, lam: Partition, order: int) -> QSeries:
    """X_lambda(q) through q^order for X = G or E."""
    if lam.length == 0:
        return QSeries.constant(1, order)
    top = lam.parts[0]
    rest = Partition.from_parts(lam.parts[1:])
    gen = eisenstein_G(top, order) if basis == QuasiBasis.G else eisenstein_E(top, order)
    return eisenstein_monomial(basis, rest, order) * gen


def quasi_to_qseries(f: QuasiPoly, order: int) -> QSeries:
    out = QSeries.constant(0, order)
    for lam, c in f.terms.items():
        out = out + eisenstein_monomial(f.basis, lam, order).scale(c)
    return out


def quasi_to_sympoly(f: QuasiPoly) -> SymPoly:
    """Substitute G_{2j} -> (B_{2j}/2j) s_j, giving a power-sum polynomial of weight k."""
    g = to_basis(f, QuasiBasis.G)
    return SymPoly(Basis.POWER_SUM, g.k, {lam: c * _g_to_e_factor(lam) for lam, c in g.terms.items()})


class GenusConsistencyError(RuntimeError):
    pass


_GENUS_DATA: dict[str, tuple[CharSeries, PhiKind]] = {
    "ahat": (AHAT_SERIES, PhiKind.AHAT),
    "l": (L_SERIES, PhiKind.L),
}


def _genus_routes(kind: str, k: int) -> tuple[SymPoly, SymPoly]:
    char, phi = _GENUS_DATA[kind]
    via_series = newton_girard_s_to_p(genus_coefficient(char, k))
    via_trace = newton_girard_s_to_p(quasi_to_sympoly(trace(phi, k, QuasiBasis.G)))
    return via_series, via_trace


def _poly_diff(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction]) -> list:
    keys = sorted(set(a) | set(b), key=lambda lam: lam.sort_key(), reverse=True)
    return [
        [list(lam.parts), format_fraction(a.get(lam, 0)), format_fraction(b.get(lam, 0))]
        for lam in keys
        if a.get(lam, 0) != b.get(lam, 0)
    ]


def verify_genus_routes(kind: str, k: int) -> Report:
    """Characteristic-series route against trace-then-substitute route, p-basis."""
    via_series, via_trace = _genus_routes(kind, k)
    diff = _poly_diff(via_series.terms, via_trace.terms)
    return Report(f"{kind}-genus-trace-equals-series", k, k, not diff, diff)


@lru_cache(maxsize=None)
def _checked_genus(kind: str, k: int) -> SymPoly:
    via_series, via_trace = _genus_routes(kind, k)
    if via_series != via_trace:
        raise GenusConsistencyError(
            f"{kind} genus k={k}: series route {via_series} != trace route {via_trace}"
        )
    return via_series


def ahat_genus(k: int) -> SymPoly:
    """A-hat_k in the Pontryagin basis, checked by two independent routes."""
    return _checked_genus("ahat", k)


def l_genus(k: int) -> SymPoly:
    """L_k in the Pontryagin basis, checked by two independent routes."""
    return _checked_genus("l", k)


def ramanujan_u(k: int, order: int) -> QSeries:
    """U_{2k}(q) = sum (-1)^n (2n+1)^{2k+1} q^{T_n} / sum (-1)^n (2n+1) q^{T_n}."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return odd_power_theta_sum(k, order) * _eta_cubed_inverse(order)


@lru_cache(maxsize=None)
def _eta_cubed_inverse(order: int) -> QSeries:
    return eta_cubed(order).inverse()


def ramanujan_u_quasi(k: int) -> QuasiPoly:
    """4^k (2k+1)! Tr_k^E(phi_U) as an E-basis polynomial."""
    return trace(PhiKind.U, k, QuasiBasis.E).scale(4**k * math.factorial(2 * k + 1))


def _series_diff(a: QSeries, b: QSeries, limit: int = 10) -> list:
    out = []
    for n in range(min(a.order, b.order) + 1):
        if a[n] != b[n]:
            out.append([n, format_fraction(a[n]), format_fraction(b[n])])
            if len(out) >= limit:
                break
    return out


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def verify_ramanujan_twist(k: int, order: int) -> Report:
    """U-series as scaled E-trace, and the A-hat trace as a signed |phi_U| trace.

    Checks, all exact:
      * U_{2k}(q) = 4^k (2k+1)! Tr_k^E(phi_U) through q^order;
      * A-hat_k(tau) = (-1)^k Tr_k^E(|phi_U|), both termwise and as q-series;
      * every E-basis coefficient of A-hat_k has sign (-1)^k;
      * A-hat_k and U_{2k} differ in sign exactly at partitions with an odd
        number of parts;
      * U_{2k}(q) = 4^k (2k+1)! times the q-expansion of the G-basis A-hat
        trace.

    The A-hat E-basis form uses the symbolic conversion :func:`basis_convert`.
    """
    if k < 1:
        raise ValueError("the twist identities are stated for k >= 1")
    diff: list = []
    u_lhs = ramanujan_u(k, order)
    u_rhs = quasi_to_qseries(ramanujan_u_quasi(k), order)
    for row in _series_diff(u_lhs, u_rhs):
        diff.append({"check": "u-series", "n": row[0], "lhs": row[1], "rhs": row[2]})

    ahat_e = basis_convert(trace(PhiKind.AHAT, k, QuasiBasis.G))
    abs_u = trace(PhiKind.ABS_U, k, QuasiBasis.E).scale((-1) ** k)
    for row in _poly_diff(ahat_e.terms, abs_u.terms):
        diff.append({"check": "ahat-abs-u-terms", "partition": row[0], "lhs": row[1], "rhs": row[2]})
    for row in _series_diff(quasi_to_qseries(ahat_e, order), quasi_to_qseries(abs_u, order)):
        diff.append({"check": "ahat-abs-u-series", "n": row[0], "lhs": row[1], "rhs": row[2]})

    expected_sign = (-1) ** k
    for lam, c in ahat_e.terms.items():
        if _sign(c) != expected_sign:
            diff.append({"check": "ahat-sign", "partition": list(lam.parts), "coefficient": format_fraction(c)})

    u_trace = trace(PhiKind.U, k, QuasiBasis.E)
    flips = [lam for lam in enumerate_partitions(k) if _sign(ahat_e.coefficient(lam)) != _sign(u_trace.coefficient(lam))]
    odd = [lam for lam in enumerate_partitions(k) if lam.length % 2 == 1]
    if flips != odd:
        diff.append({"check": "sign-flip-set", "flips": [list(l.parts) for l in flips], "odd_length": [list(l.parts) for l in odd]})

    # q-expansion form: U_{2k} is the scaled G-basis A-hat trace itself
    scale = 4**k * math.factorial(2 * k + 1)
    ahat_q = quasi_to_qseries(trace(PhiKind.AHAT, k, QuasiBasis.G), order).scale(scale)
    for row in _series_diff(u_lhs, ahat_q):
        diff.append({"check": "u-equals-scaled-ahat-series", "n": row[0], "lhs": row[1], "rhs": row[2]})

    details = {
        "differing_sign_partitions": [list(lam.parts) for lam in flips],
        "ahat_E": ahat_e.to_text(),
        "u_E": ramanujan_u_quasi(k).to_text(),
    }
    return Report("ramanujan-u-twist", k, order, not diff, diff, details=details)


# Witten series in the variable w = (2 pi i z)^2, with q-series coefficients.


def _witten_part(j: int) -> Fraction:
    return Fraction(0) if j == 1 else Fraction(1, math.factorial(2 * j))


def witten_phi(lam: Partition) -> Fraction:
    """prod_{j>=2} (1/m_j!) (1/(2j)!)^{m_j}, and 0 if lambda has a part 1."""
    if lam.multiplicity(1):
        return Fraction(0)
    out = Fraction(1)
    for j, m in lam.items():
        out *= _witten_part(j) ** m / math.factorial(m)
    return out


def witten_quasi(k: int) -> QuasiPoly:
    """Coefficient of (2 pi i z)^{2k} in Q_W as a G-basis polynomial (no G_2)."""
    return trace(witten_phi, k, QuasiBasis.G)


WSeries = list  # list of QSeries indexed by the power of w


def _w_mul(a: WSeries, b: WSeries) -> WSeries:
    n = min(len(a), len(b))
    out = []
    for d in range(n):
        acc = a[0] * b[d]
        for i in range(1, d + 1):
            acc = acc + a[i] * b[d - i]
        out.append(acc)
    return out


def _w_exp(f: WSeries) -> WSeries:
    q_order = f[0].order
    if f[0] != 0:
        raise ValueError("w-series exp needs zero constant term")
    g = [QSeries.constant(1, q_order)]
    for n in range(1, len(f)):
        acc = QSeries.constant(0, q_order)
        for k in range(1, n + 1):
            acc = acc + (f[k] * g[n - k]).scale(k)
        g.append(acc.scale(Fraction(1, n)))
    return g


def _w_inverse(f: WSeries) -> WSeries:
    inv0 = f[0].inverse()
    g = [inv0]
    for n in range(1, len(f)):
        acc = f[1] * g[n - 1]
        for k in range(2, n + 1):
            acc = acc + f[k] * g[n - k]
        g.append(-(acc * inv0))
    return g


def witten_exponential_series(w_order: int, q_order: int) -> WSeries:
    """Q_W = exp(sum_{k>=2} G_{2k} w^k / (2k)!) through w^w_order."""
    f = [QSeries.constant(0, q_order), QSeries.constant(0, q_order)]
    for k in range(2, w_order + 1):
        f.append(eisenstein_G(k, q_order).scale(Fraction(1, math.factorial(2 * k))))
    return _w_exp(f[: w_order + 1])


@lru_cache(maxsize=None)
def theta_over_x_series(w_order: int, q_order: int) -> tuple[QSeries, ...]:
    """Theta(z)/(2 pi i z) as a w-series, from the product expansion with v = e^{X/2}."""
    th = theta_product(q_order)
    out = []
    for j in range(w_order + 1):
        m = 2 * j + 1
        denom = 2**m * math.factorial(m)
        c = [Fraction(0)] * (q_order + 1)
        for (a, n), coeff in th.items():
            c[n] += coeff * a**m
        out.append(QSeries([x / denom for x in c], q_order))
    return tuple(out)


def sigma_over_z_series(w_order: int, q_order: int) -> WSeries:
    """sigma(z)/z = exp(G_2 w / 2) Theta(z)/(2 pi i z) as a w-series."""
    g2_half = [QSeries.constant(0, q_order), eisenstein_G(1, q_order).scale(Fraction(1, 2))]
    g2_half += [QSeries.constant(0, q_order)] * (w_order - 1)
    return _w_mul(_w_exp(g2_half[: w_order + 1]), list(theta_over_x_series(w_order, q_order)))


@lru_cache(maxsize=None)
def _z_over_sigma(w_order: int, q_order: int) -> tuple[QSeries, ...]:
    return tuple(_w_inverse(sigma_over_z_series(w_order, q_order)))


def witten_coefficient(k: int, order: int) -> QSeries:
    """Coefficient of (2 pi i z)^{2k} in Q_W(z), cross-checked against z/sigma(z)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    value = quasi_to_qseries(witten_quasi(k), order)
    check = _z_over_sigma(k, order)[k]
    if value != check:
        raise GenusConsistencyError(f"Witten coefficient k={k}: partition route disagrees with z/sigma route")
    return value


def verify_witten_identity(w_order: int, q_order: int) -> Report:
    """exp(sum_{k>=2} G_{2k} w^k/(2k)!) * sigma(z)/z == 1 through w^w_order, q^q_order."""
    prod = _w_mul(witten_exponential_series(w_order, q_order), sigma_over_z_series(w_order, q_order))
    diff = []
    for d, coeff in enumerate(prod):
        target = QSeries.constant(1 if d == 0 else 0, q_order)
        for row in _series_diff(coeff, target, limit=3):
            diff.append({"w_degree": d, "n": row[0], "value": row[1], "expected": row[2]})
    return Report("witten-exp-times-sigma-is-one", w_order, q_order, not diff, diff)


def _solve_exact(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(a)
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n] for row in m]


def modular_decomposition(f: QSeries, weight: int) -> dict[tuple[int, int], Fraction]:
    """Write f as sum c_{a,b} E_4^a E_6^b with 4a + 6b = weight.

    The coefficients are fitted on the first dim(M_weight) terms and every
    remaining coefficient through f.order is checked; ValueError if f is not
    such a polynomial.
    """
    order = f.order
    monos = [(a, (weight - 4 * a) // 6) for a in range(weight // 4 + 1) if (weight - 4 * a) % 6 == 0 and weight >= 4 * a]
    if not monos:
        if any(f.coefficients()):
            raise ValueError(f"no nonzero modular forms of weight {weight}")
        return {}
    series = [(eisenstein_E(2, order) ** a) * (eisenstein_E(3, order) ** b) for a, b in monos]
    d = len(monos)
    if order < d - 1:
        raise ValueError("series too short to determine the decomposition")
    coeffs = _solve_exact([[s[n] for s in series] for n in range(d)], [f[n] for n in range(d)])
    recon = QSeries.constant(0, order)
    for c, s in zip(coeffs, series):
        recon = recon + s.scale(c)
    if recon != f:
        raise ValueError(f"series is not a polynomial in E4, E6 of weight {weight}")
    return {mono: c for mono, c in zip(monos, coeffs) if c}


def verify_witten_modularity(k: int, order: int) -> Report:
    """The w^k coefficient of Q_W is a holomorphic modular form of weight 2k."""
    f = witten_coefficient(k, order)
    try:
        decomposition = modular_decomposition(f, 2 * k)
        diff: list = []
    except ValueError as exc:
        decomposition, diff = {}, [str(exc)]
    details = {"E4_E6": [[a, b, format_fraction(c)] for (a, b), c in sorted(decomposition.items())]}
    return Report("witten-coefficient-is-modular", k, order, not diff, diff, details=details)
