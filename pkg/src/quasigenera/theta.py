"""Double-precision evaluation of eta, theta, Theta, sigma and lattice sums.

Conventions: u = e^{2 pi i z}, q = e^{2 pi i tau}, X = 2 pi i z. The
Weierstrass sigma function is for the lattice Z tau + Z. Theta is the
normalized product (u^{1/2} - u^{-1/2}) prod (1 - u q^n)(1 - q^n/u)/(1 - q^n)^2
and Theta-tilde multiplies it by exp(pi z^2 / (2 Im tau)).

Two kinds of checks are built on these evaluators:

* tier A: absolutely convergent forms (sigma products, theta products,
  G_2^*) compared at tight tolerance;
* tier B: the raw Hecke-regularized products over primitive lattice points,
  whose s -> 0+ limit converges slowly; only the trend along a decreasing
  s-grid and an extrapolated value are checked.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .arith import bernoulli
from .report import Report

__all__ = [
    "DEFAULT_S_GRID",
    "eval_G",
    "eval_G2_star",
    "eval_Theta",
    "eval_Theta_tilde",
    "eval_Theta_via_theta",
    "eval_eta",
    "eval_sigma_product",
    "eval_sigma_qseries",
    "eval_theta",
    "eval_witten_Q",
    "riemann_zeta",
    "verify_ahat_theta_limit",
    "verify_cutoff_stability",
    "verify_g2_hecke_limit",
    "verify_g2star_modular",
    "verify_hecke_cutoff_stability",
    "verify_l_theta_limit",
    "verify_raw_products",
    "verify_sigma_product",
    "verify_theta_odd",
    "verify_theta_product_vs_sum",
    "verify_witten_numeric",
    "verify_witten_g2star",
]

TWO_PI_I = 2j * math.pi
DEFAULT_S_GRID = (1.0, 0.5, 0.25, 0.1)
DEFAULT_CUTOFF = 300
TIGHT_TOL = 1e-6
LOOSE_TOL = 1e-2
NOISE_FLOOR = 1e-12


def _check_tau(tau: complex) -> complex:
    tau = complex(tau)
    if not tau.imag > 0:
        raise ValueError(f"tau must lie in the upper half-plane, got {tau}")
    return tau


def nome(tau: complex) -> complex:
    return cmath.exp(TWO_PI_I * _check_tau(tau))


def default_terms(tau: complex, tol: float = 1e-17) -> int:
    """Smallest N with |q|^N / (1 - |q|) < tol; this also bounds the theta tail."""
    aq = abs(nome(tau))
    n = 1
    while aq**n / (1 - aq) >= tol:
        n += 1
    return n


def eval_eta(tau: complex, n_terms: int | None = None) -> complex:
    q = nome(tau)
    n_terms = n_terms or default_terms(tau)
    out = cmath.exp(TWO_PI_I * tau / 24)
    for n in range(1, n_terms + 1):
        out *= 1 - q**n
    return out


def eval_theta(z: complex, tau: complex, n_terms: int | None = None) -> complex:
    """sum_{|n| <= N} u^n q^{n^2/2}."""
    tau = _check_tau(tau)
    n_terms = n_terms or default_terms(tau)
    terms = [cmath.exp(TWO_PI_I * n * z + 1j * math.pi * n * n * tau) for n in range(-n_terms, n_terms + 1)]
    # pair +-n for a symmetric, order-independent sum
    total = terms[n_terms]
    for n in range(n_terms, 0, -1):
        total += terms[n_terms + n] + terms[n_terms - n]
    return total


def eval_Theta(z: complex, tau: complex, n_terms: int | None = None) -> complex:
    """Product form of Theta(z; tau)."""
    q = nome(tau)
    n_terms = n_terms or default_terms(tau)
    u = cmath.exp(TWO_PI_I * z)
    out = 2j * cmath.sin(math.pi * z)
    for n in range(1, n_terms + 1):
        qn = q**n
        out *= (1 - u * qn) * (1 - qn / u) / (1 - qn) ** 2
    return out


def eval_Theta_via_theta(z: complex, tau: complex, n_terms: int | None = None) -> complex:
    """u^{1/2} q^{1/8} theta(z + tau/2 + 1/2; tau) / eta(tau)^3."""
    tau = _check_tau(tau)
    n_terms = n_terms or default_terms(tau)
    prefactor = cmath.exp(1j * math.pi * z + TWO_PI_I * tau / 8)
    return prefactor * eval_theta(z + tau / 2 + 0.5, tau, n_terms) / eval_eta(tau, n_terms) ** 3


def eval_Theta_tilde(z: complex, tau: complex, n_terms: int | None = None) -> complex:
    """exp(pi z^2 / (2 Im tau)) u^{1/2} q^{1/8} theta(z + tau/2 + 1/2; tau) / eta^3."""
    tau = _check_tau(tau)
    return cmath.exp(math.pi * z * z / (2 * tau.imag)) * eval_Theta_via_theta(z, tau, n_terms)


@lru_cache(maxsize=None)
def _bernoulli_float(n: int) -> float:
    return float(bernoulli(n))


def eval_G(k: int, tau: complex, tol: float = 1e-22) -> complex:
    """G_{2k}(tau) = -B_{2k}/(2k) + 2 sum_d d^{2k-1} q^d / (1 - q^d)."""
    q = nome(tau)
    p = 2 * k - 1
    const = -_bernoulli_float(2 * k) / (2 * k)
    total = 0j
    d = 1
    # terms grow until d ~ p / (2 pi Im tau), then decay geometrically
    peak = p / (2 * math.pi * complex(tau).imag)
    while True:
        term = d**p * q**d / (1 - q**d)
        total += term
        if d > peak and abs(term) <= tol * max(1.0, abs(const), abs(total)):
            break
        d += 1
    return const + 2 * total


def eval_G2_star(tau: complex) -> complex:
    tau = _check_tau(tau)
    return 1 / (4 * math.pi * tau.imag) + eval_G(1, tau)


def eval_sigma_qseries(z: complex, tau: complex, n_terms: int | None = None) -> complex:
    """sigma(z) = (1/2 pi i) exp(G_2 (2 pi i z)^2 / 2) Theta(z)."""
    X = TWO_PI_I * z
    return cmath.exp(eval_G(1, tau) * X * X / 2) * eval_Theta(z, tau, n_terms) / TWO_PI_I


@lru_cache(maxsize=32)
def _half_lattice(tau: complex, cutoff: float, shape: str, coprime: bool) -> np.ndarray:
    """One representative of each +-w for nonzero w = m tau + n in the region.

    ``box``: |m|, |n| <= cutoff. ``disc``: |w| <= cutoff. Points are returned
    in a fixed order (by m, then n).
    """
    if shape == "box":
        mmax = nmax = int(cutoff)
    elif shape == "disc":
        mmax = int(cutoff / tau.imag) + 1
        nmax = int(cutoff + abs(tau.real) * mmax) + 2
    else:
        raise ValueError(f"unknown lattice region {shape!r}")
    m, n = np.meshgrid(np.arange(0, mmax + 1), np.arange(-nmax, nmax + 1), indexing="ij")
    keep = (m > 0) | (n > 0)
    if coprime:
        keep &= np.gcd(m, n) == 1
    w = (m * tau + n)[keep]
    if shape == "disc":
        w = w[np.abs(w) <= cutoff]
    w.setflags(write=False)
    return w


def _log1m_plus(t: np.ndarray) -> np.ndarray:
    """log(1 - t) + t, with a series for small |t|."""
    small = np.abs(t) < 1e-3
    ts = np.where(small, t, 0)
    series = -(ts**2) / 2 - ts**3 / 3 - ts**4 / 4 - ts**5 / 5
    tl = np.where(small, 0.5, t)
    direct = np.log1p(-tl) + tl
    return np.where(small, series, direct)


def eval_sigma_product(z: complex, tau: complex, cutoff: int = 400, shape: str = "box") -> complex:
    """z prod_w (1 - z^2/w^2) exp(z^2/w^2) over the half-lattice in the cutoff region."""
    tau = _check_tau(tau)
    if cutoff < 1:
        raise ValueError("lattice cutoff must be >= 1")
    z = complex(z)
    if z == 0:
        return 0j
    w = _half_lattice(tau, float(cutoff), shape, False)
    t = z * z / w**2
    if np.any(np.abs(1 - t) < 1e-14):
        raise ValueError(f"z = {z} lies on the lattice")
    return z * cmath.exp(np.sum(_log1m_plus(t)))


def eval_witten_Q(z: complex, tau: complex, k_max: int | None = None, tol: float = 1e-20) -> complex:
    """Q_W(z) = exp(sum_{k>=2} G_{2k} (2 pi i z)^{2k} / (2k)!), summed until terms fall below tol."""
    X = TWO_PI_I * complex(z)
    total = 0j
    k = 2
    small_run = 0
    while True:
        term = eval_G(k, tau) * X ** (2 * k) / math.factorial(2 * k)
        total += term
        small_run = small_run + 1 if abs(term) < tol else 0
        if (k_max is not None and k >= k_max) or small_run >= 3 or k > 150:
            break
        k += 1
    return cmath.exp(total)


def riemann_zeta(s: float, n_terms: int = 12, corrections: int = 10) -> float:
    """zeta(s) for real s > 1 by direct summation with an Euler-Maclaurin tail."""
    if s <= 1:
        raise ValueError("riemann_zeta is implemented for real s > 1")
    N = n_terms
    parts = [n**-s for n in range(1, N)]
    parts.append(N ** (1 - s) / (s - 1))
    parts.append(N**-s / 2)
    rising = s  # s (s+1) ... (s + 2j - 2)
    for j in range(1, corrections + 1):
        parts.append(_bernoulli_float(2 * j) / math.factorial(2 * j) * rising * N ** (-s - 2 * j + 1))
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return math.fsum(parts)


# tier A


def _grid(zs: Iterable[complex], taus: Iterable[complex]) -> list[tuple[complex, complex]]:
    return [(complex(z), _check_tau(t)) for t in taus for z in zs]


def ahat_regularized(z: complex, tau: complex, cutoff: int) -> complex:
    """exp((2 pi i z)^2 G_2^*/2) z / sigma(z): the absolutely convergent A-hat product."""
    X = TWO_PI_I * z
    return cmath.exp(X * X * eval_G2_star(tau) / 2) * z / eval_sigma_product(z, tau, cutoff)


def ahat_theta_side(z: complex, tau: complex) -> complex:
    return TWO_PI_I * z / eval_Theta_tilde(z, tau)


def l_theta_side(z: complex, tau: complex) -> complex:
    return 1j * math.pi * z * eval_Theta_tilde(2 * z, tau) / eval_Theta_tilde(z, tau) ** 2


def _tier_a_report(claim: str, rows: list[dict], tol: float, cutoff: int, relative: bool = False) -> Report:
    worst = max(r["residual"] for r in rows)
    diff = [r for r in rows if not r["residual"] < tol]
    details = {
        "tolerance": tol,
        "residual_kind": "relative" if relative else "absolute",
        "max_residual": worst,
        "points": rows,
    }
    return Report(claim, 0, cutoff, not diff, diff, tier="A", details=details)


def _row(z: complex, tau: complex, lhs: complex, rhs: complex, relative: bool = False) -> dict:
    res = abs(lhs - rhs) / (abs(rhs) if relative else 1.0)
    return {
        "z": _cfmt(z),
        "tau": _cfmt(tau),
        "lhs": [lhs.real, lhs.imag],
        "rhs": [rhs.real, rhs.imag],
        "residual": res,
    }


def _cfmt(x: complex) -> str:
    x = complex(x)
    return f"{x.real:g}{x.imag:+g}i"


def verify_sigma_product(zs, taus, cutoff: int = 400, tol: float = TIGHT_TOL) -> Report:
    """Lattice product for sigma against its q-product expansion (relative residual)."""
    rows = [_row(z, t, eval_sigma_product(z, t, cutoff), eval_sigma_qseries(z, t), relative=True) for z, t in _grid(zs, taus)]
    return _tier_a_report("sigma-lattice-equals-q-product", rows, tol, cutoff, relative=True)


def verify_ahat_theta_limit(zs, taus, cutoff: int = 400, tol: float = TIGHT_TOL) -> Report:
    """Regularized A-hat product exp(X^2 G_2^*/2) z/sigma(z) against 2 pi i z / Theta-tilde(z)."""
    rows = [_row(z, t, ahat_regularized(z, t, cutoff), ahat_theta_side(z, t)) for z, t in _grid(zs, taus)]
    return _tier_a_report("ahat-product-equals-theta-quotient", rows, tol, cutoff)


def verify_l_theta_limit(zs, taus, cutoff: int = 400, tol: float = TIGHT_TOL) -> Report:
    """A(z)^2 / A(2z) from the regularized A-hat products against pi i z Theta~(2z)/Theta~(z)^2."""
    rows = []
    for z, t in _grid(zs, taus):
        lhs = ahat_regularized(z, t, cutoff) ** 2 / ahat_regularized(2 * z, t, cutoff)
        rows.append(_row(z, t, lhs, l_theta_side(z, t)))
    return _tier_a_report("l-product-equals-theta-quotient", rows, tol, cutoff)


def verify_witten_g2star(zs, taus, tol: float = TIGHT_TOL) -> Report:
    """2 pi i z / Theta~(z) against exp(X^2 G_2^*/2) Q_W(z) with Q_W summed from the G_{2k}."""
    rows = []
    for z, t in _grid(zs, taus):
        X = TWO_PI_I * z
        rhs = cmath.exp(X * X * eval_G2_star(t) / 2) * eval_witten_Q(z, t)
        rows.append(_row(z, t, ahat_theta_side(z, t), rhs))
    return _tier_a_report("theta-quotient-equals-g2star-witten", rows, tol, 0)


def verify_theta_odd(zs, taus, tol: float = 1e-12) -> Report:
    rows = [_row(z, t, eval_Theta(-z, t), -eval_Theta(z, t)) for z, t in _grid(zs, taus)]
    return _tier_a_report("theta-is-odd", rows, tol, 0)


def verify_theta_product_vs_sum(zs, taus, tol: float = 1e-12) -> Report:
    """Product form of Theta against eta^-3 u^{1/2} q^{1/8} theta(z + tau/2 + 1/2)."""
    rows = [_row(z, t, eval_Theta(z, t), eval_Theta_via_theta(z, t)) for z, t in _grid(zs, taus)]
    return _tier_a_report("theta-product-equals-theta-sum", rows, tol, 0)


def verify_g2star_modular(taus, tol: float = 1e-10) -> Report:
    """G_2^*(-1/tau) = tau^2 G_2^*(tau)."""
    rows = []
    for t in taus:
        t = _check_tau(t)
        rows.append(_row(0, t, eval_G2_star(-1 / t), t * t * eval_G2_star(t)))
    return _tier_a_report("g2star-weight-two-modular", rows, tol, 0)


def verify_witten_numeric(zs, taus, tol: float = 1e-8) -> Report:
    """Q_W(z) summed from the G_{2k} against z / sigma(z) from the q-product (relative)."""
    rows = [_row(z, t, eval_witten_Q(z, t), z / eval_sigma_qseries(z, t), relative=True) for z, t in _grid(zs, taus)]
    return _tier_a_report("witten-series-equals-z-over-sigma", rows, tol, 0, relative=True)


def verify_cutoff_stability(zs, taus, cutoff: int = 400, tol: float = 1e-8) -> Report:
    """Doubling the lattice cutoff moves the regularized A-hat product by less than tol."""
    rows = [_row(z, t, ahat_regularized(z, t, cutoff), ahat_regularized(z, t, 2 * cutoff)) for z, t in _grid(zs, taus)]
    return _tier_a_report("ahat-product-cutoff-stable", rows, tol, cutoff)


# tier B


@dataclass
class ConvergenceTable:
    s_grid: tuple[float, ...]
    values: list[complex]
    target: complex

    @property
    def residuals(self) -> list[float]:
        return [abs(v - self.target) for v in self.values]

    def monotone(self) -> bool:
        r = self.residuals
        return all(b <= a or b < NOISE_FLOOR for a, b in zip(r, r[1:]))

    def extrapolated(self) -> complex:
        """Linear extrapolation to s = 0 through the two smallest s values."""
        (s1, v1), (s2, v2) = sorted(zip(self.s_grid, self.values))[:2]
        if s1 == s2:
            return v1
        return v1 + (v1 - v2) * s1 / (s2 - s1)

    def csv_rows(self, claim: str, tau: complex, z: complex | None, cutoff: int) -> list[dict]:
        return [
            {
                "claim": claim,
                "tau": _cfmt(tau),
                "z": "" if z is None else _cfmt(z),
                "s": s,
                "M": cutoff,
                "lhs_re": v.real,
                "lhs_im": v.imag,
                "rhs_re": self.target.real,
                "rhs_im": self.target.imag,
                "abs_residual": abs(v - self.target),
            }
            for s, v in zip(self.s_grid, self.values)
        ]


def _check_s_grid(s_grid: Sequence[float]) -> tuple[float, ...]:
    grid = tuple(float(s) for s in s_grid)
    if not grid or any(s <= 0 for s in grid):
        raise ValueError("s-grid must be nonempty and positive")
    if list(grid) != sorted(grid, reverse=True):
        raise ValueError("s-grid must be decreasing")
    return grid


def _primitive_weights(tau: complex, cutoff: int, s: float) -> tuple[np.ndarray, np.ndarray]:
    """Half-lattice primitive points in the disc |w| <= cutoff and x = w^-2 |w|^-s."""
    w = _half_lattice(tau, float(cutoff), "disc", True)
    return w, w**-2.0 * np.abs(w) ** -s


def coprime_sum(tau: complex, s: float, cutoff: int) -> complex:
    """sum over all primitive w (both signs) with |w| <= cutoff of w^-2 |w|^-s."""
    _, x = _primitive_weights(tau, cutoff, s)
    return complex(2 * np.sum(x))


def full_lattice_sum(tau: complex, s: float, cutoff: int) -> complex:
    """sum over all nonzero w with |w| <= cutoff of w^-2 |w|^-s, by direct summation."""
    w = _half_lattice(tau, float(cutoff), "disc", False)
    return complex(2 * np.sum(w**-2.0 * np.abs(w) ** -s))


def gcd_grouped_sum(tau: complex, s: float, cutoff: int) -> complex:
    """The same full-lattice sum regrouped by k = gcd(m, n): sum_k k^{-2-s} C(cutoff / k)."""
    w, x = _primitive_weights(tau, cutoff, s)
    order = np.argsort(np.abs(w), kind="stable")
    radii = np.abs(w)[order]
    partial = np.concatenate(([0], np.cumsum(x[order])))
    total = 0j
    k = 1
    while cutoff / k >= radii[0]:
        idx = np.searchsorted(radii, cutoff / k, side="right")
        total += k ** (-2 - s) * partial[idx]
        k += 1
    return complex(2 * total)


def verify_g2_hecke_limit(tau: complex, s_grid: Sequence[float] = DEFAULT_S_GRID, cutoff: int = DEFAULT_CUTOFF,
                          factor_tol: float = 1e-8, loose_tol: float = LOOSE_TOL) -> tuple[Report, list[dict]]:
    """zeta(2+s) times the primitive sum approaching (2 pi i)^2 G_2^*(tau) as s decreases.

    Also checks, at each s, that the full-lattice sum equals its regrouping
    by gcd (the factorization behind the zeta factor).
    """
    tau = _check_tau(tau)
    grid = _check_s_grid(s_grid)
    target = TWO_PI_I**2 * eval_G2_star(tau)
    values = [riemann_zeta(2 + s) * coprime_sum(tau, s, cutoff) for s in grid]
    table = ConvergenceTable(grid, values, target)
    factor_rows = []
    diff: list = []
    for s in grid:
        direct = full_lattice_sum(tau, s, cutoff)
        grouped = gcd_grouped_sum(tau, s, cutoff)
        err = abs(direct - grouped) / max(1.0, abs(direct))
        factor_rows.append({"s": s, "direct": [direct.real, direct.imag], "grouped": [grouped.real, grouped.imag], "residual": err})
        if not err < factor_tol:
            diff.append({"check": "gcd-factorization", "s": s, "residual": err})
    if not table.monotone():
        diff.append({"check": "monotone-residual", "residuals": table.residuals})
    extrap = abs(table.extrapolated() - target)
    if not extrap < loose_tol:
        diff.append({"check": "extrapolated-residual", "residual": extrap, "tolerance": loose_tol})
    details = {
        "tau": _cfmt(tau),
        "s_grid": list(grid),
        "residuals": table.residuals,
        "extrapolated_residual": extrap,
        "loose_tolerance": loose_tol,
        "factorization": factor_rows,
        "region": "disc |m tau + n| <= cutoff",
    }
    report = Report("g2star-hecke-limit", 0, cutoff, not diff, diff, tier="B", details=details)
    return report, table.csv_rows(report.claim, tau, None, cutoff)


def verify_hecke_cutoff_stability(tau: complex, s_grid: Sequence[float] = DEFAULT_S_GRID,
                                  cutoff: int = DEFAULT_CUTOFF, tol: float = 1e-6) -> Report:
    """Change in zeta(2+s) times the primitive sum when the cutoff is doubled, per s.

    The truncated weight-2 sum carries lattice-point fluctuations at the
    boundary that decay only like a small power of the cutoff, so this is a
    tier-B (advisory) check.
    """
    tau = _check_tau(tau)
    grid = _check_s_grid(s_grid)
    changes = []
    for s in grid:
        z2 = riemann_zeta(2 + s)
        changes.append(abs(z2 * coprime_sum(tau, s, 2 * cutoff) - z2 * coprime_sum(tau, s, cutoff)))
    diff = [{"s": s, "change": c, "tolerance": tol} for s, c in zip(grid, changes) if not c < tol]
    details = {"tau": _cfmt(tau), "s_grid": list(grid), "changes": changes, "cutoffs": [cutoff, 2 * cutoff]}
    return Report("g2star-hecke-cutoff-stable", 0, cutoff, not diff, diff, tier="B", details=details)


@lru_cache(maxsize=None)
def _log_char_coeffs(kind: str, n: int = 40) -> tuple[float, ...]:
    """Float coefficients of log Q(y) = sum_j c_j y^j, j = 1..n."""
    out = []
    for j in range(1, n + 1):
        b = bernoulli(2 * j) / (2 * j * math.factorial(2 * j))
        c = -b if kind == "ahat" else 4**j * (4**j - 2) * b
        out.append(float(Fraction(c)))
    return tuple(out)


def _log_char(kind: str, y: np.ndarray) -> np.ndarray:
    coeffs = _log_char_coeffs(kind)
    acc = np.zeros_like(y)
    for c in reversed(coeffs):
        acc = (acc + c) * y
    return acc


def raw_product(kind: str, z: complex, tau: complex, s: float, cutoff: int) -> complex:
    """prod over x in X_tau(s) (half-lattice, |w| <= cutoff) of Q(x t).

    t = (2 pi i z)^2 for A-hat and (pi i z)^2 for L.
    """
    _, x = _primitive_weights(tau, cutoff, s)
    t = (TWO_PI_I * z) ** 2 if kind == "ahat" else (1j * math.pi * z) ** 2
    y = x * t
    radius = 4 * math.pi**2 if kind == "ahat" else math.pi**2 / 4
    if np.max(np.abs(y)) > 0.5 * radius:
        raise ValueError("z too large for the series form of log Q")
    return cmath.exp(np.sum(_log_char(kind, y)))


def verify_raw_products(z: complex, tau: complex, s_grid: Sequence[float] = DEFAULT_S_GRID,
                        cutoff: int = DEFAULT_CUTOFF, loose_tol: float = LOOSE_TOL) -> tuple[list[Report], list[dict]]:
    """Raw Hecke-regularized A-hat and L products against their theta quotients."""
    tau = _check_tau(tau)
    z = complex(z)
    grid = _check_s_grid(s_grid)
    reports, csv_rows = [], []
    for kind, target in (("ahat", ahat_theta_side(z, tau)), ("l", l_theta_side(z, tau))):
        table = ConvergenceTable(grid, [raw_product(kind, z, tau, s, cutoff) for s in grid], target)
        diff: list = []
        if not table.monotone():
            diff.append({"check": "monotone-residual", "residuals": table.residuals})
        extrap = abs(table.extrapolated() - target)
        if not extrap < loose_tol:
            diff.append({"check": "extrapolated-residual", "residual": extrap, "tolerance": loose_tol})
        claim = f"{kind}-raw-product-limit"
        details = {
            "z": _cfmt(z),
            "tau": _cfmt(tau),
            "s_grid": list(grid),
            "residuals": table.residuals,
            "extrapolated_residual": extrap,
            "loose_tolerance": loose_tol,
            "region": "disc |m tau + n| <= cutoff",
        }
        reports.append(Report(claim, 0, cutoff, not diff, diff, tier="B", details=details))
        csv_rows.extend(table.csv_rows(claim, tau, z, cutoff))
    return reports, csv_rows
