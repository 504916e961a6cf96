from __future__ import annotations

import cmath
import math

import mpmath
import pytest

from quasigenera import theta
from quasigenera.genera import witten_coefficient
from quasigenera.theta import (
    ConvergenceTable,
    eval_eta,
    eval_G,
    eval_G2_star,
    eval_sigma_product,
    eval_sigma_qseries,
    eval_Theta,
    eval_Theta_tilde,
    eval_Theta_via_theta,
    eval_theta,
    eval_witten_Q,
    riemann_zeta,
)

TAUS = (1j, 2j, 0.5 + 1j)
ZS = (0.05, 0.1, 0.2)


def test_theta_at_zero_against_mpmath():
    tau = 2j
    expected = mpmath.jtheta(3, 0, mpmath.exp(mpmath.pi * 1j * tau))
    assert abs(eval_theta(0, tau) - complex(expected)) < 1e-14
    assert eval_theta(0, tau).real > 1


@pytest.mark.parametrize("tau", TAUS)
def test_theta_general_against_mpmath(tau):
    z = 0.13 - 0.04j
    expected = mpmath.jtheta(3, mpmath.pi * z, mpmath.exp(mpmath.pi * 1j * tau))
    assert abs(eval_theta(z, tau) - complex(expected)) < 1e-13


@pytest.mark.parametrize("tau", TAUS)
def test_eta_against_mpmath(tau):
    q = mpmath.exp(2j * mpmath.pi * tau)
    expected = mpmath.exp(2j * mpmath.pi * tau / 24) * mpmath.qp(q)
    assert abs(eval_eta(tau) - complex(expected)) < 1e-14


def test_upper_half_plane_required():
    with pytest.raises(ValueError):
        eval_eta(-1j)
    with pytest.raises(ValueError):
        eval_theta(0.1, 1.0)


def test_theta_product_equals_theta_sum_tight():
    z, tau = 0.1 + 0.05j, 2j
    assert abs(eval_Theta(z, tau) - eval_Theta_via_theta(z, tau)) < 1e-12


def test_theta_tilde_factor():
    z, tau = 0.17, 0.5 + 1j
    ratio = eval_Theta_tilde(z, tau) / eval_Theta(z, tau)
    assert abs(ratio - cmath.exp(math.pi * z * z / (2 * tau.imag))) < 1e-12


@pytest.mark.parametrize("tau", TAUS)
def test_theta_is_odd(tau):
    for z in ZS + (0.1 + 0.05j,):
        assert abs(eval_Theta(-z, tau) + eval_Theta(z, tau)) < 1e-12


def test_sigma_basic_properties():
    tau = 2j
    assert abs(eval_sigma_product(1e-7, tau) / 1e-7 - 1) < 1e-12
    assert abs(eval_sigma_product(-0.2, tau) + eval_sigma_product(0.2, tau)) < 1e-15
    with pytest.raises(ValueError):
        eval_sigma_product(1.0, tau)
    with pytest.raises(ValueError):
        eval_sigma_product(0.1, tau, cutoff=0)


def test_sigma_product_against_q_expansion():
    z, tau = 0.2, 2j
    lhs, rhs = eval_sigma_product(z, tau, 400), eval_sigma_qseries(z, tau)
    assert abs(lhs - rhs) / abs(rhs) < 1e-6


def test_sigma_against_mpmath_weierstrass_zeta_free_form():
    # sigma via the q-product at small z: sigma(z) = z - g2 z^5/240 + ..., g2 = 60 G4-lattice sum
    tau, z = 1j, 0.01
    e4 = 1 + 240 * sum(n**3 * cmath.exp(2j * math.pi * tau * n) / (1 - cmath.exp(2j * math.pi * tau * n)) for n in range(1, 40))
    g2 = (2 * math.pi) ** 4 / 12 * e4
    approx = z - g2 * z**5 / 240
    assert abs(eval_sigma_qseries(z, tau) - approx) < 1e-13


@pytest.mark.parametrize("k", [1, 2, 3, 4, 6])
@pytest.mark.parametrize("tau", TAUS)
def test_eisenstein_numeric_against_direct_sum(k, tau):
    q = mpmath.exp(2j * mpmath.pi * tau)
    b = mpmath.bernoulli(2 * k)
    direct = -b / (2 * k) + 2 * mpmath.nsum(lambda n: n ** (2 * k - 1) * q**n / (1 - q**n), [1, mpmath.inf])
    assert abs(eval_G(k, tau) - complex(direct)) < 1e-12 * max(1, abs(direct))


def test_g2_star_values():
    assert abs(eval_G2_star(1j)) < 1e-14
    # Im tau -> oo: G_2^* + 1/12 = 1/(4 pi Im tau) + O(q)
    for y in (10, 60, 1000):
        assert abs(eval_G2_star(y * 1j) + 1 / 12 - 1 / (4 * math.pi * y)) < 1e-15 + 30 * math.exp(-2 * math.pi * y)
    for tau in (2j, 0.5 + 1j, 0.3 + 1.2j):
        assert abs(eval_G2_star(-1 / tau) - tau * tau * eval_G2_star(tau)) < 1e-10


@pytest.mark.parametrize("s", [2.1, 2.5, 3.0, 4.0])
def test_zeta_against_mpmath(s):
    assert abs(riemann_zeta(s) - float(mpmath.zeta(s))) < 1e-12
    with pytest.raises(ValueError):
        riemann_zeta(1.0)


@pytest.mark.parametrize("tau", TAUS)
def test_witten_expansion_numeric(tau):
    for z in ZS:
        lhs = eval_witten_Q(z, tau)
        rhs = z / eval_sigma_qseries(z, tau)
        assert abs(lhs - rhs) / abs(rhs) < 1e-8


def test_exact_witten_coefficients_sum_to_numeric_value():
    z, tau = 0.1, 1j
    X2 = (2j * math.pi * z) ** 2
    q = cmath.exp(2j * math.pi * tau)
    total = 0
    for k in range(0, 12):
        coeffs = witten_coefficient(k, 25).coefficients()
        total += X2**k * sum(float(c) * q**n for n, c in enumerate(coeffs))
    assert abs(total - eval_witten_Q(z, tau)) < 1e-10


def test_tier_a_reports_pass():
    for fn in (theta.verify_sigma_product, theta.verify_ahat_theta_limit, theta.verify_l_theta_limit):
        report = fn(ZS, TAUS, 400)
        assert report.passed and report.tier == "A", report.diff
        assert report.details["max_residual"] < 1e-6
    assert theta.verify_witten_g2star((0.05,), (1j,)).passed


def test_tier_a_report_fails_honestly_at_impossible_tolerance():
    report = theta.verify_ahat_theta_limit((0.1,), (2j,), 50, tol=1e-20)
    assert not report.passed and report.hard_failure and report.diff


def test_cutoff_stability():
    report = theta.verify_cutoff_stability((0.1,), (2j,), 400)
    assert report.passed, report.details


def test_z_to_zero_limits():
    tau = 2j
    assert abs(theta.ahat_theta_side(1e-6, tau) - 1) < 1e-9
    assert abs(theta.ahat_regularized(1e-6, tau, 100) - 1) < 1e-9


@pytest.mark.parametrize("tau", TAUS)
def test_hecke_limit_trend(tau):
    report, rows = theta.verify_g2_hecke_limit(tau)
    assert report.tier == "B"
    assert report.passed, report.diff
    assert len(rows) == 4
    for row in report.details["factorization"]:
        assert row["residual"] < 1e-8


def test_gcd_regrouping_is_exact():
    tau, s = 0.5 + 1j, 0.25
    assert abs(theta.full_lattice_sum(tau, s, 120) - theta.gcd_grouped_sum(tau, s, 120)) < 1e-10


@pytest.mark.parametrize("tau", TAUS)
def test_raw_products_trend(tau):
    reports, rows = theta.verify_raw_products(0.1, tau)
    assert [r.claim for r in reports] == ["ahat-raw-product-limit", "l-raw-product-limit"]
    assert all(r.passed for r in reports), [r.diff for r in reports]
    assert len(rows) == 8


def test_raw_product_log_coefficients():
    # log(sinh(y)/y) = y^2/6 - ..., so the A-hat log starts at -1/24 in y = z
    assert theta._log_char_coeffs("ahat")[0] == pytest.approx(-1 / 24)
    assert theta._log_char_coeffs("l")[0] == pytest.approx(1 / 3)


def test_convergence_table_helpers():
    t = ConvergenceTable((1.0, 0.5), [3 + 0j, 2 + 0j], 1 + 0j)
    assert t.residuals == [2.0, 1.0]
    assert t.monotone()
    assert t.extrapolated() == pytest.approx(1.0)
    noisy = ConvergenceTable((1.0, 0.5, 0.25), [1e-16, 3e-16, 2e-16], 0j)
    assert noisy.monotone()
    assert not ConvergenceTable((1.0, 0.5), [2 + 0j, 3 + 0j], 1 + 0j).monotone()


def test_s_grid_validation():
    with pytest.raises(ValueError):
        theta.verify_g2_hecke_limit(2j, (0.1, 0.5))
    with pytest.raises(ValueError):
        theta.verify_g2_hecke_limit(2j, (1.0, -0.1))
