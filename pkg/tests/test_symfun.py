from __future__ import annotations

import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasigenera.genera import ahat_genus, l_genus
from quasigenera.partitions import Partition, cycle_index, enumerate_partitions
from quasigenera.series import QSeries
from quasigenera.symfun import (
    AHAT_SERIES,
    L_SERIES,
    Basis,
    SymPoly,
    cycle_index_by_exponential,
    genus_coefficient,
    newton_girard_p_to_s,
    newton_girard_s_to_p,
)

P = Basis.PONTRYAGIN
S = Basis.POWER_SUM


def poly(basis, weight, entries):
    return SymPoly(basis, weight, {Partition.from_parts(parts): Fraction(c) for parts, c in entries})


def elementary(xs, j):
    return sum((Fraction(1) * _prod(c) for c in itertools.combinations(xs, j)), Fraction(0))


def _prod(values):
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def evaluate(f: SymPoly, xs) -> Fraction:
    """Evaluate at the formal roots xs (p_j = e_j(xs), s_j = sum x^j)."""
    def gen(j):
        return elementary(xs, j) if f.basis == P else sum(Fraction(x) ** j for x in xs)

    total = Fraction(0)
    for lam, c in f.terms.items():
        term = c
        for j, m in lam.items():
            term *= gen(j) ** m
        total += term
    return total


def product_of_series(char, xs, order):
    """prod_i Q(x_i t) as a series in t, by direct multiplication."""
    q = char.series(order)
    out = QSeries.constant(1, order)
    for x in xs:
        out = out * QSeries([q[n] * Fraction(x) ** n for n in range(order + 1)])
    return out


rational_roots = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=1, max_size=4)


def test_characteristic_series_expansions():
    assert AHAT_SERIES.series(3).coefficients() == [1, Fraction(-1, 24), Fraction(7, 5760), Fraction(-31, 967680)]
    assert L_SERIES.series(3).coefficients() == [1, Fraction(1, 3), Fraction(-1, 45), Fraction(2, 945)]


def test_ahat_golden():
    assert ahat_genus(0) == SymPoly.one(P)
    assert ahat_genus(1) == poly(P, 1, [([1], Fraction(-1, 24))])
    assert ahat_genus(2) == poly(P, 2, [([2], Fraction(-4, 5760)), ([1, 1], Fraction(7, 5760))])
    assert ahat_genus(3) == poly(P, 3, [([3], Fraction(-16, 967680)), ([2, 1], Fraction(44, 967680)),
                                        ([1, 1, 1], Fraction(-31, 967680))])
    d = 464486400
    assert ahat_genus(4) == poly(P, 4, [([4], Fraction(-192, d)), ([3, 1], Fraction(512, d)), ([2, 2], Fraction(208, d)),
                                        ([2, 1, 1], Fraction(-904, d)), ([1, 1, 1, 1], Fraction(381, d))])


def test_l_golden():
    assert l_genus(0) == SymPoly.one(P)
    assert l_genus(1) == poly(P, 1, [([1], Fraction(1, 3))])
    assert l_genus(2) == poly(P, 2, [([2], Fraction(7, 45)), ([1, 1], Fraction(-1, 45))])
    assert l_genus(3) == poly(P, 3, [([3], Fraction(62, 945)), ([2, 1], Fraction(-13, 945)), ([1, 1, 1], Fraction(2, 945))])


@pytest.mark.parametrize("char,genus", [(AHAT_SERIES, ahat_genus), (L_SERIES, l_genus)])
@given(xs=rational_roots)
def test_genus_equals_product_of_series_at_rational_roots(char, genus, xs):
    order = 5
    prod = product_of_series(char, xs, order)
    for k in range(order + 1):
        assert evaluate(genus(k), xs) == prod[k]


@given(xs=rational_roots, ys=rational_roots)
def test_multiplicativity(xs, ys):
    # K(roots xs + ys) = sum_{i+j=k} K_i(xs) K_j(ys)
    for k in range(5):
        whole = evaluate(ahat_genus(k), xs + ys)
        split = sum(evaluate(ahat_genus(i), xs) * evaluate(ahat_genus(k - i), ys) for i in range(k + 1))
        assert whole == split


def random_poly(basis):
    def build(args):
        k, coeffs = args
        lams = enumerate_partitions(k)
        return SymPoly(basis, k, {lam: c for lam, c in zip(lams, coeffs)})

    return st.tuples(st.integers(0, 7), st.lists(st.fractions(max_denominator=9), min_size=15, max_size=15)).map(build)


@given(random_poly(S))
def test_newton_round_trip_from_s(f):
    assert newton_girard_p_to_s(newton_girard_s_to_p(f)) == f


@given(random_poly(P))
def test_newton_round_trip_from_p(f):
    assert newton_girard_s_to_p(newton_girard_p_to_s(f)) == f


@given(xs=rational_roots, k=st.integers(1, 6))
def test_newton_identities_numerically(xs, k):
    s_k = SymPoly.generator(S, k)
    assert evaluate(newton_girard_s_to_p(s_k), xs) == sum(Fraction(x) ** k for x in xs)
    p_k = SymPoly.generator(P, k)
    assert evaluate(newton_girard_p_to_s(p_k), xs) == elementary(xs, k)


def test_newton_basis_errors():
    with pytest.raises(ValueError):
        newton_girard_s_to_p(SymPoly.generator(P, 1))
    with pytest.raises(ValueError):
        newton_girard_p_to_s(SymPoly.generator(S, 1))


def test_polya_exponential_formula():
    by_exp = cycle_index_by_exponential(8)
    for k in range(9):
        assert by_exp[k].terms == cycle_index(k)


def test_genus_coefficient_from_sequence():
    # log Q = z gives exp(s_1 t): coefficient s_1^k / k!
    c = [0, 1, 0, 0, 0]
    f = genus_coefficient(c, 4)
    assert f == SymPoly(S, 4, {Partition.from_parts([1, 1, 1, 1]): Fraction(1, 24)})
    with pytest.raises(ValueError):
        genus_coefficient([0, 1], 3)


def test_sympoly_validation_and_arithmetic():
    with pytest.raises(ValueError):
        SymPoly(P, 2, {Partition.from_parts([1]): 1})
    with pytest.raises(ValueError):
        SymPoly.generator(P, 1) + SymPoly.generator(S, 1)
    with pytest.raises(ValueError):
        SymPoly.generator(P, 1) + SymPoly.generator(P, 2)
    p1 = SymPoly.generator(P, 1)
    assert (p1 * p1 - p1**2).terms == {}
    assert (p1 * 3).coefficient(Partition.from_parts([1])) == 3


def test_rendering():
    assert ahat_genus(1).to_text() == "-1/24 p1"
    assert l_genus(2).to_text() == "(7p2 - p1^2)/45"
    assert ahat_genus(0).to_text() == "1"
    assert SymPoly(P, 3).to_text() == "0"
    assert ahat_genus(3).to_latex() == "\\frac{1}{967680}(-16p_3+44p_1p_2-31p_1^3)"


@given(random_poly(P))
def test_json_round_trip(f):
    assert SymPoly.from_json(json.dumps(f.to_json())) == f
