"""Tests for the roots of tan x = kappa x and cot x = kappa x."""

import math
from fractions import Fraction

import numpy as np
import pytest

from pade_roots.exceptions import DomainError, UnsupportedError
from pade_roots.trig_roots import (
    EquationKind,
    PhiSign,
    RootMethod,
    TrigEquation,
    error_table,
    estimate_root,
    first_root_cot_closed,
    phi_pade,
    phi_series,
    root_closed_form,
    root_frankel,
    root_oracle,
    root_taylor,
)

F = Fraction

# reference roots of tan x = x and cot x = x for n = 1 ... 10
TAN_ROOTS = [
    4.49340946,
    7.72525184,
    10.90412166,
    14.06619391,
    17.22075527,
    20.37130296,
    23.51945250,
    26.66605426,
    29.81159879,
    32.95638904,
]
COT_ROOTS = [
    3.42561846,
    6.43729818,
    9.52933441,
    12.64528722,
    15.77128487,
    18.90240996,
    22.03649673,
    25.17244633,
    28.30964285,
    31.44771464,
]

# Padé error (approximation minus exact) for n = 1 ... 4, tan in units of 1e-3
# and cot in units of 1e-2
TAN_PADE_ERRORS = [0.20508427e-3, 0.01474265e-3, 0.00268424e-3, 0.00075749e-3]
COT_PADE_ERRORS = [-0.36000169e-2, -0.01575732e-2, -0.00222643e-2, -0.00054192e-2]


def test_equation_residual_vanishes_at_root(tan_kappa_one, cot_kappa_one):
    """Test the pole-free residuals at known roots."""
    assert abs(tan_kappa_one.residual(TAN_ROOTS[0])) < 1e-7
    assert abs(cot_kappa_one.residual(COT_ROOTS[0])) < 1e-7
    # the derivative is consistent with a finite difference
    x, h = 2.0, 1e-6
    slope = (tan_kappa_one.residual(x + h) - tan_kappa_one.residual(x - h)) / (2 * h)
    assert tan_kappa_one.derivative(x) == pytest.approx(slope, rel=1e-6)


def test_equation_validation():
    """Test that kind strings are coerced and bad slopes rejected."""
    eq = TrigEquation("cot", 2.0)
    assert eq.kind is EquationKind.COT
    assert eq.phi_sign is PhiSign.PLUS
    with pytest.raises(DomainError):
        TrigEquation(EquationKind.TAN, math.inf)
    with pytest.raises(ValueError):
        TrigEquation("sec", 1.0)


@pytest.mark.parametrize(
    "sign, expected",
    [
        (PhiSign.MINUS, (1, 0, -1, 0, F(-2, 3))),
        (PhiSign.PLUS, (1, 0, 1, 0, F(-4, 3))),
    ],
)
def test_phi_series_leading_terms(sign, expected):
    """Test phi through w^4 for kappa = 1."""
    assert phi_series(sign, 1, 4).coefficients == expected


def test_phi_series_general_kappa():
    """Test the w^2 and w^4 coefficients against their closed expressions."""
    kappa = F(3, 2)
    for sign, s in ((PhiSign.PLUS, 1), (PhiSign.MINUS, -1)):
        series = phi_series(sign, kappa, 6)
        assert series.coefficient(2) == s / kappa
        assert series.coefficient(4) == -(3 * kappa + s) / (3 * kappa**3)
        # phi is even
        assert series.coefficient(1) == 0
        assert series.coefficient(5) == 0


def test_phi_series_rejects_bad_input():
    """Test that kappa = 0 and short orders raise DomainError."""
    with pytest.raises(DomainError):
        phi_series(PhiSign.PLUS, 0, 6)
    with pytest.raises(DomainError):
        phi_series(PhiSign.PLUS, 1, 3)


def test_phi_pade_kappa_one():
    """Test the [1,1] form (3 + 7y) / (3 + 4y) of phi_plus at kappa = 1."""
    r = phi_pade(PhiSign.PLUS, F(1))
    integer = r.integer_form()
    assert integer.num_coeffs == (3, 7)
    assert integer.den_coeffs == (3, 4)


@pytest.mark.parametrize("kappa", [F(1), F(2), F(1, 3)])
@pytest.mark.parametrize("sign, s", [(PhiSign.PLUS, 1), (PhiSign.MINUS, -1)])
def test_phi_pade_general_form(kappa, sign, s):
    """Test the symbolic [1,1] form of phi for several slopes."""
    r = phi_pade(sign, kappa)
    num = (3 * kappa**2 * s, 6 * kappa + s)
    den = (3 * kappa**2 * s, 3 * kappa + s)
    assert r.num_coeffs == (1, num[1] / num[0])
    assert r.den_coeffs == (1, den[1] / den[0])


@pytest.mark.parametrize("n", range(1, 11))
def test_oracle_matches_reference_roots(n, tan_kappa_one, cot_kappa_one):
    """Test the bisection oracle against the tabulated roots."""
    assert root_oracle(tan_kappa_one, n).value == pytest.approx(
        TAN_ROOTS[n - 1], abs=1e-8
    )
    assert root_oracle(cot_kappa_one, n).value == pytest.approx(
        COT_ROOTS[n - 1], abs=1e-8
    )


def test_oracle_residual_is_small(tan_kappa_one):
    """Test that the oracle reports a residual near machine precision."""
    estimate = root_oracle(tan_kappa_one, 5)
    assert estimate.method is RootMethod.ORACLE
    assert abs(estimate.residual) < 1e-12


def test_oracle_special_branches():
    """Test the exact and bracketed cases outside kappa > 0."""
    # the first root of tan x = kappa x is 0
    assert root_oracle(TrigEquation("tan", 1.0), 0).value == 0.0
    # kappa = 0 gives the zeros of sin and cos
    assert root_oracle(TrigEquation("tan", 0.0), 2).value == pytest.approx(2 * math.pi)
    assert root_oracle(TrigEquation("cot", 0.0), 1).value == pytest.approx(
        1.5 * math.pi
    )
    # tan x = -x has its first positive root at 2.0287578...
    assert root_oracle(TrigEquation("tan", -1.0), 1).value == pytest.approx(
        2.0287578381104345, abs=1e-12
    )
    with pytest.raises(DomainError):
        root_oracle(TrigEquation("cot", -1.0), 0)
    with pytest.raises(DomainError):
        root_oracle(TrigEquation("tan", 1.0), -1)


@pytest.mark.parametrize("n", range(1, 5))
def test_closed_form_errors(n, tan_kappa_one, cot_kappa_one):
    """Test the Padé closed form errors against the reference values."""
    tan_exact = root_oracle(tan_kappa_one, n).value
    cot_exact = root_oracle(cot_kappa_one, n).value
    assert root_closed_form(tan_kappa_one, n).value - tan_exact == pytest.approx(
        TAN_PADE_ERRORS[n - 1], abs=1e-11
    )
    assert root_closed_form(cot_kappa_one, n).value - cot_exact == pytest.approx(
        COT_PADE_ERRORS[n - 1], abs=1e-10
    )


def test_closed_form_beats_taylor_and_frankel(tan_kappa_one, cot_kappa_one):
    """Test the ordering of the three approximations at kappa = 1."""
    for eq in (tan_kappa_one, cot_kappa_one):
        for n in range(1, 11):
            exact = root_oracle(eq, n).value
            pade = abs(root_closed_form(eq, n).value - exact)
            taylor = abs(root_taylor(eq, n).value - exact)
            assert pade < taylor
            if eq.kind is EquationKind.TAN:
                assert pade < abs(root_frankel(eq, n).value - exact)


def test_closed_form_other_kappa():
    """Test that the closed form stays accurate for kappa = 2."""
    for kind in EquationKind:
        eq = TrigEquation(kind, 2.0)
        for n in range(2, 7):
            exact = root_oracle(eq, n).value
            assert root_closed_form(eq, n).value == pytest.approx(exact, rel=1e-3)


def test_closed_form_domain():
    """Test the branches the closed form refuses."""
    assert root_closed_form(TrigEquation("tan", 1.0), 0).value == 0.0
    with pytest.raises(DomainError, match="first_root_cot_closed"):
        root_closed_form(TrigEquation("cot", 1.0), 0)
    with pytest.raises(UnsupportedError):
        root_closed_form(TrigEquation("tan", -1.0), 1)
    with pytest.raises(DomainError):
        root_taylor(TrigEquation("tan", 1.0), 0)


def test_closed_form_warns_below_certified_kappa(caplog):
    """Test the warning for slopes below the certified range."""
    with caplog.at_level("WARNING", logger="pade_roots"):
        root_closed_form(TrigEquation("tan", 0.5), 1)
    assert "not certified" in caplog.text


def test_frankel_only_for_kappa_one():
    """Test that the arccot forms are refused away from kappa = 1."""
    with pytest.raises(UnsupportedError):
        root_frankel(TrigEquation("tan", 2.0), 1)
    with pytest.raises(DomainError):
        root_frankel(TrigEquation("tan", 1.0), 0)


def test_first_root_cot_closed():
    """Test the first root of cot x = kappa x at several slopes."""
    estimate = first_root_cot_closed(1.0)
    assert estimate.branch == 0
    assert estimate.value == pytest.approx(0.860366, abs=5e-6)
    # kappa = 0 gives pi / 2 exactly
    assert first_root_cot_closed(0.0).value == pytest.approx(math.pi / 2)

    for kappa in (0.01, 0.1, 1.0, 10.0, 100.0, 1e4):
        exact = root_oracle(TrigEquation("cot", kappa), 0).value
        closed = first_root_cot_closed(kappa).value
        assert 0 < closed <= math.pi / 2
        assert closed == pytest.approx(exact, rel=1e-3)

    with pytest.raises(UnsupportedError):
        first_root_cot_closed(-1.0)


def test_estimate_root_dispatch(cot_kappa_one):
    """Test that each method name reaches the right formula."""
    for method in RootMethod:
        estimate = estimate_root(cot_kappa_one, 3, method)
        assert estimate.method is RootMethod(method)
        assert estimate.value == pytest.approx(COT_ROOTS[2], rel=1e-3)
    # the first cot root goes through its own closed form
    first = estimate_root(cot_kappa_one, 0, "pade")
    assert first.value == pytest.approx(0.8603335890, abs=1e-4)


def test_error_table(tan_kappa_one):
    """Test the rows of the error table for tan x = x."""
    rows = error_table(tan_kappa_one, 3)
    assert [row.branch for row in rows] == [1, 2, 3]
    assert rows[0].ratio == pytest.approx(1.43029665, abs=1e-8)
    assert rows[0].err_frankel == pytest.approx(0.45855420e-3, abs=1e-11)
    assert rows[0].err_taylor == pytest.approx(0.40225822e-3, abs=1e-11)


def test_error_table_without_frankel():
    """Test that the Frankel column is empty away from kappa = 1."""
    rows = error_table(TrigEquation("tan", 2.0), 2)
    assert all(np.isnan(row.err_frankel) for row in rows)
    with pytest.raises(DomainError):
        error_table(TrigEquation("tan", 2.0), 0)


@pytest.mark.parametrize("n", range(1, 11))
def test_closed_form_kappa_one_rational_forms(n, tan_kappa_one, cot_kappa_one):
    """Test the kappa = 1 closed forms against their rational expressions."""
    alpha = (n + 0.5) * math.pi
    beta = n * math.pi
    tan_form = alpha * (3 * alpha**2 - 5) / (3 * alpha**2 - 2)
    cot_form = beta * (3 * beta**2 + 7) / (3 * beta**2 + 4)
    tan_root = root_closed_form(tan_kappa_one, n).value
    cot_root = root_closed_form(cot_kappa_one, n).value
    assert tan_root == pytest.approx(tan_form, rel=1e-14)
    assert cot_root == pytest.approx(cot_form, rel=1e-14)


def test_closed_form_error_signs(tan_kappa_one, cot_kappa_one):
    """Test that the closed form overshoots for tan and undershoots for cot."""
    for n in range(1, 11):
        tan_error = root_closed_form(tan_kappa_one, n).value
        tan_error -= root_oracle(tan_kappa_one, n).value
        cot_error = root_closed_form(cot_kappa_one, n).value
        cot_error -= root_oracle(cot_kappa_one, n).value
        assert tan_error > 0
        assert cot_error < 0


def test_roots_approach_branch_centres(tan_kappa_one, cot_kappa_one):
    """Test x_n / centre -> 1 at n = 100."""
    for eq in (tan_kappa_one, cot_kappa_one):
        ratio = root_oracle(eq, 100).value / eq.branch_center(100)
        assert abs(ratio - 1) < 1e-3


@pytest.mark.parametrize("kappa", [0.5, 1.0, 2.0])
def test_oracle_roots_inside_brackets(kappa):
    """Test that every oracle root lies strictly inside its branch interval."""
    pi = math.pi
    for n in range(1, 11):
        tan_root = root_oracle(TrigEquation("tan", kappa), n)
        cot_root = root_oracle(TrigEquation("cot", kappa), n)
        assert n * pi < tan_root.value < (n + 0.5) * pi
        assert n * pi < cot_root.value < (n + 0.5) * pi
        assert abs(tan_root.residual) <= 1e-12
        assert abs(cot_root.residual) <= 1e-12
    assert 0 < root_oracle(TrigEquation("cot", kappa), 0).value < pi / 2

    # negative slopes move the tan roots below n pi
    for n in range(1, 11):
        root = root_oracle(TrigEquation("tan", -kappa), n).value
        assert (n - 0.5) * pi < root < n * pi
