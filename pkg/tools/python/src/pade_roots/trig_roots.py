"""
---
title: Roots of tan x = kappa x and cot x = kappa x.

description: |
  Branch-indexed roots of the two trigonometric equations by four methods:

    - pade: the root written as center * phi(1 / center), with phi replaced by
      its [1, 1] Padé approximant in 1 / center^2 (the [2, 2] even form);
    - taylor: the same expression with phi truncated after the x^4 term;
    - frankel: the arccot-based formulas, defined for kappa = 1 only;
    - oracle: bracketed bisection on a pole-free residual with a Newton polish.

  The branch center is (n + 1/2) pi for tan x = kappa x and n pi for
  cot x = kappa x. The phi series come from reverting w = z / f(z) in
  pade_core, where f(z) = z cot(z) / kappa -/+ z^2.

status: final

package_dependencies:
  - numpy
  - scipy

usage_notes: |
  Closed forms are only certified for kappa >= 1; they are still evaluated for
  0 < kappa < 1 but a warning is logged. Negative kappa (a repulsive contact
  interaction) is served by the oracle alone.
---
"""  # noqa: D205, D212

import logging
import math
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as npp
from scipy import optimize

from pade_roots.exceptions import (
    BracketError,
    ConvergenceError,
    DomainError,
    UnsupportedError,
)
from pade_roots.pade_core import (
    PadeApproximant,
    TaylorSeries,
    as_rational,
    cos_series,
    lagrange_invert,
    monomial,
    pade_eval,
    pade_fit,
    series_div,
    sin_series,
)
from pade_roots.settings import SETTINGS

LOGGER = logging.getLogger(__name__)


class EquationKind(StrEnum):
    """Which trigonometric equation is solved."""

    TAN = "tan"
    COT = "cot"


class RootMethod(StrEnum):
    """How a root estimate was produced."""

    PADE = "pade"
    FRANKEL = "frankel"
    TAYLOR = "taylor"
    ORACLE = "oracle"


class PhiSign(StrEnum):
    """Sign selecting phi_plus (cot equation) or phi_minus (tan equation)."""

    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class TrigEquation:
    """The equation tan x = kappa x or cot x = kappa x.

    Args:
        kind: Equation kind.
        kappa: Slope of the straight line.

    """

    kind: EquationKind
    kappa: float

    def __post_init__(self):
        object.__setattr__(self, "kind", EquationKind(self.kind))
        if not math.isfinite(self.kappa):
            raise DomainError(f"kappa must be finite, got {self.kappa}")

    @property
    def phi_sign(self) -> PhiSign:
        """The phi series used by this equation."""
        return PhiSign.MINUS if self.kind is EquationKind.TAN else PhiSign.PLUS

    def branch_center(self, n: int) -> float:
        """Asymptotic location of the n-th root."""
        if self.kind is EquationKind.TAN:
            return (n + 0.5) * math.pi
        return n * math.pi

    def residual(self, x: float) -> float:
        """Pole-free residual, zero exactly at a root."""
        if self.kind is EquationKind.TAN:
            return math.sin(x) - self.kappa * x * math.cos(x)
        return math.cos(x) - self.kappa * x * math.sin(x)

    def derivative(self, x: float) -> float:
        """Derivative of ``residual``."""
        if self.kind is EquationKind.TAN:
            return (1 - self.kappa) * math.cos(x) + self.kappa * x * math.sin(x)
        return -(1 + self.kappa) * math.sin(x) - self.kappa * x * math.cos(x)


@dataclass(frozen=True)
class RootEstimate:
    """A root value tagged with its branch and the method that produced it."""

    branch: int
    value: float
    method: RootMethod
    residual: float = math.nan


@dataclass(frozen=True)
class ErrorTableRow:
    """One row of an error table; errors are approximation minus exact."""

    branch: int
    exact: float
    ratio: float
    err_pade: float
    err_frankel: float
    err_taylor: float


def _estimate(eq: TrigEquation, n: int, value: float, method: RootMethod):
    return RootEstimate(n, value, method, eq.residual(value))


# ============================================================
# PHI SERIES AND THEIR PADÉ FORMS
# ============================================================


@lru_cache(maxsize=64)
def _phi_series(sign: PhiSign, kappa: Fraction, order: int) -> TaylorSeries:
    s = 1 if sign is PhiSign.PLUS else -1
    inner = order - 2
    z_cot_z = series_div(cos_series(inner + 1).shift(1), sin_series(inner + 1))
    f = z_cot_z.scale(1 / kappa) - monomial(2, inner).scale(s)
    z = lagrange_invert(f, order - 1)
    one = monomial(0, order)
    return one + z.shift(1).scale(s)


def phi_series(
    sign: PhiSign | str, kappa: float | Fraction, order: int
) -> TaylorSeries:
    """Even series phi(w) with x_n = center * phi(1 / center).

    phi_plus serves cot x = kappa x, phi_minus serves tan x = kappa x. Their
    leading terms are 1 +/- w^2 / kappa - (3 kappa +/- 1) / (3 kappa^3) w^4.

    Args:
        sign: PLUS or MINUS.
        kappa: Slope, converted to an exact rational.
        order: Highest power of w kept, at least 4.

    Returns:
        The series, exact in kappa.

    """
    kappa = as_rational(kappa)
    if kappa == 0:
        raise DomainError("phi series are undefined for kappa = 0")
    if order < 4:
        raise DomainError(f"phi series need order >= 4, got {order}")
    return _phi_series(PhiSign(sign), kappa, order)


@lru_cache(maxsize=64)
def phi_pade(sign: PhiSign, kappa: Fraction) -> PadeApproximant:
    """[1, 1] Padé approximant of phi in the variable y = w^2."""
    order = SETTINGS["pade"]["series_order"]
    even = phi_series(sign, kappa, order).compress(2)
    return pade_fit(even, 1, 1)


# ============================================================
# CLOSED FORMS
# ============================================================


def _check_closed_form(eq: TrigEquation, n: int) -> None:
    if eq.kappa <= 0:
        raise UnsupportedError(
            f"closed forms need kappa > 0, got {eq.kappa}; use the oracle"
        )
    if n < 0:
        raise DomainError(f"branch index must be non-negative, got {n}")
    if eq.kappa < SETTINGS["trig_roots"]["certified_kappa_min"]:
        LOGGER.warning(
            f"Closed form for kappa = {eq.kappa} is not certified below kappa = "
            f"{SETTINGS['trig_roots']['certified_kappa_min']}"
        )


def root_closed_form(eq: TrigEquation, n: int) -> RootEstimate:
    """Padé closed form for the n-th root.

    Args:
        eq: The equation, with kappa > 0.
        n: Branch index; 0 is only allowed for tan x = kappa x, whose first
            root is 0.

    Returns:
        center * R(1 / center^2) with R the Padé form of phi.

    """
    _check_closed_form(eq, n)
    if n == 0:
        if eq.kind is EquationKind.TAN:
            return _estimate(eq, 0, 0.0, RootMethod.PADE)
        raise DomainError(
            "the first root of cot x = kappa x has its own closed form, "
            "see first_root_cot_closed"
        )

    center = eq.branch_center(n)
    approximant = phi_pade(eq.phi_sign, as_rational(eq.kappa))
    value = center * float(pade_eval(approximant, 1 / center**2))
    return _estimate(eq, n, value, RootMethod.PADE)


def root_taylor(eq: TrigEquation, n: int) -> RootEstimate:
    """Root from phi truncated after its x^4 term."""
    _check_closed_form(eq, n)
    if n < 1:
        raise DomainError(f"Taylor form needs n >= 1, got {n}")
    center = eq.branch_center(n)
    series = phi_series(eq.phi_sign, eq.kappa, 4)
    value = center * float(series.evaluate(1 / center))
    return _estimate(eq, n, value, RootMethod.TAYLOR)


def root_frankel(eq: TrigEquation, n: int) -> RootEstimate:
    """Arccot-based approximation, defined for kappa = 1 only."""
    if eq.kappa != 1:
        raise UnsupportedError(f"Frankel formulas need kappa = 1, got {eq.kappa}")
    if n < 1:
        raise DomainError(f"Frankel formulas need n >= 1, got {n}")
    center = eq.branch_center(n)
    arccot = math.atan(1 / center)
    if eq.kind is EquationKind.TAN:
        value = center - (1 + center**-2) * arccot
    else:
        value = center + (1 + center**2) / (2 + center**2) * arccot
    return _estimate(eq, n, value, RootMethod.FRANKEL)


# kappa^(1/2) * x_0 as a function of t = 1 / kappa
_LARGE_KAPPA_FIRST_ROOT = PadeApproximant(
    (1, Fraction(1291, 4044), Fraction(103, 5593)),
    (1, Fraction(655, 1348), Fraction(255, 3704)),
    match_order=4,
)


def first_root_cot_closed(kappa: float) -> RootEstimate:
    """First root of cot x = kappa x in (0, pi/2] from two closed forms.

    One form is built for large kappa, the other for small kappa; the
    candidate with the smaller pole-free residual is returned.

    Args:
        kappa: Non-negative slope.

    Returns:
        Estimate on branch 0.

    """
    if kappa < 0:
        raise UnsupportedError(f"first root closed forms need kappa >= 0: {kappa}")
    eq = TrigEquation(EquationKind.COT, kappa)

    pi_sq_12 = math.pi**2 / 12
    small = (math.pi / 2) * (
        npp.polyval(kappa, [1, 2, pi_sq_12])
        / npp.polyval(kappa, [1, 3, 2 + pi_sq_12])
    )
    candidates = [float(small)]
    if kappa > 0:
        large = float(pade_eval(_LARGE_KAPPA_FIRST_ROOT, 1 / kappa)) / math.sqrt(kappa)
        candidates.append(large)

    candidates = [x for x in candidates if 0 < x <= math.pi / 2] or candidates
    value = min(candidates, key=lambda x: abs(eq.residual(x)))
    LOGGER.debug(f"First cot root for kappa = {kappa}: candidates {candidates}")
    return _estimate(eq, 0, value, RootMethod.PADE)


# ============================================================
# ORACLE
# ============================================================


def _bracket(eq: TrigEquation, n: int) -> tuple[float, float] | float:
    """Bracket for the n-th root, or the root itself when it is exact."""
    pi = math.pi
    if eq.kappa == 0:
        return n * pi if eq.kind is EquationKind.TAN else (n + 0.5) * pi
    if n == 0:
        if eq.kind is EquationKind.TAN:
            return 0.0
        if eq.kappa < 0:
            raise DomainError("cot x = kappa x has no root below pi/2 for kappa < 0")
        return (0.0, pi / 2)
    if eq.kappa > 0:
        return (n * pi, (n + 0.5) * pi)
    return ((n - 0.5) * pi, n * pi)


def root_oracle(eq: TrigEquation, n: int) -> RootEstimate:
    """Reference root by bisection on the pole-free residual.

    Bisection runs to a relative bracket width of 4 machine epsilons and is
    followed by one Newton step, kept only if it stays in the bracket and
    lowers the residual.

    Args:
        eq: The equation; any finite kappa.
        n: Branch index.

    Returns:
        Oracle estimate with its residual.

    Raises:
        BracketError: if the bracket ends have the same sign.
        ConvergenceError: if bisection runs out of iterations.

    """
    if n < 0:
        raise DomainError(f"branch index must be non-negative, got {n}")
    bracket = _bracket(eq, n)
    if isinstance(bracket, float):
        return _estimate(eq, n, bracket, RootMethod.ORACLE)

    lo, hi = bracket
    g_lo, g_hi = eq.residual(lo), eq.residual(hi)
    if g_lo * g_hi >= 0:
        raise BracketError(
            f"no sign change for {eq.kind} kappa = {eq.kappa} on [{lo}, {hi}]"
        )

    root, result = optimize.bisect(
        eq.residual,
        lo,
        hi,
        xtol=1e-300,
        rtol=4 * np.finfo(float).eps,
        maxiter=SETTINGS["trig_roots"]["max_bisections"],
        full_output=True,
        disp=False,
    )
    if not result.converged:
        raise ConvergenceError(
            f"bisection did not converge for {eq.kind} kappa = {eq.kappa}, n = {n}"
        )

    slope = eq.derivative(root)
    if slope != 0:
        polished = root - eq.residual(root) / slope
        if lo < polished < hi and abs(eq.residual(polished)) <= abs(
            eq.residual(root)
        ):
            root = polished

    estimate = _estimate(eq, n, root, RootMethod.ORACLE)
    LOGGER.debug(
        f"Oracle root {n} of {eq.kind} kappa = {eq.kappa}: {root!r} after "
        f"{result.iterations} bisections"
    )
    if abs(estimate.residual) > SETTINGS["trig_roots"]["residual_tolerance"]:
        LOGGER.warning(f"Oracle residual {estimate.residual:.3e} above tolerance")
    return estimate


# ============================================================
# DISPATCH AND TABLES
# ============================================================


def estimate_root(eq: TrigEquation, n: int, method: RootMethod | str) -> RootEstimate:
    """Compute the n-th root with the named method."""
    method = RootMethod(method)
    if method is RootMethod.ORACLE:
        return root_oracle(eq, n)
    if method is RootMethod.FRANKEL:
        return root_frankel(eq, n)
    if method is RootMethod.TAYLOR:
        return root_taylor(eq, n)
    if eq.kind is EquationKind.COT and n == 0:
        return first_root_cot_closed(eq.kappa)
    return root_closed_form(eq, n)


def error_table(eq: TrigEquation, n_max: int) -> list[ErrorTableRow]:
    """Exact roots and signed method errors for branches 1 ... n_max.

    Args:
        eq: The equation. The Frankel column is NaN unless kappa = 1.
        n_max: Number of rows.

    Returns:
        One row per branch, errors as approximation minus oracle.

    """
    if n_max < 1:
        raise DomainError(f"a table needs at least one row, got {n_max}")

    rows = []
    for n in range(1, n_max + 1):
        exact = root_oracle(eq, n).value
        scale = math.pi if eq.kind is EquationKind.TAN else n * math.pi
        rows.append(
            ErrorTableRow(
                branch=n,
                exact=exact,
                ratio=exact / scale,
                err_pade=root_closed_form(eq, n).value - exact,
                err_frankel=(
                    root_frankel(eq, n).value - exact if eq.kappa == 1 else math.nan
                ),
                err_taylor=root_taylor(eq, n).value - exact,
            )
        )
    LOGGER.info(f"Built {n_max} error table rows for {eq.kind} kappa = {eq.kappa}")
    return rows
