"""
---
title: Real Lambert W evaluation.

description: |
  The two real branches of W, defined by W(x) exp(W(x)) = x:

    - a Halley iteration oracle for W0 on [-1/e, inf) and W-1 on [-1/e, 0);
    - truncated Taylor sums of W0 about 0;
    - type I Padé forms, x times a [2, 2] approximant of W0(x) / x;
    - type II Padé forms, ln(1 + x) times a [2, 2] approximant of
      W0(x) / ln(1 + x);
    - integer-rounded versions of both Padé forms.

  It also solves exp(-c x) = a (x - b) through W and tabulates the relative
  error of an approximant against the oracle.

status: final

package_dependencies:
  - numpy
  - pandas

usage_notes: |
  Approximants are fitted at 0 and trusted on (-1/e, 1]. Outside that
  interval they are still evaluated, with a logged warning.
---
"""  # noqa: D205, D212

import logging
import math
from dataclasses import dataclass
from enum import IntEnum, StrEnum
from functools import lru_cache

import numpy as np
import pandas as pd

from pade_roots.exceptions import (
    ConvergenceError,
    DomainError,
    PoleError,
    UnsupportedError,
)
from pade_roots.pade_core import (
    PadeApproximant,
    TaylorSeries,
    exp_series,
    lagrange_invert,
    log1p_series,
    monomial,
    pade_eval,
    pade_fit,
    pade_round,
    series_div,
)
from pade_roots.settings import SETTINGS

LOGGER = logging.getLogger(__name__)

BRANCH_POINT = -math.exp(-1)
"""The common end point -1/e of both real branches."""

# allowed overshoot below -1/e before an argument is rejected
_BRANCH_POINT_SLACK = 1e-15


class WBranch(IntEnum):
    """Real branch of W."""

    W0 = 0
    WM1 = -1


class WKind(StrEnum):
    """Formula used to evaluate W0."""

    TAYLOR = "taylor"
    PADE_I = "pade-i"
    PADE_I_ROUNDED = "pade-i-rounded"
    PADE_II = "pade-ii"
    PADE_II_ROUNDED = "pade-ii-rounded"
    ORACLE = "oracle"


@dataclass(frozen=True)
class WVariant:
    """A W formula, with the number of terms for Taylor sums.

    Args:
        kind: The formula.
        terms: Number of Taylor terms, required for and only for TAYLOR.

    """

    kind: WKind
    terms: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", WKind(self.kind))
        if self.kind is WKind.TAYLOR:
            if self.terms is None or self.terms < 1:
                raise DomainError(f"taylor variant needs terms >= 1, got {self.terms}")
        elif self.terms is not None:
            raise DomainError(f"{self.kind} variant takes no term count")

    @classmethod
    def parse(cls, text: str) -> "WVariant":
        """Parse ``taylor:5``, ``pade-ii`` and similar spellings."""
        name, _, terms = text.strip().lower().partition(":")
        try:
            kind = WKind(name)
        except ValueError as err:
            raise DomainError(f"unknown W variant: {text}") from err
        if terms:
            try:
                return cls(kind, int(terms))
            except ValueError as err:
                raise DomainError(f"bad term count in W variant: {text}") from err
        return cls(kind)

    @property
    def is_type_two(self) -> bool:
        """True for the ln(1 + x) prefactor forms."""
        return self.kind in (WKind.PADE_II, WKind.PADE_II_ROUNDED)

    def __str__(self) -> str:
        if self.kind is WKind.TAYLOR:
            return f"{self.kind}:{self.terms}"
        return str(self.kind)


@dataclass(frozen=True)
class ExpLinearProblem:
    """The equation exp(-c x) = a (x - b).

    Args:
        a: Slope of the straight line, nonzero.
        b: Root of the straight line.
        c: Decay rate of the exponential.

    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.a == 0:
            raise DomainError("exp-linear problem needs a != 0")

    def residual(self, x: float) -> float:
        """exp(-c x) - a (x - b)."""
        return math.exp(-self.c * x) - self.a * (x - self.b)


# ============================================================
# EXACT SERIES AND APPROXIMANTS
# ============================================================


@lru_cache(maxsize=16)
def lambert_series(order: int) -> TaylorSeries:
    """Taylor series of W0 through x^order, by reverting x = w exp(w)."""
    if order < 1:
        raise DomainError(f"series order must be at least 1, got {order}")
    return lagrange_invert(exp_series(order - 1, -1), order)


def _series_order() -> int:
    return SETTINGS["pade"]["series_order"]


@lru_cache(maxsize=1)
def pade_type_one() -> PadeApproximant:
    """[2, 2] approximant R with W0(x) ~ x R(x)."""
    order = _series_order()
    w_over_x = series_div(lambert_series(order), monomial(1, order))
    return pade_fit(w_over_x, 2, 2)


@lru_cache(maxsize=1)
def pade_type_two() -> PadeApproximant:
    """[2, 2] approximant M with W0(x) ~ ln(1 + x) M(x)."""
    order = _series_order()
    m_series = series_div(lambert_series(order), log1p_series(order))
    return pade_fit(m_series, 2, 2)


@lru_cache(maxsize=1)
def pade_type_one_rounded() -> PadeApproximant:
    """Integer-rounded ``pade_type_one``."""
    return pade_round(pade_type_one())


@lru_cache(maxsize=1)
def pade_type_two_rounded() -> PadeApproximant:
    """Integer-rounded ``pade_type_two``."""
    return pade_round(pade_type_two())


_APPROXIMANTS = {
    WKind.PADE_I: pade_type_one,
    WKind.PADE_I_ROUNDED: pade_type_one_rounded,
    WKind.PADE_II: pade_type_two,
    WKind.PADE_II_ROUNDED: pade_type_two_rounded,
}


def is_extrapolated(x: float) -> bool:
    """True when x lies outside the interval the approximants are trusted on."""
    lo, hi = SETTINGS["lambert_w"]["trusted_interval"]
    return not lo < x <= hi


def _approximate(x: float, variant: WVariant) -> float:
    if variant.kind is WKind.TAYLOR:
        return float(lambert_series(variant.terms).evaluate(x))
    approximant = _APPROXIMANTS[variant.kind]()
    prefactor = math.log1p(x) if variant.is_type_two else x
    return prefactor * float(pade_eval(approximant, x))


def _as_variant(variant: WVariant | str) -> WVariant:
    return variant if isinstance(variant, WVariant) else WVariant.parse(variant)


def w_eval(
    x: float, variant: WVariant | str, branch: WBranch | int = WBranch.W0
) -> float:
    """Evaluate W(x) with the chosen formula.

    Args:
        x: Argument.
        variant: Formula; all formulas but the oracle approximate W0 only.
        branch: Branch, used by the oracle.

    Returns:
        The value of W.

    Raises:
        DomainError: for x <= -1 with a type II formula, or x outside the
            branch domain for the oracle.

    """
    variant = _as_variant(variant)
    branch = WBranch(branch)
    if variant.kind is WKind.ORACLE:
        return w_oracle(x, branch)
    if branch is not WBranch.W0:
        raise UnsupportedError(f"{variant} approximates W0 only")
    if variant.is_type_two and x <= -1:
        raise DomainError(f"{variant} needs x > -1 for ln(1 + x), got {x}")
    if is_extrapolated(x):
        LOGGER.warning(f"{variant} evaluated at x = {x}, outside its fitted interval")
    return _approximate(x, variant)


# ============================================================
# HALLEY ORACLE
# ============================================================


def _seed(x: float, branch: WBranch) -> float:
    """Starting value for the Halley iteration."""
    if branch is WBranch.W0:
        if x >= math.e:
            log_x = math.log(x)
            return log_x - math.log(log_x)
        if x > SETTINGS["lambert_w"]["branch_seed_below"]:
            return math.log1p(x)
        p = math.sqrt(max(0.0, 2 * (math.e * x + 1)))
        return -1 + p - p**2 / 3 + 11 * p**3 / 72

    if x <= SETTINGS["lambert_w"]["branch_seed_below"]:
        p = math.sqrt(max(0.0, 2 * (math.e * x + 1)))
        return -1 - p - p**2 / 3 - 11 * p**3 / 72
    log_minus_x = math.log(-x)
    return log_minus_x - math.log(-log_minus_x)


def w_oracle(x: float, branch: WBranch | int = WBranch.W0) -> float:
    """Solve w exp(w) = x by Halley iteration.

    The iteration stops when |w exp(w) - x| <= tol * |x| or when the step
    falls to a few machine epsilons relative to |w|. Both tests are relative.
    A step that would cross w = -1 onto the other branch is replaced by a
    move halfway towards -1.

    Args:
        x: Argument; at least -1/e, and negative for W-1.
        branch: W0 or W-1.

    Returns:
        W(x) on the requested branch.

    Raises:
        DomainError: if x is outside the branch domain.
        ConvergenceError: if the iteration limit is reached.

    """
    x = float(x)
    branch = WBranch(branch)
    if not math.isfinite(x):
        raise DomainError(f"W is not evaluated at {x}")
    if x < BRANCH_POINT:
        if x < BRANCH_POINT - _BRANCH_POINT_SLACK:
            raise DomainError(f"W has no real value below -1/e, got x = {x}")
        x = BRANCH_POINT
    if branch is WBranch.WM1 and x >= 0:
        raise DomainError(f"W-1 is defined on [-1/e, 0), got x = {x}")
    if x == BRANCH_POINT:
        return -1.0
    if x == 0:
        return 0.0

    settings = SETTINGS["lambert_w"]
    tolerance = settings["relative_tolerance"] * abs(x)
    step_floor = 4 * np.finfo(float).eps
    w = _seed(x, branch)
    for iteration in range(settings["max_iterations"]):
        ew = math.exp(w)
        f = w * ew - x
        if abs(f) <= tolerance:
            LOGGER.debug(f"W{branch.value}({x}) converged in {iteration} steps")
            return w
        w_plus_one = w + 1
        if w_plus_one == 0:
            return w
        step = f / (ew * w_plus_one - (w + 2) * f / (2 * w_plus_one))
        updated = w - step
        if branch is WBranch.W0 and updated < -1:
            updated = (w - 1) / 2
        elif branch is WBranch.WM1 and updated > -1:
            updated = (w - 1) / 2
        if abs(updated - w) <= step_floor * abs(updated):
            return updated
        w = updated

    raise ConvergenceError(
        f"Halley iteration for W{branch.value}({x}) did not converge in "
        f"{settings['max_iterations']} steps"
    )


# ============================================================
# APPLICATIONS OF W
# ============================================================


def solve_exp_linear(
    problem: ExpLinearProblem,
    branch: WBranch | int = WBranch.W0,
    variant: WVariant | str | None = None,
) -> float:
    """Solve exp(-c x) = a (x - b) as x = b + W((c / a) exp(-c b)) / c.

    Args:
        problem: Coefficients a, b, c.
        branch: Branch of W; both give roots for arguments in (-1/e, 0).
        variant: W formula; the oracle when None.

    Returns:
        The root x.

    Raises:
        DomainError: if the W argument is below -1/e (no real root).

    """
    a, b, c = problem.a, problem.b, problem.c
    if c == 0:
        # exp(0) = 1 = a (x - b)
        return b + 1 / a

    try:
        argument = (c / a) * math.exp(-c * b)
    except OverflowError as err:
        raise DomainError(f"W argument overflows for {problem}") from err
    if argument < BRANCH_POINT - _BRANCH_POINT_SLACK:
        raise DomainError(f"{problem} has no real solution: W argument {argument}")

    variant = WVariant(WKind.ORACLE) if variant is None else _as_variant(variant)
    x = b + w_eval(argument, variant, branch) / c

    residual = problem.residual(x)
    limit = SETTINGS["physics"]["exp_linear_residual_tolerance"]
    if variant.kind is WKind.ORACLE and abs(residual) > limit:
        LOGGER.warning(f"Exp-linear residual {residual:.3e} above {limit:.0e}")
    return x


def error_curve(x_grid: np.ndarray, variant: WVariant | str) -> pd.DataFrame:
    """Relative error of a W formula against the oracle on a grid.

    Args:
        x_grid: Arguments.
        variant: Formula to test.

    Returns:
        DataFrame with columns ``x``, ``delta`` (log10 of the absolute relative
        error) and ``status``: ``ok``, ``extrapolated`` (outside (-1/e, 1]),
        ``zero`` (x = 0, where the relative error is undefined) or
        ``outside_domain`` (no value; delta is NaN).

    """
    variant = _as_variant(variant)
    records = []
    for x in np.asarray(x_grid, dtype=float):
        delta = math.nan
        if x == 0:
            status = "zero"
        elif x <= BRANCH_POINT or (variant.is_type_two and x <= -1):
            status = "outside_domain"
        else:
            exact = w_oracle(x)
            try:
                approx = (
                    exact if variant.kind is WKind.ORACLE else _approximate(x, variant)
                )
            except PoleError:
                status = "outside_domain"
            else:
                relative = abs((approx - exact) / exact)
                delta = math.log10(relative) if relative > 0 else -math.inf
                status = "extrapolated" if is_extrapolated(x) else "ok"
        records.append({"x": float(x), "delta": delta, "status": status})

    frame = pd.DataFrame.from_records(records, columns=["x", "delta", "status"])
    skipped = int((frame["status"] == "outside_domain").sum())
    if skipped:
        LOGGER.warning(f"{skipped} grid points outside the domain of {variant}")
    return frame
