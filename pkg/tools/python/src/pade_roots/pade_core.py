"""
---
title: Exact power series algebra and Padé approximants.

description: |
  Truncated power series about zero with exact rational coefficients, the
  Lagrange-Bürmann reversion of w = z / f(z), and [p, q] Padé approximants:
  fitting, integer rounding and floating point evaluation.

  All construction happens in exact rational arithmetic
  (``fractions.Fraction``). Floats only appear in ``TaylorSeries.evaluate``
  and ``pade_eval``.

status: final

package_dependencies:
  - fractions
  - numpy

usage_notes: |
  A TaylorSeries of order N holds the coefficients c_0 ... c_N and claims
  nothing about higher powers. Every arithmetic operation truncates its
  result to the order it can actually guarantee.
---
"""  # noqa: D205, D212

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np
from numpy.polynomial import polynomial as npp

from pade_roots.exceptions import (
    DegeneratePadeError,
    DomainError,
    PoleError,
    SeriesDivisionError,
    SingularSystemError,
)
from pade_roots.settings import SETTINGS

LOGGER = logging.getLogger(__name__)

Rational = Fraction
"""Exact coefficient type, always stored in lowest terms."""


def as_rational(value: int | float | str | Fraction) -> Fraction:
    """Convert a number to an exact rational.

    Floats are converted through their shortest decimal representation, so
    ``0.1`` becomes ``1/10`` rather than the binary fraction closest to it.

    Args:
        value: An integer, float, fraction string such as ``"3/10"`` or Fraction.

    Returns:
        The value as a Fraction.

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float | np.floating):
        if not math.isfinite(value):
            raise DomainError(f"cannot represent {value} as a rational")
        return Fraction(repr(float(value)))
    try:
        return Fraction(value)
    except (TypeError, ValueError) as err:
        raise DomainError(f"cannot represent {value!r} as a rational") from err


# ============================================================
# TRUNCATED POWER SERIES
# ============================================================


def format_polynomial(coefficients: Sequence[Fraction]) -> str:
    """Render coefficients, lowest power first, as "1 - 2/3 x^2 + ...".

    Zero terms are skipped; an all-zero sequence renders as "0".
    """
    terms = []
    for k, c in enumerate(coefficients):
        if c == 0:
            continue
        power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        magnitude = abs(c)
        body = power if k and magnitude == 1 else f"{magnitude} {power}".strip()
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    text = ("-" if sign == "-" else "") + body
    return text + "".join(f" {sign} {body}" for sign, body in terms[1:])


@dataclass(frozen=True)
class TaylorSeries:
    """A power series about zero, known through a finite order.

    Args:
        coefficients: Coefficients c_0 ... c_N; the order is N.

    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(as_rational(c) for c in self.coefficients)
        if not coeffs:
            raise DomainError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        """Highest power whose coefficient is known."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        """Return the coefficient of x^k."""
        if k < 0 or k > self.order:
            raise DomainError(f"coefficient {k} outside series of order {self.order}")
        return self.coefficients[k]

    @property
    def valuation(self) -> int | None:
        """Lowest power with a nonzero coefficient, None for a zero series."""
        return next((k for k, c in enumerate(self.coefficients) if c != 0), None)

    def truncate(self, order: int) -> "TaylorSeries":
        """Drop all terms above ``order``."""
        if order < 0 or order > self.order:
            raise DomainError(f"cannot truncate order {self.order} series to {order}")
        return TaylorSeries(self.coefficients[: order + 1])

    def shift(self, k: int) -> "TaylorSeries":
        """Multiply by x^k (exact, so the order grows by k)."""
        if k < 0:
            raise DomainError("shift must be non-negative")
        return TaylorSeries((Fraction(0),) * k + self.coefficients)

    def scale(self, factor: int | float | str | Fraction) -> "TaylorSeries":
        """Multiply every coefficient by a constant."""
        factor = as_rational(factor)
        return TaylorSeries(tuple(factor * c for c in self.coefficients))

    def compress(self, stride: int) -> "TaylorSeries":
        """Rewrite a series in x^stride as a series in the new variable.

        An even series 1 + a x^2 + b x^4 becomes 1 + a y + b y^2 for stride 2.

        Raises:
            DomainError: if a power that is not a multiple of ``stride`` has a
                nonzero coefficient.

        """
        if stride < 1:
            raise DomainError("stride must be positive")
        stray = [k for k, c in enumerate(self.coefficients) if k % stride and c]
        if stray:
            raise DomainError(f"series has terms at powers {stray}, not in x^{stride}")
        return TaylorSeries(self.coefficients[::stride])

    def expand(self, stride: int) -> "TaylorSeries":
        """Substitute x -> x^stride, the inverse of ``compress``."""
        if stride < 1:
            raise DomainError("stride must be positive")
        coeffs = [Fraction(0)] * (self.order * stride + 1)
        coeffs[::stride] = self.coefficients
        return TaylorSeries(tuple(coeffs))

    def evaluate(self, x: float | np.ndarray) -> float | np.ndarray:
        """Evaluate the truncated polynomial in floating point."""
        return npp.polyval(x, [float(c) for c in self.coefficients])

    def __add__(self, other: "TaylorSeries") -> "TaylorSeries":
        order = min(self.order, other.order)
        return TaylorSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))[
                : order + 1
            ]
        )

    def __neg__(self) -> "TaylorSeries":
        return self.scale(-1)

    def __sub__(self, other: "TaylorSeries") -> "TaylorSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TaylorSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TaylorSeries):
            return series_div(self, other)
        return self.scale(1 / as_rational(other))

    def __pow__(self, n: int) -> "TaylorSeries":
        return series_pow(self, n)

    def __str__(self) -> str:
        return f"{format_polynomial(self.coefficients)} + O(x^{self.order + 1})"


def exp_series(order: int, rate: int | str | Fraction = 1) -> TaylorSeries:
    """Series of exp(rate * x) through ``order``."""
    rate = as_rational(rate)
    return TaylorSeries(
        tuple(rate**k / math.factorial(k) for k in range(order + 1))
    )


def sin_series(order: int) -> TaylorSeries:
    """Series of sin x through ``order``."""
    return TaylorSeries(
        tuple(
            Fraction((-1) ** ((k - 1) // 2), math.factorial(k)) if k % 2 else 0
            for k in range(order + 1)
        )
    )


def cos_series(order: int) -> TaylorSeries:
    """Series of cos x through ``order``."""
    return TaylorSeries(
        tuple(
            0 if k % 2 else Fraction((-1) ** (k // 2), math.factorial(k))
            for k in range(order + 1)
        )
    )


def log1p_series(order: int) -> TaylorSeries:
    """Series of ln(1 + x) through ``order``."""
    return TaylorSeries(
        (Fraction(0),)
        + tuple(Fraction((-1) ** (k + 1), k) for k in range(1, order + 1))
    )


def monomial(power: int, order: int | None = None) -> TaylorSeries:
    """The series x^power, padded with zeros up to ``order``."""
    order = power if order is None else order
    if order < power:
        raise DomainError(f"order {order} cannot hold x^{power}")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[power] = Fraction(1)
    return TaylorSeries(tuple(coeffs))


# ============================================================
# SERIES ARITHMETIC
# ============================================================


def series_mul(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    """Cauchy product, truncated to the smaller of the two orders.

    Args:
        a: First factor.
        b: Second factor.

    Returns:
        The product, of order min(a.order, b.order).

    """
    order = min(a.order, b.order)
    ca, cb = a.coefficients, b.coefficients
    return TaylorSeries(
        tuple(sum(ca[i] * cb[k - i] for i in range(k + 1)) for k in range(order + 1))
    )


def series_div(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    """Quotient a / b of two series.

    Leading powers of x shared by both operands are cancelled first, so
    W(x) / ln(1 + x) is well defined even though both start at x. The result
    is known through min(a.order, b.order) - v, where v is the valuation of b.

    Args:
        a: Dividend.
        b: Divisor.

    Returns:
        The quotient series.

    Raises:
        SeriesDivisionError: if b vanishes through its order, or if a starts at
            a lower power of x than b.

    """
    vb = b.valuation
    if vb is None:
        raise SeriesDivisionError("divisor vanishes through its retained order")
    va = a.valuation
    if va is not None and va < vb:
        raise SeriesDivisionError(
            f"dividend starts at x^{va}, below the divisor's x^{vb}"
        )
    order = min(a.order, b.order) - vb
    if order < 0:
        raise SeriesDivisionError(f"dividend of order {a.order} loses x^{vb}")

    num = a.coefficients[vb : vb + order + 1]
    den = b.coefficients[vb : vb + order + 1]
    quotient: list[Fraction] = []
    for k in range(order + 1):
        partial = sum(quotient[i] * den[k - i] for i in range(k))
        quotient.append((num[k] - partial) / den[0])
    return TaylorSeries(tuple(quotient))


def series_pow(a: TaylorSeries, n: int) -> TaylorSeries:
    """Raise a series to a positive integer power by repeated squaring."""
    if n < 1:
        raise DomainError(f"series power must be at least 1, got {n}")
    result = None
    base = a
    while n:
        if n & 1:
            result = base if result is None else series_mul(result, base)
        n >>= 1
        if n:
            base = series_mul(base, base)
    return result


def lagrange_invert(f: TaylorSeries, n_max: int) -> TaylorSeries:
    """Revert w = z / f(z) into z(w) by the Lagrange-Bürmann formula.

    The n-th coefficient is [z^(n-1)] f(z)^n / n.

    Args:
        f: Series with f(0) != 0, known through at least order n_max - 1.
        n_max: Highest power of w wanted.

    Returns:
        z(w) = a_1 w + ... + a_{n_max} w^{n_max}, with a zero constant term.

    Raises:
        DomainError: if f(0) == 0 or f is too short.

    """
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")
    if f.coefficient(0) == 0:
        raise DomainError("Lagrange inversion needs f(0) != 0")
    if f.order < n_max - 1:
        raise DomainError(f"f of order {f.order} cannot give {n_max} coefficients")

    base = f.truncate(n_max - 1)
    power = base
    coeffs = [Fraction(0)]
    for n in range(1, n_max + 1):
        # power holds f^n here
        coeffs.append(power.coefficient(n - 1) / n)
        if n < n_max:
            power = series_mul(power, base)

    LOGGER.debug(f"Reverted series through w^{n_max}")
    return TaylorSeries(tuple(coeffs))


# ============================================================
# EXACT LINEAR SOLVE
# ============================================================


def solve_rational_system(
    matrix: Sequence[Sequence[int | Fraction]], rhs: Sequence[int | Fraction]
) -> list[Fraction]:
    """Solve a square linear system exactly.

    Each row is scaled to integers, then reduced by fraction-free (Bareiss)
    elimination with partial pivoting on the largest magnitude entry. Back
    substitution is done in Fractions.

    Args:
        matrix: Square coefficient matrix.
        rhs: Right-hand side, one entry per row.

    Returns:
        The unique solution.

    Raises:
        SingularSystemError: if the matrix is singular.

    """
    size = len(matrix)
    if len(rhs) != size or any(len(row) != size for row in matrix):
        raise DomainError("matrix must be square and match the right-hand side")

    rows: list[list[int]] = []
    for row, value in zip(matrix, rhs):
        entries = [as_rational(v) for v in (*row, value)]
        scale = math.lcm(*(e.denominator for e in entries))
        rows.append([int(e * scale) for e in entries])

    previous = 1
    for k in range(size):
        pivot = max(range(k, size), key=lambda i: abs(rows[i][k]))
        if rows[pivot][k] == 0:
            raise SingularSystemError(k, size)
        rows[k], rows[pivot] = rows[pivot], rows[k]
        for i in range(k + 1, size):
            for j in range(k + 1, size + 1):
                # exact division, the Bareiss invariant
                rows[i][j] = (
                    rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]
                ) // previous
            rows[i][k] = 0
        previous = rows[k][k]

    solution = [Fraction(0)] * size
    for i in reversed(range(size)):
        tail = sum(rows[i][j] * solution[j] for j in range(i + 1, size))
        solution[i] = (rows[i][size] - tail) / rows[i][i]
    return solution


# ============================================================
# PADÉ APPROXIMANTS
# ============================================================


@dataclass(frozen=True)
class PadeApproximant:
    """A rational function P(x) / Q(x) with exact coefficients.

    Args:
        num_coeffs: p_0 ... p_p.
        den_coeffs: q_0 ... q_q, with q_0 > 0. q_0 == 1 is the normalized form;
            integer rescaled forms have q_0 equal to the scale.
        match_order: Order through which the Taylor expansion is claimed to
            match the fitted series.

    """

    num_coeffs: tuple[Fraction, ...]
    den_coeffs: tuple[Fraction, ...]
    match_order: int

    def __post_init__(self):
        num = tuple(as_rational(c) for c in self.num_coeffs)
        den = tuple(as_rational(c) for c in self.den_coeffs)
        if not num or not den:
            raise DomainError("numerator and denominator need coefficients")
        if den[0] <= 0:
            raise DomainError(f"leading denominator coefficient must be > 0: {den[0]}")
        object.__setattr__(self, "num_coeffs", num)
        object.__setattr__(self, "den_coeffs", den)
        if self.match_order < self.p + self.q:
            raise DomainError(
                f"match order {self.match_order} is below p + q = {self.p + self.q}"
            )

    @property
    def p(self) -> int:
        """Numerator degree."""
        return len(self.num_coeffs) - 1

    @property
    def q(self) -> int:
        """Denominator degree."""
        return len(self.den_coeffs) - 1

    def normalized(self) -> "PadeApproximant":
        """Return the equivalent approximant with q_0 = 1."""
        q0 = self.den_coeffs[0]
        return PadeApproximant(
            tuple(c / q0 for c in self.num_coeffs),
            tuple(c / q0 for c in self.den_coeffs),
            self.match_order,
        )

    def integer_form(self) -> "PadeApproximant":
        """Clear all denominators and remove the common integer factor."""
        coeffs = self.num_coeffs + self.den_coeffs
        lcm = math.lcm(*(c.denominator for c in coeffs))
        ints = [int(c * lcm) for c in coeffs]
        gcd = reduce(math.gcd, ints)
        ints = [n // gcd for n in ints]
        return PadeApproximant(
            tuple(ints[: self.p + 1]), tuple(ints[self.p + 1 :]), self.match_order
        )

    def to_series(self, order: int) -> TaylorSeries:
        """Taylor expansion of P/Q through ``order``."""

        def padded(coeffs: tuple[Fraction, ...]) -> TaylorSeries:
            values = list(coeffs[: order + 1])
            values += [Fraction(0)] * (order + 1 - len(values))
            return TaylorSeries(tuple(values))

        return series_div(padded(self.num_coeffs), padded(self.den_coeffs))

    def __call__(self, x: float | np.ndarray) -> float | np.ndarray:
        return pade_eval(self, x)

    def __str__(self) -> str:
        num = format_polynomial(self.num_coeffs)
        den = format_polynomial(self.den_coeffs)
        return f"({num}) / ({den})"


def pade_fit(f: TaylorSeries, p: int, q: int) -> PadeApproximant:
    """Fit the [p, q] Padé approximant to a series.

    Solves sum_{j=1..q} q_j c_{k-j} = -c_k for k = p+1 ... p+q, then sets
    p_k = sum_{j=0..min(k,q)} q_j c_{k-j}, so that P - f Q = O(x^(p+q+1)).

    Args:
        f: Series known through at least order p + q.
        p: Numerator degree.
        q: Denominator degree.

    Returns:
        The normalized approximant (q_0 = 1).

    Raises:
        DegeneratePadeError: if the denominator system is singular.

    """
    if p < 0 or q < 0:
        raise DomainError(f"Padé degrees must be non-negative, got [{p},{q}]")
    if f.order < p + q:
        raise DomainError(f"[{p},{q}] Padé needs order {p + q}, series has {f.order}")

    def c(k: int) -> Fraction:
        return f.coefficient(k) if k >= 0 else Fraction(0)

    matrix = [[c(k - j) for j in range(1, q + 1)] for k in range(p + 1, p + q + 1)]
    rhs = [-c(k) for k in range(p + 1, p + q + 1)]
    try:
        tail = solve_rational_system(matrix, rhs)
    except SingularSystemError as err:
        raise DegeneratePadeError(p, q, err.rank) from err

    den = (Fraction(1), *tail)
    num = tuple(
        sum(den[j] * c(k - j) for j in range(min(k, q) + 1)) for k in range(p + 1)
    )
    LOGGER.info(f"Fitted [{p},{q}] Padé approximant")
    return PadeApproximant(num, den, match_order=p + q)


def pade_eval(r: PadeApproximant, x: float | np.ndarray) -> float | np.ndarray:
    """Evaluate P(x) / Q(x) in floating point.

    Args:
        r: The approximant.
        x: Point or array of points.

    Returns:
        The ratio, with the shape of ``x``.

    Raises:
        PoleError: if |Q(x)| falls below the pole tolerance.

    """
    tolerance = SETTINGS["pade"]["pole_tolerance"]
    num = npp.polyval(x, [float(c) for c in r.num_coeffs])
    den = npp.polyval(x, [float(c) for c in r.den_coeffs])
    if np.any(np.abs(den) < tolerance):
        raise PoleError(f"denominator vanishes at x = {x}")
    return num / den


def coefficient_deviation(r: PadeApproximant, f: TaylorSeries) -> Fraction:
    """Largest |Taylor coefficient of r - coefficient of f| through order p + q."""
    order = min(r.p + r.q, f.order)
    expansion = r.normalized().to_series(order)
    return max(
        abs(a - b) for a, b in zip(expansion.coefficients, f.coefficients)
    )


def pade_round(
    r: PadeApproximant,
    max_scale: int | None = None,
    tolerance: str | Fraction | None = None,
) -> PadeApproximant:
    """Replace the coefficients of an approximant by small integers.

    Both polynomials are multiplied by a common scale D = 1, 2, ... and every
    coefficient is rounded half up to the nearest integer. The first D for
    which no coefficient moves by more than ``tolerance`` is returned. If no
    scale up to ``max_scale`` qualifies, the scale with the smallest largest
    rounding step wins, ties going to the smaller D.

    Args:
        r: Approximant to round.
        max_scale: Largest scale tried.
        tolerance: Largest accepted rounding step.

    Returns:
        An approximant with integer coefficients and q_0 = D.

    """
    if max_scale is None:
        max_scale = SETTINGS["pade"]["max_scale"]
    if tolerance is None:
        tolerance = SETTINGS["pade"]["rounding_tolerance"]
    tolerance = as_rational(tolerance)
    if max_scale < 1:
        raise DomainError(f"max_scale must be at least 1, got {max_scale}")

    base = r.normalized()
    coeffs = base.num_coeffs + base.den_coeffs
    best: tuple[Fraction, int, list[int]] | None = None
    half = Fraction(1, 2)
    for scale in range(1, max_scale + 1):
        scaled = [scale * c for c in coeffs]
        rounded = [math.floor(v + half) for v in scaled]
        step = max(abs(v - n) for v, n in zip(scaled, rounded))
        LOGGER.debug(f"Scale {scale}: largest rounding step {float(step):.4f}")
        if best is None or step < best[0]:
            best = (step, scale, rounded)
        if step <= tolerance:
            best = (step, scale, rounded)
            break

    step, scale, rounded = best
    result = PadeApproximant(
        tuple(rounded[: base.p + 1]), tuple(rounded[base.p + 1 :]), r.match_order
    )
    deviation = coefficient_deviation(result, base.to_series(base.p + base.q))
    LOGGER.info(
        f"Rounded [{base.p},{base.q}] Padé with scale {scale}: rounding step "
        f"{float(step):.4f}, Taylor deviation {float(deviation):.4f}"
    )
    return result

