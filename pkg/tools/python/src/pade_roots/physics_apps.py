"""
---
title: Physical applications of the trigonometric and Lambert W roots.

description: |
  Each application is computed through the approximation machinery and can be
  cross-checked against the oracles:

    - effective mass of a massive spring hanging a mass m, from the first root
      of cot x = r x with r = m / m0;
    - positions and intensities of the secondary maxima of single slit
      Fraunhofer diffraction, from tan u = u;
    - even-parity levels of an infinite well with a contact interaction in
      the middle, at the critical strength and for repulsive strengths;
    - bound states of a pair of attractive contact interactions, through the
      exp-linear solution in terms of W;
    - the root of (5 - x) exp(x) = 5 behind Wien's displacement law, by W and
      by a contour integral, and the Planck spectrum itself.

  Quantum results use hbar = m = 1 and well width (or half separation) a = 1,
  so energies are in units of hbar^2 / (m a^2).

status: final

package_dependencies:
  - numpy
  - pandas

usage_notes: |
  Grid-valued results are returned as pandas DataFrames so they can be written
  straight to CSV by the command line front end.
---
"""  # noqa: D205, D212

import logging
import math
from dataclasses import dataclass
from enum import StrEnum
from typing import NamedTuple

import numpy as np
import pandas as pd

from pade_roots.exceptions import ConvergenceError, DomainError
from pade_roots.lambert_w import ExpLinearProblem, WBranch, WVariant, solve_exp_linear
from pade_roots.settings import SETTINGS
from pade_roots.trig_roots import (
    EquationKind,
    TrigEquation,
    first_root_cot_closed,
    root_closed_form,
    root_oracle,
)

LOGGER = logging.getLogger(__name__)


# ============================================================
# SPRING EFFECTIVE MASS
# ============================================================


@dataclass(frozen=True)
class SpringSystem:
    """A spring of mass m0 and stiffness k hanging a mass m.

    Either give the mass ratio r = m / m0 alone, or the three dimensional
    quantities (any consistent units), from which r is derived.

    Args:
        r: Mass ratio m / m0.
        m: Hung mass, non-negative.
        m0: Spring mass, positive.
        k: Stiffness, positive.

    """

    r: float | None = None
    m: float | None = None
    m0: float | None = None
    k: float | None = None

    def __post_init__(self):
        dimensional = (self.m, self.m0, self.k)
        if all(v is not None for v in dimensional):
            if self.m < 0 or self.m0 <= 0 or self.k <= 0:
                raise DomainError(
                    f"need m >= 0, m0 > 0 and k > 0, got m={self.m}, "
                    f"m0={self.m0}, k={self.k}"
                )
            ratio = self.m / self.m0
            if self.r is not None and not math.isclose(self.r, ratio):
                raise DomainError(f"r = {self.r} disagrees with m / m0 = {ratio}")
            object.__setattr__(self, "r", ratio)
        elif any(v is not None for v in dimensional):
            raise DomainError("give all of m, m0 and k, or none of them")
        if self.r is None or self.r < 0:
            raise DomainError(f"mass ratio must be non-negative, got {self.r}")

    @property
    def is_dimensional(self) -> bool:
        """True when masses and stiffness are known."""
        return self.k is not None


def spring_xi(r: float, use_oracle: bool = False) -> float:
    """Effective spring mass coefficient xi = 1 / eta^2 - r.

    eta is the first root of cot(eta) = r eta. xi falls from 4 / pi^2 at
    r = 0 to 1 / 3 as r grows.

    Args:
        r: Mass ratio m / m0.
        use_oracle: Solve for eta by bisection instead of the closed forms.

    Returns:
        The coefficient xi.

    """
    if r < 0:
        raise DomainError(f"mass ratio must be non-negative, got {r}")
    if use_oracle:
        eta = root_oracle(TrigEquation(EquationKind.COT, r), 0).value
    else:
        eta = first_root_cot_closed(r).value
    return 1 / eta**2 - r


def spring_frequency(system: SpringSystem, use_oracle: bool = False) -> float:
    """Angular frequency sqrt(k / (m + xi m0)) of the fundamental mode."""
    if not system.is_dimensional:
        raise DomainError("spring frequency needs m, m0 and k")
    xi = spring_xi(system.r, use_oracle)
    return math.sqrt(system.k / (system.m + xi * system.m0))


def spring_residual(r: float, xi: float) -> float:
    """Pole-free residual cos(eta) - r eta sin(eta) at eta = 1 / sqrt(xi + r)."""
    eta = 1 / math.sqrt(xi + r)
    return TrigEquation(EquationKind.COT, r).residual(eta)


# ============================================================
# SINGLE SLIT DIFFRACTION
# ============================================================


class DiffractionMaximum(NamedTuple):
    """Position u and intensity I / I0 of a diffraction maximum."""

    u: float
    relative_intensity: float


@dataclass(frozen=True)
class DiffractionGeometry:
    """Slit width and wavelength, in the same length unit."""

    slit_width: float
    wavelength: float

    def __post_init__(self):
        if self.slit_width <= 0 or self.wavelength <= 0:
            raise DomainError("slit width and wavelength must be positive")


def angle_to_u(geometry: DiffractionGeometry, theta: float) -> float:
    """Phase variable u = pi b sin(theta) / lambda."""
    return math.pi * geometry.slit_width * math.sin(theta) / geometry.wavelength


def diffraction_maxima(n: int) -> DiffractionMaximum:
    """The n-th maximum of sin^2(u) / u^2, the central one being n = 0.

    The position comes from the Padé closed form for tan u = u. The intensity
    uses (9 / (3 a^2 - 2) - 1 / a^2) / 2 with a = (n + 1/2) pi.
    """
    if n < 0:
        raise DomainError(f"maximum index must be non-negative, got {n}")
    if n == 0:
        return DiffractionMaximum(0.0, 1.0)
    u = root_closed_form(TrigEquation(EquationKind.TAN, 1.0), n).value
    alpha_sq = ((n + 0.5) * math.pi) ** 2
    ratio = 0.5 * (9 / (3 * alpha_sq - 2) - 1 / alpha_sq)
    return DiffractionMaximum(u, ratio)


def diffraction_profile(u_grid: np.ndarray) -> pd.DataFrame:
    """Relative intensity sin^2(u) / u^2 on a grid, equal to 1 at u = 0."""
    u = np.asarray(u_grid, dtype=float)
    return pd.DataFrame({"u": u, "relative_intensity": np.sinc(u / np.pi) ** 2})


# ============================================================
# CONTACT INTERACTIONS
# ============================================================

# critical strength in units of hbar^2 / (m a)
CRITICAL_STRENGTH = -2.0


def _check_odd_level(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise DomainError(
            f"only odd (even-parity) levels feel the contact interaction, got n={n}"
        )


def single_delta_even_energy(n: int, use_approximation: bool = True) -> float:
    """Even-parity level n of the well at the critical strength.

    At the critical strength the levels satisfy tan(k / 2) = k / 2, and the
    ground state n = 1 sits at E = 0.

    Args:
        n: Odd level index.
        use_approximation: Use the closed energy formula instead of solving
            for k with the oracle.

    Returns:
        Energy in units of hbar^2 / (m a^2).

    """
    _check_odd_level(n)
    if use_approximation:
        unperturbed = (n * math.pi) ** 2 / 2
        if n == 1:
            return unperturbed + math.pi**2 / 4 * CRITICAL_STRENGTH
        return unperturbed + 2 * (1 + 2 / (3 * (n * math.pi) ** 2)) * CRITICAL_STRENGTH

    half_k = root_oracle(TrigEquation(EquationKind.TAN, 1.0), (n - 1) // 2).value
    return 2 * half_k**2


def single_delta_residual(energy: float) -> float:
    """Residual sin(k / 2) - (k / 2) cos(k / 2) of a critical-strength level."""
    half_k = math.sqrt(max(0.0, 2 * energy)) / 2
    return TrigEquation(EquationKind.TAN, 1.0).residual(half_k)


def repulsive_delta_even_energy(n: int, b_over_a: float) -> float:
    """Even-parity level n of the well with a repulsive contact interaction.

    The levels satisfy tan(k / 2) = -(b / a)(k / 2), with b the characteristic
    length 2 hbar^2 / (m gamma). Large b / a recovers the bare well.

    Args:
        n: Odd level index.
        b_over_a: Positive ratio of characteristic length to well width.

    Returns:
        Energy in units of hbar^2 / (m a^2).

    """
    _check_odd_level(n)
    if b_over_a <= 0:
        raise DomainError(f"repulsive strength needs b / a > 0, got {b_over_a}")
    half_k = root_oracle(TrigEquation(EquationKind.TAN, -b_over_a), (n + 1) // 2).value
    return 2 * half_k**2


class Parity(StrEnum):
    """Parity of a bound state of the double well."""

    EVEN = "even"
    ODD = "odd"


class DoubleDeltaEnergies(NamedTuple):
    """Bound state energies of the double contact well; odd may be absent.

    The residuals are those of the wavevector condition at each energy.
    """

    even: float
    odd: float | None
    residual_even: float
    residual_odd: float | None


def double_delta_residual(s: float, k: float, parity: Parity | str) -> float:
    """k - (s / 2)(1 +/- exp(-2 k)), zero at a bound state wavevector."""
    sign = 1 if Parity(parity) is Parity.EVEN else -1
    return k - 0.5 * s * (1 + sign * math.exp(-2 * k))


def _double_delta_wavevector(
    s: float, parity: Parity, variant: WVariant | str | None
) -> float:
    # exp(-2k) = +/-(2k / s - 1), i.e. a = +/-2/s, b = s/2, c = 2
    sign = 1 if parity is Parity.EVEN else -1
    problem = ExpLinearProblem(a=sign * 2 / s, b=s / 2, c=2)
    return solve_exp_linear(problem, WBranch.W0, variant)


def double_delta_energies(
    a_over_b: float, variant: WVariant | str | None = None
) -> DoubleDeltaEnergies:
    """Bound states of two attractive contact interactions at x = +/-a.

    With s = a / b, E = -(s + W0(+/- s exp(-s)))^2 / 8. The odd state exists
    only for s > 1.

    Args:
        a_over_b: Ratio s of half separation to characteristic length.
        variant: W formula; the oracle when None.

    Returns:
        Even and odd energies in units of hbar^2 / (m a^2), with the residual
        of the wavevector condition for each. A residual above
        ``exp_linear_residual_tolerance`` is logged as a warning when W comes
        from the oracle.

    """
    s = a_over_b
    if s <= 0:
        raise DomainError(f"a / b must be positive, got {s}")

    limit = SETTINGS["physics"]["exp_linear_residual_tolerance"]
    energies: dict[Parity, float | None] = {}
    residuals: dict[Parity, float | None] = {}
    for parity in Parity:
        if parity is Parity.ODD and s <= 1:
            energies[parity] = residuals[parity] = None
            continue
        k = _double_delta_wavevector(s, parity, variant)
        residual = double_delta_residual(s, k, parity)
        LOGGER.debug(f"{parity} wavevector {k!r} for s = {s}, residual {residual:.2e}")
        if variant is None and abs(residual) > limit:
            LOGGER.warning(
                f"{parity} state for s = {s} has residual {residual:.3e} "
                f"above {limit:.0e}"
            )
        energies[parity] = -(k**2) / 2
        residuals[parity] = residual

    return DoubleDeltaEnergies(
        energies[Parity.EVEN],
        energies[Parity.ODD],
        residuals[Parity.EVEN],
        residuals[Parity.ODD],
    )


def exchange_energy(
    a_over_b: float, variant: WVariant | str | None = None
) -> float | None:
    """E_even - E_odd, or None when only the even state is bound."""
    energies = double_delta_energies(a_over_b, variant)
    if energies.odd is None:
        return None
    return energies.even - energies.odd


# ============================================================
# BLACKBODY PEAK
# ============================================================


class WienMethod(StrEnum):
    """Ways of solving (5 - x) exp(x) = 5."""

    LAMBERT = "lambert"
    PADE_II = "pade-ii"
    PADE_II_ROUNDED = "pade-ii-rounded"
    CONTOUR = "contour"


# (5 - x) exp(x) = 5 written as exp(-x) = -(x - 5) / 5
WIEN_PROBLEM = ExpLinearProblem(a=-0.2, b=5.0, c=1.0)


@dataclass(frozen=True)
class PhysicalConstants:
    """Exact SI values of the 2019 redefinition (CODATA 2018)."""

    h: float = 6.62607015e-34
    c: float = 299792458.0
    k_B: float = 1.380649e-23


def _wien_contour(nodes: int) -> float:
    """Ratio of two trapezoid sums over the unit circle.

    With h(z) = (1 - z) exp(5 z) - 1 the sums of z^k / h(z) over the nodes pick
    out the residues at the zeros of h inside the circle, 0 and x0 / 5.
    """
    theta = 2 * np.pi * np.arange(nodes) / nodes
    z = np.exp(1j * theta)
    w = 0.2 / ((1 - z) * np.exp(5 * z) - 1)
    x0 = 5 * np.sum(w * z**3) / np.sum(w * z**2)

    tolerance = SETTINGS["physics"]["contour_imag_tolerance"]
    if abs(x0.imag) > tolerance:
        raise ConvergenceError(
            f"contour estimate has imaginary part {x0.imag:.2e} with {nodes} nodes; "
            "use more nodes"
        )
    return float(x0.real)


def wien_x0(
    method: WienMethod | str = WienMethod.LAMBERT, nodes: int | None = None
) -> float:
    """Non-trivial root of (5 - x) exp(x) = 5.

    Args:
        method: LAMBERT uses the W oracle, PADE_II and PADE_II_ROUNDED the
            type II approximants, CONTOUR the trapezoid contour integral.
        nodes: Number of contour nodes.

    Returns:
        x0, close to 4.965114231744.

    """
    method = WienMethod(method)
    if method is WienMethod.CONTOUR:
        if nodes is None:
            nodes = SETTINGS["physics"]["contour_nodes"]
        minimum = SETTINGS["physics"]["min_contour_nodes"]
        if nodes < minimum:
            raise DomainError(f"contour needs at least {minimum} nodes, got {nodes}")
        return _wien_contour(nodes)

    variant = None if method is WienMethod.LAMBERT else WVariant(str(method))
    return solve_exp_linear(WIEN_PROBLEM, WBranch.W0, variant)


def wien_constant(
    consts: PhysicalConstants | None = None,
    method: WienMethod | str = WienMethod.LAMBERT,
) -> float:
    """Displacement constant h c / (k_B x0) in metre kelvin."""
    consts = consts or PhysicalConstants()
    return consts.h * consts.c / (consts.k_B * wien_x0(method))


def planck_profile(
    lambda_grid: np.ndarray,
    temperature: float,
    consts: PhysicalConstants | None = None,
) -> pd.DataFrame:
    """Planck spectral energy density per unit wavelength.

    Args:
        lambda_grid: Positive wavelengths in metres.
        temperature: Temperature in kelvin.
        consts: Physical constants.

    Returns:
        DataFrame with columns ``wavelength`` and ``spectral_density``
        (J m^-4).

    """
    consts = consts or PhysicalConstants()
    wavelength = np.asarray(lambda_grid, dtype=float)
    if temperature <= 0:
        raise DomainError(f"temperature must be positive, got {temperature}")
    if np.any(wavelength <= 0):
        raise DomainError("wavelengths must be positive")

    exponent = consts.h * consts.c / (wavelength * consts.k_B * temperature)
    with np.errstate(over="ignore"):
        density = 8 * np.pi * consts.h * consts.c / wavelength**5 / np.expm1(exponent)
    return pd.DataFrame({"wavelength": wavelength, "spectral_density": density})
