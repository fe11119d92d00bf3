"""
---
title: Command line front end for pade_roots.

description: |
  Reproduces the root tables, Lambert W error curves and application numbers
  as CSV, markdown or JSON. Subcommands:

    roots, table, lambert, error-curve, spring, diffraction {maxima, profile},
    delta {single, double}, wien, planck

status: final

package_dependencies:
  - argparse
  - numpy

usage_notes: |
  Run as ``python -m pade_roots <subcommand> ...`` with tools/python/src on
  the path. Exit status is 0 on success, 1 on a domain or numerical error
  (message on stderr) and 2 on a usage error.
---
"""  # noqa: D205, D212

import argparse
import logging
import sys
from collections.abc import Sequence

import numpy as np
import pandas as pd

from pade_roots.exceptions import DomainError, PadeRootsError
from pade_roots.lambert_w import (
    WBranch,
    WKind,
    WVariant,
    error_curve,
    w_eval,
)
from pade_roots.output import (
    OutputFormat,
    emit,
    error_table_frame,
    render_frame,
    to_json,
)
from pade_roots.physics_apps import (
    DiffractionMaximum,
    SpringSystem,
    WienMethod,
    diffraction_maxima,
    diffraction_profile,
    double_delta_energies,
    exchange_energy,
    planck_profile,
    single_delta_even_energy,
    single_delta_residual,
    spring_frequency,
    spring_residual,
    spring_xi,
    wien_constant,
    wien_x0,
)
from pade_roots.settings import SETTINGS
from pade_roots.trig_roots import (
    EquationKind,
    RootMethod,
    TrigEquation,
    error_table,
    estimate_root,
)

LOGGER = logging.getLogger(__name__)

_HANDLER: logging.Handler | None = None


def _configure_logging(level: str) -> None:
    """Send package log records at ``level`` and above to stderr."""
    global _HANDLER
    package_logger = logging.getLogger("pade_roots")
    if _HANDLER is not None:
        package_logger.removeHandler(_HANDLER)
    _HANDLER = logging.StreamHandler(sys.stderr)
    _HANDLER.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    package_logger.addHandler(_HANDLER)
    package_logger.setLevel(level)


def _decimals(key: str) -> int:
    return SETTINGS["output"][key]


def _scalar(
    args: argparse.Namespace,
    inputs: dict,
    method: str,
    value: float | dict,
    residual: float | dict | None,
) -> None:
    """Print one result as text or JSON."""
    if args.format == "json":
        emit(
            to_json(
                {
                    "inputs": inputs,
                    "method": method,
                    "value": value,
                    "residual": residual,
                }
            )
        )
        return
    if isinstance(value, dict):
        for key, item in value.items():
            text = "none" if item is None else f"{item:.{args.decimals}f}"
            emit(f"{key} {text}\n")
    else:
        emit(f"{value:.{args.decimals}f}\n")


def _grid(start: float, stop: float, points: int) -> np.ndarray:
    if points < 1:
        raise argparse.ArgumentTypeError("--points must be at least 1")
    return np.linspace(start, stop, points)


# ============================================================
# SUBCOMMAND HANDLERS
# ============================================================


def _cmd_roots(args: argparse.Namespace) -> None:
    eq = TrigEquation(EquationKind(args.kind), args.kappa)
    estimate = estimate_root(eq, args.n, args.method)
    inputs = {"kind": args.kind, "kappa": args.kappa, "n": args.n}
    _scalar(args, inputs, str(estimate.method), estimate.value, estimate.residual)


def _cmd_table(args: argparse.Namespace) -> None:
    eq = TrigEquation(EquationKind(args.kind), args.kappa)
    frame = error_table_frame(error_table(eq, args.rows), eq.kind)
    text = render_frame(frame, args.format, f"%.{_decimals('table_decimals')}f")
    emit(text, args.out)


def _cmd_lambert(args: argparse.Namespace) -> None:
    variant = WVariant.parse(args.variant)
    value = w_eval(args.x, variant, args.branch)
    residual = value * np.exp(value) - args.x
    inputs = {"x": args.x, "branch": args.branch}
    _scalar(args, inputs, str(variant), value, float(residual))


def _cmd_error_curve(args: argparse.Namespace) -> None:
    frame = error_curve(_grid(args.start, args.to, args.points), args.variant)
    emit(render_frame(frame, args.format, "%.8f"), args.out)


def _cmd_spring(args: argparse.Namespace) -> None:
    dimensional = (args.m, args.m0, args.k)
    if args.ratio is None and any(v is None for v in dimensional):
        raise DomainError("give --ratio, or all of --m, --m0 and --k")
    if args.ratio is not None:
        xi = spring_xi(args.ratio, args.oracle)
        inputs = {"ratio": args.ratio}
        _scalar(args, inputs, "xi", xi, spring_residual(args.ratio, xi))
        return
    system = SpringSystem(m=args.m, m0=args.m0, k=args.k)
    omega = spring_frequency(system, args.oracle)
    residual = spring_residual(system.r, spring_xi(system.r, args.oracle))
    inputs = {"m": args.m, "m0": args.m0, "k": args.k}
    _scalar(args, inputs, "omega", omega, residual)


def _cmd_diffraction_maxima(args: argparse.Namespace) -> None:
    maximum: DiffractionMaximum = diffraction_maxima(args.n)
    residual = TrigEquation(EquationKind.TAN, 1.0).residual(maximum.u)
    _scalar(args, {"n": args.n}, "pade", maximum._asdict(), residual)


def _cmd_diffraction_profile(args: argparse.Namespace) -> None:
    frame = diffraction_profile(_grid(args.start, args.to, args.points))
    emit(render_frame(frame, args.format, "%.8f"), args.out)


def _cmd_delta_single(args: argparse.Namespace) -> None:
    energy = single_delta_even_energy(args.n, use_approximation=not args.oracle)
    method = "oracle" if args.oracle else "approximation"
    _scalar(args, {"n": args.n}, method, energy, single_delta_residual(energy))


def _cmd_delta_double(args: argparse.Namespace) -> None:
    variant = None if args.variant is None else WVariant.parse(args.variant)
    energies = double_delta_energies(args.ratio, variant)
    values = {
        "even": energies.even,
        "odd": energies.odd,
        "exchange": exchange_energy(args.ratio, variant),
    }
    residuals = {"even": energies.residual_even, "odd": energies.residual_odd}
    method = "oracle" if variant is None else str(variant)
    _scalar(args, {"ratio": args.ratio}, method, values, residuals)


def _cmd_wien(args: argparse.Namespace) -> None:
    x0 = wien_x0(args.method, args.nodes)
    residual = (5 - x0) * np.exp(x0) - 5
    inputs = {"nodes": args.nodes}
    if args.format == "json":
        value = {"x0": x0}
        if args.constant:
            value["constant"] = wien_constant(method=args.method)
        _scalar(args, inputs, args.method, value, float(residual))
        return
    emit(f"{x0:.{_decimals('wien_decimals')}f}\n")
    if args.constant:
        emit(f"{wien_constant(method=args.method):.12e}\n")


def _cmd_planck(args: argparse.Namespace) -> None:
    frame: pd.DataFrame = planck_profile(
        _grid(args.start, args.to, args.points), args.temperature
    )
    emit(render_frame(frame, args.format, "%.8e"), args.out)


# ============================================================
# PARSER
# ============================================================


def _add_format(parser: argparse.ArgumentParser, table: bool = False) -> None:
    if table:
        choices = [str(f) for f in OutputFormat]
        default = str(OutputFormat.CSV)
    else:
        choices, default = ["text", "json"], "text"
    parser.add_argument("--format", choices=choices, default=default)


def _add_range(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--from", dest="start", type=float, required=True)
    parser.add_argument("--to", type=float, required=True)
    parser.add_argument("--points", type=int, required=True)
    parser.add_argument("--out", default=None, help="output file, stdout if absent")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser for every subcommand."""
    parser = argparse.ArgumentParser(
        prog="pade_roots",
        description="Padé and Lagrange inversion solutions of transcendental "
        "equations, with oracle checks and physical applications.",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    roots = sub.add_parser("roots", help="one root of tan x = kx or cot x = kx")
    roots.add_argument("--kind", choices=[str(k) for k in EquationKind], required=True)
    roots.add_argument("--kappa", type=float, required=True)
    roots.add_argument("--n", type=int, required=True)
    roots.add_argument(
        "--method", choices=[str(m) for m in RootMethod], default=str(RootMethod.PADE)
    )
    _add_format(roots)
    roots.set_defaults(handler=_cmd_roots, decimals=_decimals("table_decimals"))

    table = sub.add_parser("table", help="exact roots and method errors")
    table.add_argument("--kind", choices=[str(k) for k in EquationKind], required=True)
    table.add_argument("--kappa", type=float, required=True)
    table.add_argument("--rows", type=int, required=True)
    table.add_argument("--out", default=None)
    _add_format(table, table=True)
    table.set_defaults(handler=_cmd_table)

    lambert = sub.add_parser("lambert", help="evaluate the Lambert W function")
    lambert.add_argument("--x", type=float, required=True)
    lambert.add_argument(
        "--variant",
        required=True,
        help="taylor:N, pade-i, pade-i-rounded, pade-ii, pade-ii-rounded or oracle",
    )
    lambert.add_argument(
        "--branch", type=int, choices=[b.value for b in WBranch], default=0
    )
    _add_format(lambert)
    lambert.set_defaults(handler=_cmd_lambert, decimals=_decimals("wien_decimals"))

    curve = sub.add_parser("error-curve", help="relative error of a W formula")
    _add_range(curve)
    curve.add_argument("--variant", required=True)
    _add_format(curve, table=True)
    curve.set_defaults(handler=_cmd_error_curve)

    spring = sub.add_parser("spring", help="effective mass of a massive spring")
    spring.add_argument("--ratio", type=float, default=None)
    spring.add_argument("--m", type=float, default=None)
    spring.add_argument("--m0", type=float, default=None)
    spring.add_argument("--k", type=float, default=None)
    spring.add_argument("--oracle", action="store_true")
    _add_format(spring)
    spring.set_defaults(handler=_cmd_spring, decimals=_decimals("table_decimals"))

    diffraction = sub.add_parser("diffraction", help="single slit diffraction")
    diffraction_sub = diffraction.add_subparsers(dest="diffraction", required=True)
    maxima = diffraction_sub.add_parser("maxima", help="n-th maximum")
    maxima.add_argument("--n", type=int, required=True)
    _add_format(maxima)
    maxima.set_defaults(
        handler=_cmd_diffraction_maxima, decimals=_decimals("table_decimals")
    )
    profile = diffraction_sub.add_parser("profile", help="intensity on a grid")
    _add_range(profile)
    _add_format(profile, table=True)
    profile.set_defaults(handler=_cmd_diffraction_profile)

    delta = sub.add_parser("delta", help="contact interaction bound states")
    delta_sub = delta.add_subparsers(dest="delta", required=True)
    single = delta_sub.add_parser("single", help="well at the critical strength")
    single.add_argument("--n", type=int, required=True)
    single.add_argument("--oracle", action="store_true")
    _add_format(single)
    single.set_defaults(handler=_cmd_delta_single, decimals=_decimals("table_decimals"))
    double = delta_sub.add_parser("double", help="two attractive contacts")
    double.add_argument("--ratio", type=float, required=True)
    double.add_argument(
        "--variant",
        default=None,
        choices=[str(k) for k in WKind if k is not WKind.TAYLOR],
    )
    _add_format(double)
    double.set_defaults(handler=_cmd_delta_double, decimals=_decimals("table_decimals"))

    wien = sub.add_parser("wien", help="Wien displacement root and constant")
    wien.add_argument(
        "--method",
        choices=[str(m) for m in WienMethod],
        default=str(WienMethod.LAMBERT),
    )
    wien.add_argument("--nodes", type=int, default=None)
    wien.add_argument("--constant", action="store_true")
    _add_format(wien)
    wien.set_defaults(handler=_cmd_wien, decimals=_decimals("wien_decimals"))

    planck = sub.add_parser("planck", help="Planck spectrum on a wavelength grid")
    planck.add_argument("--temperature", type=float, required=True)
    _add_range(planck)
    _add_format(planck, table=True)
    planck.set_defaults(handler=_cmd_planck)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run the command line interface.

    Args:
        argv: Arguments without the program name; ``sys.argv[1:]`` if None.

    Returns:
        Exit status: 0 on success, 1 on a domain or numerical error, 2 on a
        usage error.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    _configure_logging(args.log_level)
    try:
        args.handler(args)
    except PadeRootsError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except argparse.ArgumentTypeError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return 0
