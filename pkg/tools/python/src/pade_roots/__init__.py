"""Padé and Lagrange inversion approximations to transcendental roots.

The package solves ``tan x = kappa x``, ``cot x = kappa x`` and the Lambert W
defining equation with exact rational series work, checks every closed form
against a numerical oracle and evaluates a handful of physical applications.
"""

__version__ = "0.1.0"
