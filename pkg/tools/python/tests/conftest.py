"""Shared pytest fixtures for the pade_roots tests."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
SRC_DIR = PROJECT_ROOT / "src"
TESTING_DATA_DIR = PROJECT_ROOT / "testing_data"

if not SRC_DIR.is_dir():
    raise RuntimeError(f"Expected src directory not found: {SRC_DIR}")

if str(SRC_DIR) not in sys.path:
    sys.path.insert(0, str(SRC_DIR))


@pytest.fixture(scope="session")
def testing_data_dir() -> Path:
    """Return the directory holding the reference tables."""
    return TESTING_DATA_DIR


@pytest.fixture
def tan_kappa_one():
    """The equation tan x = x."""
    from pade_roots.trig_roots import EquationKind, TrigEquation

    return TrigEquation(EquationKind.TAN, 1.0)


@pytest.fixture
def cot_kappa_one():
    """The equation cot x = x."""
    from pade_roots.trig_roots import EquationKind, TrigEquation

    return TrigEquation(EquationKind.COT, 1.0)
