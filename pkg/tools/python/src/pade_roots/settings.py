"""Load the numerical settings used across pade_roots.

The defaults ship with the package in ``defaults.toml``. A user TOML file can
override individual values, section by section::

    [lambert_w]
    max_iterations = 50

Unknown sections or keys are rejected so that typos do not silently fall back
to the defaults.
"""

import copy
import logging
import tomllib
from importlib import resources
from pathlib import Path
from typing import Any

from pade_roots.exceptions import ConfigurationError

LOGGER = logging.getLogger(__name__)


def _read_defaults() -> dict[str, Any]:
    """Read the packaged defaults file."""
    text = resources.files("pade_roots").joinpath("defaults.toml").read_text()
    return tomllib.loads(text)


def _merge(base: dict, override: dict, path: str = "") -> dict:
    """Recursively merge ``override`` into a copy of ``base``.

    Raises:
        ConfigurationError: if ``override`` names a key absent from ``base``.

    """
    merged = copy.deepcopy(base)
    for key, value in override.items():
        where = f"{path}.{key}" if path else key
        if key not in base:
            raise ConfigurationError(f"unknown setting: {where}")
        if isinstance(base[key], dict):
            if not isinstance(value, dict):
                raise ConfigurationError(f"setting {where} must be a table")
            merged[key] = _merge(base[key], value, where)
        else:
            merged[key] = value
    return merged


def load_settings(toml_file: Path | str | None = None) -> dict[str, Any]:
    """Return the default settings, optionally updated from a TOML file.

    Args:
        toml_file: Path to a TOML file with overrides. If None the packaged
            defaults are returned unchanged.

    Returns:
        Nested dictionary of settings, one table per module.

    """
    settings = _read_defaults()
    if toml_file is None:
        return settings

    toml_file = Path(toml_file)
    with open(toml_file, "rb") as f:
        overrides = tomllib.load(f)

    LOGGER.info(f"Applying settings overrides from {toml_file}")
    return _merge(settings, overrides)


SETTINGS = load_settings()
