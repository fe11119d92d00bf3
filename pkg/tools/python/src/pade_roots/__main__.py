"""Entry point for ``python -m pade_roots``."""

import sys

from pade_roots.cli import run

sys.exit(run())
