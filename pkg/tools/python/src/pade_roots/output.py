"""Render results as CSV, markdown or JSON and read CSV back.

CSV files use a comma delimiter, a '.' decimal separator, LF line endings and a
header row. Floats are printed with a fixed number of decimals so that repeated
runs produce byte-identical files.
"""

import json
import logging
import math
from collections.abc import Sequence
from enum import StrEnum
from pathlib import Path
from typing import Any

import pandas as pd

from pade_roots.trig_roots import EquationKind, ErrorTableRow

LOGGER = logging.getLogger(__name__)


class OutputFormat(StrEnum):
    """Supported output formats."""

    CSV = "csv"
    MARKDOWN = "markdown"
    JSON = "json"


# error columns are printed in the published units
ERROR_UNITS = {EquationKind.TAN: 3, EquationKind.COT: 2}


def error_table_frame(
    rows: Sequence[ErrorTableRow], kind: EquationKind | str
) -> pd.DataFrame:
    """Lay out error table rows with errors scaled to their printed unit.

    Args:
        rows: Rows from ``trig_roots.error_table``.
        kind: Equation kind, which fixes the ratio column and error unit.

    Returns:
        DataFrame with columns n, exact, ratio and the three error columns;
        the unit appears in the error column names, e.g. ``pade_err_x1e-3``.

    """
    kind = EquationKind(kind)
    exponent = ERROR_UNITS[kind]
    ratio = "x_over_pi" if kind is EquationKind.TAN else "x_over_n_pi"
    scale = 10**exponent
    return pd.DataFrame(
        {
            "n": [row.branch for row in rows],
            "exact": [row.exact for row in rows],
            ratio: [row.ratio for row in rows],
            f"pade_err_x1e-{exponent}": [row.err_pade * scale for row in rows],
            f"frankel_err_x1e-{exponent}": [row.err_frankel * scale for row in rows],
            f"taylor_err_x1e-{exponent}": [row.err_taylor * scale for row in rows],
        }
    )


def _json_safe(value: Any) -> Any:
    """Replace non-finite floats, which JSON cannot hold, by None or a string."""
    if isinstance(value, float):
        if math.isnan(value):
            return None
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
    if isinstance(value, dict):
        return {key: _json_safe(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [_json_safe(item) for item in value]
    return value


def to_json(payload: dict) -> str:
    """Serialise a result payload, keeping key order."""
    return json.dumps(_json_safe(payload), indent=2) + "\n"


def _plain(value: Any) -> Any:
    """Convert numpy scalars to the matching Python type."""
    return value.item() if hasattr(value, "item") else value


def to_markdown(frame: pd.DataFrame, float_format: str) -> str:
    """Render a frame as a GitHub pipe table, missing values left blank."""
    cells = frame.astype(object).where(frame.notna(), None)
    table = cells.to_markdown(
        index=False,
        tablefmt="github",
        floatfmt=float_format.lstrip("%"),
        missingval="",
    )
    return table + "\n"


def render_frame(
    frame: pd.DataFrame,
    output_format: OutputFormat | str = OutputFormat.CSV,
    float_format: str = "%.8f",
) -> str:
    """Render a DataFrame in the requested format.

    Args:
        frame: Data to render.
        output_format: csv, markdown or json.
        float_format: printf-style format applied to float cells.

    Returns:
        The rendered text, ending with a newline.

    """
    output_format = OutputFormat(output_format)
    if output_format is OutputFormat.CSV:
        return frame.to_csv(index=False, float_format=float_format, lineterminator="\n")
    if output_format is OutputFormat.MARKDOWN:
        return to_markdown(frame, float_format)
    records = [
        {key: _plain(value) for key, value in record.items()}
        for record in frame.to_dict(orient="records")
    ]
    return to_json({"columns": list(frame.columns), "rows": records})


def emit(text: str, out: Path | str | None = None) -> None:
    """Write text to a file, or to standard output when ``out`` is None."""
    if out is None:
        print(text, end="")
        return
    out = Path(out)
    # newline="" keeps LF line endings on every platform
    with open(out, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    LOGGER.info(f"Wrote {out}")


def read_csv(path: Path | str) -> pd.DataFrame:
    """Read a CSV file written by ``render_frame``."""
    return pd.read_csv(path)
