"""
file_controller.py
==================

Responsible solely for serialising a :class:`RunReport` to CSV or JSON,
either to a file or to standard output.

Numbers are written with 12 significant digits so that identical runs give
byte-identical CSV files.
"""

from __future__ import annotations

import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from thermocasimir.controllers.scenario_controller import PointRecord, RunReport
from thermocasimir.errors import EmitError

__all__ = ["FileController", "CSV_COLUMNS", "FORMATS"]

CSV_COLUMNS = ["param", "value_N", "abs_error_N", "n_zero_N", "n_terms"]
FORMATS = ("csv", "json")
_FLOAT_FORMAT = "%.12g"


class FileController:
    """Utility class – **all methods are static**."""

    # --------------------------------------------------------------------- #
    # Public API
    # --------------------------------------------------------------------- #
    @staticmethod
    def emit(report: RunReport, fmt: str = "csv", destination: Optional[str | Path] = None) -> None:
        """
        Write *report* in format *fmt* to *destination*.

        Parameters
        ----------
        report
            Result of ``scenario_controller.run``.
        fmt
            ``"csv"`` or ``"json"``.
        destination
            Target file; *None* or ``"-"`` writes to standard output.  Parent
            directories are created.

        Raises
        ------
        EmitError
            If the file cannot be written; names the destination.
        """
        if fmt not in FORMATS:
            raise ValueError(f"unknown output format {fmt!r}; choose one of {', '.join(FORMATS)}")
        text = FileController.to_csv(report) if fmt == "csv" else FileController.to_json(report)

        if destination is None or str(destination) == "-":
            sys.stdout.write(text)
            return
        path = Path(destination)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8", newline="")
        except OSError as exc:
            raise EmitError(str(path), exc.strerror or str(exc)) from exc

    @staticmethod
    def to_csv(report: RunReport) -> str:
        """One row per record, in report order; header only for an empty sweep."""
        frame = pd.DataFrame(
            [_csv_row(r) for r in report.records],
            columns=CSV_COLUMNS,
        )
        if not frame.empty:
            frame["n_terms"] = frame["n_terms"].astype(int)
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, float_format=_FLOAT_FORMAT, na_rep="nan", lineterminator="\n")
        return buffer.getvalue()

    @staticmethod
    def to_json(report: RunReport) -> str:
        """The report as a JSON document; NaN becomes ``null``."""
        document = {
            "scenario": report.scenario,
            "kind": report.kind,
            "parameter": report.parameter,
            "unit": report.unit,
            "metadata": _rounded(dict(report.metadata)),
            "records": [_record_dict(r) for r in report.records],
        }
        return json.dumps(document, indent=2, allow_nan=False) + "\n"


# ------------------------------------------------------------------------- #
# Helper functions (private)
# ------------------------------------------------------------------------- #
def _csv_row(record: PointRecord) -> List[Any]:
    return [record.param, record.value, record.abs_error, record.n_zero, record.n_terms]


def _record_dict(record: PointRecord) -> Dict[str, Any]:
    return _rounded(
        {
            "param": record.param,
            "value": record.value,
            "abs_error": record.abs_error,
            "n_zero": record.n_zero,
            "n_terms": record.n_terms,
            "converged": record.converged,
            "breakdown": dict(record.breakdown),
            "error": record.error,
        }
    )


def _rounded(value: Any) -> Any:
    """Round floats to 12 significant digits, recursively; non-finite → None."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return float(f"{value:.12g}") if math.isfinite(value) else None
    if isinstance(value, dict):
        return {k: _rounded(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_rounded(v) for v in value]
    return value
