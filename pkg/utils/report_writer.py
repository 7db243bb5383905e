# -*- coding: utf-8 -*-
"""
Report writer for the anonymization toolkit.

This module implements:
1. to_jsonable - conversion of report payloads to plain JSON values
2. dumps_report - deterministic JSON rendering
3. ReportWriter - writes JSON reports and CSV tables into an output directory

Reports are byte-deterministic: keys are sorted, infinities are written as
the string "inf" and no timestamps are added.
"""

import json
import logging
import math
import os
from fractions import Fraction
from typing import Any

import numpy as np

from core.table import Table, write_table

logger = logging.getLogger(__name__)


def to_jsonable(value: Any) -> Any:
    """Recursively convert a payload to JSON-compatible values."""
    if hasattr(value, "to_dict") and callable(value.to_dict):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if isinstance(value, Fraction):
        value = float(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
    return value


def dumps_report(data: Any, indent: int = 2, sort_keys: bool = True) -> str:
    """JSON text of a report, with a trailing newline."""
    return json.dumps(to_jsonable(data), indent=indent, sort_keys=sort_keys, ensure_ascii=False) + "\n"


class ReportWriter:
    """Writes the report files of one job run."""

    def __init__(self, output_dir: str, encoding: str = "utf-8"):
        self.output_dir = output_dir
        self.encoding = encoding

    def _path(self, name: str) -> str:
        os.makedirs(self.output_dir, exist_ok=True)
        return os.path.join(self.output_dir, name)

    def _write_text(self, file_path: str, text: str) -> int:
        with open(file_path, "w", encoding=self.encoding, newline="") as f:
            f.write(text)
        return len(text.encode(self.encoding))

    def write_json(self, name: str, data: Any) -> str:
        """Write ``data`` as ``<output_dir>/<name>`` and return the path."""
        file_path = self._path(name)
        text = dumps_report(data)
        written = self._write_text(file_path, text)
        logger.info(f"Wrote JSON report {file_path} ({written} bytes)")
        return file_path

    def write_table(self, name: str, table: Table) -> str:
        """Write ``table`` as CSV to ``<output_dir>/<name>`` and return the path."""
        file_path = self._path(name)
        written = self._write_text(file_path, write_table(table))
        logger.info(f"Wrote table {file_path} ({table.row_count} rows, {written} bytes)")
        return file_path
