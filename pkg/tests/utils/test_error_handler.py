# -*- coding: utf-8 -*-
import pytest

from core.errors import (
    BudgetExceededError,
    HierarchyError,
    InfeasibleAnonymizationError,
    JobConfigError,
    TableParseError,
)
from utils.error_handler import exit_code_for, format_exception, handle_job_error


@pytest.mark.parametrize("error, code", [
    (InfeasibleAnonymizationError("no node", 6, 1.0), 2),
    (BudgetExceededError("refused", 0.0), 2),
    (JobConfigError("bad", ["k must be ≥ 1"]), 1),
    (HierarchyError("not total"), 1),
    (ValueError("boom"), 1),
    (RuntimeError("boom"), 1),
])
def test_exit_codes(error, code):
    assert exit_code_for(error) == code


def test_toolkit_error_document():
    document = format_exception(TableParseError("expected 4 fields, got 3", row=2))
    assert document == {
        "type": "TableParseError",
        "code": "table_parse_error",
        "message": "row 2: expected 4 fields, got 3",
        "details": {"row": 2, "column": None},
    }


def test_builtin_error_document():
    document = format_exception(FileNotFoundError("missing.csv"))
    assert document["code"] == "filenotfounderror"
    assert format_exception(RuntimeError("x"))["code"] == "internal_error"


def test_traceback_only_on_request():
    try:
        raise ValueError("boom")
    except ValueError as e:
        assert "traceback" not in format_exception(e)
        assert "ValueError: boom" in format_exception(e, include_traceback=True)["traceback"]


def test_job_error_document():
    document = handle_job_error(InfeasibleAnonymizationError("no node", 6, 1.0, {"age": 2}), "psg")
    assert document["exit_code"] == 2
    assert document["details"] == {"best_k": 6, "suppression_needed": 1.0, "best_node": {"age": 2}}
