"""
Error definitions for the anonymization toolkit.

This module defines custom exceptions used throughout the toolkit. Every
exception carries a stable machine-readable ``code`` that ends up in the
error reports written by the job runner.
"""

from typing import Any, Dict, List, Optional, Sequence


class AnonkitError(Exception):
    """Base class for all toolkit errors."""

    code = "anonkit_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(message)


class SchemaError(AnonkitError):
    """Error raised when an attribute schema is malformed or does not match the data."""

    code = "schema_error"


class TableParseError(AnonkitError):
    """Error raised when CSV input cannot be parsed under the declared schema."""

    code = "table_parse_error"

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None):
        self.row = row
        self.column = column
        location = []
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column '{column}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}", {"row": row, "column": column})


class UnknownAttributeError(AnonkitError):
    """Error raised when an operation names an attribute absent from the schema."""

    code = "unknown_attribute"

    def __init__(self, attribute: str, available: Sequence[str] = ()):
        self.attribute = attribute
        super().__init__(
            f"Unknown attribute '{attribute}'. Available attributes: {list(available)}",
            {"attribute": attribute},
        )


class HierarchyError(AnonkitError):
    """Error raised when a generalization hierarchy is invalid or not total over the data."""

    code = "hierarchy_error"


class GeneralizationLevelError(AnonkitError):
    """Error raised when a lattice node asks for a level a hierarchy does not have."""

    code = "level_out_of_range"

    def __init__(self, attribute: str, level: int, max_level: int):
        self.attribute = attribute
        self.level = level
        self.max_level = max_level
        super().__init__(
            f"Level {level} out of range for attribute '{attribute}' (max level {max_level})",
            {"attribute": attribute, "level": level, "max_level": max_level},
        )


class EmptyPartitionError(AnonkitError):
    """Error raised when a risk measure is requested on a partition without classes."""

    code = "empty_partition"


class EmptyTableError(AnonkitError):
    """Error raised when an operation needs at least one row."""

    code = "empty_table"


class InfeasibleAnonymizationError(AnonkitError):
    """Error raised when no lattice node satisfies the constraints within the suppression budget."""

    code = "infeasible"

    def __init__(self, message: str, best_k: int, suppression_needed: float,
                 best_node: Optional[Dict[str, int]] = None):
        self.best_k = best_k
        self.suppression_needed = suppression_needed
        self.best_node = best_node
        super().__init__(message, {
            "best_k": best_k,
            "suppression_needed": suppression_needed,
            "best_node": best_node,
        })


class UtilityError(AnonkitError):
    """Error raised when a utility query or metric cannot be evaluated."""

    code = "utility_error"


class UnmatchedGroupError(UtilityError):
    """Error raised when an original group key has no generalized counterpart."""

    code = "unmatched_group"


class ZeroBaselineError(UtilityError):
    """Error raised when a normalized error would divide by an original value of zero."""

    code = "zero_baseline"


class DomainValueError(AnonkitError):
    """Error raised when a value lies outside a mechanism's finite domain."""

    code = "domain_value"


class EstimatorUndefinedError(AnonkitError):
    """Error raised when the randomized response estimator cannot be inverted."""

    code = "estimator_undefined"


class BudgetExceededError(AnonkitError):
    """Error raised when a privacy budget ledger refuses a spend."""

    code = "budget_exceeded"

    def __init__(self, message: str, remaining: float):
        self.remaining = remaining
        super().__init__(message, {"remaining": remaining})


class JobConfigError(AnonkitError):
    """Error raised when a job configuration fails validation."""

    code = "invalid_config"

    def __init__(self, message: str, diagnostics: Optional[List[str]] = None):
        self.diagnostics = list(diagnostics or [])
        super().__init__(message, {"diagnostics": self.diagnostics})


class TaskNotFoundError(AnonkitError):
    """Error raised when a requested task is not found in the registry."""

    code = "unknown_task"
