# -*- coding: utf-8 -*-
"""
Base class for all tasks of the anonymization toolkit.

Every CLI subcommand (QID analysis, model checks, anonymization, risk and
utility reports, DP tools) is a `TaskBase` subclass living in the `tasks`
package, where the TaskRegistry discovers it.

Key responsibilities of a Task:
- Parameter validation: returning one diagnostic per offending field.
- Execution: turning an ExecutionContext into a TaskResult (report + tables).
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence

from core.table import AttributeRole, AttributeSchema, Table
from utils.error_handler import EXIT_INFEASIBLE, EXIT_SUCCESS


class TaskStatus(Enum):
    """Outcome of a task run."""
    SUCCESS = "success"
    VIOLATED = "violated"
    FAILURE = "failure"


@dataclass
class TaskResult:
    """
    Attributes:
        status: Task outcome.
        report: JSON-serialisable report body.
        tables: Output file name -> table to write as CSV.
        exit_code: Process exit code for this outcome.
    """

    status: TaskStatus
    report: Dict[str, Any] = field(default_factory=dict)
    tables: Dict[str, Table] = field(default_factory=dict)
    exit_code: int = EXIT_SUCCESS

    @classmethod
    def success(cls, report: Dict[str, Any], tables: Optional[Dict[str, Table]] = None) -> "TaskResult":
        return cls(TaskStatus.SUCCESS, report, tables or {}, EXIT_SUCCESS)

    @classmethod
    def violated(cls, report: Dict[str, Any]) -> "TaskResult":
        return cls(TaskStatus.VIOLATED, report, {}, EXIT_INFEASIBLE)


class TaskBase(ABC):
    """
    Abstract base class for toolkit tasks.

    Attributes:
        TASK_NAME (str): Name used on the command line and in job files.
        REQUIRES_TABLE (bool): Whether the runner must load the input table first.
        logger (logging.Logger): Logger instance for this task.
    """

    TASK_NAME: str = ""
    REQUIRES_TABLE: bool = True

    def __init__(self):
        self.logger = logging.getLogger(f"tasks.{self.TASK_NAME or type(self).__name__}")

    @abstractmethod
    def validate_parameters(self, params: Mapping[str, Any], schema: Sequence[AttributeSchema],
                            hierarchies: Mapping[str, Any]) -> List[str]:
        """
        Check the task parameters against the declared schema.

        Args:
            params: Task parameters.
            schema: Parsed attribute declarations (empty for table-less tasks).
            hierarchies: Attribute name -> hierarchy specification.

        Returns:
            List[str]: One diagnostic per problem, each starting with the field name.
        """

    @abstractmethod
    def run(self, context) -> TaskResult:
        """
        Execute the task.

        Args:
            context (ExecutionContext): Loaded table, hierarchies and parameters of the job.
        """

    # Shared validation helpers

    @staticmethod
    def as_name_list(value: Any) -> List[str]:
        """Accept ``"a,b"`` or ``["a", "b"]``."""
        if value is None:
            return []
        if isinstance(value, str):
            return [part.strip() for part in value.split(",") if part.strip()]
        return [str(v) for v in value]

    def check_attributes(self, field_name: str, names: Sequence[str], schema: Sequence[AttributeSchema],
                         diagnostics: List[str], allow_identifier: bool = True) -> None:
        known = {a.name: a for a in schema}
        for name in names:
            if name not in known:
                diagnostics.append(f"{field_name}: unknown attribute '{name}'")
            elif not allow_identifier and known[name].role is AttributeRole.IDENTIFIER:
                diagnostics.append(f"{field_name}: attribute '{name}' is an identifier and is dropped on output")

    @staticmethod
    def check_number(field_name: str, value: Any, diagnostics: List[str], minimum: Optional[float] = None,
                     maximum: Optional[float] = None, integer: bool = False, required: bool = False,
                     exclusive_minimum: bool = False, exclusive_maximum: bool = False) -> None:
        if value is None:
            if required:
                diagnostics.append(f"{field_name} is required")
            return
        if isinstance(value, bool) or not isinstance(value, (int, float)) or (integer and not float(value).is_integer()):
            diagnostics.append(f"{field_name} must be {'an integer' if integer else 'a number'}, got {value!r}")
            return
        if minimum is not None and (value <= minimum if exclusive_minimum else value < minimum):
            diagnostics.append(f"{field_name} must be {'>' if exclusive_minimum else '≥'} {minimum:g}")
        if maximum is not None and (value >= maximum if exclusive_maximum else value > maximum):
            diagnostics.append(f"{field_name} must be {'<' if exclusive_maximum else '≤'} {maximum:g}")
