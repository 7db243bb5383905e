"""
Execution Context

This module defines the ExecutionContext class that stores all information
related to a single job run.
"""

from datetime import datetime, timezone
from typing import Any, Dict, Mapping, Optional

from core.hierarchy import GeneralizationHierarchy
from core.table import Table


class ExecutionContext:
    """
    Stores all context for a single job run.

    The ExecutionContext carries what a task needs (parameters, the loaded
    table, hierarchies, merged settings) and the run's status and timings.
    """

    def __init__(self, job_id: str, task: str, parameters: Mapping[str, Any],
                 settings: Optional[Mapping[str, Any]] = None, table: Optional[Table] = None,
                 hierarchies: Optional[Mapping[str, GeneralizationHierarchy]] = None,
                 output_dir: Optional[str] = None):
        """
        Initialize a new execution context.

        Args:
            job_id: ID of this run
            task: Task name
            parameters: Task parameters after flag overrides
            settings: Merged toolkit configuration
            table: Input table, when the task needs one
            hierarchies: Attribute name -> hierarchy
            output_dir: Directory the reports go to
        """
        self.job_id = job_id
        self.task = task
        self.parameters = dict(parameters)
        self.settings = dict(settings or {})
        self.table = table
        self.hierarchies = dict(hierarchies or {})
        self.output_dir = output_dir

        # Execution state
        self.status = "created"  # created, running, completed, failed
        self.error = None
        self.start_time = None
        self.end_time = None
        self.duration_seconds = 0.0

    def param(self, name: str, default: Any = None) -> Any:
        """Task parameter, or ``default`` when absent or null."""
        value = self.parameters.get(name)
        return default if value is None else value

    def setting(self, key: str, default: Any = None) -> Any:
        """Configuration value by dotted key."""
        value: Any = self.settings
        try:
            for part in key.split("."):
                value = value[part]
        except (KeyError, TypeError):
            return default
        return default if value is None else value

    def mark_running(self) -> None:
        self.status = "running"
        self.start_time = datetime.now(timezone.utc)

    def mark_finished(self, status: str, error: Optional[str] = None) -> None:
        self.status = status
        self.error = error
        self.end_time = datetime.now(timezone.utc)
        if self.start_time:
            self.duration_seconds = (self.end_time - self.start_time).total_seconds()

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert the execution context to a dictionary.

        Returns:
            Dictionary representation of the execution context
        """
        return {
            "job_id": self.job_id,
            "task": self.task,
            "status": self.status,
            "error": self.error,
            "start_time": self.start_time.isoformat() if self.start_time else None,
            "end_time": self.end_time.isoformat() if self.end_time else None,
            "duration_seconds": self.duration_seconds,
            "row_count": self.table.row_count if self.table is not None else None,
            "parameters": {k: v for k, v in self.parameters.items() if not k.startswith("_")},
        }
