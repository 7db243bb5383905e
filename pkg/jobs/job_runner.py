# -*- coding: utf-8 -*-
"""
Job Runner for the anonymization toolkit.

Runs one job per call: validate, load the input table and hierarchies, run
the task, write ``report.json`` (and any output tables) or ``error.json``,
and return the process exit code.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from core.errors import JobConfigError
from core.execution_context import ExecutionContext
from core.hierarchy import hierarchies_from_config
from core.table import load_table_from_path, parse_schema
from core.task_registry import TaskRegistry
from jobs.job_loader import JobConfig
from jobs.job_validator import validate_config
from utils.error_handler import handle_job_error
from utils.logging_manager import get_logger, log_job_event
from utils.report_writer import ReportWriter

logger = logging.getLogger(__name__)

REPORT_FILE = "report.json"
ERROR_FILE = "error.json"


@dataclass(frozen=True)
class JobOutcome:
    """Exit code and written files of one run."""

    exit_code: int
    status: str
    report_path: Optional[str] = None
    error_path: Optional[str] = None

    @property
    def output_path(self) -> Optional[str]:
        return self.report_path or self.error_path


def _fail(writer: ReportWriter, config: JobConfig, error: BaseException) -> JobOutcome:
    document = handle_job_error(error, config.job_id)
    document["task"] = config.task
    path = writer.write_json(ERROR_FILE, document)
    log_job_event("job_failed", config.job_id, config.task, {"code": document["code"]})
    return JobOutcome(document["exit_code"], "failure", error_path=path)


def run_job(config: JobConfig, registry: Optional[TaskRegistry] = None) -> JobOutcome:
    """
    Run a job and write its reports.

    Exit codes: 0 on success, 2 when constraints are infeasible, a checked
    model is violated or a ledger spend is refused, 1 on every other error.
    """
    registry = registry or TaskRegistry()
    writer = ReportWriter(config.output_dir)
    job_logger = get_logger(__name__, job_id=config.job_id, task=config.task)

    diagnostics = validate_config(config, registry)
    if diagnostics:
        return _fail(writer, config, JobConfigError(
            f"Job configuration has {len(diagnostics)} problem(s): {'; '.join(diagnostics)}", diagnostics
        ))

    task = registry.create_task(config.task)
    context: Optional[ExecutionContext] = None
    try:
        table = None
        hierarchies: Dict[str, Any] = {}
        if task.REQUIRES_TABLE:
            table = load_table_from_path(config.input_path, parse_schema(config.schema))
            hierarchies = hierarchies_from_config(config.hierarchies)
            job_logger.info(f"Loaded {table.row_count} rows from {config.input_path}")

        context = ExecutionContext(
            job_id=config.job_id,
            task=config.task,
            parameters=config.parameters,
            settings=config.settings,
            table=table,
            hierarchies=hierarchies,
            output_dir=config.output_dir,
        )
        context.mark_running()
        log_job_event("job_start", config.job_id, config.task)

        result = task.run(context)

        for name, output in result.tables.items():
            writer.write_table(name, output)
        report = {"task": config.task, "job_id": config.job_id, "status": result.status.value}
        report.update(result.report)
        path = writer.write_json(REPORT_FILE, report)

        context.mark_finished(result.status.value)
        log_job_event("job_complete", config.job_id, config.task, {
            "status": result.status.value,
            "exit_code": result.exit_code,
            "duration_seconds": context.duration_seconds,
        })
        return JobOutcome(result.exit_code, result.status.value, report_path=path)

    except Exception as e:
        if context is not None:
            context.mark_finished("failed", str(e))
        return _fail(writer, config, e)

