# -*- coding: utf-8 -*-
"""
Job Validator for the anonymization toolkit.

`validate_config` returns one diagnostic per problem, each starting with the
offending field; an empty list means the job can run.
"""

import logging
import os
from typing import Any, Dict, List, Optional, Tuple

from core.errors import AnonkitError
from core.hierarchy import hierarchies_from_config
from core.table import AttributeSchema, parse_schema
from core.task_registry import TaskRegistry
from jobs.job_loader import JobConfig

logger = logging.getLogger(__name__)


def _parse_schema(config: JobConfig, diagnostics: List[str]) -> Tuple[AttributeSchema, ...]:
    if not isinstance(config.schema, list):
        diagnostics.append("schema must be a list of attribute declarations")
        return ()
    if not all(isinstance(d, dict) for d in config.schema):
        diagnostics.append("schema: every attribute declaration must be a mapping")
        return ()
    try:
        return parse_schema(config.schema)
    except AnonkitError as e:
        diagnostics.append(f"schema: {e.message}")
        return ()


def _parse_hierarchies(config: JobConfig, schema: Tuple[AttributeSchema, ...],
                       diagnostics: List[str]) -> Dict[str, Any]:
    if config.hierarchies is not None and not isinstance(config.hierarchies, (list, dict)):
        diagnostics.append("hierarchies must be a list or a mapping of hierarchy documents")
        return {}
    try:
        hierarchies = hierarchies_from_config(config.hierarchies)
    except AnonkitError as e:
        diagnostics.append(f"hierarchies: {e.message}")
        return {}
    except (TypeError, ValueError, AttributeError) as e:
        diagnostics.append(f"hierarchies: malformed hierarchy document ({e})")
        return {}
    if schema:
        names = {a.name for a in schema}
        for attribute in hierarchies:
            if attribute not in names:
                diagnostics.append(f"hierarchies: unknown attribute '{attribute}'")
    return hierarchies


def validate_config(config: JobConfig, registry: Optional[TaskRegistry] = None) -> List[str]:
    """
    Check that a job is runnable.

    Args:
        config: The job to check.
        registry: Task registry; a discovering registry is built when omitted.

    Returns:
        List[str]: Diagnostics; empty iff the job is runnable.
    """
    registry = registry or TaskRegistry()
    diagnostics: List[str] = []

    if not config.task:
        diagnostics.append(f"task is required. Available tasks: {registry.task_names()}")
        return diagnostics
    if config.task not in registry.task_types:
        diagnostics.append(f"task: unknown task '{config.task}'. Available tasks: {registry.task_names()}")
        return diagnostics
    task = registry.create_task(config.task)

    if "_invalid" in config.parameters:
        diagnostics.append("parameters must be a mapping")
        return diagnostics

    schema: Tuple[AttributeSchema, ...] = ()
    hierarchies: Dict[str, Any] = {}
    if task.REQUIRES_TABLE:
        if not config.input_path:
            diagnostics.append("input_path is required")
        elif not os.path.isfile(config.input_path):
            diagnostics.append(f"input_path: file not found '{config.input_path}'")
        schema = _parse_schema(config, diagnostics)
        if not schema and not any(d.startswith("schema") for d in diagnostics):
            diagnostics.append("schema must declare at least one attribute")
        hierarchies = _parse_hierarchies(config, schema, diagnostics)

    diagnostics.extend(task.validate_parameters(config.parameters, schema, hierarchies))
    if diagnostics:
        logger.info(f"Job '{config.job_id}' has {len(diagnostics)} configuration problem(s)")
    return diagnostics
