# -*- coding: utf-8 -*-
"""
Job Loader for the anonymization toolkit.

This module turns the merged configuration (defaults, environment file, job
file, environment variables, command-line flags) into a `JobConfig`.

A job file looks like::

    task: anonymize
    input: psg.csv
    schema:
      - {name: age, kind: numeric, role: quasi_identifier}
    hierarchies:
      - {attribute: age, interval_widths: [10]}
    parameters: {qid: [age], k: 2}

Relative ``input`` and ``parameters.anonymized`` paths are resolved against
the working directory first and then against the directory of the job file.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional

from core.errors import JobConfigError
from utils.config_loader import ConfigLoader, deep_merge

logger = logging.getLogger(__name__)

DEFAULT_OUTPUT_DIR = "output"


@dataclass
class JobConfig:
    """
    One runnable job.

    Attributes:
        task: Registered task name.
        input_path: CSV input, when the task reads a table.
        schema: Raw attribute declarations.
        hierarchies: Raw hierarchy documents (list, or mapping by attribute).
        parameters: Task parameters after flag overrides.
        output_dir: Directory receiving report.json / error.json and tables.
        job_id: Identifier used in logs and reports.
        settings: The whole merged configuration.
        source_file: Job file the configuration came from, if any.
    """

    task: Optional[str]
    input_path: Optional[str] = None
    schema: List[Any] = field(default_factory=list)
    hierarchies: Any = None
    parameters: Dict[str, Any] = field(default_factory=dict)
    output_dir: str = DEFAULT_OUTPUT_DIR
    job_id: str = "job"
    settings: Dict[str, Any] = field(default_factory=dict)
    source_file: Optional[str] = None


def _resolve_path(path: Optional[str], source_file: Optional[str]) -> Optional[str]:
    if not path or os.path.isabs(path) or os.path.exists(path) or not source_file:
        return path
    candidate = os.path.join(os.path.dirname(source_file), path)
    return candidate if os.path.exists(candidate) else path


def job_config_from_dict(data: Mapping[str, Any]) -> JobConfig:
    """
    Build a `JobConfig` from a merged configuration mapping.

    Shape problems are left for `validate_config`, except a configuration
    that is not a mapping at all.

    Raises:
        JobConfigError: If ``data`` is not a mapping.
    """
    if not isinstance(data, Mapping):
        raise JobConfigError(f"Job configuration must be a mapping, got {type(data).__name__}")
    source_file = data.get("_source_file")
    task = data.get("task")
    parameters = data.get("parameters") or {}
    if not isinstance(parameters, Mapping):
        parameters = {"_invalid": parameters}
    elif parameters.get("anonymized"):
        parameters = dict(parameters, anonymized=_resolve_path(parameters["anonymized"], source_file))

    job_id = data.get("job_id")
    if not job_id:
        job_id = os.path.splitext(os.path.basename(source_file))[0] if source_file else (task or "job")

    return JobConfig(
        task=task,
        input_path=_resolve_path(data.get("input") or data.get("input_path"), source_file),
        schema=data.get("schema") or [],
        hierarchies=data.get("hierarchies"),
        parameters=dict(parameters),
        output_dir=str(data.get("output_dir") or DEFAULT_OUTPUT_DIR),
        job_id=str(job_id),
        settings=dict(data),
        source_file=source_file,
    )


def load_job(job_path: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None,
             config_loader: Optional[ConfigLoader] = None) -> JobConfig:
    """
    Load a job: merge every configuration layer, then apply ``overrides``.

    Args:
        job_path: Job file (YAML or JSON); optional when flags carry the whole job.
        overrides: Values from command-line flags; they win over every file.
        config_loader: Loader to use; a default `ConfigLoader` otherwise.
    """
    loader = config_loader or ConfigLoader()
    merged = loader.load_config(job_path)
    if overrides:
        merged = deep_merge(merged, overrides)
    config = job_config_from_dict(merged)
    logger.info(f"Loaded job '{config.job_id}' (task {config.task})")
    return config
