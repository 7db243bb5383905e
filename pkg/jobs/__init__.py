# -*- coding: utf-8 -*-
"""
Jobs package for the anonymization toolkit.

A job is one task run on one input: this package loads job files into
`JobConfig` objects, validates them and runs them, writing the reports.
"""

from .job_loader import JobConfig, job_config_from_dict, load_job
from .job_runner import JobOutcome, run_job
from .job_validator import validate_config

__all__ = ["JobConfig", "JobOutcome", "job_config_from_dict", "load_job", "run_job", "validate_config"]
