"""
Error Handler

This module provides centralized error handling for job runs: conversion of
exceptions to error reports and to process exit codes.
"""

import logging
import traceback
from typing import Any, Dict

from core.errors import AnonkitError, BudgetExceededError, InfeasibleAnonymizationError

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_INPUT_ERROR = 1
EXIT_INFEASIBLE = 2


def exit_code_for(exc: BaseException) -> int:
    """
    Map an exception to the CLI exit code.

    Infeasible constraints and refused budget spends exit with 2; every other
    error is an input error (1).
    """
    if isinstance(exc, (InfeasibleAnonymizationError, BudgetExceededError)):
        return EXIT_INFEASIBLE
    return EXIT_INPUT_ERROR


def format_exception(exc: BaseException, include_traceback: bool = False) -> Dict[str, Any]:
    """
    Format an exception for error reports and structured logging.

    Args:
        exc: Exception to format
        include_traceback: Add the formatted traceback (kept out of reports,
            which must stay byte-deterministic)

    Returns:
        Dictionary with exception details
    """
    if isinstance(exc, AnonkitError):
        code, message, details = exc.code, exc.message, dict(exc.details)
    elif isinstance(exc, (OSError, ValueError, KeyError, TypeError)):
        code, message, details = type(exc).__name__.lower(), str(exc), {}
    else:
        code, message, details = "internal_error", str(exc), {}

    result = {
        "type": exc.__class__.__name__,
        "code": code,
        "message": message,
        "details": details
    }
    if include_traceback:
        result["traceback"] = "".join(traceback.format_exception(type(exc), exc, exc.__traceback__))
    return result


def handle_job_error(error: BaseException, job_id: str = None) -> Dict[str, Any]:
    """
    Log a job failure and return its error document.

    Args:
        error: Exception that ended the job
        job_id: Job identifier for the log record

    Returns:
        The error document, with ``exit_code`` added
    """
    document = format_exception(error)
    document["exit_code"] = exit_code_for(error)
    if isinstance(error, AnonkitError):
        logger.error(f"Job {job_id} failed [{document['code']}]: {document['message']}")
    else:
        logger.error(f"Job {job_id} failed with unexpected error: {str(error)}", exc_info=True)
    return document
