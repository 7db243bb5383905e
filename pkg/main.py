"""
Anonymization Toolkit - Main Entry Point

This module is the command-line entry point. It loads the layered
configuration, applies command-line flags on top of it, and runs one job
through the task registry:

    python main.py anonymize --config jobs/definitions/psg_anonymize.yaml
    python main.py check --config job.yaml --k 2 --l 2
    python main.py dp bound --epsilon 10 --n-values 1000000

The path of the written report and the exit code are printed on stdout.
Exit codes: 0 success, 1 input error, 2 infeasible or violated constraints.
"""

import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from core.task_registry import TaskRegistry
from jobs.job_loader import DEFAULT_OUTPUT_DIR, load_job
from jobs.job_runner import ERROR_FILE, JobOutcome, run_job
from utils.config_loader import ConfigLoader
from utils.error_handler import handle_job_error
from utils.logging_manager import setup_logging
from utils.report_writer import ReportWriter

__version__ = "1.0.0"

PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))

# (flag, parameter, type) per subcommand; a flag named "input" sets the job input, not a parameter.
TABLE_FLAGS: List[Tuple[str, str, type]] = [("--input", "input", str)]
TASK_FLAGS: Dict[str, List[Tuple[str, str, type]]] = {
    "analyze-qid": TABLE_FLAGS + [
        ("--candidates", "candidates", str),
        ("--max-set-size", "max_set_size", int),
        ("--attrs", "attrs", str),
    ],
    "check": TABLE_FLAGS + [
        ("--qid", "qid", str),
        ("--k", "k", int),
        ("--l", "l", int),
        ("--t", "t", float),
        ("--delta", "delta", float),
        ("--log-base", "log_base", float),
        ("--sensitive", "sensitive", str),
        ("--support", "support", str),
        ("--distance", "distance", str),
    ],
    "anonymize": TABLE_FLAGS + [
        ("--qid", "qid", str),
        ("--k", "k", int),
        ("--l", "l", int),
        ("--t", "t", float),
        ("--sensitive", "sensitive", str),
        ("--distance", "distance", str),
        ("--suppression-budget", "suppression_budget", float),
        ("--max-workers", "max_workers", int),
    ],
    "risk": TABLE_FLAGS + [
        ("--qid", "qid", str),
        ("--threshold", "threshold", float),
    ],
    "utility": TABLE_FLAGS + [
        ("--anonymized", "anonymized", str),
        ("--group-by", "group_by", str),
        ("--measure", "measure", str),
        ("--aggregate", "aggregate", str),
    ],
    "dp-rr-simulate": [
        ("--n", "n", int),
        ("--true-count", "true_count", int),
        ("--p-honest", "p_honest", float),
        ("--seed", "seed", int),
        ("--domain-size", "domain_size", int),
    ],
    "dp-bound": [
        ("--epsilon", "epsilon", float),
        ("--n-values", "n_values", int),
    ],
    "dp-ledger": [
        ("--budget", "budget", float),
        ("--k", "k", int),
        ("--spend", "spend", str),
        ("--label", "label", str),
        ("--tag", "tag", str),
        ("--mode", "mode", str),
        ("--ledger-file", "ledger_file", str),
    ],
}


class AnonkitToolkit:
    """
    Main orchestrator: configuration, logging setup and job execution.
    """

    def __init__(self, config_dir: Optional[str] = None, env: Optional[str] = None,
                 environ: Optional[Mapping[str, str]] = None, log_level: Optional[str] = None):
        source = os.environ if environ is None else environ
        config_dir = config_dir or source.get("ANONKIT_CONFIG_DIR") or os.path.join(PROJECT_ROOT, "config")
        self.config_loader = ConfigLoader(config_dir=config_dir, env=env, environ=environ)
        self.log_level = log_level
        self.registry = TaskRegistry()
        self.logger = logging.getLogger(self.__class__.__name__)

    def run(self, task: Optional[str], job_path: Optional[str] = None,
            overrides: Optional[Mapping[str, Any]] = None) -> JobOutcome:
        """
        Run one job.

        Args:
            task: Task name; ``None`` runs the task named in the job file.
            job_path: Optional job file.
            overrides: Values from command-line flags.
        """
        merged: Dict[str, Any] = dict(overrides or {})
        if task:
            merged["task"] = task
        config = load_job(job_path, merged, self.config_loader)
        setup_logging(config.settings.get("logging"), self.log_level)
        self.logger.info(f"Running task '{config.task}' (job {config.job_id})")
        return run_job(config, self.registry)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="Job file (YAML or JSON)")
    common.add_argument("--output-dir", default=argparse.SUPPRESS, help="Directory for report.json / error.json")
    common.add_argument("--log-level", default=argparse.SUPPRESS, help="Root log level (DEBUG, INFO, ...)")
    return common


def _add_task_flags(parser: argparse.ArgumentParser, task: str) -> None:
    parser.set_defaults(task=task)
    for flag, dest, kind in TASK_FLAGS[task]:
        parser.add_argument(flag, dest=f"param_{dest}", type=kind, default=None)


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="anonkit", parents=[common],
                                     description="Anonymization and reidentification-risk toolkit")
    parser.add_argument("--version", action="version", version=f"anonkit {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser("run", parents=[common], help="Run the task named in the job file")
    run_parser.set_defaults(task=None)

    for task in ("analyze-qid", "check", "anonymize", "risk", "utility"):
        _add_task_flags(commands.add_parser(task, parents=[common]), task)

    dp_parser = commands.add_parser("dp", parents=[common], help="Differential privacy tools")
    dp_commands = dp_parser.add_subparsers(dest="dp_command", required=True)
    for name in ("rr-simulate", "bound", "ledger"):
        _add_task_flags(dp_commands.add_parser(name, parents=[common]), f"dp-{name}")
    return parser


def overrides_from_args(args: argparse.Namespace) -> Dict[str, Any]:
    """Job configuration values carried by the command-line flags."""
    overrides: Dict[str, Any] = {}
    parameters: Dict[str, Any] = {}
    for key, value in vars(args).items():
        if not key.startswith("param_") or value is None:
            continue
        name = key[len("param_"):]
        if name == "input":
            overrides["input"] = value
        else:
            parameters[name] = value
    if parameters:
        overrides["parameters"] = parameters
    output_dir = getattr(args, "output_dir", None)
    if output_dir:
        overrides["output_dir"] = output_dir
    return overrides


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    overrides = overrides_from_args(args)
    log_level = getattr(args, "log_level", None)
    setup_logging(None, log_level)

    try:
        toolkit = AnonkitToolkit(log_level=log_level)
        outcome = toolkit.run(args.task, getattr(args, "config", None), overrides)
    except Exception as e:
        # Failures before the job is loaded (unreadable job file, bad config layer).
        document = handle_job_error(e, "cli")
        path = ReportWriter(overrides.get("output_dir", DEFAULT_OUTPUT_DIR)).write_json(ERROR_FILE, document)
        outcome = JobOutcome(document["exit_code"], "failure", error_path=path)

    print(outcome.output_path)
    print(f"exit code: {outcome.exit_code}")
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
