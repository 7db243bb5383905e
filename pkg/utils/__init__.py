# -*- coding: utf-8 -*-
"""
Utilities package for the anonymization toolkit.

This package provides helper modules used across the toolkit:
- ConfigLoader: Layered configuration (YAML files, .env, environment variables).
- LoggingManager: Structured logging setup and job event logging.
- ErrorHandler: Error documents and exit codes.
- ReportWriter: Deterministic JSON reports and CSV tables.
"""
