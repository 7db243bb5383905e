# -*- coding: utf-8 -*-
"""Shared fixtures: the 2019 salary tables, their hierarchies and the shipped job files."""

import os

import pytest

from core.hierarchy import IntervalHierarchy, TaxonomyHierarchy
from core.table import load_table, parse_schema
from jobs.job_loader import load_job
from utils.config_loader import ConfigLoader

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DEFINITIONS_DIR = os.path.join(PROJECT_ROOT, "jobs", "definitions")

SOURCE_SCHEMA = [
    {"name": "ID", "kind": "text", "role": "identifier"},
    {"name": "age", "kind": "numeric", "role": "quasi_identifier"},
    {"name": "Club", "kind": "categorical", "role": "quasi_identifier"},
    {"name": "Salaire", "kind": "numeric", "role": "sensitive"},
]

PUBLISHED_SCHEMA = [
    {"name": "age", "kind": "text", "role": "quasi_identifier"},
    {"name": "Club", "kind": "text", "role": "quasi_identifier"},
    {"name": "Salaire", "kind": "numeric", "role": "sensitive"},
]


def read_fixture(name: str) -> bytes:
    with open(os.path.join(DEFINITIONS_DIR, name), "rb") as f:
        return f.read()


@pytest.fixture
def definitions_dir():
    return DEFINITIONS_DIR


@pytest.fixture
def source_schema():
    return parse_schema(SOURCE_SCHEMA)


@pytest.fixture
def published_schema():
    return parse_schema(PUBLISHED_SCHEMA)


@pytest.fixture
def salaries(source_schema):
    """All six players."""
    return load_table(read_fixture("salaries_2019.csv"), source_schema)


@pytest.fixture
def psg(source_schema):
    """The four PSG players."""
    return load_table(read_fixture("psg.csv"), source_schema)


@pytest.fixture
def psg_published(published_schema):
    """The four PSG players generalized to decades (2-anonymous)."""
    return load_table(read_fixture("psg_2anonymous.csv"), published_schema)


@pytest.fixture
def salaries_published(published_schema):
    """All six players, 2-anonymous but only 1-diverse."""
    return load_table(read_fixture("salaries_2anonymous.csv"), published_schema)


@pytest.fixture
def hierarchies():
    return {
        "age": IntervalHierarchy("age", [10]),
        "Club": TaxonomyHierarchy("Club", [{"PSG": "*", "OM": "*"}]),
    }


@pytest.fixture
def config_loader():
    """Loads the shipped defaults only; the process environment is ignored."""
    return ConfigLoader(os.path.join(PROJECT_ROOT, "config"), env="test", environ={})


@pytest.fixture
def load_definition(config_loader, tmp_path):
    """Load a job from jobs/definitions with its output redirected under tmp_path."""
    def load(name, parameters=None, **overrides):
        overrides.setdefault("output_dir", str(tmp_path / "out"))
        if parameters:
            overrides["parameters"] = parameters
        return load_job(os.path.join(DEFINITIONS_DIR, name), overrides, config_loader)
    return load
