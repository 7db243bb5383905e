# -*- coding: utf-8 -*-
import os

import pytest

from core.errors import JobConfigError
from utils.config_loader import ConfigLoader, deep_merge, load_config_file


@pytest.fixture
def config_dir(tmp_path):
    (tmp_path / "default_config.yaml").write_text(
        "output_dir: output\nlogging:\n  level: WARNING\n  json: false\nanonymizer:\n  max_workers: 1\n  prune: true\n",
        encoding="utf-8",
    )
    (tmp_path / "staging.yaml").write_text("logging:\n  level: INFO\n", encoding="utf-8")
    return tmp_path


def test_deep_merge_keeps_base():
    base = {"a": {"b": 1, "c": 2}, "d": [1]}
    merged = deep_merge(base, {"a": {"c": 3}, "d": [2]})
    assert merged == {"a": {"b": 1, "c": 3}, "d": [2]}
    assert base == {"a": {"b": 1, "c": 2}, "d": [1]}


def test_environment_file_overrides_defaults(config_dir):
    config = ConfigLoader(str(config_dir), env="staging", environ={}).load_config()
    assert config["logging"] == {"level": "INFO", "json": False}
    assert config["anonymizer"]["max_workers"] == 1


def test_missing_environment_file_is_skipped(config_dir):
    config = ConfigLoader(str(config_dir), env="production", environ={}).load_config()
    assert config["logging"]["level"] == "WARNING"


def test_job_file_and_environment_variables(config_dir, tmp_path):
    job = tmp_path / "job.yaml"
    job.write_text("task: check\nparameters:\n  k: 2\nanonymizer:\n  max_workers: 2\n", encoding="utf-8")
    environ = {
        "ANONKIT_ANONYMIZER__MAX_WORKERS": "4",
        "ANONKIT_LOGGING__JSON": "true",
        "ANONKIT_ENV": "staging",
        "OTHER": "ignored",
    }
    loader = ConfigLoader(str(config_dir), environ=environ)
    config = loader.load_config(str(job))

    assert loader.env == "staging"
    assert config["task"] == "check"
    assert config["parameters"] == {"k": 2}
    assert config["anonymizer"] == {"max_workers": 4, "prune": True}
    assert config["logging"]["json"] is True
    assert config["_source_file"] == os.path.abspath(str(job))
    assert "other" not in config
    assert "env" not in config
    assert loader.get("anonymizer.max_workers") == 4
    assert loader.get("anonymizer.missing", "fallback") == "fallback"


def test_json_job_file(tmp_path):
    job = tmp_path / "job.json"
    job.write_text('{"task": "risk", "parameters": {"threshold": 0.2}}', encoding="utf-8")
    assert load_config_file(str(job)) == {"task": "risk", "parameters": {"threshold": 0.2}}


def test_empty_file_is_an_empty_mapping(tmp_path):
    empty = tmp_path / "empty.yaml"
    empty.write_text("", encoding="utf-8")
    assert load_config_file(str(empty)) == {}


@pytest.mark.parametrize("name, content", [
    ("bad.yaml", "task: [unclosed\n"),
    ("bad.json", "{not json"),
    ("list.yaml", "- a\n- b\n"),
    ("job.toml", "task = 'check'\n"),
])
def test_bad_files(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    with pytest.raises(JobConfigError):
        load_config_file(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(JobConfigError, match="not found"):
        load_config_file(str(tmp_path / "absent.yaml"))


def test_shipped_defaults_hold_only_job_settings(config_loader):
    defaults = config_loader.load_config()
    assert set(defaults) == {"version", "output_dir", "logging", "anonymizer", "parameters"}
    assert defaults["anonymizer"] == {"max_workers": 1, "prune": True}
