"""
Configuration Loader

This module loads the toolkit configuration from layered sources: default and
environment-specific YAML files, a job file, a .env file and environment
variables.
"""

import copy
import json
import logging
import os
from typing import Any, Dict, Mapping, Optional

import yaml
from dotenv import load_dotenv

from core.errors import JobConfigError

logger = logging.getLogger(__name__)

ENV_PREFIX = "ANONKIT_"
RESERVED_ENV_VARS = {"ANONKIT_CONFIG_DIR", "ANONKIT_ENV", "ANONKIT_DOTENV_PATH"}


def deep_merge(base: Dict[str, Any], override: Mapping[str, Any]) -> Dict[str, Any]:
    """Merge ``override`` into a copy of ``base``; nested mappings merge key by key."""
    result = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, Mapping) and isinstance(result.get(key), dict):
            result[key] = deep_merge(result[key], value)
        else:
            result[key] = copy.deepcopy(value)
    return result


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Load a YAML or JSON mapping, chosen by file extension.

    Raises:
        JobConfigError: If the file is missing, unreadable or not a mapping.
    """
    if not os.path.exists(path):
        raise JobConfigError(f"Configuration file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            if path.endswith(".json"):
                data = json.load(f)
            elif path.endswith((".yaml", ".yml")):
                data = yaml.safe_load(f)
            else:
                raise JobConfigError(f"Unsupported configuration file extension: {path}. Must be .yaml, .yml, or .json.")
    except yaml.YAMLError as e:
        raise JobConfigError(f"Invalid YAML format in {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise JobConfigError(f"Invalid JSON format in {path}: {e}") from e
    except OSError as e:
        raise JobConfigError(f"Could not read configuration file {path}: {e}") from e

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise JobConfigError(f"Configuration in {path} is not a mapping")
    logger.debug(f"Loaded configuration from {path}")
    return data


class ConfigLoader:
    """
    Layered configuration loader.

    Order of precedence (lowest to highest):
    1. ``<config_dir>/default_config.yaml``
    2. ``<config_dir>/<env>.yaml``
    3. The job file passed to ``load_config``
    4. ``ANONKIT_`` environment variables (``__`` separates nested keys)

    Command-line flags are applied on top by the job runner.
    """

    def __init__(self, config_dir: Optional[str] = None, env: Optional[str] = None,
                 environ: Optional[Mapping[str, str]] = None):
        """
        Initialize the configuration loader.

        Args:
            config_dir: Directory holding the YAML files; defaults to ``ANONKIT_CONFIG_DIR`` or ``config``.
            env: Environment name; defaults to ``ANONKIT_ENV`` or ``development``.
            environ: Environment mapping to read instead of ``os.environ``.
        """
        if environ is None:
            dotenv_path = os.environ.get("ANONKIT_DOTENV_PATH", ".env")
            if os.path.exists(dotenv_path):
                load_dotenv(dotenv_path)
                logger.debug(f"Loaded environment variables from {dotenv_path}")
            environ = os.environ
        self.environ = environ
        self.config_dir = config_dir or environ.get("ANONKIT_CONFIG_DIR", "config")
        self.env = env or environ.get("ANONKIT_ENV", "development")
        self.config: Dict[str, Any] = {}

    def load_config(self, job_path: Optional[str] = None) -> Dict[str, Any]:
        """
        Load and merge every configuration source.

        Args:
            job_path: Optional job file (YAML or JSON).

        Returns:
            Merged configuration dictionary
        """
        config: Dict[str, Any] = {}
        for name in ("default_config", self.env):
            for ext in (".yaml", ".yml", ".json"):
                path = os.path.join(self.config_dir, name + ext)
                if os.path.exists(path):
                    config = deep_merge(config, load_config_file(path))
                    break
            else:
                logger.debug(f"No {name} configuration file in {self.config_dir}")

        if job_path:
            job = load_config_file(job_path)
            job.setdefault("_source_file", os.path.abspath(job_path))
            config = deep_merge(config, job)

        config = deep_merge(config, self._load_env_vars())
        self.config = config
        logger.debug(f"Configuration loaded for environment '{self.env}'")
        return config

    def _load_env_vars(self) -> Dict[str, Any]:
        """
        Read ``ANONKIT_`` variables into a nested mapping.

        ``ANONKIT_ANONYMIZER__MAX_WORKERS=4`` becomes ``{"anonymizer": {"max_workers": 4}}``;
        values are parsed as YAML scalars.
        """
        result: Dict[str, Any] = {}
        for key, raw in self.environ.items():
            if not key.startswith(ENV_PREFIX) or key in RESERVED_ENV_VARS:
                continue
            parts = key[len(ENV_PREFIX):].lower().split("__")
            try:
                value = yaml.safe_load(raw)
            except yaml.YAMLError:
                value = raw
            target = result
            for part in parts[:-1]:
                target = target.setdefault(part, {})
            target[parts[-1]] = value
        return result

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value.

        Args:
            key: Configuration key (dot notation supported)
            default: Default value if key not found
        """
        value: Any = self.config
        try:
            for part in key.split("."):
                value = value[part]
            return value
        except (KeyError, TypeError):
            return default
