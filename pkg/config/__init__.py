# -*- coding: utf-8 -*-
"""
Configuration package for the anonymization toolkit.

This package stores the default and environment-specific configuration files
(YAML) that are loaded by the ConfigLoader.
"""
