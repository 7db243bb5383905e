# -*- coding: utf-8 -*-
"""
Tests package for the anonymization toolkit.

Tests are organised by package:
- tests/core/
- tests/privacy/
- tests/dp/
- tests/jobs/
- tests/utils/

Shared fixtures (the 2019 salary tables) live in tests/conftest.py.
"""
