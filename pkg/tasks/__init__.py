# -*- coding: utf-8 -*-
"""
Tasks package for the anonymization toolkit.

Each CLI subcommand is a task. Tasks are grouped in sub-packages
('syntactic', 'dp') which are scanned by the TaskRegistry; the sub-package
name is the task's category.
"""
