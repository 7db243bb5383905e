# -*- coding: utf-8 -*-
"""
Core package for the anonymization toolkit.

This package contains the data model and the task plumbing:
- Table / AttributeSchema: schema-typed tabular data and CSV ingestion.
- GeneralizationHierarchy: per-attribute generalization levels.
- Partition: equivalence classes under a quasi-identifier.
- generalize_table / pseudonymize: table transformations.
- TaskBase / TaskRegistry / ExecutionContext: task discovery and execution.
"""
