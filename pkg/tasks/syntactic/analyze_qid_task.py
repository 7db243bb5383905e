# -*- coding: utf-8 -*-
"""
Quasi-identifier analysis task.

Parameters:
    candidates: attributes to search (default: every attribute).
    max_set_size: largest subset size enumerated (default 3).
    attrs: optional attribute set to test on its own.
"""

from typing import Any, List, Mapping, Sequence

from core.partition import find_minimal_qids, is_qid
from core.task_base import TaskBase, TaskResult
from core.table import AttributeSchema


class AnalyzeQidTask(TaskBase):
    """Find the inclusion-minimal quasi-identifiers of a table."""

    TASK_NAME = "analyze-qid"

    def validate_parameters(self, params: Mapping[str, Any], schema: Sequence[AttributeSchema],
                            hierarchies: Mapping[str, Any]) -> List[str]:
        diagnostics: List[str] = []
        self.check_attributes("candidates", self.as_name_list(params.get("candidates")), schema, diagnostics)
        self.check_attributes("attrs", self.as_name_list(params.get("attrs")), schema, diagnostics)
        self.check_number("max_set_size", params.get("max_set_size"), diagnostics, minimum=1, integer=True)
        return diagnostics

    def run(self, context) -> TaskResult:
        table = context.table
        candidates = self.as_name_list(context.param("candidates")) or list(table.names)
        max_set_size = int(context.param("max_set_size", 3))

        minimal = find_minimal_qids(table, candidates, max_set_size)
        report = {
            "candidates": candidates,
            "max_set_size": max_set_size,
            "minimal_qids": [list(q) for q in minimal],
        }

        attrs = self.as_name_list(context.param("attrs"))
        if attrs:
            found, witnesses = is_qid(table, attrs)
            report["attrs"] = {"attributes": attrs, "is_qid": found, "witnesses": [list(w) for w in witnesses]}

        self.logger.info(f"Minimal quasi-identifiers: {report['minimal_qids']}")
        return TaskResult.success(report)
