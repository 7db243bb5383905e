# -*- coding: utf-8 -*-
"""
Reidentification risk report task.

Parameters:
    qid: attributes the attacker knows.
    threshold: optional prosecutor-risk threshold for the records-at-risk count.
"""

from typing import Any, List, Mapping, Sequence

from core.partition import partition_by_qid
from core.table import AttributeSchema
from core.task_base import TaskBase, TaskResult
from privacy.risk import assess_risk


class RiskTask(TaskBase):
    """Journalist, prosecutor and marketer risk of a table under a quasi-identifier."""

    TASK_NAME = "risk"

    def validate_parameters(self, params: Mapping[str, Any], schema: Sequence[AttributeSchema],
                            hierarchies: Mapping[str, Any]) -> List[str]:
        diagnostics: List[str] = []
        qid = self.as_name_list(params.get("qid"))
        if not qid:
            diagnostics.append("qid must name at least one attribute")
        self.check_attributes("qid", qid, schema, diagnostics)
        self.check_number("threshold", params.get("threshold"), diagnostics, minimum=0, maximum=1)
        return diagnostics

    def run(self, context) -> TaskResult:
        qid = self.as_name_list(context.param("qid"))
        report = assess_risk(partition_by_qid(context.table, qid))

        body = report.to_dict()
        body["qid"] = qid
        threshold = context.param("threshold")
        if threshold is not None:
            body["records_at_risk"] = {"threshold": threshold, "count": report.records_at_risk(float(threshold))}
        return TaskResult.success(body)
