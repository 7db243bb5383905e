# -*- coding: utf-8 -*-
"""
Privacy model check task.

Partitions the input table on ``qid`` and evaluates every requested model
among k-anonymity, l-diversity, t-closeness and delta-disclosure. Exits with
status 2 when a model is violated.
"""

from typing import Any, List, Mapping, Sequence

from core.partition import partition_by_qid
from core.table import AttributeSchema
from core.task_base import TaskBase, TaskResult
from privacy.models import DISTANCES, SUPPORT_CLASS, SUPPORT_GLOBAL, check_all, find_homogeneous_classes

MODEL_PARAMETERS = ("k", "l", "t", "delta")


def validate_constraints(task: TaskBase, params: Mapping[str, Any], schema: Sequence[AttributeSchema],
                         diagnostics: List[str]) -> None:
    """Diagnostics shared by the tasks taking privacy-model parameters."""
    qid = task.as_name_list(params.get("qid"))
    if not qid:
        diagnostics.append("qid must name at least one attribute")
    task.check_attributes("qid", qid, schema, diagnostics)

    task.check_number("k", params.get("k"), diagnostics, minimum=1, integer=True)
    task.check_number("l", params.get("l"), diagnostics, minimum=1, integer=True)
    task.check_number("t", params.get("t"), diagnostics, minimum=0, maximum=1)
    task.check_number("delta", params.get("delta"), diagnostics, minimum=0, exclusive_minimum=True)
    task.check_number("log_base", params.get("log_base"), diagnostics, minimum=1, exclusive_minimum=True)

    sensitive = params.get("sensitive")
    needs_sensitive = [name for name in ("l", "t", "delta") if params.get(name) is not None]
    if needs_sensitive and not sensitive:
        diagnostics.append(f"sensitive is required by {', '.join(needs_sensitive)}")
    if sensitive:
        task.check_attributes("sensitive", [sensitive], schema, diagnostics, allow_identifier=False)
        if sensitive in qid:
            diagnostics.append(f"sensitive: attribute '{sensitive}' is also a quasi-identifier")

    if params.get("support") not in (None, SUPPORT_GLOBAL, SUPPORT_CLASS):
        diagnostics.append(f"support must be '{SUPPORT_GLOBAL}' or '{SUPPORT_CLASS}'")
    if params.get("distance") not in (None,) + DISTANCES:
        diagnostics.append(f"distance must be one of {list(DISTANCES)}")


class CheckTask(TaskBase):
    """Check k-anonymity, l-diversity, t-closeness and delta-disclosure of a table."""

    TASK_NAME = "check"

    def validate_parameters(self, params: Mapping[str, Any], schema: Sequence[AttributeSchema],
                            hierarchies: Mapping[str, Any]) -> List[str]:
        diagnostics: List[str] = []
        validate_constraints(self, params, schema, diagnostics)
        if all(params.get(name) is None for name in MODEL_PARAMETERS):
            diagnostics.append(f"check needs at least one of {', '.join(MODEL_PARAMETERS)}")
        return diagnostics

    def run(self, context) -> TaskResult:
        qid = self.as_name_list(context.param("qid"))
        partition = partition_by_qid(context.table, qid)
        constraints = {name: context.param(name) for name in MODEL_PARAMETERS}
        constraints.update({
            "sensitive": context.param("sensitive"),
            "log_base": context.param("log_base", 10),
            "support": context.param("support", SUPPORT_GLOBAL),
            "distance": context.param("distance"),
        })
        verdicts = check_all(partition, constraints)
        satisfied = all(v.satisfied for v in verdicts)

        report = {
            "qid": qid,
            "class_count": len(partition.classes),
            "class_sizes": partition.sizes,
            "verdicts": [v.to_dict() for v in verdicts],
            "satisfied": satisfied,
        }
        if constraints["sensitive"]:
            report["homogeneous_classes"] = [
                list(v) for v in find_homogeneous_classes(partition, constraints["sensitive"])
            ]

        if satisfied:
            return TaskResult.success(report)
        violated = [v.model for v in verdicts if not v.satisfied]
        self.logger.warning(f"Privacy models violated on {qid}: {violated}")
        return TaskResult.violated(report)
