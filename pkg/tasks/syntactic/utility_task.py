# -*- coding: utf-8 -*-
"""
Utility report task.

Runs ``aggregate(measure) GROUP BY group_by`` on the input table and on an
anonymized version of it, then reports the mean normalized error. The
anonymized CSV is read with ``anonymized_schema`` when given; otherwise
identifiers are dropped, the measure keeps its declared kind and every other
attribute is read as text.
"""

from dataclasses import replace
from typing import Any, List, Mapping, Sequence

from core.table import AttributeKind, AttributeRole, AttributeSchema, load_table_from_path, parse_schema
from core.task_base import TaskBase, TaskResult
from privacy.utility_metrics import AGGREGATES, run_group_aggregate, utility_report


def derived_anonymized_schema(schema: Sequence[AttributeSchema], measure: str) -> List[AttributeSchema]:
    return [
        a if a.name == measure else replace(a, kind=AttributeKind.TEXT)
        for a in schema if a.role is not AttributeRole.IDENTIFIER
    ]


class UtilityTask(TaskBase):
    """Utility loss of an anonymized table on a group-by aggregate query."""

    TASK_NAME = "utility"

    def validate_parameters(self, params: Mapping[str, Any], schema: Sequence[AttributeSchema],
                            hierarchies: Mapping[str, Any]) -> List[str]:
        diagnostics: List[str] = []
        if not params.get("anonymized"):
            diagnostics.append("anonymized is required (path to the anonymized CSV)")
        for field_name in ("group_by", "measure"):
            if not params.get(field_name):
                diagnostics.append(f"{field_name} is required")
            else:
                self.check_attributes(field_name, [params[field_name]], schema, diagnostics, allow_identifier=False)
        measure = params.get("measure")
        known = {a.name: a for a in schema}
        aggregate = params.get("aggregate") or "mean"
        if aggregate not in AGGREGATES:
            diagnostics.append(f"aggregate must be one of {list(AGGREGATES)}")
        elif aggregate != "count" and measure in known and known[measure].kind is not AttributeKind.NUMERIC:
            diagnostics.append(f"measure: attribute '{measure}' must be numeric")
        return diagnostics

    def run(self, context) -> TaskResult:
        group_by = context.param("group_by")
        measure = context.param("measure")
        aggregate = context.param("aggregate", "mean")

        declared = context.param("anonymized_schema")
        schema = parse_schema(declared) if declared else derived_anonymized_schema(context.table.schema, measure)
        anonymized = load_table_from_path(context.param("anonymized"), schema)

        report = utility_report(context.table, anonymized, group_by, measure,
                                context.hierarchies.get(group_by), aggregate)
        body = report.to_dict()
        body["original_results"] = [
            {"group": r.group_key, "value": r.aggregate_value}
            for r in run_group_aggregate(context.table, group_by, measure, aggregate)
        ]
        body["anonymized_results"] = [
            {"group": r.group_key, "value": r.aggregate_value}
            for r in run_group_aggregate(anonymized, group_by, measure, aggregate)
        ]
        return TaskResult.success(body)
