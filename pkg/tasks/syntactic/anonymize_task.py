# -*- coding: utf-8 -*-
"""
Anonymization task.

Runs the lattice search and publishes the anonymized table
(``anonymized.csv``) together with a manifest: chosen node, loss,
suppressed rows, re-checked verdicts, output schema and the
reidentification risk of the published table.
"""

from typing import Any, List, Mapping, Sequence

from core.partition import partition_by_qid
from core.table import AttributeSchema
from core.task_base import TaskBase, TaskResult
from privacy.anonymizer import AnonymizationConstraints, anonymize
from privacy.models import TOTAL_VARIATION
from privacy.risk import assess_risk
from tasks.syntactic.check_task import validate_constraints

OUTPUT_TABLE = "anonymized.csv"


class AnonymizeTask(TaskBase):
    """Generalize and suppress until k-anonymity (and optional l-diversity / t-closeness) holds."""

    TASK_NAME = "anonymize"

    def validate_parameters(self, params: Mapping[str, Any], schema: Sequence[AttributeSchema],
                            hierarchies: Mapping[str, Any]) -> List[str]:
        diagnostics: List[str] = []
        validate_constraints(self, params, schema, diagnostics)
        self.check_number("k", params.get("k"), diagnostics, required=True)
        self.check_number("suppression_budget", params.get("suppression_budget"), diagnostics, minimum=0, maximum=1)
        if params.get("delta") is not None:
            diagnostics.append("delta: delta-disclosure is checked by 'check', not enforced by anonymize")

        qid = self.as_name_list(params.get("qid"))
        self.check_attributes("qid", qid, schema, diagnostics, allow_identifier=False)
        for name in qid:
            if name not in hierarchies:
                diagnostics.append(f"hierarchies: missing hierarchy for quasi-identifier '{name}'")
        return list(dict.fromkeys(diagnostics))

    def run(self, context) -> TaskResult:
        qid = self.as_name_list(context.param("qid"))
        constraints = AnonymizationConstraints(
            k=int(context.param("k")),
            l=None if context.param("l") is None else int(context.param("l")),
            t=None if context.param("t") is None else float(context.param("t")),
            sensitive=context.param("sensitive"),
            distance=context.param("distance", TOTAL_VARIATION),
        )
        budget = float(context.param("suppression_budget", 0.0))

        result = anonymize(
            context.table, qid, context.hierarchies, constraints, budget,
            max_workers=int(context.param("max_workers", context.setting("anonymizer.max_workers", 1))),
            prune=bool(context.setting("anonymizer.prune", True)),
        )

        manifest = result.to_dict()
        manifest.update({
            "qid": qid,
            "constraints": {k: v for k, v in constraints.as_mapping().items() if v is not None},
            "suppression_budget": budget,
            "input_rows": context.table.row_count,
            "output_rows": result.output_table.row_count,
        })
        if result.output_table.row_count:
            risk = assess_risk(partition_by_qid(result.output_table, qid))
            manifest["risk"] = {
                "journalist": risk.journalist,
                "prosecutor_max": risk.prosecutor_max,
                "marketer": risk.marketer,
                "class_size_histogram": risk.class_size_histogram,
            }
        return TaskResult.success(manifest, {OUTPUT_TABLE: result.output_table})
