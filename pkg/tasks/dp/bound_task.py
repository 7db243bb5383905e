# -*- coding: utf-8 -*-
"""Reidentification bound of an epsilon-DP release."""

import math
from typing import Any, List, Mapping, Sequence

from core.table import AttributeSchema
from core.task_base import TaskBase, TaskResult
from dp.calculus import reid_bound


class BoundTask(TaskBase):
    """Upper bound on the probability of inferring a secret among n values from an epsilon-DP release."""

    TASK_NAME = "dp-bound"
    REQUIRES_TABLE = False

    def validate_parameters(self, params: Mapping[str, Any], schema: Sequence[AttributeSchema],
                            hierarchies: Mapping[str, Any]) -> List[str]:
        diagnostics: List[str] = []
        self.check_number("epsilon", params.get("epsilon"), diagnostics, minimum=0, required=True)
        self.check_number("n_values", params.get("n_values"), diagnostics, minimum=2, integer=True, required=True)
        return diagnostics

    def run(self, context) -> TaskResult:
        epsilon = float(context.param("epsilon"))
        n_values = int(context.param("n_values"))
        bound = reid_bound(epsilon, n_values)
        return TaskResult.success({
            "epsilon": epsilon,
            "n_values": n_values,
            "bound": bound,
            "uniform_guess": 1 / n_values,
            "advantage": bound * n_values if not math.isinf(epsilon) else float(n_values),
        })
