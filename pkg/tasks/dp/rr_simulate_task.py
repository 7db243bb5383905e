# -*- coding: utf-8 -*-
"""
Randomized response survey simulation.

Parameters: n, true_count, p_honest (default 0.5), seed (default 0),
domain_size (default 2).
"""

from typing import Any, List, Mapping, Sequence

from core.table import AttributeSchema
from core.task_base import TaskBase, TaskResult
from dp.randomized_response import (
    RandomizedResponseMechanism,
    rr_epsilon,
    rr_estimate_count,
    simulate_survey,
)


class RrSimulateTask(TaskBase):
    """Simulate a binary randomized response survey and estimate the true count."""

    TASK_NAME = "dp-rr-simulate"
    REQUIRES_TABLE = False

    def validate_parameters(self, params: Mapping[str, Any], schema: Sequence[AttributeSchema],
                            hierarchies: Mapping[str, Any]) -> List[str]:
        diagnostics: List[str] = []
        self.check_number("n", params.get("n"), diagnostics, minimum=1, integer=True, required=True)
        self.check_number("true_count", params.get("true_count"), diagnostics, minimum=0, integer=True, required=True)
        self.check_number("p_honest", params.get("p_honest"), diagnostics, minimum=0, maximum=1,
                          exclusive_minimum=True)
        self.check_number("seed", params.get("seed"), diagnostics, minimum=0, integer=True)
        self.check_number("domain_size", params.get("domain_size"), diagnostics, minimum=2, maximum=2, integer=True)
        n, true_count = params.get("n"), params.get("true_count")
        if isinstance(n, int) and isinstance(true_count, int) and true_count > n:
            diagnostics.append("true_count must be ≤ n")
        return diagnostics

    def run(self, context) -> TaskResult:
        n = int(context.param("n"))
        true_count = int(context.param("true_count"))
        seed = int(context.param("seed", 0))
        mech = RandomizedResponseMechanism(float(context.param("p_honest", 0.5)),
                                           int(context.param("domain_size", 2)))

        observed = simulate_survey(n, true_count, mech, seed)
        estimate = rr_estimate_count(observed, n, mech)
        report = {
            "n": n,
            "true_count": true_count,
            "seed": seed,
            "p_honest": mech.p_honest,
            "domain_size": mech.domain_size,
            "epsilon": rr_epsilon(mech),
            "p_truthful_answer": mech.p_honest + (1 - mech.p_honest) / mech.domain_size,
            "observed_true": observed,
            "estimate": estimate.estimate,
            "estimate_clamped": estimate.clamped,
        }
        self.logger.info(f"Observed {observed} positive answers out of {n}; estimate {estimate.estimate:.1f}")
        return TaskResult.success(report)
