# -*- coding: utf-8 -*-
"""
Privacy budget ledger task.

Parameters:
    budget: total epsilon; with ``k`` it is split evenly over k releases.
    k: number of releases the budget is split over.
    spend: epsilons to record, as a list or a comma separated string.
    label: label prefix of the recorded releases (default ``release``).
    tag: dataset tag of the recorded releases (default ``default``).
    ledger_file: JSON file the ledger is loaded from and saved back to. When it
        exists, budget, k and mode are ignored and listed in ``ignored_parameters``.
"""

import os
from typing import Any, List, Mapping, Optional, Sequence

from core.table import AttributeSchema
from core.task_base import TaskBase, TaskResult
from dp.budget_ledger import ACCUMULATING, BUDGETED, MODES, BudgetLedger, ledger_allocate

# Only used when the ledger is created; an existing ledger file keeps its own setup.
LEDGER_SETUP = ("budget", "k", "mode")


def parse_spends(value: Any) -> List[float]:
    """Epsilons from ``"0.5,1"`` or ``[0.5, 1]``."""
    if value is None:
        return []
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return [float(value)]
    parts = value.split(",") if isinstance(value, str) else value
    return [float(str(p).strip()) for p in parts if str(p).strip()]


class LedgerTask(TaskBase):
    """Record releases in a privacy budget ledger and report what is spent and left."""

    TASK_NAME = "dp-ledger"
    REQUIRES_TABLE = False

    def validate_parameters(self, params: Mapping[str, Any], schema: Sequence[AttributeSchema],
                            hierarchies: Mapping[str, Any]) -> List[str]:
        diagnostics: List[str] = []
        self.check_number("budget", params.get("budget"), diagnostics, minimum=0, exclusive_minimum=True)
        self.check_number("k", params.get("k"), diagnostics, minimum=1, integer=True)
        mode = params.get("mode")
        if mode is not None and mode not in MODES:
            diagnostics.append(f"mode must be one of {list(MODES)}")
        if mode == BUDGETED and params.get("budget") is None and not params.get("ledger_file"):
            diagnostics.append("budget is required in budgeted mode")
        try:
            spends = parse_spends(params.get("spend"))
        except (TypeError, ValueError):
            diagnostics.append(f"spend must be a list of numbers, got {params.get('spend')!r}")
        else:
            if any(e < 0 for e in spends):
                diagnostics.append("spend: every epsilon must be ≥ 0")
        return diagnostics

    def _open_ledger(self, context) -> tuple:
        path: Optional[str] = context.param("ledger_file")
        budget = context.param("budget")
        k = context.param("k")
        if path and os.path.exists(path):
            self.logger.info(f"Loading ledger from {path}")
            ignored = [name for name in LEDGER_SETUP if context.param(name) is not None]
            if ignored:
                self.logger.warning(f"Ledger {path} already exists; ignoring {ignored}")
            return None, BudgetLedger.load(path), ignored
        if budget is not None and k is not None:
            return (*ledger_allocate(float(budget), int(k)), [])
        if budget is not None:
            return None, BudgetLedger(BUDGETED, float(budget)), []
        return None, BudgetLedger(context.param("mode", ACCUMULATING)), []

    def run(self, context) -> TaskResult:
        per_release, ledger, ignored = self._open_ledger(context)
        label = context.param("label", "release")
        tag = context.param("tag", "default")

        start = len(ledger.entries)
        for offset, epsilon in enumerate(parse_spends(context.param("spend"))):
            ledger.spend(f"{label}-{start + offset + 1}", epsilon, tag)

        path = context.param("ledger_file")
        if path:
            ledger.save(path)
        report = ledger.to_dict()
        report["per_release_epsilon"] = per_release
        if ignored:
            report["ignored_parameters"] = ignored
        return TaskResult.success(report)
