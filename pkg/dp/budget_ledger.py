# -*- coding: utf-8 -*-
"""
Privacy budget ledger.

Releases are recorded in order with their epsilon, delta and the tag of the
dataset they touch. Releases on the same tag compose sequentially (sum);
different tags are disjoint data and compose in parallel (max).

Two modes:
- budgeted: a total budget is fixed up front and spends that would exceed it
  (or exceed the allowed number of releases) are refused.
- accumulating: every spend is accepted and the running total is reported.
"""

import json
import logging
import math
import threading
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from core.errors import BudgetExceededError
from dp.calculus import compose_parallel, compose_sequential
from utils.report_writer import dumps_report

logger = logging.getLogger(__name__)

BUDGETED = "budgeted"
ACCUMULATING = "accumulating"
MODES = (BUDGETED, ACCUMULATING)

REFUSAL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class LedgerEntry:
    label: str
    epsilon: float
    dataset_tag: str = "default"
    delta: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {"label": self.label, "epsilon": self.epsilon, "dataset_tag": self.dataset_tag, "delta": self.delta}


class BudgetLedger:
    """
    Ordered record of DP releases.

    Attributes:
        mode (str): ``budgeted`` or ``accumulating``.
        budget (float | None): Total epsilon allowed in budgeted mode.
        max_releases (int | None): Number of releases allowed in budgeted mode.
    """

    def __init__(self, mode: str = ACCUMULATING, budget: Optional[float] = None,
                 max_releases: Optional[int] = None):
        if mode not in MODES:
            raise ValueError(f"Unknown ledger mode '{mode}'. Valid modes: {list(MODES)}")
        if mode == BUDGETED and (budget is None or not budget > 0):
            raise ValueError(f"Budgeted ledgers need a positive budget, got {budget}")
        if max_releases is not None and max_releases < 1:
            raise ValueError(f"max_releases must be >= 1, got {max_releases}")
        self.mode = mode
        self.budget = float(budget) if budget is not None else None
        self.max_releases = max_releases
        self._entries: List[LedgerEntry] = []
        self._lock = threading.Lock()

    @property
    def entries(self) -> Tuple[LedgerEntry, ...]:
        return tuple(self._entries)

    @staticmethod
    def _compose(entries: List[LedgerEntry], field_name: str) -> float:
        per_tag: Dict[str, List[float]] = {}
        for entry in entries:
            per_tag.setdefault(entry.dataset_tag, []).append(getattr(entry, field_name))
        return compose_parallel(compose_sequential(values) for values in per_tag.values())

    @property
    def total_sequential(self) -> float:
        """Sequential sums per dataset tag, combined across tags by max."""
        return self._compose(self._entries, "epsilon")

    @property
    def total_delta(self) -> float:
        return self._compose(self._entries, "delta")

    @property
    def remaining(self) -> Optional[float]:
        if self.mode != BUDGETED:
            return None
        return max(self.budget - self.total_sequential, 0.0)

    def spend(self, label: str, epsilon: float, dataset_tag: str = "default", delta: float = 0.0) -> LedgerEntry:
        """
        Record a release.

        Raises:
            BudgetExceededError: In budgeted mode, if the release would exceed the
                budget or the allowed number of releases.
        """
        if math.isnan(epsilon) or epsilon < 0:
            raise ValueError(f"epsilon must be >= 0, got {epsilon}")
        if not 0 <= delta < 1:
            raise ValueError(f"delta must lie in [0, 1), got {delta}")
        entry = LedgerEntry(label, float(epsilon), dataset_tag, float(delta))

        with self._lock:
            if self.mode == BUDGETED:
                remaining = self.remaining
                if self.max_releases is not None and len(self._entries) >= self.max_releases:
                    raise BudgetExceededError(
                        f"Release '{label}' refused: all {self.max_releases} releases already spent", remaining
                    )
                projected = self._compose(self._entries + [entry], "epsilon")
                if projected > self.budget + REFUSAL_TOLERANCE:
                    raise BudgetExceededError(
                        f"Release '{label}' refused: epsilon {epsilon} exceeds the remaining budget {remaining}",
                        remaining,
                    )
            self._entries.append(entry)

        logger.info(f"Ledger spend '{label}': epsilon={epsilon} on '{dataset_tag}', total={self.total_sequential}")
        return entry

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode,
            "budget": self.budget,
            "max_releases": self.max_releases,
            "entries": [e.to_dict() for e in self._entries],
            "total_sequential": self.total_sequential,
            "total_delta": self.total_delta,
            "remaining": self.remaining,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BudgetLedger":
        """Rebuild a ledger; entries are replayed without budget checks."""
        budget = data.get("budget")
        ledger = cls(data.get("mode", ACCUMULATING), None if budget is None else float(budget),
                     data.get("max_releases"))
        for raw in data.get("entries", []):
            ledger._entries.append(LedgerEntry(
                str(raw["label"]), float(raw["epsilon"]), str(raw.get("dataset_tag", "default")),
                float(raw.get("delta", 0.0)),
            ))
        return ledger

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(dumps_report(self.to_dict()))
        logger.debug(f"Saved ledger with {len(self._entries)} entries to {path}")

    @classmethod
    def load(cls, path: str) -> "BudgetLedger":
        with open(path, "r", encoding="utf-8") as f:
            return cls.from_dict(json.load(f))


def ledger_allocate(budget: float, k: int) -> Tuple[float, BudgetLedger]:
    """
    Split ``budget`` evenly over ``k`` releases.

    Returns:
        (per_release_epsilon, ledger): a budgeted ledger allowing ``k`` releases.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not budget > 0:
        raise ValueError(f"budget must be > 0, got {budget}")
    return budget / k, BudgetLedger(BUDGETED, budget, max_releases=k)
