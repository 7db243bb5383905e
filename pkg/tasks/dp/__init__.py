# -*- coding: utf-8 -*-
"""
Differential privacy tasks: randomized response simulation, the
reidentification bound and the budget ledger.

Tasks discovered here are categorized as 'dp' by the TaskRegistry.
"""

from .bound_task import BoundTask
from .ledger_task import LedgerTask
from .rr_simulate_task import RrSimulateTask

__all__ = ["BoundTask", "LedgerTask", "RrSimulateTask"]
