# -*- coding: utf-8 -*-
"""
Syntactic privacy tasks: QID analysis, model checks, anonymization,
risk and utility reports.

Tasks discovered here are categorized as 'syntactic' by the TaskRegistry.
"""

from .analyze_qid_task import AnalyzeQidTask
from .anonymize_task import AnonymizeTask
from .check_task import CheckTask
from .risk_task import RiskTask
from .utility_task import UtilityTask

__all__ = ["AnalyzeQidTask", "AnonymizeTask", "CheckTask", "RiskTask", "UtilityTask"]
