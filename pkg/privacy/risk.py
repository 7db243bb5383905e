# -*- coding: utf-8 -*-
"""
Reidentification risk under the prosecutor, journalist and marketer attacker models.

All three are functions of the equivalence-class sizes only. Arithmetic is
exact (fractions) and converted to float at the edge. Rows not covered by
the partition (suppressed rows) are ignored.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Tuple

from core.errors import EmptyPartitionError
from core.partition import Partition

logger = logging.getLogger(__name__)


def _require_classes(partition: Partition) -> None:
    if not partition.classes:
        raise EmptyPartitionError("Risk is undefined for a partition without classes")


def prosecutor_risk(partition: Partition) -> Tuple[Dict[int, float], float]:
    """
    Per-record risk ``1 / |class|`` and its maximum.

    Returns:
        (per_record, maximum): ``per_record`` is keyed by row index.
    """
    _require_classes(partition)
    per_record = {i: 1.0 / c.size for c in partition.classes for i in c.row_indices}
    return dict(sorted(per_record.items())), 1.0 / min(partition.sizes)


def journalist_risk(partition: Partition) -> float:
    """Probability that at least one per-class guess succeeds: ``1 - prod(1 - 1/|c|)``."""
    _require_classes(partition)
    survival = Fraction(1)
    for c in partition.classes:
        survival *= 1 - Fraction(1, c.size)
    return float(1 - survival)


def marketer_risk(partition: Partition) -> float:
    """Expected fraction of records correctly reidentified: ``#classes / #records``."""
    _require_classes(partition)
    return float(Fraction(len(partition.classes), partition.record_count))


def class_size_histogram(partition: Partition) -> Dict[int, int]:
    """Class size -> number of classes with that size."""
    return dict(sorted(Counter(partition.sizes).items()))


@dataclass(frozen=True)
class RiskReport:
    """Aggregate view of the three attacker models over one partition."""

    prosecutor_per_record: Dict[int, float]
    prosecutor_max: float
    journalist: float
    marketer: float
    class_size_histogram: Dict[int, int] = field(default_factory=dict)

    def records_at_risk(self, threshold: float) -> int:
        """Number of records whose prosecutor risk exceeds ``threshold``."""
        return sum(1 for r in self.prosecutor_per_record.values() if r > threshold)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "prosecutor_per_record": {str(i): r for i, r in self.prosecutor_per_record.items()},
            "prosecutor_max": self.prosecutor_max,
            "journalist": self.journalist,
            "marketer": self.marketer,
            "class_size_histogram": {str(s): n for s, n in self.class_size_histogram.items()},
        }


def assess_risk(partition: Partition) -> RiskReport:
    """
    Compute every risk measure for a partition.

    Raises:
        EmptyPartitionError: If the partition has no classes.
    """
    per_record, maximum = prosecutor_risk(partition)
    report = RiskReport(
        prosecutor_per_record=per_record,
        prosecutor_max=maximum,
        journalist=journalist_risk(partition),
        marketer=marketer_risk(partition),
        class_size_histogram=class_size_histogram(partition),
    )
    logger.info(f"Risk over {partition.record_count} records: prosecutor={report.prosecutor_max:.4f}, "
                f"journalist={report.journalist:.4f}, marketer={report.marketer:.4f}")
    return report
