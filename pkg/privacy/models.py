# -*- coding: utf-8 -*-
"""
Syntactic privacy models evaluated over a Partition.

Each checker returns a ModelVerdict:
- k-anonymity: every class has at least k rows.
- distinct l-diversity: every class holds at least l distinct sensitive values.
- t-closeness: every class distribution lies within distance t of the
  distribution over all covered rows (total variation by default).
- delta-disclosure: every |log(q / p)| term stays strictly below delta.

Frequencies are exact fractions; comparisons against float thresholds use a
1e-9 tolerance where a distance is involved.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from core.errors import EmptyTableError, SchemaError
from core.partition import Partition, qid_sort_key
from core.table import Cell

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9

TOTAL_VARIATION = "total_variation"
EARTH_MOVERS = "earth_movers"
DISTANCES = (TOTAL_VARIATION, EARTH_MOVERS)

SUPPORT_GLOBAL = "global"
SUPPORT_CLASS = "class"


@dataclass(frozen=True)
class ModelVerdict:
    """
    Outcome of one privacy-model check.

    ``achieved`` is the best k or l actually attained, or the worst class
    distance / delta term for t-closeness and delta-disclosure.
    """

    model: str
    threshold: float
    satisfied: bool
    achieved: float
    violating_classes: Tuple[Tuple[Cell, ...], ...] = ()
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "model": self.model,
            "threshold": self.threshold,
            "satisfied": self.satisfied,
            "achieved": self.achieved,
            "violating_classes": [list(v) for v in self.violating_classes],
        }
        data.update(self.details)
        return data


@dataclass(frozen=True)
class SensitiveDistribution:
    """Value -> exact relative frequency, over a sorted support."""

    support: Tuple[Cell, ...]
    frequencies: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.frequencies and sum(self.frequencies) != 1:
            raise ValueError(f"Frequencies sum to {sum(self.frequencies)}, not 1")

    def probability(self, value: Cell) -> Fraction:
        for v, f in zip(self.support, self.frequencies):
            if v == value:
                return f
        return Fraction(0)

    def as_dict(self) -> Dict[Cell, Fraction]:
        return dict(zip(self.support, self.frequencies))


def sensitive_distribution(values: Iterable[Cell]) -> SensitiveDistribution:
    """Empirical distribution of ``values`` with exact frequencies."""
    counts = Counter(values)
    total = sum(counts.values())
    support = tuple(sorted(counts, key=lambda v: qid_sort_key((v,))))
    return SensitiveDistribution(support, tuple(Fraction(counts[v], total) for v in support))


def total_variation_distance(p: SensitiveDistribution, q: SensitiveDistribution) -> Fraction:
    """Half the L1 distance between two distributions; exact."""
    p_map, q_map = p.as_dict(), q.as_dict()
    support = set(p_map) | set(q_map)
    return sum((abs(q_map.get(v, 0) - p_map.get(v, 0)) for v in support), Fraction(0)) / 2


def earth_movers_distance(p: SensitiveDistribution, q: SensitiveDistribution) -> float:
    """
    Ordered earth mover's distance over the sorted union support.

    Adjacent values are one unit apart and the result is normalised by
    ``m - 1`` so it lies in [0, 1].
    """
    p_map, q_map = p.as_dict(), q.as_dict()
    support = sorted(set(p_map) | set(q_map), key=lambda v: qid_sort_key((v,)))
    if len(support) < 2:
        return 0.0
    diff = np.array([float(q_map.get(v, 0) - p_map.get(v, 0)) for v in support])
    return float(np.abs(np.cumsum(diff)[:-1]).sum() / (len(support) - 1))


def delta_disclosure_term(q: float, p: float, log_base: float = 10) -> float:
    """
    ``|log_base(q / p)|`` for one sensitive value; infinite when ``q`` is 0.

    Raises:
        ValueError: If ``p`` is not positive.
    """
    if p <= 0:
        raise ValueError("Global frequency must be positive")
    if q == 0:
        return math.inf
    return abs(math.log(float(q) / float(p)) / math.log(log_base))


def _check_sensitive(partition: Partition, sensitive: str) -> None:
    partition.table.index_of(sensitive)


def check_k_anonymity(partition: Partition, k: int) -> ModelVerdict:
    """Every class has at least ``k`` rows. An empty partition is vacuously k-anonymous."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    sizes = partition.sizes
    achieved = min(sizes) if sizes else 0
    violators = tuple(c.qid_values for c in partition.classes if c.size < k)
    return ModelVerdict("k-anonymity", k, not violators, achieved, violators)


def check_l_diversity(partition: Partition, sensitive: str, l: int) -> ModelVerdict:
    """Every class holds at least ``l`` distinct values of ``sensitive``."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    _check_sensitive(partition, sensitive)
    counts = [(c, len(set(partition.values(sensitive, c)))) for c in partition.classes]
    achieved = min((n for _, n in counts), default=0)
    violators = tuple(c.qid_values for c, n in counts if n < l)
    return ModelVerdict("l-diversity", l, not violators, achieved, violators, {"sensitive": sensitive})


def check_t_closeness(partition: Partition, sensitive: str, t: float,
                      distance: str = TOTAL_VARIATION) -> ModelVerdict:
    """
    Every class distribution of ``sensitive`` is within ``t`` of the distribution
    over all rows the partition covers.

    Raises:
        EmptyTableError: If the partition covers no row.
    """
    if not 0 <= t <= 1:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    if distance not in DISTANCES:
        raise ValueError(f"Unknown distance '{distance}'. Valid distances: {list(DISTANCES)}")
    _check_sensitive(partition, sensitive)
    if partition.record_count == 0:
        raise EmptyTableError("t-closeness needs at least one row")

    measure = total_variation_distance if distance == TOTAL_VARIATION else earth_movers_distance
    overall = sensitive_distribution(partition.covered_values(sensitive))

    achieved = 0.0
    violators = []
    for c in partition.classes:
        d = float(measure(overall, sensitive_distribution(partition.values(sensitive, c))))
        achieved = max(achieved, d)
        if d > t + TOLERANCE:
            violators.append(c.qid_values)
    return ModelVerdict("t-closeness", t, not violators, achieved, tuple(violators),
                        {"sensitive": sensitive, "distance": distance})


def class_delta_terms(overall: SensitiveDistribution, local: SensitiveDistribution,
                      log_base: float = 10, support: str = SUPPORT_GLOBAL) -> Dict[Cell, float]:
    """Per-value delta terms of one class against the overall distribution."""
    values = overall.support if support == SUPPORT_GLOBAL else local.support
    return {v: delta_disclosure_term(local.probability(v), overall.probability(v), log_base) for v in values}


def check_delta_disclosure(partition: Partition, sensitive: str, delta: float,
                           log_base: float = 10, support: str = SUPPORT_GLOBAL) -> ModelVerdict:
    """
    Every class keeps ``|log_base(q / p)| < delta`` for each sensitive value.

    With ``support="global"`` every value seen anywhere is tested, so a class
    missing a value fails outright; ``support="class"`` only tests the values
    the class contains.
    """
    if delta <= 0:
        raise ValueError(f"delta must be > 0, got {delta}")
    if log_base <= 1:
        raise ValueError(f"log_base must be > 1, got {log_base}")
    if support not in (SUPPORT_GLOBAL, SUPPORT_CLASS):
        raise ValueError(f"support must be '{SUPPORT_GLOBAL}' or '{SUPPORT_CLASS}', got '{support}'")
    _check_sensitive(partition, sensitive)

    details = {"sensitive": sensitive, "log_base": log_base, "support": support}
    if partition.record_count == 0:
        return ModelVerdict("delta-disclosure", delta, True, 0.0, (), details)

    overall = sensitive_distribution(partition.covered_values(sensitive))
    achieved = 0.0
    violators = []
    for c in partition.classes:
        local = sensitive_distribution(partition.values(sensitive, c))
        worst = max(class_delta_terms(overall, local, log_base, support).values(), default=0.0)
        achieved = max(achieved, worst)
        if not worst < delta:
            violators.append(c.qid_values)
    return ModelVerdict("delta-disclosure", delta, not violators, achieved, tuple(violators), details)


def find_homogeneous_classes(partition: Partition, sensitive: str) -> List[Tuple[Cell, ...]]:
    """Classes whose rows all share one sensitive value (open to the homogeneity attack)."""
    _check_sensitive(partition, sensitive)
    return [c.qid_values for c in partition.classes if len(set(partition.values(sensitive, c))) == 1]


def check_all(partition: Partition, constraints: Mapping[str, Any]) -> List[ModelVerdict]:
    """
    Evaluate the requested subset of {k, l, t, delta}.

    ``constraints`` may also carry ``sensitive``, ``distance``, ``log_base`` and
    ``support``. Verdicts come back in k, l, t, delta order.

    Raises:
        SchemaError: If l, t or delta is requested without a sensitive attribute.
    """
    sensitive: Optional[str] = constraints.get("sensitive")
    needs_sensitive = [name for name in ("l", "t", "delta") if constraints.get(name) is not None]
    if needs_sensitive and not sensitive:
        raise SchemaError(f"Constraints {needs_sensitive} need a 'sensitive' attribute")

    verdicts = []
    if constraints.get("k") is not None:
        verdicts.append(check_k_anonymity(partition, int(constraints["k"])))
    if constraints.get("l") is not None:
        verdicts.append(check_l_diversity(partition, sensitive, int(constraints["l"])))
    if constraints.get("t") is not None:
        verdicts.append(check_t_closeness(partition, sensitive, float(constraints["t"]),
                                          constraints.get("distance") or TOTAL_VARIATION))
    if constraints.get("delta") is not None:
        verdicts.append(check_delta_disclosure(partition, sensitive, float(constraints["delta"]),
                                               float(constraints.get("log_base") or 10),
                                               constraints.get("support") or SUPPORT_GLOBAL))
    for verdict in verdicts:
        logger.debug(f"{verdict.model} at {verdict.threshold}: satisfied={verdict.satisfied}, "
                     f"achieved={verdict.achieved}")
    return verdicts
