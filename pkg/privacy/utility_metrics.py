# -*- coding: utf-8 -*-
"""
Utility of anonymized data, measured on group-by aggregate queries.

A query is run on the original and on the anonymized table; each original
group is matched to the anonymized group that contains it (through the
generalization hierarchy of the grouping attribute) and the relative error
``|v_anon - v_orig| / |v_orig|`` is averaged over the original groups.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from core.errors import HierarchyError, UnmatchedGroupError, UtilityError, ZeroBaselineError
from core.hierarchy import GeneralizationHierarchy
from core.table import AttributeKind, Cell, Table

logger = logging.getLogger(__name__)

AGGREGATES = ("mean", "sum", "median", "count")


@dataclass(frozen=True)
class AggregateResult:
    group_key: Cell
    aggregate_value: float


def run_group_aggregate(table: Table, group_by: str, measure: str, aggregate: str = "mean") -> List[AggregateResult]:
    """
    Aggregate ``measure`` per distinct value of ``group_by``.

    Groups come back in order of first appearance.

    Raises:
        UtilityError: If the aggregate is unknown or the measure is not numeric.
        UnknownAttributeError: If an attribute is not in the schema.
    """
    if aggregate not in AGGREGATES:
        raise UtilityError(f"Unknown aggregate '{aggregate}'. Valid aggregates: {list(AGGREGATES)}")
    table.index_of(group_by)
    if aggregate != "count" and table.attribute(measure).kind is not AttributeKind.NUMERIC:
        raise UtilityError(f"Measure '{measure}' must be numeric to compute a {aggregate}")
    if table.row_count == 0:
        return []

    frame = table.to_frame()
    if aggregate != "count":
        frame[measure] = pd.to_numeric(frame[measure])
    series = frame.groupby(group_by, sort=False)[measure].agg(aggregate)

    cast = int if aggregate == "count" else float
    return [AggregateResult(key, cast(value)) for key, value in series.items()]


def run_group_mean(table: Table, group_by: str, measure: str) -> List[AggregateResult]:
    """Mean of ``measure`` per distinct value of ``group_by``."""
    return run_group_aggregate(table, group_by, measure, "mean")


def _lookup(label: Cell, anonymized: Dict[Cell, float]) -> Optional[Cell]:
    # Anonymized tables are often read back as text, so 35 also matches "35".
    if label in anonymized:
        return label
    text = str(label)
    for key in anonymized:
        if str(key) == text:
            return key
    return None


def _match(key: Cell, anonymized: Dict[Cell, float], hierarchy: Optional[GeneralizationHierarchy]) -> Cell:
    if hierarchy is None:
        matched = _lookup(key, anonymized)
        if matched is not None:
            return matched
        raise UnmatchedGroupError(f"Group {key!r} has no counterpart in the anonymized result")
    for level in range(hierarchy.max_level + 1):
        try:
            label = hierarchy.label(key, level)
        except HierarchyError:
            break
        matched = _lookup(label, anonymized)
        if matched is not None:
            return matched
    raise UnmatchedGroupError(
        f"Group {key!r} does not generalize to any anonymized group along the '{hierarchy.attribute}' hierarchy"
    )


def per_group_errors(original: Sequence[AggregateResult], anonymized: Sequence[AggregateResult],
                     hierarchy: Optional[GeneralizationHierarchy] = None) -> List[Dict[str, Any]]:
    """
    Relative error of every original group against its matching anonymized group.

    The matching anonymized group is the first hierarchy level label, from
    level 0 upward, that is an anonymized group key (compared as text when the
    types differ). Without a hierarchy only level 0 is tried.

    Raises:
        UnmatchedGroupError: If an original group has no counterpart.
        ZeroBaselineError: If an original value is 0.
    """
    lookup = {r.group_key: r.aggregate_value for r in anonymized}
    rows = []
    for result in original:
        matched = _match(result.group_key, lookup, hierarchy)
        if result.aggregate_value == 0:
            raise ZeroBaselineError(f"Original value of group {result.group_key!r} is 0; relative error is undefined")
        value = lookup[matched]
        rows.append({
            "group": result.group_key,
            "matched_group": matched,
            "original": result.aggregate_value,
            "anonymized": value,
            "error": abs(value - result.aggregate_value) / abs(result.aggregate_value),
        })
    return rows


def mean_normalized_error(original: Sequence[AggregateResult], anonymized: Sequence[AggregateResult],
                          hierarchy: Optional[GeneralizationHierarchy] = None) -> float:
    """
    Average relative error over the original groups.

    Raises:
        UtilityError: If ``original`` is empty.
    """
    if not original:
        raise UtilityError("Mean normalized error needs at least one original group")
    errors = per_group_errors(original, anonymized, hierarchy)
    return math.fsum(e["error"] for e in errors) / len(errors)


@dataclass(frozen=True)
class UtilityReport:
    query: Dict[str, Any]
    M: float
    per_group_errors: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {"query": dict(self.query), "M": self.M, "per_group_errors": list(self.per_group_errors)}


def utility_report(original: Table, anonymized: Table, group_by: str, measure: str,
                   hierarchy: Optional[GeneralizationHierarchy] = None, aggregate: str = "mean") -> UtilityReport:
    """Run one aggregate query on both tables and summarise the utility loss."""
    original_results = run_group_aggregate(original, group_by, measure, aggregate)
    anonymized_results = run_group_aggregate(anonymized, group_by, measure, aggregate)
    errors = per_group_errors(original_results, anonymized_results, hierarchy)
    if not errors:
        raise UtilityError("Mean normalized error needs at least one original group")
    m = math.fsum(e["error"] for e in errors) / len(errors)
    logger.info(f"Utility of {aggregate}({measure}) by {group_by}: M={m:.4f} over {len(errors)} groups")
    return UtilityReport({"group_by": group_by, "measure": measure, "aggregate": aggregate}, m, errors)
