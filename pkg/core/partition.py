# -*- coding: utf-8 -*-
"""
Equivalence-class partitioning and quasi-identifier detection.

Grouping is delegated to pandas ``groupby`` over an object-dtype frame, so
cells keep their exact Python values; class order is fixed afterwards by
sorting on the qid tuple.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from core.errors import SchemaError
from core.table import Cell, Table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquivalenceClass:
    """Rows sharing one qid value combination."""

    qid_values: Tuple[Cell, ...]
    row_indices: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.row_indices)

    def to_dict(self) -> Dict[str, Any]:
        return {"qid_values": list(self.qid_values), "size": self.size}


@dataclass(frozen=True)
class Partition:
    """
    Equivalence-class decomposition of ``table`` under ``qid``.

    Row indices in the classes refer to ``table.rows``. Rows not covered by any
    class (suppressed rows) are simply absent.
    """

    qid: Tuple[str, ...]
    classes: Tuple[EquivalenceClass, ...]
    table: Table = field(repr=False, compare=False)

    @property
    def record_count(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def sizes(self) -> List[int]:
        return [c.size for c in self.classes]

    def values(self, attribute: str, equivalence_class: EquivalenceClass) -> List[Cell]:
        """Cells of ``attribute`` for the rows of one class."""
        position = self.table.index_of(attribute)
        return [self.table.rows[i][position] for i in equivalence_class.row_indices]

    def covered_values(self, attribute: str) -> List[Cell]:
        """Cells of ``attribute`` over every row covered by the partition."""
        position = self.table.index_of(attribute)
        return [self.table.rows[i][position] for c in self.classes for i in c.row_indices]


def qid_sort_key(values: Sequence[Cell]) -> Tuple:
    """Total order on qid tuples: numbers before text, each in natural order."""
    return tuple((0, v, "") if isinstance(v, (int, float)) else (1, 0, str(v)) for v in values)


def partition_by_qid(table: Table, qid: Sequence[str]) -> Partition:
    """
    Group rows by exact equality on the qid tuple.

    Args:
        table: The table to partition.
        qid: Attribute names; an empty list yields a single class of all rows.

    Returns:
        Partition: Classes sorted by qid tuple.

    Raises:
        UnknownAttributeError: If a qid name is not in the schema.
    """
    qid = tuple(qid)
    positions = [table.index_of(name) for name in qid]

    if table.row_count == 0:
        return Partition(qid, (), table)
    if not qid:
        return Partition(qid, (EquivalenceClass((), tuple(range(table.row_count))),), table)

    frame = table.to_frame()
    groups = frame.groupby(list(qid), sort=False, dropna=False).indices

    classes = []
    for indices in groups.values():
        row_indices = tuple(sorted(int(i) for i in indices))
        first = table.rows[row_indices[0]]
        classes.append(EquivalenceClass(tuple(first[p] for p in positions), row_indices))
    classes.sort(key=lambda c: qid_sort_key(c.qid_values))

    logger.debug(f"Partitioned {table.row_count} rows on {list(qid)} into {len(classes)} classes")
    return Partition(qid, tuple(classes), table)


def is_qid(table: Table, attrs: Sequence[str]) -> Tuple[bool, List[Tuple[Cell, ...]]]:
    """
    Tell whether ``attrs`` singles out at least one record.

    Returns:
        (is_qid, witnesses): ``witnesses`` are the qid tuples held by exactly
        one row, in partition order.

    Raises:
        SchemaError: If ``attrs`` is empty.
        UnknownAttributeError: If a name is not in the schema.
    """
    if not attrs:
        raise SchemaError("Quasi-identifier detection needs at least one attribute")
    partition = partition_by_qid(table, attrs)
    witnesses = [c.qid_values for c in partition.classes if c.size == 1]
    return bool(witnesses), witnesses


def find_minimal_qids(table: Table, candidate_attrs: Iterable[str], max_set_size: int = 3) -> List[Tuple[str, ...]]:
    """
    Enumerate inclusion-minimal quasi-identifiers among the candidates.

    Subsets are visited by increasing size, up to ``max_set_size``; supersets of
    a QID already found are skipped, since they are QIDs as well.

    Returns:
        Attribute tuples, ordered by size then candidate order.
    """
    candidates = list(dict.fromkeys(candidate_attrs))
    for name in candidates:
        table.index_of(name)
    if max_set_size < 1:
        raise SchemaError(f"max_set_size must be >= 1, got {max_set_size}")

    found: List[Tuple[str, ...]] = []
    for size in range(1, min(max_set_size, len(candidates)) + 1):
        for subset in combinations(candidates, size):
            if any(set(q) <= set(subset) for q in found):
                continue
            if is_qid(table, subset)[0]:
                found.append(subset)
    logger.info(f"Found {len(found)} minimal quasi-identifiers among {candidates}")
    return found
