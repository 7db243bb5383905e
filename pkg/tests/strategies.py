# -*- coding: utf-8 -*-
"""Hypothesis strategies and brute-force reference implementations."""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from hypothesis import strategies as st

from core.table import AttributeKind, AttributeRole, AttributeSchema, Table

CELLS = {
    AttributeKind.NUMERIC: st.integers(min_value=0, max_value=3),
    AttributeKind.TEXT: st.sampled_from(["x", "y", "z"]),
}


@st.composite
def tables(draw, min_rows: int = 0, max_rows: int = 50, min_attrs: int = 2, max_attrs: int = 4):
    """Small tables over tiny domains, so that classes of every size show up."""
    width = draw(st.integers(min_value=min_attrs, max_value=max_attrs))
    kinds = draw(st.lists(st.sampled_from(list(CELLS)), min_size=width, max_size=width))
    schema = tuple(
        AttributeSchema(f"a{i}", kind, AttributeRole.QUASI_IDENTIFIER) for i, kind in enumerate(kinds)
    )
    rows = draw(st.lists(st.tuples(*[CELLS[k] for k in kinds]), min_size=min_rows, max_size=max_rows))
    return Table(schema, rows)


@st.composite
def tables_with_qid(draw, min_rows: int = 1):
    """A table, a non-empty qid over all but its last attribute, and that last attribute."""
    table = draw(tables(min_rows=min_rows))
    names = list(table.names)
    qid = draw(st.lists(st.sampled_from(names[:-1]), min_size=1, unique=True))
    return table, qid, names[-1]


def naive_groups(table: Table, qid: Sequence[str]) -> Dict[Tuple, List[int]]:
    positions = [table.names.index(name) for name in qid]
    groups: Dict[Tuple, List[int]] = defaultdict(list)
    for i, row in enumerate(table.rows):
        groups[tuple(row[p] for p in positions)].append(i)
    return dict(groups)


def naive_min_class_size(table: Table, qid: Sequence[str]) -> int:
    return min((len(v) for v in naive_groups(table, qid).values()), default=0)


def naive_min_distinct(table: Table, qid: Sequence[str], sensitive: str) -> int:
    position = table.names.index(sensitive)
    return min(
        (len({table.rows[i][position] for i in rows}) for rows in naive_groups(table, qid).values()),
        default=0,
    )


def naive_journalist(table: Table, qid: Sequence[str]) -> Fraction:
    survival = Fraction(1)
    for rows in naive_groups(table, qid).values():
        survival *= Fraction(len(rows) - 1, len(rows))
    return 1 - survival
