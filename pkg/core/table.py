# -*- coding: utf-8 -*-
"""
Tabular data model for the anonymization toolkit.

This module provides:
- AttributeSchema: name, kind and role of a single attribute.
- Table: an immutable rectangular dataset typed by a schema.
- load_table / load_table_from_path: schema-driven CSV ingestion.
- write_table: CSV rendering of a table.

Cells are Python scalars: ``int`` or ``float`` for numeric attributes and
``str`` for categorical and text attributes (interval labels included).
"""

import csv
import io
import logging
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import pandas as pd

from core.errors import SchemaError, TableParseError, UnknownAttributeError

logger = logging.getLogger(__name__)

Cell = Union[int, float, str]
Row = Tuple[Cell, ...]

_INTEGER_PATTERN = re.compile(r"^[+-]?\d+$")


class AttributeKind(Enum):
    """How the cells of an attribute are parsed."""
    NUMERIC = "numeric"
    CATEGORICAL = "categorical"
    TEXT = "text"


class AttributeRole(Enum):
    """Disclosure role of an attribute."""
    IDENTIFIER = "identifier"
    QUASI_IDENTIFIER = "quasi_identifier"
    SENSITIVE = "sensitive"
    INSENSITIVE = "insensitive"


@dataclass(frozen=True)
class AttributeSchema:
    """Declaration of one attribute: its name, cell kind and role."""

    name: str
    kind: AttributeKind = AttributeKind.TEXT
    role: AttributeRole = AttributeRole.INSENSITIVE

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "AttributeSchema":
        """
        Build an attribute declaration from its JSON form ``{name, kind, role}``.

        Raises:
            SchemaError: If the name is missing or kind/role are not recognised.
        """
        name = data.get("name")
        if not name or not isinstance(name, str):
            raise SchemaError(f"Attribute declaration is missing a 'name': {dict(data)}")
        try:
            kind = AttributeKind(data.get("kind", AttributeKind.TEXT.value))
        except ValueError:
            raise SchemaError(
                f"Attribute '{name}' has unknown kind '{data.get('kind')}'. "
                f"Valid kinds: {[k.value for k in AttributeKind]}"
            )
        try:
            role = AttributeRole(data.get("role", AttributeRole.INSENSITIVE.value))
        except ValueError:
            raise SchemaError(
                f"Attribute '{name}' has unknown role '{data.get('role')}'. "
                f"Valid roles: {[r.value for r in AttributeRole]}"
            )
        return cls(name=name.strip(), kind=kind, role=role)

    def to_dict(self) -> Dict[str, str]:
        return {"name": self.name, "kind": self.kind.value, "role": self.role.value}


def parse_schema(declarations: Iterable[Mapping[str, Any]]) -> Tuple[AttributeSchema, ...]:
    """Parse a list of JSON attribute declarations and check names are unique."""
    schema = tuple(AttributeSchema.from_dict(d) for d in declarations)
    _check_unique_names(schema)
    return schema


def _check_unique_names(schema: Sequence[AttributeSchema]) -> None:
    seen = set()
    for attribute in schema:
        if attribute.name in seen:
            raise SchemaError(f"Duplicate attribute name in schema: '{attribute.name}'")
        seen.add(attribute.name)


@dataclass(frozen=True)
class Table:
    """
    Immutable rectangular dataset.

    Attributes:
        schema: Attribute declarations, in column order.
        rows: One tuple of cells per record, aligned with ``schema``.
    """

    schema: Tuple[AttributeSchema, ...]
    rows: Tuple[Row, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "schema", tuple(self.schema))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        _check_unique_names(self.schema)
        width = len(self.schema)
        for position, row in enumerate(self.rows):
            if len(row) != width:
                raise TableParseError(
                    f"expected {width} cells, found {len(row)}", row=position + 1
                )

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(a.name for a in self.schema)

    def index_of(self, name: str) -> int:
        """Column position of ``name``; raises UnknownAttributeError if absent."""
        for position, attribute in enumerate(self.schema):
            if attribute.name == name:
                return position
        raise UnknownAttributeError(name, self.names)

    def attribute(self, name: str) -> AttributeSchema:
        return self.schema[self.index_of(name)]

    def column(self, name: str) -> List[Cell]:
        position = self.index_of(name)
        return [row[position] for row in self.rows]

    def names_with_role(self, role: AttributeRole) -> List[str]:
        return [a.name for a in self.schema if a.role is role]

    def select_rows(self, indices: Iterable[int]) -> "Table":
        """New table holding the given rows, in the given order."""
        return Table(self.schema, tuple(self.rows[i] for i in indices))

    def to_frame(self) -> pd.DataFrame:
        """
        Object-dtype DataFrame view of the table.

        Object dtype keeps cells as the Python scalars stored in the table, so
        group keys coming back from pandas compare equal to the table's cells.
        """
        return pd.DataFrame(list(self.rows), columns=list(self.names), dtype=object)


def _parse_cell(raw: str, attribute: AttributeSchema, row_number: int) -> Cell:
    text = raw.strip()
    if attribute.kind is not AttributeKind.NUMERIC:
        return text
    if _INTEGER_PATTERN.match(text):
        return int(text)
    try:
        number = float(text)
    except ValueError:
        raise TableParseError(
            f"cannot parse '{raw}' as a number", row=row_number, column=attribute.name
        )
    if not math.isfinite(number):
        raise TableParseError(
            f"non-finite number '{raw}'", row=row_number, column=attribute.name
        )
    return number


def load_table(csv_bytes: Union[bytes, str], schema: Sequence[AttributeSchema]) -> Table:
    """
    Parse comma-separated text with a header row into a typed Table.

    Args:
        csv_bytes: UTF-8 CSV content (bytes or already-decoded text).
        schema: Attribute declarations; header names must match them in order.

    Returns:
        Table: Cells parsed per attribute kind.

    Raises:
        SchemaError: If the header does not match the schema.
        TableParseError: On a row arity mismatch or an unparsable numeric cell.
            Row numbers count records after the header, starting at 1.
    """
    schema = tuple(schema)
    _check_unique_names(schema)
    text = csv_bytes.decode("utf-8-sig") if isinstance(csv_bytes, bytes) else csv_bytes

    # csv.reader keeps short rows short; pandas would pad them silently.
    records = list(csv.reader(io.StringIO(text)))
    records = [r for r in records if r]
    if not records:
        raise SchemaError("CSV input has no header row")

    header = [name.strip() for name in records[0]]
    expected = [a.name for a in schema]
    if header != expected:
        raise SchemaError(f"CSV header {header} does not match schema attributes {expected}")

    rows = []
    for row_number, record in enumerate(records[1:], start=1):
        if len(record) != len(schema):
            raise TableParseError(
                f"expected {len(schema)} cells, found {len(record)}", row=row_number
            )
        rows.append(tuple(_parse_cell(raw, a, row_number) for raw, a in zip(record, schema)))

    logger.debug(f"Loaded table with {len(rows)} rows and {len(schema)} attributes")
    return Table(schema, tuple(rows))


def load_table_from_path(path: str, schema: Sequence[AttributeSchema]) -> Table:
    """Read a UTF-8 CSV file and parse it with ``load_table``."""
    logger.info(f"Reading table from {path}")
    with open(path, "rb") as f:
        return load_table(f.read(), schema)


def write_table(table: Table) -> str:
    """Render a table as CSV text with a header row and ``\\n`` line endings."""
    return table.to_frame().to_csv(index=False, lineterminator="\n")
