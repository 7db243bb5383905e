# -*- coding: utf-8 -*-
"""
Pseudonymization of a single attribute.

Values are replaced by keyed HMAC-SHA256 digests truncated to 128 bits and
encoded as 22-character URL-safe base64 tokens. The key (seed) is never
written to the output table; once it is discarded the mapping cannot be
recomputed. Pseudonymized data is still personal data: this is not an
anonymization model.
"""

import base64
import hashlib
import hmac
import logging
from dataclasses import replace
from typing import Union

from core.table import AttributeKind, Table

logger = logging.getLogger(__name__)

TOKEN_BYTES = 16


def pseudonym(value, seed: bytes) -> str:
    """Opaque token for one value under ``seed``."""
    digest = hmac.new(seed, str(value).encode("utf-8"), hashlib.sha256).digest()
    return base64.urlsafe_b64encode(digest[:TOKEN_BYTES]).decode("ascii").rstrip("=")


def pseudonymize(table: Table, attr: str, seed: Union[bytes, str]) -> Table:
    """
    Replace every cell of ``attr`` with its token.

    Equal values get equal tokens; the attribute becomes ``text``.

    Raises:
        UnknownAttributeError: If ``attr`` is not in the schema.
    """
    position = table.index_of(attr)
    key = seed.encode("utf-8") if isinstance(seed, str) else bytes(seed)

    schema = list(table.schema)
    if schema[position].kind is not AttributeKind.TEXT:
        schema[position] = replace(schema[position], kind=AttributeKind.TEXT)

    rows = tuple(
        row[:position] + (pseudonym(row[position], key),) + row[position + 1:]
        for row in table.rows
    )
    logger.info(f"Pseudonymized attribute '{attr}' over {len(rows)} rows")
    return Table(tuple(schema), rows)
