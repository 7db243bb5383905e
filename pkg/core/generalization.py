# -*- coding: utf-8 -*-
"""
Full-domain generalization of a table at one lattice node.
"""

import logging
from dataclasses import replace
from typing import Dict, Mapping, Tuple

from core.errors import GeneralizationLevelError, HierarchyError
from core.hierarchy import GeneralizationHierarchy
from core.table import AttributeKind, AttributeRole, AttributeSchema, Table

logger = logging.getLogger(__name__)


def _check_node(table: Table, hierarchies: Mapping[str, GeneralizationHierarchy],
                node: Mapping[str, int]) -> None:
    for name, level in node.items():
        table.index_of(name)
        hierarchy = hierarchies.get(name)
        if hierarchy is None:
            if level != 0:
                raise HierarchyError(f"No hierarchy declared for attribute '{name}'")
            continue
        if isinstance(level, bool) or not isinstance(level, int) or not 0 <= level <= hierarchy.max_level:
            raise GeneralizationLevelError(name, level, hierarchy.max_level)


def generalized_schema(schema: Tuple[AttributeSchema, ...], node: Mapping[str, int]) -> Tuple[AttributeSchema, ...]:
    """
    Schema of ``generalize_table``'s output: identifiers dropped, attributes
    generalized above level 0 re-typed as text.
    """
    result = []
    for attribute in schema:
        if attribute.role is AttributeRole.IDENTIFIER:
            continue
        if node.get(attribute.name, 0) > 0:
            attribute = replace(attribute, kind=AttributeKind.TEXT)
        result.append(attribute)
    return tuple(result)


def generalize_table(table: Table, hierarchies: Mapping[str, GeneralizationHierarchy],
                     node: Mapping[str, int]) -> Table:
    """
    Replace each cell of a hierarchical attribute by its label at the node's level.

    Args:
        table: Input table.
        hierarchies: Attribute name -> hierarchy.
        node: Attribute name -> level; attributes absent from the node are kept.

    Returns:
        Table: Generalized copy without identifier-role attributes.

    Raises:
        GeneralizationLevelError: If a level is outside its hierarchy's range.
        HierarchyError: If a value is outside its hierarchy's domain.
    """
    _check_node(table, hierarchies, node)

    keep = [i for i, a in enumerate(table.schema) if a.role is not AttributeRole.IDENTIFIER]
    mappers: Dict[int, GeneralizationHierarchy] = {
        table.index_of(name): hierarchies[name] for name, level in node.items() if level > 0
    }

    rows = []
    for row in table.rows:
        rows.append(tuple(
            mappers[i].label(row[i], node[table.schema[i].name]) if i in mappers else row[i]
            for i in keep
        ))

    logger.debug(f"Generalized {table.row_count} rows at node {dict(node)}")
    return Table(generalized_schema(table.schema, node), tuple(rows))
