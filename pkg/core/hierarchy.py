# -*- coding: utf-8 -*-
"""
Generalization hierarchies.

A hierarchy maps each ground value of one attribute to a coarser label at
every level. Level 0 is the identity; the top level maps every value to a
single label. Two concrete shapes are supported:

- IntervalHierarchy: numeric bins of increasing width, rendered "[lo;hi]".
- TaxonomyHierarchy: explicit value -> label mappings per level.

IdentityHierarchy stands in for quasi-identifiers that are never generalized.
"""

import logging
import math
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

from core.errors import GeneralizationLevelError, HierarchyError

logger = logging.getLogger(__name__)

ROOT_LABEL = "*"

Number = Union[int, float]


class GeneralizationHierarchy(ABC):
    """
    Abstract base class for per-attribute generalization hierarchies.

    Attributes:
        attribute (str): Name of the attribute the hierarchy applies to.
    """

    def __init__(self, attribute: str):
        self.attribute = attribute

    @property
    @abstractmethod
    def max_level(self) -> int:
        """Index of the top level."""

    @abstractmethod
    def _label_at(self, value: Any, level: int) -> Any:
        """Label of ``value`` at ``1 <= level <= max_level``."""

    def label(self, value: Any, level: int) -> Any:
        """
        Generalize one value.

        Args:
            value: A ground value of the attribute.
            level: Target level; 0 returns the value unchanged.

        Raises:
            GeneralizationLevelError: If ``level`` is outside ``[0, max_level]``.
            HierarchyError: If the value is outside the hierarchy's domain.
        """
        if not isinstance(level, int) or level < 0 or level > self.max_level:
            raise GeneralizationLevelError(self.attribute, level, self.max_level)
        if level == 0:
            return value
        return self._label_at(value, level)

    def to_dict(self) -> Dict[str, Any]:
        return {"attribute": self.attribute, "max_level": self.max_level}


class IdentityHierarchy(GeneralizationHierarchy):
    """Hierarchy with only level 0; the attribute is kept as is."""

    @property
    def max_level(self) -> int:
        return 0

    def _label_at(self, value: Any, level: int) -> Any:
        return value


def _is_integral(number: Any) -> bool:
    if isinstance(number, bool) or not isinstance(number, (int, float)):
        return False
    return isinstance(number, int) or (math.isfinite(number) and number.is_integer())


class IntervalHierarchy(GeneralizationHierarchy):
    """
    Numeric hierarchy built from bin widths.

    Level ``i`` (1-based) puts ``v`` in the bin starting at
    ``floor(v / w_i) * w_i`` and labels it ``"[lo;hi]"`` with ``hi = lo + w_i - 1``.
    A root level ``"*"`` sits above the widest bins.

    Bins are closed ranges of integers, so widths must be whole numbers and
    only integral values (``39`` or ``39.0``) can be generalized.
    """

    def __init__(self, attribute: str, widths: Sequence[Number]):
        super().__init__(attribute)
        if not widths:
            raise HierarchyError(f"Interval hierarchy for '{attribute}' needs at least one width")
        previous = None
        checked: List[int] = []
        for width in widths:
            if not _is_integral(width) or width <= 0:
                raise HierarchyError(
                    f"Interval widths for '{attribute}' must be positive whole numbers, got {width!r}"
                )
            width = int(width)
            if previous is not None and width <= previous:
                raise HierarchyError(
                    f"Interval widths for '{attribute}' must increase, got {list(widths)}"
                )
            if previous is not None and width % previous:
                raise HierarchyError(
                    f"Interval width {width} for '{attribute}' is not a multiple of {previous}; "
                    "bins would not nest"
                )
            checked.append(width)
            previous = width
        self.widths = checked

    @property
    def max_level(self) -> int:
        return len(self.widths) + 1

    def _label_at(self, value: Any, level: int) -> Any:
        if not _is_integral(value):
            raise HierarchyError(
                f"Interval hierarchy for '{self.attribute}' only generalizes whole numbers, got {value!r}"
            )
        if level == self.max_level:
            return ROOT_LABEL
        width = self.widths[level - 1]
        low = (int(value) // width) * width
        return f"[{low};{low + width - 1}]"

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["interval_widths"] = list(self.widths)
        return data


class TaxonomyHierarchy(GeneralizationHierarchy):
    """
    Hierarchy given as one value -> label mapping per level.

    Every level must cover the same ground domain, and values sharing a
    label at one level must share a label at every higher level. Lookups use
    ``str(value)`` so numeric cells can be generalized by a taxonomy too.
    """

    def __init__(self, attribute: str, levels: Sequence[Mapping[Any, Any]]):
        super().__init__(attribute)
        if not levels:
            raise HierarchyError(f"Taxonomy hierarchy for '{attribute}' needs at least one level")

        mappings: List[Dict[str, str]] = [
            {str(k).strip(): str(v).strip() for k, v in level.items()} for level in levels
        ]
        domain = set(mappings[0])
        for position, mapping in enumerate(mappings, start=1):
            if set(mapping) != domain:
                missing = sorted(domain.symmetric_difference(mapping))
                raise HierarchyError(
                    f"Level {position} of '{attribute}' does not cover the same values as level 1: {missing}"
                )
        if len(set(mappings[-1].values())) != 1:
            mappings.append({value: ROOT_LABEL for value in domain})

        self._check_nesting(mappings)
        self.levels = mappings

    def _check_nesting(self, mappings: List[Dict[str, str]]) -> None:
        for lower, upper in zip(mappings, mappings[1:]):
            parent: Dict[str, str] = {}
            for value, label in lower.items():
                seen = parent.setdefault(label, upper[value])
                if seen != upper[value]:
                    raise HierarchyError(
                        f"Taxonomy for '{self.attribute}' does not nest: values labelled '{label}' "
                        f"map to both '{seen}' and '{upper[value]}' one level up"
                    )

    @property
    def max_level(self) -> int:
        return len(self.levels)

    def _label_at(self, value: Any, level: int) -> Any:
        key = str(value).strip()
        try:
            return self.levels[level - 1][key]
        except KeyError:
            raise HierarchyError(
                f"Value {value!r} of '{self.attribute}' is not covered by its taxonomy"
            )

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["levels"] = [dict(sorted(level.items())) for level in self.levels]
        return data


def hierarchy_from_spec(spec: Mapping[str, Any], attribute: Optional[str] = None) -> GeneralizationHierarchy:
    """
    Build a hierarchy from its JSON configuration form.

    Accepted shapes:
        ``{"attribute": "age", "interval_widths": [10, 20]}``
        ``{"attribute": "Club", "levels": [{"PSG": "*", "OM": "*"}]}``

    Args:
        spec: The hierarchy document.
        attribute: Attribute name to use when the document omits it.

    Raises:
        HierarchyError: If the document matches neither shape.
    """
    name = spec.get("attribute", attribute)
    if not name:
        raise HierarchyError(f"Hierarchy specification is missing 'attribute': {dict(spec)}")
    if "interval_widths" in spec and "levels" in spec:
        raise HierarchyError(f"Hierarchy for '{name}' declares both 'interval_widths' and 'levels'")
    if "interval_widths" in spec:
        return IntervalHierarchy(name, spec["interval_widths"] or [])
    if "levels" in spec:
        levels = spec["levels"] or []
        if not all(isinstance(level, Mapping) for level in levels):
            raise HierarchyError(f"Taxonomy levels for '{name}' must be value -> label mappings")
        return TaxonomyHierarchy(name, levels)
    raise HierarchyError(f"Hierarchy for '{name}' needs 'interval_widths' or 'levels'")


def hierarchies_from_config(specs: Union[Sequence[Mapping[str, Any]], Mapping[str, Any], None]) -> Dict[str, GeneralizationHierarchy]:
    """
    Build the attribute -> hierarchy mapping of a job configuration.

    ``specs`` is either a list of hierarchy documents or a mapping from
    attribute name to a document without its ``attribute`` key.
    """
    if not specs:
        return {}
    if isinstance(specs, Mapping):
        items = [hierarchy_from_spec(spec, attribute=name) for name, spec in specs.items()]
    else:
        items = [hierarchy_from_spec(spec) for spec in specs]
    result: Dict[str, GeneralizationHierarchy] = {}
    for hierarchy in items:
        if hierarchy.attribute in result:
            raise HierarchyError(f"Duplicate hierarchy for attribute '{hierarchy.attribute}'")
        result[hierarchy.attribute] = hierarchy
    logger.debug(f"Built hierarchies for attributes: {sorted(result)}")
    return result
