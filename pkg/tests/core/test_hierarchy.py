# -*- coding: utf-8 -*-
from itertools import accumulate, combinations
from operator import mul

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import GeneralizationLevelError, HierarchyError
from core.hierarchy import (
    ROOT_LABEL,
    IdentityHierarchy,
    IntervalHierarchy,
    TaxonomyHierarchy,
    hierarchies_from_config,
    hierarchy_from_spec,
)


def test_decades():
    age = IntervalHierarchy("age", [10])
    assert age.max_level == 2
    assert age.label(35, 0) == 35
    assert age.label(35, 1) == "[30;39]"
    assert age.label(20, 1) == "[20;29]"
    assert age.label(27, 2) == ROOT_LABEL


def test_nested_interval_widths():
    age = IntervalHierarchy("age", [5, 10, 20])
    assert [age.label(37, level) for level in range(1, 5)] == ["[35;39]", "[30;39]", "[20;39]", "*"]


@pytest.mark.parametrize("widths", [[], [0], [10, 15], [20, 10], [-5], [0.5], [2.5, 5], [True]])
def test_invalid_widths(widths):
    with pytest.raises(HierarchyError):
        IntervalHierarchy("age", widths)


def test_interval_rejects_text():
    with pytest.raises(HierarchyError):
        IntervalHierarchy("age", [10]).label("thirty", 1)


def test_level_out_of_range():
    with pytest.raises(GeneralizationLevelError):
        IntervalHierarchy("age", [10]).label(35, 3)
    with pytest.raises(GeneralizationLevelError):
        IdentityHierarchy("Club").label("PSG", 1)


def test_taxonomy_with_single_top_label_gets_no_extra_root():
    club = TaxonomyHierarchy("Club", [{"PSG": "*", "OM": "*"}])
    assert club.max_level == 1
    assert club.label("OM", 1) == "*"


def test_taxonomy_appends_root():
    city = TaxonomyHierarchy("city", [{"Paris": "IDF", "Versailles": "IDF", "Marseille": "PACA"}])
    assert city.max_level == 2
    assert city.label("Versailles", 1) == "IDF"
    assert city.label("Marseille", 2) == "*"


def test_taxonomy_must_nest():
    with pytest.raises(HierarchyError):
        TaxonomyHierarchy("city", [
            {"Paris": "A", "Versailles": "A", "Marseille": "B"},
            {"Paris": "X", "Versailles": "Y", "Marseille": "Y"},
        ])


def test_taxonomy_levels_cover_same_domain():
    with pytest.raises(HierarchyError):
        TaxonomyHierarchy("city", [{"Paris": "IDF"}, {"Paris": "*", "Lyon": "*"}])


def test_taxonomy_value_outside_domain():
    with pytest.raises(HierarchyError):
        TaxonomyHierarchy("Club", [{"PSG": "*"}]).label("OL", 1)


def test_taxonomy_matches_numeric_cells_as_text():
    postcode = TaxonomyHierarchy("postcode", [{"75001": "75", "75002": "75"}])
    assert postcode.label(75001, 1) == "75"


def test_spec_shapes():
    assert isinstance(hierarchy_from_spec({"attribute": "age", "interval_widths": [10]}), IntervalHierarchy)
    assert isinstance(hierarchy_from_spec({"levels": [{"PSG": "*"}]}, attribute="Club"), TaxonomyHierarchy)
    with pytest.raises(HierarchyError):
        hierarchy_from_spec({"attribute": "age"})
    with pytest.raises(HierarchyError):
        hierarchy_from_spec({"interval_widths": [10]})


def test_config_forms_and_duplicates():
    as_list = hierarchies_from_config([{"attribute": "age", "interval_widths": [10]}])
    as_mapping = hierarchies_from_config({"age": {"interval_widths": [10]}})
    assert set(as_list) == set(as_mapping) == {"age"}
    assert hierarchies_from_config(None) == {}
    with pytest.raises(HierarchyError):
        hierarchies_from_config([
            {"attribute": "age", "interval_widths": [10]},
            {"attribute": "age", "interval_widths": [5]},
        ])


def test_whole_float_widths_are_accepted():
    age = IntervalHierarchy("age", [10.0, 20.0])
    assert age.widths == [10, 20]
    assert age.label(35, 1) == "[30;39]"


def test_interval_labels_cover_whole_floats_only():
    age = IntervalHierarchy("age", [10])
    assert age.label(39.0, 1) == "[30;39]"
    for value in (39.5, float("nan"), float("inf")):
        with pytest.raises(HierarchyError):
            age.label(value, 1)
    with pytest.raises(HierarchyError):
        age.label(39.5, age.max_level)


def test_negative_values_use_floor_bins():
    assert IntervalHierarchy("delta", [10]).label(-5, 1) == "[-10;-1]"


def assert_labels_nest(hierarchy, values):
    """Values sharing a label at one level share it at every level above."""
    levels = range(hierarchy.max_level + 1)
    for a, b in combinations(values, 2):
        for lower in levels:
            if hierarchy.label(a, lower) != hierarchy.label(b, lower):
                continue
            for upper in levels[lower + 1:]:
                assert hierarchy.label(a, upper) == hierarchy.label(b, upper), (a, b, lower, upper)


@pytest.mark.property_based
@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=10),
       st.lists(st.integers(min_value=2, max_value=4), max_size=3),
       st.lists(st.integers(min_value=-200, max_value=200), min_size=2, max_size=25))
def test_interval_labels_nest(base, factors, values):
    widths = list(accumulate([base] + factors, mul))
    hierarchy = IntervalHierarchy("x", widths)
    assert_labels_nest(hierarchy, values)
    for value in values:
        low, high = (int(bound) for bound in hierarchy.label(value, 1)[1:-1].split(";"))
        assert low <= value <= high


@st.composite
def nested_taxonomies(draw):
    size = draw(st.integers(min_value=2, max_value=8))
    groups = draw(st.lists(st.integers(min_value=0, max_value=3), min_size=size, max_size=size))
    parents = draw(st.lists(st.integers(min_value=0, max_value=1), min_size=4, max_size=4))
    values = [f"v{i}" for i in range(size)]
    levels = [
        {value: f"g{group}" for value, group in zip(values, groups)},
        {value: f"s{parents[group]}" for value, group in zip(values, groups)},
    ]
    return TaxonomyHierarchy("x", levels), values


@pytest.mark.property_based
@settings(max_examples=100, deadline=None)
@given(nested_taxonomies())
def test_taxonomy_labels_nest(case):
    hierarchy, values = case
    assert_labels_nest(hierarchy, values)
    assert len({hierarchy.label(value, hierarchy.max_level) for value in values}) == 1
