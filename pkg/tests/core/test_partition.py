# -*- coding: utf-8 -*-
import pytest
from hypothesis import given, settings

from core.errors import SchemaError, UnknownAttributeError
from core.partition import find_minimal_qids, is_qid, partition_by_qid
from tests.strategies import naive_groups, tables, tables_with_qid


def test_published_psg_has_two_pairs(psg_published):
    partition = partition_by_qid(psg_published, ["age", "Club"])
    assert partition.sizes == [2, 2]
    assert [c.qid_values for c in partition.classes] == [("[20;29]", "PSG"), ("[30;39]", "PSG")]


def test_published_salaries_have_three_pairs(salaries_published):
    partition = partition_by_qid(salaries_published, ["age", "Club"])
    assert partition.sizes == [2, 2, 2]
    assert ("[32]", "OM") in [c.qid_values for c in partition.classes]


def test_numeric_classes_sorted_by_value(salaries):
    partition = partition_by_qid(salaries, ["age"])
    assert [c.qid_values for c in partition.classes] == [(20,), (27,), (32,), (35,)]
    assert partition.classes[2].row_indices == (1, 4, 5)


def test_empty_qid_is_one_class(salaries):
    partition = partition_by_qid(salaries, [])
    assert partition.sizes == [6]


def test_empty_table(source_schema):
    from core.table import Table
    assert partition_by_qid(Table(source_schema, ()), ["age"]).classes == ()


def test_unknown_attribute(salaries):
    with pytest.raises(UnknownAttributeError):
        partition_by_qid(salaries, ["age", "Nationality"])


def test_age_and_club_single_out_players(salaries):
    found, witnesses = is_qid(salaries, ["age", "Club"])
    assert found
    assert witnesses == [(20, "PSG"), (27, "PSG"), (32, "PSG"), (35, "PSG")]


def test_club_alone_is_not_a_qid(salaries):
    assert is_qid(salaries, ["Club"]) == (False, [])


def test_is_qid_needs_attributes(salaries):
    with pytest.raises(SchemaError):
        is_qid(salaries, [])


def test_minimal_qids(salaries):
    found = find_minimal_qids(salaries, ["age", "Club", "Salaire"], max_set_size=3)
    assert ("age",) in found
    assert ("Salaire",) in found
    assert ("age", "Club") not in found
    assert ("Club",) not in found


@pytest.mark.property_based
@settings(max_examples=100, deadline=None)
@given(tables_with_qid(min_rows=0))
def test_partition_matches_naive_grouping(case):
    table, qid, _ = case
    partition = partition_by_qid(table, qid)
    expected = naive_groups(table, qid)
    assert {c.qid_values: list(c.row_indices) for c in partition.classes} == expected
    assert partition.record_count == table.row_count
    covered = [i for c in partition.classes for i in c.row_indices]
    assert sorted(covered) == list(range(table.row_count))


@pytest.mark.property_based
@settings(max_examples=100, deadline=None)
@given(tables_with_qid(min_rows=0))
def test_is_qid_matches_naive_count(case):
    table, qid, _ = case
    found, witnesses = is_qid(table, qid)
    singles = {key for key, rows in naive_groups(table, qid).items() if len(rows) == 1}
    assert found == bool(singles)
    assert set(witnesses) == singles


@pytest.mark.property_based
@settings(max_examples=100, deadline=None)
@given(tables(min_rows=1))
def test_superset_of_qid_is_qid(table):
    names = list(table.names)
    if is_qid(table, names[:1])[0]:
        assert is_qid(table, names)[0]
