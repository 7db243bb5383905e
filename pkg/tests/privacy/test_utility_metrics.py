# -*- coding: utf-8 -*-
import pytest

from core.errors import UnmatchedGroupError, UtilityError, ZeroBaselineError
from core.hierarchy import IntervalHierarchy
from core.table import Table
from privacy.utility_metrics import (
    AggregateResult,
    mean_normalized_error,
    per_group_errors,
    run_group_aggregate,
    run_group_mean,
    utility_report,
)

AGE = IntervalHierarchy("age", [10])


def test_exact_salary_by_age(psg):
    results = run_group_mean(psg, "age", "Salaire")
    assert [(r.group_key, r.aggregate_value) for r in results] == [
        (35, 1160.0), (32, 1500.0), (20, 1730.0), (27, 3060.0),
    ]


def test_salary_by_decade(psg_published):
    results = run_group_mean(psg_published, "age", "Salaire")
    assert [(r.group_key, r.aggregate_value) for r in results] == [("[30;39]", 1330.0), ("[20;29]", 2395.0)]


def test_mean_normalized_error(psg, psg_published):
    m = mean_normalized_error(run_group_mean(psg, "age", "Salaire"), run_group_mean(psg_published, "age", "Salaire"), AGE)
    assert m == pytest.approx(0.215, abs=1e-3)
    assert m == pytest.approx((170 / 1160 + 170 / 1500 + 665 / 1730 + 665 / 3060) / 4)


def test_report(psg, psg_published):
    report = utility_report(psg, psg_published, "age", "Salaire", AGE)
    assert report.M == pytest.approx(0.2154, abs=1e-4)
    assert [e["matched_group"] for e in report.per_group_errors] == ["[30;39]", "[30;39]", "[20;29]", "[20;29]"]
    assert report.to_dict()["query"] == {"group_by": "age", "measure": "Salaire", "aggregate": "mean"}


def test_identical_tables_have_no_error(psg):
    assert utility_report(psg, psg, "age", "Salaire").M == 0.0


def test_other_aggregates(salaries):
    sums = run_group_aggregate(salaries, "Club", "Salaire", "sum")
    assert [(r.group_key, r.aggregate_value) for r in sums] == [("PSG", 7450.0), ("OM", 1000.0)]
    counts = run_group_aggregate(salaries, "Club", "ID", "count")
    assert [r.aggregate_value for r in counts] == [4, 2]


def test_text_measure_rejected(salaries):
    with pytest.raises(UtilityError):
        run_group_mean(salaries, "age", "Club")
    with pytest.raises(UtilityError):
        run_group_aggregate(salaries, "age", "Salaire", "mode")


def test_unmatched_group():
    with pytest.raises(UnmatchedGroupError):
        per_group_errors([AggregateResult(35, 1.0)], [AggregateResult("[40;49]", 1.0)], AGE)
    with pytest.raises(UnmatchedGroupError):
        per_group_errors([AggregateResult("PSG", 1.0)], [AggregateResult("OM", 1.0)])


def test_text_keys_match_numbers():
    errors = per_group_errors([AggregateResult(35, 100.0)], [AggregateResult("35", 110.0)])
    assert errors[0]["error"] == pytest.approx(0.1)


def test_zero_baseline():
    with pytest.raises(ZeroBaselineError):
        per_group_errors([AggregateResult(35, 0.0)], [AggregateResult(35, 1.0)])


def test_empty_original(source_schema):
    with pytest.raises(UtilityError):
        mean_normalized_error([], [])
    with pytest.raises(UtilityError):
        utility_report(Table(source_schema, ()), Table(source_schema, ()), "age", "Salaire")
