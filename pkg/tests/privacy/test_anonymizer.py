# -*- coding: utf-8 -*-
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import InfeasibleAnonymizationError, SchemaError
from core.generalization import generalize_table
from core.hierarchy import IntervalHierarchy, TaxonomyHierarchy
from core.partition import partition_by_qid
from core.table import AttributeKind, write_table
from privacy.anonymizer import (
    AnonymizationConstraints,
    Anonymizer,
    LatticeNode,
    anonymize,
    build_lattice,
    information_loss,
)
from privacy.models import check_k_anonymity
from tests.strategies import tables

QID = ["age", "Club"]


def brute_force_optimum(table, qid, hierarchies, k):
    """Smallest-loss node that is k-anonymous without suppression, by full enumeration."""
    ordered = [hierarchies[name] for name in qid]
    best = None
    for levels in product(*[range(h.max_level + 1) for h in ordered]):
        generalized = generalize_table(table, hierarchies, dict(zip(qid, levels)))
        if not check_k_anonymity(partition_by_qid(generalized, qid), k).satisfied:
            continue
        key = (information_loss(table, levels, ordered, 0), sum(levels), levels)
        if best is None or key < best:
            best = key
    return best


def test_psg_decades(psg, psg_published, hierarchies):
    result = anonymize(psg, QID, hierarchies, {"k": 2})
    assert result.chosen_node.levels == (1, 0)
    assert result.chosen_node.as_mapping(result.qid) == {"age": 1, "Club": 0}
    assert result.loss == 0.25
    assert result.suppressed_row_indices == ()
    assert result.output_table.rows == psg_published.rows
    assert write_table(result.output_table) == (
        "age,Club,Salaire\n[30;39],PSG,1160\n[30;39],PSG,1500\n[20;29],PSG,1730\n[20;29],PSG,3060\n"
    )
    assert all(v.satisfied for v in result.verdicts)


def test_psg_choice_is_the_brute_force_optimum(psg, hierarchies):
    result = anonymize(psg, QID, hierarchies, {"k": 2})
    loss, _, levels = brute_force_optimum(psg, QID, hierarchies, 2)
    assert result.chosen_node.levels == levels
    assert result.loss == pytest.approx(loss)


def test_unpruned_search_agrees(psg, hierarchies):
    pruned = anonymize(psg, QID, hierarchies, {"k": 2})
    full = anonymize(psg, QID, hierarchies, {"k": 2}, prune=False)
    assert pruned.chosen_node == full.chosen_node
    assert full.nodes_pruned == 0
    assert full.nodes_evaluated == len(build_lattice(hierarchies))
    assert pruned.nodes_evaluated + pruned.nodes_pruned == full.nodes_evaluated


def test_threads_give_the_same_result(psg, hierarchies):
    assert anonymize(psg, QID, hierarchies, {"k": 2}, max_workers=4).to_dict() == \
        anonymize(psg, QID, hierarchies, {"k": 2}).to_dict()


def test_output_schema(psg, hierarchies):
    result = anonymize(psg, QID, hierarchies, {"k": 2})
    assert [a.name for a in result.output_schema] == ["age", "Club", "Salaire"]
    assert result.output_schema[0].kind is AttributeKind.TEXT


def test_l_diversity_forces_coarser_node(salaries, hierarchies):
    result = anonymize(salaries, QID, hierarchies, {"k": 2, "l": 2, "sensitive": "Salaire"})
    assert result.chosen_node.levels == (1, 1)
    assert result.loss == 0.75
    assert result.suppressed_row_indices == ()


def test_suppression_budget_buys_a_finer_node(salaries, hierarchies):
    result = anonymize(salaries, QID, hierarchies, {"k": 2, "l": 2, "sensitive": "Salaire"},
                       suppression_budget=0.34)
    assert result.chosen_node.levels == (1, 0)
    assert result.suppressed_row_indices == (4, 5)
    assert result.loss == pytest.approx(0.25 + 2 / 6)
    assert result.output_table.row_count == 4


def test_t_closeness_output_passes_its_own_check(salaries, hierarchies):
    result = anonymize(salaries, QID, hierarchies, {"k": 2, "t": 0.4, "sensitive": "Salaire"},
                       suppression_budget=1.0)
    assert all(v.satisfied for v in result.verdicts)
    assert [v.model for v in result.verdicts] == ["k-anonymity", "t-closeness"]


def test_infeasible(salaries, hierarchies):
    with pytest.raises(InfeasibleAnonymizationError) as excinfo:
        anonymize(salaries, QID, hierarchies, {"k": 7})
    error = excinfo.value
    assert error.best_k == 6
    assert error.suppression_needed == 1.0
    assert error.details["best_node"] is not None


def test_identifier_cannot_be_a_qid(psg, hierarchies):
    with pytest.raises(SchemaError):
        Anonymizer(psg, ["ID"], hierarchies, AnonymizationConstraints(k=2))


def test_sensitive_required_for_l():
    with pytest.raises(SchemaError):
        AnonymizationConstraints(k=2, l=2)


def test_k_of_one_keeps_the_table(psg, hierarchies):
    result = anonymize(psg, QID, hierarchies, {"k": 1})
    assert result.chosen_node.levels == (0, 0)
    assert result.loss == 0
    assert result.output_table.rows == tuple(row[1:] for row in psg.rows)


def test_information_loss_takes_the_hierarchy_mapping(psg, hierarchies):
    assert information_loss(psg, LatticeNode((1, 0)), hierarchies, 0) == 0.25
    assert information_loss(psg, (2, 1), hierarchies, 2) == 1.5
    assert information_loss(psg, (1, 0), hierarchies, 0, qid=["Club", "age"]) == 0.5
    assert information_loss(psg, (0, 1), [hierarchies["age"], hierarchies["Club"]], 1) == 0.75
    with pytest.raises(ValueError):
        information_loss(psg, (1,), hierarchies, 0)


def test_lattice_order(hierarchies):
    lattice = build_lattice(hierarchies)
    assert lattice[0] == (0, 0)
    assert lattice[-1] == (2, 1)
    assert [sum(levels) for levels in lattice] == sorted(sum(levels) for levels in lattice)


def _hierarchy_for(attribute):
    if attribute.kind is AttributeKind.NUMERIC:
        return IntervalHierarchy(attribute.name, [2])
    return TaxonomyHierarchy(attribute.name, [{"x": "xy", "y": "xy", "z": "z"}])


@pytest.mark.property_based
@settings(max_examples=60, deadline=None)
@given(tables(min_rows=1, max_rows=20, max_attrs=3),
       st.integers(min_value=1, max_value=4),
       st.sampled_from([0.0, 0.1, 0.3]))
def test_pruning_keeps_the_optimum(table, k, budget):
    qid = list(table.names)
    hierarchies = {a.name: _hierarchy_for(a) for a in table.schema}
    assert len(build_lattice(hierarchies)) <= 64

    outcomes = []
    for prune in (True, False):
        try:
            result = anonymize(table, qid, hierarchies, {"k": k}, suppression_budget=budget, prune=prune)
            outcomes.append((result.chosen_node.levels, result.suppressed_row_indices, result.loss))
        except InfeasibleAnonymizationError as e:
            outcomes.append(("infeasible", e.best_k, e.suppression_needed))
    assert outcomes[0] == outcomes[1]


@pytest.mark.property_based
@settings(max_examples=60, deadline=None)
@given(tables(min_rows=1, max_rows=20, max_attrs=3), st.integers(min_value=1, max_value=4))
def test_zero_budget_matches_brute_force(table, k):
    qid = list(table.names)
    hierarchies = {a.name: _hierarchy_for(a) for a in table.schema}
    expected = brute_force_optimum(table, qid, hierarchies, k)
    try:
        result = anonymize(table, qid, hierarchies, {"k": k})
    except InfeasibleAnonymizationError:
        assert expected is None
        return
    assert result.chosen_node.levels == expected[2]
