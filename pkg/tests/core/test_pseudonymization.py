# -*- coding: utf-8 -*-
import pytest

from core.errors import UnknownAttributeError
from core.pseudonymization import pseudonym, pseudonymize
from core.table import AttributeKind, Table, parse_schema


def test_tokens_are_opaque_and_stable(salaries):
    out = pseudonymize(salaries, "ID", b"seed")
    tokens = out.column("ID")
    assert all(len(t) == 22 for t in tokens)
    assert "Thiago Silva" not in tokens
    assert tokens == pseudonymize(salaries, "ID", "seed").column("ID")
    assert out.column("age") == salaries.column("age")


def test_equal_values_share_a_token(salaries):
    tokens = pseudonymize(salaries, "Salaire", b"k").column("Salaire")
    assert tokens[4] == tokens[5]
    assert len(set(tokens)) == 5


def test_seed_changes_tokens():
    assert pseudonym("Neymar Jr.", b"a") != pseudonym("Neymar Jr.", b"b")


def test_numeric_attribute_becomes_text(salaries):
    out = pseudonymize(salaries, "age", b"k")
    assert out.attribute("age").kind is AttributeKind.TEXT


def test_unknown_attribute(salaries):
    with pytest.raises(UnknownAttributeError):
        pseudonymize(salaries, "Name", b"k")


def test_distinct_values_keep_distinct_tokens():
    schema = parse_schema([{"name": "ID", "role": "identifier"}, {"name": "n", "kind": "numeric"}])
    table = Table(schema, [(f"player-{i}", i) for i in range(150)])
    first = pseudonymize(table, "ID", b"seed-a").column("ID")
    second = pseudonymize(table, "ID", b"seed-b").column("ID")
    assert len(set(first)) == 150
    assert set(first).isdisjoint(second)


def test_empty_table(source_schema):
    out = pseudonymize(Table(source_schema, ()), "ID", b"k")
    assert out.rows == ()
    assert out.names == ("ID", "age", "Club", "Salaire")
