import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenlab.errors import ParseError
from degenlab.graph import validate_graph
from degenlab.symbols import ComponentSymbol, TypeSymbol, parse_type_symbol, type_symbol

from oracles import random_graph


def test_two_chains_and_triangle_with_pendant():
    G = validate_graph([(1, 2), (2, 3), (4, 5), (5, 6), (7, 8), (7, 9), (8, 9), (9, 10)], 10)
    sym = type_symbol(G)
    assert sym.text() == "(2,1|2,0)^2(1,2,1|4,1)"
    assert parse_type_symbol(sym.text()) == sym
    assert "\\Gamma" in sym.latex()


def test_empty_symbol():
    assert type_symbol(validate_graph([], 4)).text() == "()"
    assert parse_type_symbol("()") == TypeSymbol(())


@pytest.mark.parametrize(
    "text",
    ["", "(1,2|", "(2,0|2,1)", "(2|1,0)^0", "(2|1,0)x", "(a|1,0)"],
)
def test_malformed_symbols(text):
    with pytest.raises(ParseError):
        parse_type_symbol(text)


def test_trailing_zero_valences_are_stripped():
    assert parse_type_symbol("(2,0|1,0)") == parse_type_symbol("(2|1,0)")


def test_component_rejects_bad_handshake():
    with pytest.raises(ValueError):
        ComponentSymbol(3, 0, (3,))


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=3, max_value=9), st.integers(min_value=0, max_value=2**32))
def test_round_trip_random(m, seed):
    G = random_graph(random.Random(seed), m)
    sym = type_symbol(G)
    assert parse_type_symbol(sym.text()) == sym
    assert sym.edge_count == G.dbar
