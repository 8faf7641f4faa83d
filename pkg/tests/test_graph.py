import random

import pytest

from degenlab.errors import (
    DuplicateEdge,
    IndexOutOfRange,
    InvalidPlaneCount,
    LoopEdge,
    ParseError,
    TooManyVertices,
)
from degenlab.graph import (
    augmented_complement,
    complement,
    embed,
    format_edge_file,
    graph_from_json,
    is_irreducible_pair,
    parse_edge_file,
    parse_edges,
    triangles,
    validate_graph,
)

from oracles import augmented_connected, random_graph


def test_validate_normalizes_orientation():
    G = validate_graph([(2, 1), (3, 2)], 4)
    assert G.sorted_edges() == [(1, 2), (2, 3)]
    assert G.dbar == 2 and G.d == 4


@pytest.mark.parametrize(
    "edges, m, exc",
    [
        ([], 2, InvalidPlaneCount),
        ([(1, 1)], 4, LoopEdge),
        ([(1, 2), (2, 1)], 4, DuplicateEdge),
        ([(1, 5)], 4, IndexOutOfRange),
        ([(0, 1)], 4, IndexOutOfRange),
        ([(1, 2), (3, 4), (5, 6)], 5, TooManyVertices),
    ],
)
def test_validate_rejects(edges, m, exc):
    with pytest.raises(exc):
        validate_graph(edges, m)


def test_embed_relabels_compactly():
    G = embed([(10, 20), (20, 30)], 4)
    assert G.sorted_edges() == [(1, 2), (2, 3)]


def test_complement_and_triangles():
    G = validate_graph([(1, 2), (2, 3), (1, 3), (3, 4)], 4)
    assert triangles(G) == {(1, 2, 3)}
    assert complement(G).sorted_edges() == [(1, 4), (2, 4)]


def test_irreducibility_examples():
    assert is_irreducible_pair(validate_graph([], 3))
    # a plane meeting all others along D splits off
    assert not is_irreducible_pair(validate_graph([(1, 4), (2, 4), (3, 4)], 4))
    assert is_irreducible_pair(validate_graph([(1, 4), (2, 4), (3, 4)], 5))
    assert not is_irreducible_pair(validate_graph([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], 4))


def test_irreducibility_matches_networkx():
    rng = random.Random(7)
    for _ in range(300):
        G = random_graph(rng, rng.randint(3, 8))
        assert is_irreducible_pair(G) == augmented_connected(G)
        assert len(augmented_complement(G).connected_components()) >= 1


def test_parse_edges_and_errors():
    assert parse_edges("1-2, 2-3\n3-4 # comment") == [(1, 2), (2, 3), (3, 4)]
    assert parse_edges("") == []
    with pytest.raises(ParseError) as info:
        parse_edges("1-2,x-3")
    assert info.value.position == 4


def test_edge_file_round_trip():
    G = validate_graph([(1, 2), (2, 5)], 6)
    m, edges = parse_edge_file(format_edge_file(G))
    assert validate_graph(edges, m) == G
    with pytest.raises(ParseError):
        parse_edge_file("m=4\nm=5\n")


def test_json_round_trip():
    G = validate_graph([(1, 3), (2, 3)], 5)
    assert graph_from_json(G.to_json()) == G
    with pytest.raises(ParseError):
        graph_from_json("{not json")
