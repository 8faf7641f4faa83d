from collections import Counter

import pytest

from degenlab.canon import canonical_form
from degenlab.enumeration import (
    enumerate_arrangements,
    enumerate_graphs_up_to,
    exists_pair_of_type,
    find_type_collisions,
)
from degenlab.errors import SearchSpaceTooLarge, TooLarge
from degenlab.graph import is_irreducible_pair, validate_graph
from degenlab.invariants import PairType, pair_type

# graphs with n edges and no isolated vertices
EDGE_COUNTS = [1, 2, 5, 11, 26, 68, 177, 497]


def test_class_counts_by_edge_number():
    counts = Counter(c.dbar for c in enumerate_graphs_up_to(8))
    assert [counts[n] for n in range(1, 9)] == EDGE_COUNTS


def test_small_catalogs():
    assert len(enumerate_graphs_up_to(1)) == 1
    three = {c.canon.text: c.type_label() for c in enumerate_graphs_up_to(3)}
    assert three[canonical_form([(1, 2), (2, 3), (1, 3)]).text] == "(m,3,3,0,1)"
    assert three[canonical_form([(1, 4), (2, 4), (3, 4)]).text] == "(m,3,1,3,0)"
    with pytest.raises(TooLarge):
        enumerate_graphs_up_to(9)


@pytest.mark.parametrize("m, total", [(3, 4), (4, 11), (5, 34)])
def test_subgraph_classes_of_complete_graph(m, total):
    extend = enumerate_arrangements(m)
    assert len(extend) == total
    assert [e.canon for e in extend] == [e.canon for e in enumerate_arrangements(m, method="subsets")]


def test_parallel_subsets_agree():
    serial = enumerate_arrangements(5, method="subsets")
    parallel = enumerate_arrangements(5, method="subsets", jobs=2)
    assert [e.canon for e in serial] == [e.canon for e in parallel]


def test_cubic_irreducibility_flags():
    flags = {e.canon.text: e.irreducible for e in enumerate_arrangements(3)}
    # smooth cubic, cubic with a double line, plane plus quadric, three planes
    assert flags == {"": True, "1-2": True, "1-3,2-3": False, "1-2,1-3,2-3": False}


def test_degree_five_graphs_present():
    certs = {e.canon for e in enumerate_arrangements(5)}
    for edges in (
        [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        [(1, 2), (1, 5), (2, 5), (1, 3), (3, 5), (2, 4)],
        [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)],
        [(1, 4), (2, 4), (3, 4), (1, 5)],
        [(1, 2), (1, 3), (2, 3), (3, 4)],
        [(1, 4), (2, 4), (3, 4)],
        [(1, 2), (2, 3), (4, 5)],
    ):
        assert canonical_form(edges) in certs


def test_representatives_are_valid_and_canonical():
    for entry in enumerate_arrangements(5):
        assert canonical_form(validate_graph(entry.graph.sorted_edges(), 5)) == entry.canon
        assert entry.irreducible == is_irreducible_pair(entry.graph)


def test_m7_is_too_large():
    with pytest.raises(TooLarge):
        enumerate_arrangements(7)


def test_type_search_is_sound_and_complete_small():
    # Every pair type realized by some irreducible graph with <= 5 edges
    # at m = 6 is found, and types not realized are reported as None.
    realized = {}
    for cls in enumerate_graphs_up_to(5, max_vertices=6):
        G = cls.graph(6)
        if is_irreducible_pair(G):
            realized.setdefault(pair_type(G), G)
    for pt in realized:
        witness = exists_pair_of_type(pt)
        assert witness is not None and pair_type(witness) == pt and is_irreducible_pair(witness)
    for dbar in range(1, 6):
        for k in range(1, dbar + 1):
            for tau2 in range(0, 8):
                for tau3 in range(0, 3):
                    pt = PairType(6, dbar, k, tau2, tau3)
                    if pt not in realized:
                        assert exists_pair_of_type(pt) is None


def test_constructive_generator_for_large_targets():
    for target in (PairType(31, 30, 1, 142, 0), PairType(40, 12, 3, 15, 0)):
        G = exists_pair_of_type(target)
        assert G is not None and pair_type(G) == target and is_irreducible_pair(G)
    with pytest.raises(SearchSpaceTooLarge):
        exists_pair_of_type(PairType(20, 12, 4, 10, 2))


def test_empty_target():
    assert exists_pair_of_type(PairType(5, 0, 0, 0, 0)).dbar == 0


def test_collisions_small():
    assert find_type_collisions(1, 5) == []
    assert find_type_collisions(3, 4) == []
    assert find_type_collisions(3, 9) == []
    assert len(find_type_collisions(4, 8)) == 2
