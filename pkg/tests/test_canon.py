import random

import networkx as nx
import pytest

from degenlab.canon import EXACT_VERTEX_BOUND, canonical_form, canonical_labeling, certificate_from_text
from degenlab.enumeration import build_fig4_graph
from degenlab.errors import TooLarge
from degenlab.graph import validate_graph

from oracles import automorphism_count, nx_graph, random_graph, relabel


def test_invariant_under_relabeling_and_counts_automorphisms():
    rng = random.Random(11)
    for _ in range(200):
        G = random_graph(rng, rng.randint(3, 8))
        cf = canonical_form(G)
        assert canonical_form(relabel(G, rng)) == cf
        if G.dbar:
            assert cf.automorphism_count == automorphism_count(G.edges)


def test_equal_forms_iff_isomorphic():
    rng = random.Random(12)
    graphs = [random_graph(rng, 6) for _ in range(80)]
    for a, b in zip(graphs, graphs[1:]):
        same = nx.is_isomorphic(nx_graph(a.edges), nx_graph(b.edges)) if a.dbar and b.dbar else a.dbar == b.dbar
        assert (canonical_form(a) == canonical_form(b)) == same


def test_petersen_graph():
    edges = [(u + 1, v + 1) for u, v in nx.petersen_graph().edges]
    cf = canonical_form(edges)
    assert cf.automorphism_count == 120
    shuffled = nx.relabel_nodes(nx.petersen_graph(), {i: (3 * i) % 10 for i in range(10)})
    assert canonical_form([(u + 1, v + 1) for u, v in shuffled.edges]) == cf


def test_labeling_maps_onto_certificate():
    G = validate_graph([(2, 5), (5, 7), (7, 2), (7, 3)], 8)
    cf, mapping = canonical_labeling(G.edges)
    relabelled = sorted(tuple(sorted((mapping[a], mapping[b]))) for a, b in G.edges)
    assert tuple(relabelled) == cf.certificate


def test_disconnected_graph_uses_per_component_bound():
    edges = [(2 * i + 1, 2 * i + 2) for i in range(8)]  # 16 vertices
    cf = canonical_form(edges)
    assert cf.automorphism_count == 2 ** 8 * 40320


def test_too_large_component():
    with pytest.raises(TooLarge):
        canonical_form(build_fig4_graph())
    path = [(i, i + 1) for i in range(1, EXACT_VERTEX_BOUND + 1)]
    with pytest.raises(TooLarge):
        canonical_form(path)


def test_certificate_text_round_trip():
    cf = canonical_form([(1, 2), (2, 3)])
    assert certificate_from_text(cf.text) == cf.certificate
    assert canonical_form([]).text == ""
