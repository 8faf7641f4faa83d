"""Isomorphism-class enumeration, type search and type collisions.

Classes of graphs are grown one edge at a time: every graph with e edges
and no isolated vertices is a graph with e - 1 edges plus one edge (joining
two old vertices, an old and a new vertex, or two new vertices), so
extending every class of the previous layer and deduplicating by canonical
form is complete.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .canon import CanonicalForm, canonical_form
from .errors import SearchSpaceTooLarge, TooLarge
from .graph import ArrangementGraph, Edge, is_irreducible_pair, triangles, validate_graph
from .invariants import PairType, double_curve_classes, tau_profile, valence_pair_count

logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_M = 6
MAX_CATALOG_EDGES = 8


@dataclass(frozen=True)
class CatalogEntry:
    canon: CanonicalForm
    graph: ArrangementGraph
    irreducible: bool


@dataclass(frozen=True)
class GraphClass:
    """An abstract graph class with its m-independent pair-type data."""

    canon: CanonicalForm
    dbar: int
    k: int
    tau2: int
    tau3: int

    @property
    def vertex_count(self) -> int:
        return self.canon.vertex_count

    def graph(self, m: int) -> ArrangementGraph:
        return validate_graph(self.canon.certificate, m)

    def pair_type(self, m: int) -> PairType:
        return PairType(m, self.dbar, self.k, self.tau2, self.tau3)

    def mfree(self) -> tuple[int, int, int, int]:
        return (self.dbar, self.k, self.tau2, self.tau3)

    def type_label(self) -> str:
        return "(m," + ",".join(map(str, self.mfree())) + ")"


def _abstract(edges) -> ArrangementGraph:
    """Wrap an abstract edge set so graph functions that ignore m can use it."""
    n = len({v for e in edges for v in e})
    return ArrangementGraph(max(n, 3), frozenset(edges))


def _graph_class(canon: CanonicalForm) -> GraphClass:
    G = _abstract(canon.certificate)
    tau3 = len(triangles(G))
    tau2 = valence_pair_count(G) - 3 * tau3
    return GraphClass(canon, G.dbar, double_curve_classes(G).k, tau2, tau3)


def _extensions(cert: tuple[Edge, ...], max_vertices: int):
    present = set(cert)
    n = len({v for e in cert for v in e})
    for e in combinations(range(1, n + 1), 2):
        if e not in present:
            yield cert + (e,)
    if n + 1 <= max_vertices:
        for i in range(1, n + 1):
            yield cert + ((i, n + 1),)
    if n + 2 <= max_vertices:
        yield cert + ((n + 1, n + 2),)


@lru_cache(maxsize=None)
def _layers(max_edges: int, max_vertices: int) -> tuple[tuple[CanonicalForm, ...], ...]:
    """layers[e] = canonical forms of all graphs with e edges, <= max_vertices vertices."""
    if max_edges == 0:
        return ((canonical_form(()),),)
    previous = _layers(max_edges - 1, max_vertices)
    found: dict[tuple[Edge, ...], CanonicalForm] = {}
    for base in previous[-1]:
        for edges in _extensions(base.certificate, max_vertices):
            cf = canonical_form(edges)
            found.setdefault(cf.certificate, cf)
    layer = tuple(sorted(found.values()))
    logger.debug("layer %d (<= %d vertices): %d classes", max_edges, max_vertices, len(layer))
    return previous + (layer,)


def enumerate_graphs_up_to(max_edges: int, max_vertices: int | None = None) -> list[GraphClass]:
    """All realizable graphs with 1..max_edges edges, one per isomorphism class."""
    if max_edges > MAX_CATALOG_EDGES:
        raise TooLarge(f"max_edges = {max_edges} exceeds the catalog bound {MAX_CATALOG_EDGES}")
    if max_edges < 0:
        raise ValueError("max_edges must be >= 0")
    cap = 2 * max_edges if max_vertices is None else min(max_vertices, 2 * max_edges)
    layers = _layers(max_edges, cap)
    return [_graph_class(cf) for layer in layers[1:] for cf in layer]


# -- subgraphs of K_m --------------------------------------------------------

def _subset_chunk(args: tuple[int, int, int]) -> dict[tuple[Edge, ...], CanonicalForm]:
    m, start, stop = args
    all_edges = list(combinations(range(1, m + 1), 2))
    out: dict[tuple[Edge, ...], CanonicalForm] = {}
    for mask in range(start, stop):
        edges = [e for bit, e in enumerate(all_edges) if mask >> bit & 1]
        cf = canonical_form(edges)
        out.setdefault(cf.certificate, cf)
    return out


def _classes_by_subsets(m: int, jobs: int) -> list[CanonicalForm]:
    total = 1 << comb(m, 2)
    chunks = max(1, jobs) * 4
    bounds = [total * i // chunks for i in range(chunks + 1)]
    tasks = [(m, a, b) for a, b in zip(bounds, bounds[1:]) if a < b]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_subset_chunk, tasks))
    else:
        parts = [_subset_chunk(t) for t in tasks]
    merged: dict[tuple[Edge, ...], CanonicalForm] = {}
    for part in parts:
        merged.update(part)
    return sorted(merged.values())


def enumerate_arrangements(m: int, method: str = "extend", jobs: int = 1) -> list[CatalogEntry]:
    """One representative per isomorphism class of edge subsets of K_m, empty included.

    ``method="extend"`` grows classes edge by edge; ``method="subsets"``
    canonicalizes all 2^C(m,2) subsets, split into chunks that may run in
    ``jobs`` worker processes. Both give the same sorted catalog.
    """
    validate_graph([], m)
    if m > MAX_EXHAUSTIVE_M:
        raise TooLarge(f"exhaustive enumeration is limited to m <= {MAX_EXHAUSTIVE_M}")
    if method == "extend":
        forms = sorted(cf for layer in _layers(comb(m, 2), m) for cf in layer)
    elif method == "subsets":
        forms = _classes_by_subsets(m, jobs)
    else:
        raise ValueError(f"unknown method {method!r}")
    out = []
    for cf in forms:
        G = validate_graph(cf.certificate, m)
        out.append(CatalogEntry(cf, G, is_irreducible_pair(G)))
    return out


# -- type search -------------------------------------------------------------

def _caterpillar(degrees: list[int]) -> list[Edge]:
    """A tree with the given valences (all >= 1, summing to 2(n-1))."""
    spine = [d for d in degrees if d >= 2]
    leaves = len(degrees) - len(spine)
    if not spine:
        return [(1, 2)]
    edges = [(i + 1, i + 2) for i in range(len(spine) - 1)]
    nxt = len(spine) + 1
    for pos, d in enumerate(spine):
        spine_nbrs = (pos > 0) + (pos < len(spine) - 1)
        for _ in range(d - spine_nbrs):
            edges.append((pos + 1, nxt))
            nxt += 1
    assert nxt - 1 - len(spine) == leaves
    return edges


def _excess_partitions(total: int, target: int, largest: int):
    """Partitions of ``total`` into parts <= largest with sum of p(p+1)/2 equal to target."""
    if total == 0:
        if target == 0:
            yield []
        return
    for p in range(min(largest, total), 0, -1):
        rest, rest_target = total - p, target - p * (p + 1) // 2
        if rest_target < rest:
            continue
        q, r = divmod(rest, p)
        if rest_target > q * p * (p + 1) // 2 + r * (r + 1) // 2:
            continue
        for tail in _excess_partitions(rest, rest_target, p):
            yield [p] + tail


def _constructive_witness(target: PairType) -> ArrangementGraph | None:
    """Triangle-free forest witness: k-1 disjoint lines plus one caterpillar tree."""
    if target.tau3 != 0 or target.k < 1 or target.k > target.dbar:
        return None
    if target.dbar + target.k > target.m:
        return None
    tree_edges = target.dbar - (target.k - 1)
    n = tree_edges + 1
    for excess in _excess_partitions(tree_edges - 1, target.tau2, tree_edges - 1):
        degrees = [e + 1 for e in excess] + [1] * (n - len(excess))
        edges = _caterpillar(degrees)
        for c in range(target.k - 1):
            edges.append((n + 2 * c + 1, n + 2 * c + 2))
        G = validate_graph(edges, target.m)
        if is_irreducible_pair(G) and _pair_type(G) == target:
            return G
    return None


def _pair_type(G: ArrangementGraph) -> PairType:
    tau = tau_profile(G)
    return PairType(G.m, G.dbar, double_curve_classes(G).k, tau.tau2, tau.tau3)


def exists_pair_of_type(target: PairType, exhaustive_edges: int = MAX_CATALOG_EDGES) -> ArrangementGraph | None:
    """An irreducible pair of the given type, or None if none exists.

    Up to ``exhaustive_edges`` lines the search is exhaustive: a graph with
    dbar edges and no isolated vertices has at most 2*dbar vertices, so all
    classes on min(2*dbar, m) vertices are tried. Beyond that, only the
    constructive forest generator is available, and it returns None only for
    targets it covers.
    """
    m = target.m
    if target.dbar == 0:
        G = validate_graph([], m)
        return G if target.mfree() == (0, 0, 0, 0) else None
    if target.dbar <= exhaustive_edges:
        cap = min(2 * target.dbar, m)
        layers = _layers(target.dbar, cap)
        for cf in layers[target.dbar]:
            cls = _graph_class(cf)
            if cls.mfree() != target.mfree():
                continue
            G = cls.graph(m)
            if is_irreducible_pair(G):
                return G
        return None
    if target.tau3 == 0 and 1 <= target.k <= target.dbar:
        return _constructive_witness(target)
    raise SearchSpaceTooLarge(
        f"dbar = {target.dbar} > {exhaustive_edges} and the type is outside the constructive generator"
    )


def build_fig4_graph() -> ArrangementGraph:
    """31 planes; hubs v12 and v17 carry 11 leaves each and are joined by the
    path v12-v13-v14-v15-v16-v17, with one pendant leaf on each of v13, v14, v15."""
    edges = [(i, 12) for i in range(1, 12)]
    edges += [(12, 13), (13, 14), (14, 15), (15, 16), (16, 17)]
    edges += [(17, i) for i in range(18, 29)]
    edges += [(13, 29), (14, 30), (15, 31)]
    return validate_graph(edges, 31)


def find_type_collisions(max_edges: int, m: int) -> list[tuple[PairType, list[CanonicalForm]]]:
    """Pair types shared by two or more non-isomorphic graphs that fit in m planes."""
    groups: dict[tuple[int, int, int, int], list[CanonicalForm]] = {}
    for cls in enumerate_graphs_up_to(max_edges, max_vertices=m):
        groups.setdefault(cls.mfree(), []).append(cls.canon)
    return [
        (PairType(m, *key), sorted(members))
        for key, members in sorted(groups.items())
        if len(members) >= 2
    ]


__all__ = [
    "CatalogEntry",
    "GraphClass",
    "build_fig4_graph",
    "enumerate_arrangements",
    "enumerate_graphs_up_to",
    "exists_pair_of_type",
    "find_type_collisions",
]
