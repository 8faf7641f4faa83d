"""Exact canonical labeling for small graphs.

Each connected component is canonicalized on its own by
individualization-refinement: colour refinement seeded with
(valence, triangle count), then a search over individualizations of the
first non-singleton cell, keeping the lexicographically least relabeled
edge list. Interchangeable twin vertices (equal neighbourhoods) are
explored once and their subtree counts multiplied, which keeps stars and
pendant-heavy graphs cheap. The number of search leaves reaching the
minimum equals the automorphism group order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Mapping

from .errors import TooLarge, ParseError
from .graph import ArrangementGraph, Edge

#: Largest connected component that is canonicalized exactly.
EXACT_VERTEX_BOUND = 12

Certificate = tuple[Edge, ...]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Relabeling-invariant key. Equal keys iff isomorphic graphs.

    Ordering is by edge count, then lexicographically by the canonical edge
    list.
    """

    size: int
    certificate: Certificate
    automorphism_count: int = 1

    @property
    def text(self) -> str:
        return ",".join(f"{i}-{j}" for i, j in self.certificate)

    def __str__(self) -> str:
        return self.text

    def edges(self) -> list[Edge]:
        return list(self.certificate)

    @property
    def vertex_count(self) -> int:
        return len({v for e in self.certificate for v in e})


def certificate_from_text(text: str) -> Certificate:
    """Inverse of :attr:`CanonicalForm.text` (does not re-canonicalize)."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for chunk in text.split(","):
        a, sep, b = chunk.partition("-")
        if not sep or not a.strip().isdigit() or not b.strip().isdigit():
            raise ParseError(f"bad certificate edge {chunk!r}")
        out.append((int(a), int(b)))
    return tuple(out)


def _components(adj: Mapping[int, frozenset[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def _rank(keys: list) -> list[int]:
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


class _ComponentSearch:
    def __init__(self, vertices: list[int], adj: Mapping[int, frozenset[int]]):
        self.n = len(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        self.nbrs = [sorted(index[u] for u in adj[v]) for v in vertices]
        self.nbr_sets = [frozenset(ns) for ns in self.nbrs]
        self.edges = [(a, b) for a in range(self.n) for b in self.nbrs[a] if a < b]
        self.best: Certificate | None = None

    def _refine(self, colors: list[int]) -> list[int]:
        ncells = len(set(colors))
        while True:
            keys = [(colors[v], tuple(sorted(colors[u] for u in self.nbrs[v]))) for v in range(self.n)]
            new = _rank(keys)
            k = len(set(new))
            if k == ncells:
                return new
            colors, ncells = new, k

    def _twin_classes(self, cell: list[int]) -> list[list[int]]:
        parent = {v: v for v in cell}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for a_pos, a in enumerate(cell):
            for b in cell[a_pos + 1:]:
                na, nb = self.nbr_sets[a], self.nbr_sets[b]
                if na - {b} == nb - {a}:
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[rb] = ra
        groups: dict[int, list[int]] = {}
        for v in cell:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def _leaf(self, colors: list[int]) -> Certificate:
        return tuple(sorted(
            (min(colors[a], colors[b]) + 1, max(colors[a], colors[b]) + 1) for a, b in self.edges
        ))

    def search(self, colors: list[int]) -> tuple[Certificate, int, list[int]]:
        """Return (least certificate, number of leaves reaching it, one labeling)."""
        if len(set(colors)) == self.n:
            return self._leaf(colors), 1, colors
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = min(c for c, members in cells.items() if len(members) > 1)
        best: Certificate | None = None
        best_count = 0
        best_labels: list[int] = []
        for group in self._twin_classes(cells[target]):
            v = group[0]
            split = self._refine(_rank([(c, 0 if u == v else 1) for u, c in enumerate(colors)]))
            cert, count, labels = self.search(split)
            count *= len(group)
            if best is None or cert < best:
                best, best_count, best_labels = cert, count, labels
            elif cert == best:
                best_count += count
        return best, best_count, best_labels

    def run(self) -> tuple[Certificate, int, list[int]]:
        tri = [0] * self.n
        for a, b in self.edges:
            for c in self.nbr_sets[a] & self.nbr_sets[b]:
                tri[c] += 1
        # each triangle is seen once per edge, i.e. once at each vertex
        start = self._refine(_rank([(len(self.nbrs[v]), tri[v]) for v in range(self.n)]))
        return self.search(start)


def _adjacency(edges: Iterable[Edge]) -> dict[int, frozenset[int]]:
    adj: dict[int, set[int]] = {}
    for i, j in edges:
        adj.setdefault(i, set()).add(j)
        adj.setdefault(j, set()).add(i)
    return {v: frozenset(ns) for v, ns in adj.items()}


def canonical_labeling(
    edges: Iterable[Edge], bound: int = EXACT_VERTEX_BOUND
) -> tuple[CanonicalForm, dict[int, int]]:
    """Canonical form plus a map from original vertex labels to canonical ones."""
    adj = _adjacency(edges)
    parts = []
    for comp in _components(adj):
        if len(comp) > bound:
            raise TooLarge(
                f"connected component with {len(comp)} vertices exceeds the exact "
                f"canonicalization bound of {bound}"
            )
        cert, count, labels = _ComponentSearch(comp, adj).run()
        parts.append((len(cert), cert, count, comp, labels))
    parts.sort(key=lambda p: (p[0], p[1]))

    mapping: dict[int, int] = {}
    all_edges: list[Edge] = []
    offset = 0
    aut = 1
    for size, cert, count, comp, labels in parts:
        for v, lab in zip(comp, labels):
            mapping[v] = lab + 1 + offset
        all_edges.extend((a + offset, b + offset) for a, b in cert)
        offset += len(comp)
        aut *= count
    for mult in Counter(p[1] for p in parts).values():
        aut *= factorial(mult)
    return CanonicalForm(len(all_edges), tuple(all_edges), aut), mapping


def canonical_form(G: ArrangementGraph | Iterable[Edge], bound: int = EXACT_VERTEX_BOUND) -> CanonicalForm:
    edges = G.edges if isinstance(G, ArrangementGraph) else G
    return canonical_labeling(edges, bound)[0]
