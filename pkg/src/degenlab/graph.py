"""Line arrangements inside the double curve of m general planes, as graphs.

Plane P_i is vertex i (1-based). The double line L_{i,j} = P_i & P_j is the
edge (i, j) with i < j. A sub-arrangement D is a set of such edges; only
planes that actually carry a line of D appear as vertices.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    DuplicateEdge,
    IndexOutOfRange,
    InvalidPlaneCount,
    LoopEdge,
    ParseError,
    TooManyVertices,
)

Edge = tuple[int, int]

MIN_PLANES = 3
MAX_PLANES = 10**6


def _check_m(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise InvalidPlaneCount(f"m must be an integer, got {m!r}")
    if m < MIN_PLANES:
        raise InvalidPlaneCount(f"m must be >= {MIN_PLANES}, got {m}")
    if m > MAX_PLANES:
        raise InvalidPlaneCount(f"m must be <= {MAX_PLANES}, got {m}")
    return m


@dataclass(frozen=True)
class ArrangementGraph:
    """Graph Gamma(D) of a line arrangement D in an arrangement of m planes.

    Build instances with :func:`validate_graph`; the constructor trusts its
    arguments.
    """

    m: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    @property
    def dbar(self) -> int:
        return len(self.edges)

    @property
    def d(self) -> int:
        """Number of double lines of the arrangement that are not in D."""
        return self.m * (self.m - 1) // 2 - len(self.edges)

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    @cached_property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    def valence(self, v: int) -> int:
        return len(self.adjacency.get(v, ()))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def to_json(self) -> dict:
        return {"m": self.m, "edges": [list(e) for e in self.sorted_edges()]}

    def edge_text(self) -> str:
        return ",".join(f"{i}-{j}" for i, j in self.sorted_edges())

    def __repr__(self) -> str:
        return f"ArrangementGraph(m={self.m}, edges=[{self.edge_text()}])"


def validate_graph(edge_list: Iterable[Iterable[int]], m: int) -> ArrangementGraph:
    """Check a raw edge list and return the normalized graph."""
    _check_m(m)
    pairs: list[Edge] = []
    for raw in edge_list:
        pair = tuple(raw)
        if len(pair) != 2:
            raise ParseError(f"edge must have two endpoints, got {pair!r}")
        i, j = pair
        if isinstance(i, bool) or isinstance(j, bool) or not isinstance(i, int) or not isinstance(j, int):
            raise ParseError(f"edge endpoints must be integers, got {pair!r}")
        if i == j:
            raise LoopEdge(f"loop edge ({i},{j}) is not a double line")
        pairs.append((min(i, j), max(i, j)))

    vertices = {v for e in pairs for v in e}
    if len(vertices) > m:
        raise TooManyVertices(f"{len(vertices)} planes carry lines of D but m = {m}")
    bad = sorted(v for v in vertices if v < 1 or v > m)
    if bad:
        raise IndexOutOfRange(f"plane index {bad[0]} outside 1..{m}")

    seen: set[Edge] = set()
    for e in pairs:
        if e in seen:
            raise DuplicateEdge(f"edge {e[0]}-{e[1]} listed twice")
        seen.add(e)
    return ArrangementGraph(m, frozenset(seen))


def embed(edges: Iterable[Edge], m: int) -> ArrangementGraph:
    """Relabel an abstract graph onto planes 1..n (n = number of vertices)."""
    edges = list(edges)
    labels = {v: k for k, v in enumerate(sorted({v for e in edges for v in e}), start=1)}
    return validate_graph([(labels[i], labels[j]) for i, j in edges], m)


def complement(G: ArrangementGraph) -> ArrangementGraph:
    """Graph of the remainder R: all lines of the arrangement not in D."""
    edges = frozenset(
        e for e in combinations(range(1, G.m + 1), 2) if e not in G.edges
    )
    return ArrangementGraph(G.m, edges)


@dataclass(frozen=True)
class AugmentedGraph:
    """Complement graph with all m vertices retained (isolated ones included)."""

    m: int
    edges: frozenset[Edge]

    @property
    def vertices(self) -> range:
        return range(1, self.m + 1)

    def connected_components(self) -> list[frozenset[int]]:
        parent = list(range(self.m + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
        groups: dict[int, set[int]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), set()).add(v)
        return sorted((frozenset(g) for g in groups.values()), key=min)


def augmented_complement(G: ArrangementGraph) -> AugmentedGraph:
    return AugmentedGraph(G.m, complement(G).edges)


def is_irreducible_pair(G: ArrangementGraph) -> bool:
    """True iff every smoothing of the planes outside D is irreducible.

    That is the case exactly when the augmented complement is connected.
    A plane is cut off from the rest only if it meets every other plane in
    a line of D, so the check is linear in the number of edges for large m.
    """
    m = G.m
    if G.dbar == 0:
        return True
    # Vertex v has augmented-complement valence (m - 1) - valence_D(v).
    if any(G.valence(v) == m - 1 for v in G.vertices):
        return False
    if m - len(G.vertices) >= 1:
        # Some plane carries no line of D; it is joined to every other plane.
        return True
    return len(augmented_complement(G).connected_components()) == 1


def triangles(G: ArrangementGraph) -> set[tuple[int, int, int]]:
    """Vertex triples spanning a triangle of Gamma(D), i.e. triple points of D."""
    adj = G.adjacency
    out = set()
    for i, j in G.edges:
        for k in adj[i] & adj[j]:
            if k > j:
                out.add((i, j, k))
    return out


# -- text formats ---------------------------------------------------------

_EDGE_RE = re.compile(r"\s*(\d+)\s*-\s*(\d+)\s*")


def parse_edges(text: str) -> list[Edge]:
    """Parse ``"1-2,2-3"`` (commas and/or newlines) into index pairs."""
    edges: list[Edge] = []
    pos = 0
    for line in text.splitlines() or [""]:
        body = line.split("#", 1)[0]
        offset = 0
        for chunk in body.split(","):
            if chunk.strip():
                match = _EDGE_RE.fullmatch(chunk)
                if match is None:
                    raise ParseError(f"bad edge {chunk.strip()!r}, expected i-j", pos + offset, text)
                edges.append((int(match.group(1)), int(match.group(2))))
            offset += len(chunk) + 1
        pos += len(line) + 1
    return edges


def parse_edge_file(text: str) -> tuple[int | None, list[Edge]]:
    """Parse the edge-list file format: optional ``m=<int>`` header, one edge per line."""
    m = None
    edge_lines = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("m"):
            key, _, value = body.partition("=")
            if key.strip() != "m" or not value.strip().isdigit():
                raise ParseError(f"line {lineno}: bad header {body!r}, expected m=<int>", 0, text)
            if m is not None:
                raise ParseError(f"line {lineno}: duplicate m= header", 0, text)
            m = int(value)
            continue
        edge_lines.append(body)
    return m, parse_edges("\n".join(edge_lines))


def format_edge_file(G: ArrangementGraph) -> str:
    lines = [f"m={G.m}"] + [f"{i}-{j}" for i, j in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_from_json(payload: str | dict) -> ArrangementGraph:
    if isinstance(payload, str):
        try:
            payload = json.loads(payload)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(payload, dict) or "m" not in payload or "edges" not in payload:
        raise ParseError('expected an object with keys "m" and "edges"')
    return validate_graph(payload["edges"], payload["m"])
