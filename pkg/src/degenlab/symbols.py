"""Type symbols Gamma_{v1,v2,...}^{dbar,tau3}, one block per connected component.

ASCII grammar::

    symbol    = component { component } | "()"
    component = "(" valences "|" edges "," triangles ")" [ "^" multiplicity ]
    valences  = int { "," int }

``(1,2,1|4,1)`` is a triangle with a pendant edge; ``()`` is the empty
arrangement. Components print in increasing (edges, triangles, valences)
order and equal neighbours are collapsed with ``^``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import ParseError
from .graph import ArrangementGraph, triangles

EMPTY_TEXT = "()"


@dataclass(frozen=True, order=True)
class ComponentSymbol:
    edge_count: int
    triangle_count: int
    valences: tuple[int, ...]  # valences[i] = number of vertices of valence i + 1

    def __post_init__(self):
        handshake = sum((i + 1) * n for i, n in enumerate(self.valences))
        if handshake != 2 * self.edge_count:
            raise ValueError(
                f"valence counts {self.valences} give degree sum {handshake}, "
                f"expected 2*{self.edge_count}"
            )
        if self.valences and self.valences[-1] == 0:
            raise ValueError("valence list must not end in 0")
        if self.edge_count < 1 or self.triangle_count < 0 or min(self.valences, default=0) < 0:
            raise ValueError("component counts out of range")

    @property
    def vertex_count(self) -> int:
        return sum(self.valences)

    def text(self) -> str:
        vals = ",".join(str(v) for v in self.valences)
        return f"({vals}|{self.edge_count},{self.triangle_count})"

    def latex(self) -> str:
        vals = ",".join(str(v) for v in self.valences)
        return f"\\Gamma_{{{vals}}}^{{{self.edge_count},{self.triangle_count}}}"


@dataclass(frozen=True)
class TypeSymbol:
    components: tuple[ComponentSymbol, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(sorted(self.components)))

    @property
    def edge_count(self) -> int:
        return sum(c.edge_count for c in self.components)

    @property
    def triangle_count(self) -> int:
        return sum(c.triangle_count for c in self.components)

    def grouped(self) -> list[tuple[ComponentSymbol, int]]:
        out: list[tuple[ComponentSymbol, int]] = []
        for comp in self.components:
            if out and out[-1][0] == comp:
                out[-1] = (comp, out[-1][1] + 1)
            else:
                out.append((comp, 1))
        return out

    def text(self) -> str:
        if not self.components:
            return EMPTY_TEXT
        return "".join(c.text() + (f"^{k}" if k > 1 else "") for c, k in self.grouped())

    __str__ = text

    def latex(self) -> str:
        groups = self.grouped()
        if not groups:
            return "\\Gamma_{\\emptyset}"
        if len(groups) == 1 and groups[0][1] == 1:
            return groups[0][0].latex()
        sub = "".join(
            "(" + ",".join(map(str, c.valences)) + ")" + (f"^{k}" if k > 1 else "") for c, k in groups
        )
        sup = "".join(
            f"({c.edge_count},{c.triangle_count})" + (f"^{k}" if k > 1 else "") for c, k in groups
        )
        return f"\\Gamma^{{{sup}}}_{{{sub}}}"


def type_symbol(G: ArrangementGraph) -> TypeSymbol:
    adj = G.adjacency
    tris = triangles(G)
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack, members = [start], {start}
        seen.add(start)
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    members.add(u)
                    stack.append(u)
        valence_counts = Counter(len(adj[v]) for v in members)
        top = max(valence_counts)
        valences = tuple(valence_counts.get(k, 0) for k in range(1, top + 1))
        n_edges = sum(len(adj[v]) for v in members) // 2
        n_tri = sum(1 for t in tris if t[0] in members)
        comps.append(ComponentSymbol(n_edges, n_tri, valences))
    return TypeSymbol(tuple(comps))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.pos, self.text)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def component(self) -> list[ComponentSymbol]:
        start = self.pos
        self.expect("(")
        valences = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            valences.append(self.integer())
        self.expect("|")
        edges = self.integer()
        self.expect(",")
        tris = self.integer()
        self.expect(")")
        mult = 1
        if self.peek() == "^":
            self.pos += 1
            mult = self.integer()
            if mult < 1:
                raise self.error("multiplicity must be >= 1")
        while valences and valences[-1] == 0:
            valences.pop()
        try:
            comp = ComponentSymbol(edges, tris, tuple(valences))
        except ValueError as exc:
            raise ParseError(str(exc), start, self.text) from None
        return [comp] * mult

    def symbol(self) -> TypeSymbol:
        if self.text.strip() == EMPTY_TEXT:
            return TypeSymbol()
        comps: list[ComponentSymbol] = []
        comps.extend(self.component())
        while self.peek():
            comps.extend(self.component())
        return TypeSymbol(tuple(comps))


def parse_type_symbol(text: str) -> TypeSymbol:
    return _Parser(text).symbol()
