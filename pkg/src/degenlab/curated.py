"""Table of proven limit / non-limit results, keyed by canonical certificate.

The table is a JSON-lines file with one row per (graph, m-range)::

    {"symbol": "(3|3,0)", "certificate": "1-4,2-4,3-4", "m": "=5",
     "status": "NotLimitForThisM", "citation": "..."}

``m`` is ``=N``, ``>=N`` or ``*``. Rows for one certificate must have
disjoint m-ranges.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .canon import CanonicalForm, EXACT_VERTEX_BOUND, canonical_form
from .errors import ParseError, TooLarge
from .graph import ArrangementGraph

ENV_VAR = "DEGENLAB_CURATED_TABLE"
FIELDS = ("symbol", "certificate", "m", "status", "citation")


class Status(str, Enum):
    LIMIT = "Limit"
    NOT_LIMIT_FOR_THIS_M = "NotLimitForThisM"
    ABSOLUTELY_NOT_LIMIT = "AbsolutelyNotLimit"
    POTENTIALLY_LIMIT = "PotentiallyLimit"
    VIRTUALLY_LIMIT_ONLY = "VirtuallyLimitOnly"

    @property
    def is_negative(self) -> bool:
        """True when the status proves the pair is not limit at this m."""
        return self in (
            Status.NOT_LIMIT_FOR_THIS_M,
            Status.ABSOLUTELY_NOT_LIMIT,
            Status.VIRTUALLY_LIMIT_ONLY,
        )


@dataclass(frozen=True)
class MPredicate:
    op: str  # "=", ">=" or "*"
    value: int = 0

    @classmethod
    def parse(cls, text: str) -> "MPredicate":
        text = text.strip()
        if text == "*":
            return cls("*")
        for op in (">=", "="):
            if text.startswith(op) and text[len(op):].isdigit():
                return cls(op, int(text[len(op):]))
        raise ParseError(f"bad m-predicate {text!r}; expected =N, >=N or *")

    def __call__(self, m: int) -> bool:
        if self.op == "*":
            return True
        if self.op == "=":
            return m == self.value
        return m >= self.value

    def overlaps(self, other: "MPredicate") -> bool:
        lo_a, hi_a = self._range()
        lo_b, hi_b = other._range()
        return max(lo_a, lo_b) <= min(hi_a, hi_b)

    def _range(self) -> tuple[float, float]:
        if self.op == "*":
            return (float("-inf"), float("inf"))
        if self.op == "=":
            return (self.value, self.value)
        return (self.value, float("inf"))

    def __str__(self) -> str:
        return "*" if self.op == "*" else f"{self.op}{self.value}"


@dataclass(frozen=True)
class KnownVerdict:
    status: Status
    source: str
    applicable_m: str
    symbol: str = ""

    def to_json(self) -> dict:
        return {"status": self.status.value, "citation": self.source, "m": self.applicable_m}


@dataclass(frozen=True)
class CuratedRow:
    symbol: str
    certificate: str
    m: str
    status: Status
    citation: str

    @property
    def predicate(self) -> MPredicate:
        return MPredicate.parse(self.m)

    def to_json(self) -> dict:
        return {
            "symbol": self.symbol,
            "certificate": self.certificate,
            "m": self.m,
            "status": self.status.value,
            "citation": self.citation,
        }


def dumps_row(row: CuratedRow) -> str:
    return json.dumps(row.to_json(), ensure_ascii=True, separators=(", ", ": "))


class CuratedTable:
    def __init__(self, rows: list[CuratedRow]):
        self.rows = list(rows)
        self._by_cert: dict[str, list[CuratedRow]] = {}
        for row in self.rows:
            pred = row.predicate
            for other in self._by_cert.get(row.certificate, []):
                if other.predicate.overlaps(pred):
                    raise ValueError(
                        f"overlapping m-ranges {other.m} and {row.m} for certificate {row.certificate!r}"
                    )
            self._by_cert.setdefault(row.certificate, []).append(row)

    @classmethod
    def loads(cls, text: str) -> "CuratedTable":
        rows = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"curated table line {lineno}: {exc.msg}", exc.pos) from exc
            if set(obj) != set(FIELDS):
                raise ParseError(f"curated table line {lineno}: expected keys {FIELDS}")
            MPredicate.parse(obj["m"])
            rows.append(CuratedRow(obj["symbol"], obj["certificate"], obj["m"], Status(obj["status"]), obj["citation"]))
        return cls(rows)

    def dumps(self) -> str:
        return "".join(dumps_row(r) + "\n" for r in self.rows)

    def lookup(self, certificate: str, m: int) -> KnownVerdict | None:
        for row in self._by_cert.get(certificate, []):
            if row.predicate(m):
                return KnownVerdict(row.status, row.citation, row.m, row.symbol)
        return None

    def __len__(self) -> int:
        return len(self.rows)


def default_table_path() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("degenlab") / "data" / "curated.jsonl"))


@lru_cache(maxsize=8)
def _load(path: str) -> CuratedTable:
    return CuratedTable.loads(Path(path).read_text(encoding="utf-8"))


def load_table(path: str | Path | None = None) -> CuratedTable:
    return _load(str(path or default_table_path()))


def curated_verdict(
    G: ArrangementGraph,
    table: CuratedTable | None = None,
    canon: CanonicalForm | None = None,
) -> KnownVerdict | None:
    """Proven status of (planes, D) from the shipped table, or None.

    Graphs whose components exceed the exact canonicalization bound are
    never in the table.
    """
    table = table or load_table()
    if canon is None:
        if len(G.vertices) > EXACT_VERTEX_BOUND:
            return None
        try:
            canon = canonical_form(G)
        except TooLarge:
            return None
    return table.lookup(canon.text, G.m)
