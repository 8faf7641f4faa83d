"""Regenerate the shipped curated verdict table.

    python scripts/build_curated_table.py            # write the package data file
    python scripts/build_curated_table.py --check    # fail if the file is stale
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations
from pathlib import Path

from degenlab.canon import canonical_form
from degenlab.curated import CuratedRow, CuratedTable, Status
from degenlab.enumeration import enumerate_arrangements
from degenlab.graph import validate_graph
from degenlab.symbols import type_symbol

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "degenlab" / "data" / "curated.jsonl"

QUARTIC = "every line arrangement in four general planes is a limit double curve (degree-4 classification)"
CUBIC = "every line arrangement in three general planes is a limit double curve (cubic regeneration cases)"
DEGREE5 = "not a limit double curve for quintic complete degenerations"

# Non-limit arrangements at m=5, labelled by edge lists on planes 1..5.
DEGREE_FIVE = {
    "complete graph on four planes": [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    "two triangles sharing a line, plus a pendant line": [
        (1, 2), (1, 5), (2, 5), (1, 3), (3, 5), (2, 4)],
    "triangle with a chain of two lines at one corner": [(1, 2), (1, 3), (2, 3), (4, 5), (3, 4)],
    "triangle with one pendant line": [(1, 2), (1, 3), (2, 3), (3, 4)],
    "three concurrent lines in one plane": [(1, 4), (2, 4), (3, 4)],
    "chain of two lines plus a disjoint line": [(1, 2), (2, 3), (4, 5)],
}
STAR3 = [(1, 4), (2, 4), (3, 4)]
CONIC_PLUS_LINE = [(1, 2), (2, 3), (4, 5)]
SPACE_QUARTIC = [(1, 4), (2, 4), (3, 4), (1, 5)]


def _row(edges, m: str, status: Status, citation: str, planes: int) -> CuratedRow:
    G = validate_graph(edges, planes)
    return CuratedRow(type_symbol(G).text(), canonical_form(G).text, m, status, citation)


def build_rows() -> list[CuratedRow]:
    rows: list[CuratedRow] = []
    for m, note in ((3, CUBIC), (4, QUARTIC)):
        for entry in enumerate_arrangements(m):
            rows.append(_row(entry.canon.certificate, f"={m}", Status.LIMIT, note, m))

    for name, edges in DEGREE_FIVE.items():
        rows.append(_row(edges, "=5", Status.NOT_LIMIT_FOR_THIS_M, f"{DEGREE5}: {name}", 5))
    rows.append(_row(STAR3, "=6", Status.POTENTIALLY_LIMIT,
                     "three concurrent coplanar lines: limit for m >= 7 via a cubic-plane complete intersection", 6))
    rows.append(_row(CONIC_PLUS_LINE, ">=6", Status.POTENTIALLY_LIMIT,
                     "conic plus a disjoint line: potentially limit by the complete-intersection construction", 6))
    rows.append(_row(SPACE_QUARTIC, "*", Status.ABSOLUTELY_NOT_LIMIT,
                     "degeneration of a smooth elliptic space quartic: absolutely not limit "
                     "(numerically a virtual limit for m >= 5)", 5))

    # Complete intersections of plane arrangements of degrees a >= b give
    # K_{a,b} for every m >= 2a + 1.
    for a in range(1, 12):
        for b in range(1, a + 1):
            if a + b > 12:
                continue
            edges = [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)]
            lo = max(5, 2 * a + 1)
            rows.append(_row(edges, f">={lo}", Status.LIMIT,
                             f"complete intersection of degrees {a} and {b}: limit for m >= {2 * a + 1}", lo))

    # The complete graph on m - 1 planes has dual class (3 - m/2)(m - 1) <= 2.
    for n in range(5, 12):
        edges = list(combinations(range(1, n + 1), 2))
        rows.append(_row(edges, f"={n + 1}", Status.NOT_LIMIT_FOR_THIS_M,
                         "all lines of m - 1 planes: dual branch curve of degree at most 2, not virtually limit", n + 1))
    return rows


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--output", type=Path, default=DEFAULT_OUT)
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args(argv)

    text = CuratedTable(build_rows()).dumps()  # validates non-overlapping ranges
    if args.check:
        current = args.output.read_text(encoding="utf-8") if args.output.exists() else ""
        if current != text:
            print(f"{args.output} is out of date", file=sys.stderr)
            return 1
        return 0
    args.output.parent.mkdir(parents=True, exist_ok=True)
    args.output.write_text(text, encoding="utf-8")
    print(f"wrote {text.count(chr(10))} rows to {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
