"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 capacity error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import TextIO

from .canon import canonical_form
from .curated import load_table
from .enumeration import (
    MAX_CATALOG_EDGES,
    enumerate_arrangements,
    enumerate_graphs_up_to,
    exists_pair_of_type,
    find_type_collisions,
)
from .errors import AmbiguousSymbol, CapacityError, InputError, ParseError, TooLarge
from .graph import ArrangementGraph, graph_from_json, parse_edge_file, parse_edges, validate_graph
from .invariants import PairType, analyze_invariants
from .obstructions import ObstructionReport, run_battery
from .symbols import parse_type_symbol, type_symbol

# -- input -----------------------------------------------------------------

def graph_for_symbol(text: str, m: int) -> ArrangementGraph:
    """The unique graph (up to isomorphism) with this type symbol, embedded in m planes."""
    sym = parse_type_symbol(text)
    if sym.edge_count == 0:
        return validate_graph([], m)
    if sym.edge_count > MAX_CATALOG_EDGES:
        raise TooLarge(f"cannot synthesize graphs with more than {MAX_CATALOG_EDGES} edges from a symbol")
    matches = []
    for cls in enumerate_graphs_up_to(sym.edge_count, max_vertices=m):
        if cls.dbar == sym.edge_count and type_symbol(cls.graph(m)) == sym:
            matches.append(cls.canon)
    if not matches:
        raise InputError(f"no graph on at most {m} planes has type symbol {sym.text()}")
    if len(matches) > 1:
        raise AmbiguousSymbol(sym.text(), [c.text for c in matches])
    return validate_graph(matches[0].certificate, m)


def read_graph(args) -> ArrangementGraph:
    sources = [s for s in (args.edges, args.symbol, args.file) if s is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of --edges, --symbol, --file")
    if args.file is not None:
        text = Path(args.file).read_text(encoding="utf-8")
        if text.lstrip().startswith("{"):
            G = graph_from_json(text)
            if args.m is not None and args.m != G.m:
                raise InputError(f"--m {args.m} disagrees with m={G.m} in {args.file}")
            return G
        m, edges = parse_edge_file(text)
        if m is None:
            m = args.m
        elif args.m is not None and args.m != m:
            raise InputError(f"--m {args.m} disagrees with m={m} in {args.file}")
        if m is None:
            raise InputError("plane count missing: pass --m or an m= header")
        return validate_graph(edges, m)
    if args.m is None:
        raise InputError("--m is required")
    if args.symbol is not None:
        return graph_for_symbol(args.symbol, args.m)
    return validate_graph(parse_edges(args.edges), args.m)


# -- reports ----------------------------------------------------------------

def _graph_header(G: ArrangementGraph) -> dict:
    try:
        certificate = canonical_form(G).text
    except TooLarge:
        certificate = None
    return {
        "m": G.m,
        "edges": [list(e) for e in G.sorted_edges()],
        "certificate": certificate,
        "type_symbol": type_symbol(G).text(),
    }


def analyze_payload(G: ArrangementGraph) -> dict:
    payload = _graph_header(G)
    report = analyze_invariants(G)
    payload["irreducible"] = report.irreducible
    payload.update(report.to_json())
    payload["battery"] = run_battery(G).to_json()
    return payload


def _battery_lines(rep: dict) -> list[str]:
    lines = [f"verdict        {rep['verdict']}"]
    if rep["fired"]:
        for ob in rep["fired"]:
            wit = ", ".join(f"{k}={v}" for k, v in ob["witness"].items())
            lines.append(f"  fired        {ob['kind']}({wit})")
    else:
        lines.append("  fired        none")
    cur = rep["curated"]
    if cur:
        scope = "all m" if cur["m"] == "*" else "m" + cur["m"]
        lines.append(f"curated        {cur['status']} ({scope}): {cur['citation']}")
    else:
        lines.append("curated        no entry")
    return lines


def analyze_text(p: dict) -> str:
    comps = "; ".join(
        f"deg {c['degree']} genus {c['genus']} s {c['self_nodes']}" for c in p["components"]
    ) or "none"
    lines = [
        f"planes         {p['m']}",
        f"edges          {','.join(f'{i}-{j}' for i, j in p['edges']) or '(none)'}",
        f"certificate    {p['certificate'] if p['certificate'] is not None else '(too large)'}",
        f"type symbol    {p['type_symbol']}",
        f"irreducible    {'yes' if p['irreducible'] else 'no'}",
        f"pair type      ({','.join(map(str, p['pair_type']))})",
        f"surface type   ({','.join(map(str, p['surface_type']))})",
        f"tau0..tau3     {' '.join(map(str, p['tau']))}",
        f"nu0..nu2       {' '.join(map(str, p['nu']))}",
        f"K^2 e chi      {p['K2']} {p['e']} {p['chi']}",
        f"pinches        {p['omega']}",
        "branch curve   degB={degB} g={g} c={c} n={n}".format(**p["branch"]),
        "dual curve     deg={deg} c={c} n={n}".format(**p["dual"]),
        f"components     {comps}",
    ]
    return "\n".join(lines + _battery_lines(p["battery"]))


def battery_payload(G: ArrangementGraph) -> dict:
    payload = _graph_header(G)
    payload.update(run_battery(G).to_json())
    return payload


def catalog_line(canon_text: str, G: ArrangementGraph, report: ObstructionReport | None) -> dict:
    return {
        "certificate": canon_text,
        "edges": [list(e) for e in G.sorted_edges()],
        "pair_type": list(report.pair_type.as_tuple()) if report and report.pair_type else None,
        "irreducible": report.irreducible if report else None,
        "verdict": report.verdict.value if report else None,
    }


def _emit_jsonl(out: TextIO, rows) -> None:
    for row in rows:
        out.write(json.dumps(row, separators=(",", ":")) + "\n")


# -- commands ---------------------------------------------------------------

def cmd_analyze(args, out: TextIO) -> int:
    payload = analyze_payload(read_graph(args))
    out.write((json.dumps(payload, indent=2) if args.format == "json" else analyze_text(payload)) + "\n")
    return 0


def cmd_battery(args, out: TextIO) -> int:
    payload = battery_payload(read_graph(args))
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        head = [f"certificate    {payload['certificate']}", f"irreducible    {payload['irreducible']}"]
        out.write("\n".join(head + _battery_lines(payload)) + "\n")
    return 0


def cmd_enumerate(args, out: TextIO) -> int:
    table = load_table()
    rows = []
    for entry in enumerate_arrangements(args.m, method=args.method, jobs=args.jobs):
        if args.irreducible_only and not entry.irreducible:
            continue
        report = run_battery(entry.graph, table)
        if args.obstructed_only and not report.fired:
            continue
        rows.append(catalog_line(entry.canon.text, entry.graph, report))
    if args.format == "text":
        for r in rows:
            pt = "(" + ",".join(map(str, r["pair_type"])) + ")"
            out.write(f"{r['certificate'] or '(empty)':<32} {pt:<18} {'irr' if r['irreducible'] else 'red'}  {r['verdict']}\n")
    else:
        _emit_jsonl(out, rows)
    return 0


def cmd_catalog(args, out: TextIO) -> int:
    """Abstract graph classes with at most --max-edges edges; with --m, analysed at that m."""
    table = load_table()
    rows = []
    for cls in enumerate_graphs_up_to(args.max_edges, max_vertices=args.m):
        if args.m is None:
            G = validate_graph(cls.canon.certificate, max(3, cls.vertex_count))
            row = catalog_line(cls.canon.text, G, None)
            row["pair_type"] = ["m", *cls.mfree()]
        else:
            G = cls.graph(args.m)
            row = catalog_line(cls.canon.text, G, run_battery(G, table))
            if args.irreducible_only and not row["irreducible"]:
                continue
            if args.obstructed_only and row["verdict"] != "Obstructed":
                continue
        rows.append(row)
    if args.format == "text":
        for r in rows:
            pt = "(" + ",".join(map(str, r["pair_type"])) + ")"
            out.write(f"{r['certificate']:<32} {pt}" + (f"  {r['verdict']}" if r["verdict"] else "") + "\n")
    else:
        _emit_jsonl(out, rows)
    return 0


def _parse_pair_type(text: str) -> PairType:
    parts = text.strip().strip("()").split(",")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"bad pair type {text!r}, expected m,dbar,k,tau2,tau3") from None
    if len(values) != 5:
        raise ParseError(f"bad pair type {text!r}, expected five integers")
    try:
        return PairType(*values)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_search_type(args, out: TextIO) -> int:
    target = _parse_pair_type(args.type)
    G = exists_pair_of_type(target)
    if args.format == "json":
        payload = {"target": list(target.as_tuple()), "found": G is not None}
        if G is not None:
            payload.update(G.to_json())
        out.write(json.dumps(payload) + "\n")
    elif G is None:
        out.write(f"no irreducible pair of type {target}\n")
    else:
        out.write(f"type {target}: {G.edge_text()}\n")
    return 0


def cmd_collisions(args, out: TextIO) -> int:
    groups = find_type_collisions(args.max_edges, args.m)
    if args.format == "json":
        _emit_jsonl(out, (
            {"pair_type": list(pt.as_tuple()), "certificates": [c.text for c in members]}
            for pt, members in groups
        ))
    else:
        for pt, members in groups:
            out.write(f"{pt}: " + " | ".join(c.text for c in members) + "\n")
        if not groups:
            out.write("no collisions\n")
    return 0


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="degenlab", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="text"):
        p.add_argument("--format", choices=("text", "json"), default=fmt_default)

    def graph_input(p):
        p.add_argument("--m", type=int, help="number of planes")
        p.add_argument("--edges", help='edge list, e.g. "1-2,2-3"')
        p.add_argument("--symbol", help='type symbol, e.g. "(1,2,1|4,1)"')
        p.add_argument("--file", help="edge-list file (optional m= header) or JSON report")

    p = sub.add_parser("analyze", help="invariants, battery and curated verdict for one pair")
    graph_input(p)
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("battery", help="obstruction battery only")
    graph_input(p)
    common(p)
    p.set_defaults(func=cmd_battery)

    p = sub.add_parser("enumerate", help="all classes of subgraphs of K_m (m <= 6), JSON lines")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--irreducible-only", action="store_true")
    p.add_argument("--obstructed-only", action="store_true")
    p.add_argument("--method", choices=("extend", "subsets"), default="extend")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --method subsets")
    common(p, "json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalog", help="abstract graphs with few edges and their pair types, JSON lines")
    p.add_argument("--max-edges", type=int, default=4)
    p.add_argument("--m", type=int, help="analyse each graph that fits in m planes")
    p.add_argument("--irreducible-only", action="store_true")
    p.add_argument("--obstructed-only", action="store_true")
    common(p, "json")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("search-type", help="find an irreducible pair of a given pair type")
    p.add_argument("--type", required=True, help="m,dbar,k,tau2,tau3")
    common(p)
    p.set_defaults(func=cmd_search_type)

    p = sub.add_parser("collisions", help="pair types shared by non-isomorphic graphs")
    p.add_argument("--max-edges", type=int, default=4)
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_collisions)
    return ap


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except AmbiguousSymbol as exc:
        print(f"error: {exc}", file=sys.stderr)
        for cert in exc.certificates:
            print(f"  candidate: {cert}", file=sys.stderr)
        return 1
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
