import subprocess
import sys
from pathlib import Path

import pytest

from degenlab.canon import canonical_form, certificate_from_text
from degenlab.curated import (
    ENV_VAR,
    CuratedRow,
    CuratedTable,
    MPredicate,
    Status,
    curated_verdict,
    default_table_path,
    load_table,
)
from degenlab.errors import ParseError
from degenlab.graph import validate_graph
from degenlab.obstructions import run_battery
from degenlab.symbols import parse_type_symbol, type_symbol

ROOT = Path(__file__).resolve().parents[1]


def test_round_trip_is_byte_exact():
    text = default_table_path().read_text(encoding="utf-8")
    assert CuratedTable.loads(text).dumps() == text


def test_generator_matches_shipped_table():
    result = subprocess.run(
        [sys.executable, str(ROOT / "scripts" / "build_curated_table.py"), "--check"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0, result.stderr


def test_rows_are_consistent():
    for row in load_table().rows:
        cert = certificate_from_text(row.certificate)
        assert canonical_form(cert).text == row.certificate
        m = max(3, len({v for e in cert for v in e}))
        assert type_symbol(validate_graph(cert, m)) == parse_type_symbol(row.symbol)


def _sample_ms(pred: MPredicate, vertices: int) -> list[int]:
    if pred.op == "=":
        return [pred.value]
    if pred.op == ">=":
        return [pred.value, pred.value + 1, pred.value + 4]
    return [max(vertices, 3), max(vertices, 3) + 3]


def test_battery_never_contradicts_limit_rows():
    table = load_table()
    for row in table.rows:
        if row.status is not Status.LIMIT:
            continue
        cert = certificate_from_text(row.certificate)
        for m in _sample_ms(row.predicate, len({v for e in cert for v in e})):
            assert not run_battery(validate_graph(cert, m), table).fired, (row.certificate, m)


def test_overlapping_ranges_rejected():
    rows = [
        CuratedRow("(2|1,0)", "1-2", ">=5", Status.LIMIT, "a"),
        CuratedRow("(2|1,0)", "1-2", "=7", Status.NOT_LIMIT_FOR_THIS_M, "b"),
    ]
    with pytest.raises(ValueError):
        CuratedTable(rows)


def test_predicates():
    assert MPredicate.parse(">=6")(9) and not MPredicate.parse(">=6")(5)
    assert MPredicate.parse("*")(3)
    with pytest.raises(ParseError):
        MPredicate.parse("<5")


def test_known_examples():
    space_quartic = [(1, 4), (2, 4), (3, 4), (1, 5)]
    for m in (5, 8, 12):
        v = curated_verdict(validate_graph(space_quartic, m))
        assert v.status is Status.ABSOLUTELY_NOT_LIMIT
    for m in (5, 6, 9):
        v = curated_verdict(validate_graph([(1, 2), (2, 3), (3, 4), (1, 4)], m))
        assert v.status is Status.LIMIT
    assert curated_verdict(validate_graph([(1, 4), (2, 4), (3, 4)], 6)).status is Status.POTENTIALLY_LIMIT


def test_env_override(tmp_path, monkeypatch):
    path = tmp_path / "table.jsonl"
    path.write_text('{"symbol": "(2|1,0)", "certificate": "1-2", "m": "*", "status": "VirtuallyLimitOnly", "citation": "x"}\n')
    monkeypatch.setenv(ENV_VAR, str(path))
    assert default_table_path() == path
    v = curated_verdict(validate_graph([(1, 2)], 9), load_table())
    assert v.status is Status.VIRTUALLY_LIMIT_ONLY


def test_bad_table_lines():
    with pytest.raises(ParseError):
        CuratedTable.loads("{broken\n")
    with pytest.raises(ParseError):
        CuratedTable.loads('{"symbol": "()"}\n')
