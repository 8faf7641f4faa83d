from degenlab.curated import load_table
from degenlab.enumeration import enumerate_arrangements
from degenlab.graph import validate_graph
from degenlab.obstructions import Kind, Verdict, castelnuovo_bound, run_battery

STAR3 = [(1, 4), (2, 4), (3, 4)]
TWISTED_CUBIC_CHAIN = [(1, 2), (2, 3), (3, 4)]


def test_chain_of_three_never_trapped():
    for m in range(4, 9):
        assert not run_battery(validate_graph(TWISTED_CUBIC_CHAIN, m)).fired


def test_planar_trap_anchors():
    rep = run_battery(validate_graph(STAR3, 5))
    assert rep.kinds == {Kind.PLANAR_TRAP}
    assert rep.verdict is Verdict.OBSTRUCTED
    triangle_pendant = run_battery(validate_graph([(1, 2), (1, 3), (2, 3), (3, 4)], 5))
    assert Kind.PLANAR_TRAP in triangle_pendant.kinds
    conic_line = run_battery(validate_graph([(1, 2), (2, 3), (4, 5)], 5))
    assert conic_line.kinds == {Kind.PLANAR_TRAP_WITH_EXTRA_COMPONENT}


def test_star_passes_for_larger_m():
    rep = run_battery(validate_graph(STAR3, 7))
    assert not rep.fired
    assert rep.verdict is Verdict.PASSES_BATTERY
    assert rep.curated is not None and rep.curated.status.value == "Limit"


def test_curated_negative_gives_known_result():
    rep = run_battery(validate_graph([(1, 2), (1, 5), (2, 5), (1, 3), (3, 5), (2, 4)], 5))
    assert not rep.fired
    assert rep.verdict is Verdict.KNOWN_RESULT
    assert rep.not_limit


def test_reducible_pairs_skip_geometric_checks():
    # K4 on four of four planes: reducible, so the dual-degree check is not applied
    rep = run_battery(validate_graph([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], 4))
    assert not rep.irreducible
    assert not rep.kinds & {Kind.CHERN_VIOLATION, Kind.DUAL_DEGREE_TOO_SMALL, Kind.PLANAR_TRAP}


def test_nothing_fires_at_m4():
    for entry in enumerate_arrangements(4):
        assert not run_battery(entry.graph).fired or not entry.irreducible


def test_battery_report_json():
    data = run_battery(validate_graph(STAR3, 5)).to_json()
    assert data["verdict"] == "Obstructed"
    assert data["fired"][0]["kind"] == "PlanarTrap"
    assert data["fired"][0]["witness"]["degree"] == 3


def test_castelnuovo_bound():
    assert [castelnuovo_bound(d) for d in range(3, 8)] == [0, 1, 2, 4, 6]


def test_obstructions_are_complete_on_all_m5_classes():
    table = load_table()
    for entry in enumerate_arrangements(5):
        rep = run_battery(entry.graph, table)
        assert rep.pair_type is not None
        if rep.curated is not None and rep.curated.status.value == "Limit":
            assert not rep.fired
