"""Line arrangements in plane arrangements of P^3: invariants, obstructions, enumeration."""

from .canon import CanonicalForm, canonical_form
from .curated import CuratedTable, KnownVerdict, Status, curated_verdict, load_table
from .enumeration import (
    build_fig4_graph,
    enumerate_arrangements,
    enumerate_graphs_up_to,
    exists_pair_of_type,
    find_type_collisions,
)
from .graph import ArrangementGraph, augmented_complement, is_irreducible_pair, parse_edges, validate_graph
from .invariants import (
    PairType,
    SurfaceType,
    analyze_invariants,
    double_curve_classes,
    dual_plucker,
    nu_profile,
    pair_type,
    pair_type_of,
    projection_data,
    surface_invariants,
    surface_type_of,
    tau_profile,
)
from .obstructions import Kind, ObstructionReport, Verdict, run_battery
from .symbols import TypeSymbol, parse_type_symbol, type_symbol

__version__ = "0.1.0"
