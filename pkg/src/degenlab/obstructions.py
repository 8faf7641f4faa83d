"""Necessary conditions for planes to be smoothable outside D.

:func:`run_battery` evaluates every check (no short-circuit) and pairs the
result with the curated verdict. Passing the battery does not imply that D
is a limit double curve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .curated import CuratedTable, KnownVerdict, curated_verdict
from .graph import ArrangementGraph, is_irreducible_pair
from .invariants import (
    PairType,
    SurfaceType,
    branch_curve,
    double_curve_classes,
    dual_plucker,
    nu_profile,
    surface_invariants,
    tau_profile,
)


class Kind(str, Enum):
    NEGATIVE_COUNT = "NegativeCount"
    NO_CORRESPONDING_SURFACE_TYPE = "NoCorrespondingSurfaceType"
    CHERN_VIOLATION = "ChernViolation"
    NEGATIVE_BRANCH_GENUS = "NegativeBranchGenus"
    DUAL_DEGREE_TOO_SMALL = "DualDegreeTooSmall"
    PLANAR_TRAP = "PlanarTrap"
    PLANAR_TRAP_WITH_EXTRA_COMPONENT = "PlanarTrapWithExtraComponent"


class Verdict(str, Enum):
    PASSES_BATTERY = "PassesBattery"
    OBSTRUCTED = "Obstructed"
    KNOWN_RESULT = "KnownResult"


@dataclass(frozen=True)
class Obstruction:
    kind: Kind
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "witness": dict(self.witness)}

    def __str__(self) -> str:
        parts = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return f"{self.kind.value}({parts})"


@dataclass(frozen=True)
class ObstructionReport:
    pair_type: PairType | None
    surface_type: SurfaceType | None
    fired: tuple[Obstruction, ...]
    curated: KnownVerdict | None
    irreducible: bool

    @property
    def verdict(self) -> Verdict:
        if self.fired:
            return Verdict.OBSTRUCTED
        if self.curated is not None and self.curated.status.is_negative:
            return Verdict.KNOWN_RESULT
        return Verdict.PASSES_BATTERY

    @property
    def kinds(self) -> set[Kind]:
        return {o.kind for o in self.fired}

    @property
    def not_limit(self) -> bool:
        """Battery or curated table shows D is not a limit curve at this m."""
        return bool(self.fired) or (self.curated is not None and self.curated.status.is_negative)

    def to_json(self) -> dict:
        return {
            "pair_type": list(self.pair_type.as_tuple()) if self.pair_type else None,
            "surface_type": list(self.surface_type.as_tuple()) if self.surface_type else None,
            "irreducible": self.irreducible,
            "fired": [o.to_json() for o in self.fired],
            "curated": self.curated.to_json() if self.curated else None,
            "verdict": self.verdict.value,
        }


def castelnuovo_bound(degree: int) -> int:
    """Largest arithmetic genus of a non-planar integral space curve of this degree."""
    return (degree - 2) ** 2 // 4


def _forced_planar(degree: int, genus: int, self_nodes: int) -> bool:
    if degree == 2:
        return True
    return degree >= 3 and genus + self_nodes > castelnuovo_bound(degree)


def run_battery(G: ArrangementGraph, table: CuratedTable | None = None) -> ObstructionReport:
    m = G.m
    fired: list[Obstruction] = []
    irreducible = is_irreducible_pair(G)

    tau = tau_profile(G, strict=False)
    nu = nu_profile(G, tau, strict=False)
    negatives = {
        name: value
        for name, value in zip(("tau0", "tau1", "tau2", "tau3", "nu0", "nu1", "nu2"), tau.as_list() + nu.as_list())
        if value < 0
    }
    if negatives:
        fired.append(Obstruction(Kind.NEGATIVE_COUNT, negatives))
        # Every later check is built on these counts.
        return ObstructionReport(None, None, tuple(fired), curated_verdict(G, table), irreducible)

    comps = double_curve_classes(G)
    pt = PairType(m, G.dbar, comps.k, tau.tau2, tau.tau3)
    gbar = pt.tau2 - pt.dbar + pt.k
    st = None
    if gbar < 0:
        fired.append(Obstruction(Kind.NO_CORRESPONDING_SURFACE_TYPE, {"gbar": gbar}))
    else:
        st = SurfaceType(m, pt.dbar, pt.k, gbar, pt.tau3)

    inv = surface_invariants(G, tau)
    pd = branch_curve(G, tau, nu)
    dual = dual_plucker(pd)

    if irreducible:
        if inv.K2 > 0 and inv.euler <= 0:
            fired.append(Obstruction(Kind.CHERN_VIOLATION, {"K2": inv.K2, "e": inv.euler}))
        if pd.g < 0:
            fired.append(Obstruction(Kind.NEGATIVE_BRANCH_GENUS, {"g": pd.g}))
        if pd.degB >= 4 and dual.deg <= 2:
            fired.append(Obstruction(Kind.DUAL_DEGREE_TOO_SMALL, {"degB": pd.degB, "deg_dual": dual.deg}))
        for idx, cls in enumerate(comps.classes):
            if not _forced_planar(cls.degree, cls.genus, cls.self_nodes):
                continue
            # A general line in the plane of the component meets the surface
            # in at least 2*degree points; through a point of another
            # component, in at least 2*degree + 2.
            witness = {
                "component": idx,
                "degree": cls.degree,
                "genus": cls.genus,
                "self_nodes": cls.self_nodes,
                "m": m,
            }
            if cls.degree >= 3 and 2 * cls.degree > m:
                fired.append(Obstruction(Kind.PLANAR_TRAP, witness))
            elif comps.k >= 2 and 2 * cls.degree + 2 > m:
                fired.append(Obstruction(Kind.PLANAR_TRAP_WITH_EXTRA_COMPONENT, witness))

    return ObstructionReport(pt, st, tuple(fired), curated_verdict(G, table), irreducible)
