"""Numerical invariants of a pair (planes, D) and of the smoothed surface.

All arithmetic is exact integer arithmetic. Wherever two routes to the same
number exist, both are evaluated and compared; a mismatch raises
:class:`InternalInconsistency`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .errors import EmptyCurve, InternalInconsistency, NegativeCount, NegativeGenus
from .graph import ArrangementGraph, Edge, is_irreducible_pair, triangles


def _nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise NegativeCount(name, value)


def _agree(what: str, a: int, b: int) -> int:
    if a != b:
        raise InternalInconsistency(f"{what}: {a} != {b}")
    return a


# -- triple and double point profiles -------------------------------------

@dataclass(frozen=True)
class TauProfile:
    """Triple points of the arrangement by how many of their three lines lie in D."""

    tau0: int
    tau1: int
    tau2: int
    tau3: int

    @property
    def tau_total(self) -> int:
        return self.tau0 + self.tau1 + self.tau2 + self.tau3

    def as_list(self) -> list[int]:
        return [self.tau0, self.tau1, self.tau2, self.tau3]


@dataclass(frozen=True)
class NuProfile:
    """Apparent double points of the projected line arrangement, by lines in D."""

    nu0: int
    nu1: int
    nu2: int

    @property
    def nu_total(self) -> int:
        return self.nu0 + self.nu1 + self.nu2

    def as_list(self) -> list[int]:
        return [self.nu0, self.nu1, self.nu2]


def valence_pair_count(G: ArrangementGraph) -> int:
    """Sum over planes of C(v, 2): pairs of lines of D lying in a common plane."""
    return sum(comb(len(nbrs), 2) for nbrs in G.adjacency.values())


def tau_profile(G: ArrangementGraph, strict: bool = True) -> TauProfile:
    """Counts from the triangle and valence formulas; ``strict`` rejects negatives."""
    m, dbar, d = G.m, G.dbar, G.d
    tau3 = len(triangles(G))
    tau2 = valence_pair_count(G) - 3 * tau3
    tau1 = (m - 2) * dbar - 2 * tau2 - 3 * tau3
    tau0 = comb(m, 3) - tau1 - tau2 - tau3
    if strict:
        _nonnegative(tau0=tau0, tau1=tau1, tau2=tau2, tau3=tau3)
    _agree("tau2 + 2 tau1 + 3 tau0 = (m-2) d", tau2 + 2 * tau1 + 3 * tau0, (m - 2) * d)
    return TauProfile(tau0, tau1, tau2, tau3)


def skew_pair_total(m: int) -> int:
    """Pairs of skew lines among the C(m,2) double lines: m(m-1)(m-2)(m-3)/8."""
    return m * (m - 1) * (m - 2) * (m - 3) // 8


def nu_profile(G: ArrangementGraph, tau: TauProfile | None = None, strict: bool = True) -> NuProfile:
    tau = tau or tau_profile(G, strict)
    dbar, d = G.dbar, G.d
    total = skew_pair_total(G.m)
    _agree("nu = C(m,2) C(m-2,2) / 2", 2 * total, comb(G.m, 2) * comb(G.m - 2, 2))
    nu2 = dbar * (dbar - 1) // 2 - tau.tau2 - 3 * tau.tau3
    nu0 = d * (d - 1) // 2 - tau.tau1 - 3 * tau.tau0
    nu1 = total - nu0 - nu2
    if strict:
        _nonnegative(nu0=nu0, nu1=nu1, nu2=nu2)
    return NuProfile(nu0, nu1, nu2)


# -- components of the double curve ---------------------------------------

@dataclass(frozen=True)
class DoubleCurveClass:
    """One irreducible component of the smoothed double curve, seen on D.

    ``genus`` is internal_doubles - degree + 1 and sums over classes to
    gbar. ``self_nodes`` counts pairs of this component's own lines that
    meet at a triple point of D.
    """

    edges: frozenset[Edge]
    degree: int
    internal_doubles: int
    genus: int
    self_nodes: int

    def to_json(self) -> dict:
        return {"degree": self.degree, "genus": self.genus, "self_nodes": self.self_nodes}


@dataclass(frozen=True)
class ComponentData:
    classes: tuple[DoubleCurveClass, ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def total_genus(self) -> int:
        return sum(c.genus for c in self.classes)

    def class_of(self, edge: Edge) -> int:
        for idx, c in enumerate(self.classes):
            if edge in c.edges:
                return idx
        raise KeyError(edge)


def adjacent_edge_pairs(G: ArrangementGraph):
    """Yield (e, f, closing) for every pair of edges of G sharing a vertex.

    ``closing`` is the third side of the triangle they span, which may or
    may not be in G.
    """
    for v, nbrs in G.adjacency.items():
        ordered = sorted(nbrs)
        for a_pos, a in enumerate(ordered):
            for b in ordered[a_pos + 1:]:
                e = (min(v, a), max(v, a))
                f = (min(v, b), max(v, b))
                yield e, f, (a, b)


def double_curve_classes(G: ArrangementGraph) -> ComponentData:
    """Partition the lines of D into components of the smoothed double curve.

    Two lines through a common point are directly equivalent unless the
    third line through that point also lies in D (a triple point of D
    separates the branches). Classes are the transitive closure.
    """
    parent = {e: e for e in G.edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    links = []
    for e, f, closing in adjacent_edge_pairs(G):
        if closing not in G.edges:
            links.append((e, f))
            re_, rf = find(e), find(f)
            if re_ != rf:
                parent[re_] = rf

    members: dict[Edge, set[Edge]] = {}
    for e in G.edges:
        members.setdefault(find(e), set()).add(e)
    root_doubles = {r: 0 for r in members}
    for e, _ in links:
        root_doubles[find(e)] += 1
    root_nodes = {r: 0 for r in members}
    for i, j, k in triangles(G):
        for r, n in Counter(find(e) for e in ((i, j), (i, k), (j, k))).items():
            root_nodes[r] += comb(n, 2)

    classes = []
    for r, es in members.items():
        degree = len(es)
        doubles = root_doubles[r]
        classes.append(
            DoubleCurveClass(frozenset(es), degree, doubles, doubles - degree + 1, root_nodes[r])
        )
    classes.sort(key=lambda c: min(c.edges))
    return ComponentData(tuple(classes))


# -- types -----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PairType:
    m: int
    dbar: int
    k: int
    tau2: int
    tau3: int

    def __post_init__(self):
        if min(self.as_tuple()) < 0:
            raise ValueError(f"pair type fields must be >= 0: {self.as_tuple()}")
        if self.dbar > comb(self.m, 2):
            raise ValueError(f"dbar = {self.dbar} exceeds C({self.m},2)")

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.m, self.dbar, self.k, self.tau2, self.tau3)

    def mfree(self) -> tuple[int, int, int, int]:
        return (self.dbar, self.k, self.tau2, self.tau3)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.as_tuple())) + ")"


@dataclass(frozen=True, order=True)
class SurfaceType:
    m: int
    dbar: int
    k: int
    gbar: int
    t: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.m, self.dbar, self.k, self.gbar, self.t)

    @property
    def omega(self) -> int:
        """Pinch count: 2 dbar (m - 4) - 6 t - 4 (gbar - k)."""
        return 2 * self.dbar * (self.m - 4) - 6 * self.t - 4 * (self.gbar - self.k)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.as_tuple())) + ")"


def pair_type(G: ArrangementGraph) -> PairType:
    tau = tau_profile(G)
    return PairType(G.m, G.dbar, double_curve_classes(G).k, tau.tau2, tau.tau3)


def surface_type_of(pt: PairType) -> SurfaceType:
    gbar = pt.tau2 - pt.dbar + pt.k
    if gbar < 0:
        raise NegativeGenus("gbar", gbar)
    return SurfaceType(pt.m, pt.dbar, pt.k, gbar, pt.tau3)


def pair_type_of(st: SurfaceType) -> PairType:
    if st.gbar < 0:
        raise NegativeGenus("gbar", st.gbar)
    tau2 = st.dbar + st.gbar - st.k
    if tau2 < 0:
        raise NegativeCount("tau2", tau2)
    return PairType(st.m, st.dbar, st.k, tau2, st.t)


# -- invariants of the normalization X -------------------------------------

@dataclass(frozen=True)
class SurfaceInvariants:
    K2: int
    euler: int
    chi: int
    omega: int


def surface_invariants(G: ArrangementGraph, tau: TauProfile | None = None) -> SurfaceInvariants:
    """K^2, e, chi(O) and pinch count of the normalization of a smoothing."""
    tau = tau or tau_profile(G)
    m, dbar = G.m, G.dbar
    t0, t1, t2, t3 = tau.tau0, tau.tau1, tau.tau2, tau.tau3

    K2 = _agree(
        "K^2 via (dbar, tau2, tau3) vs via (dbar, tau1, tau2, tau3)",
        m * (m - 4) ** 2 - (5 * m - 20) * dbar + 4 * t2 + 9 * t3,
        m * (m - 4) ** 2 + 10 * dbar - 5 * t1 - 6 * t2 - 6 * t3,
    )
    euler = _agree(
        "e via (dbar, tau2, tau3) vs via (dbar, tau1, tau2, tau3)",
        m * m * (m - 4) + 6 * m - (7 * m - 16) * dbar + 8 * t2 + 15 * t3,
        m * m * (m - 4) + 6 * m + 2 * dbar - 7 * t1 - 6 * t2 - 6 * t3,
    )
    # chi(O_X) = dbar + tau0 - m(m-3)/2; the surface-type route substitutes
    # gbar - k = tau2 - dbar and t = tau3.
    chi = dbar + t0 - m * (m - 3) // 2
    chi_from_type = m * (m * m - 6 * m + 11) // 6 - (m - 4) * dbar + (t2 - dbar) + 2 * t3
    _agree("chi via tau0 vs via surface type", chi, chi_from_type)
    _agree("Noether K^2 + e = 12 chi", K2 + euler, 12 * chi)

    omega = 2 * t1
    _agree("omega = 2 tau1 vs pinch formula", omega, 2 * dbar * (m - 4) - 6 * t3 - 4 * (t2 - dbar))
    return SurfaceInvariants(K2, euler, chi, omega)


def arithmetic_genus_D(G: ArrangementGraph, tau: TauProfile | None = None) -> int:
    if G.dbar == 0:
        raise EmptyCurve("arithmetic genus of the empty curve is undefined")
    tau = tau or tau_profile(G)
    return tau.tau2 + 3 * tau.tau3 - G.dbar + 1


# -- generic projection to the plane ---------------------------------------

@dataclass(frozen=True)
class ProjectionData:
    """Branch curve B of a generic projection: degree, genus, cusps, nodes."""

    degB: int
    g: int
    c: int
    n: int

    def to_json(self) -> dict:
        return {"degB": self.degB, "g": self.g, "c": self.c, "n": self.n}


@dataclass(frozen=True)
class DualData:
    deg: int
    c: int
    n: int

    def to_json(self) -> dict:
        return {"deg": self.deg, "c": self.c, "n": self.n}


def branch_curve(G: ArrangementGraph, tau: TauProfile | None = None, nu: NuProfile | None = None) -> ProjectionData:
    """Branch curve numbers without the genus sign check (see projection_data)."""
    tau = tau or tau_profile(G)
    nu = nu or nu_profile(G, tau)
    d = G.d
    pd = ProjectionData(
        degB=2 * d,
        g=6 * tau.tau0 + tau.tau1 - d + 1,
        c=6 * tau.tau0 + 3 * tau.tau1,
        n=4 * nu.nu0,
    )
    _agree(
        "degB(degB-3)/2 = g - 1 + c + n",
        pd.degB * (pd.degB - 3) // 2,
        pd.g - 1 + pd.c + pd.n,
    )
    return pd


def projection_data(G: ArrangementGraph) -> ProjectionData:
    pd = branch_curve(G)
    if pd.g < 0 and is_irreducible_pair(G):
        raise NegativeGenus("g(B)", pd.g)
    return pd


def dual_plucker(pd: ProjectionData) -> DualData:
    """Class, cusps and nodes of the dual of a curve with only nodes and cusps."""
    deg = pd.degB * (pd.degB - 1) - 2 * pd.n - 3 * pd.c
    c = 3 * deg - 3 * pd.degB + pd.c
    n = (deg - 1) * (deg - 2) // 2 - pd.g - c
    _agree("3 degB - c = 3 deg_dual - c_dual", 3 * pd.degB - pd.c, 3 * deg - c)
    return DualData(deg, c, n)


# -- report ----------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    graph: ArrangementGraph
    tau: TauProfile
    nu: NuProfile
    components: ComponentData
    pair: PairType
    surface: SurfaceType
    invariants: SurfaceInvariants
    branch: ProjectionData
    dual: DualData
    irreducible: bool

    def to_json(self) -> dict:
        return {
            "pair_type": list(self.pair.as_tuple()),
            "surface_type": list(self.surface.as_tuple()),
            "tau": self.tau.as_list(),
            "nu": self.nu.as_list(),
            "K2": self.invariants.K2,
            "e": self.invariants.euler,
            "chi": self.invariants.chi,
            "omega": self.invariants.omega,
            "branch": self.branch.to_json(),
            "dual": self.dual.to_json(),
            "components": [c.to_json() for c in self.components.classes],
        }


def analyze_invariants(G: ArrangementGraph) -> InvariantReport:
    """All invariants of G at once. Branch genus is reported unchecked."""
    tau = tau_profile(G)
    nu = nu_profile(G, tau)
    comps = double_curve_classes(G)
    pt = PairType(G.m, G.dbar, comps.k, tau.tau2, tau.tau3)
    st = surface_type_of(pt)
    _agree("sum of component genera = gbar", comps.total_genus, st.gbar)
    inv = surface_invariants(G, tau)
    _agree("omega from surface type", st.omega, inv.omega)
    pd = branch_curve(G, tau, nu)
    return InvariantReport(G, tau, nu, comps, pt, st, inv, pd, dual_plucker(pd), is_irreducible_pair(G))
