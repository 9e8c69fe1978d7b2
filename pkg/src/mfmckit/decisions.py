"""Verdicts: MFMC decision, bounded TDI and torsion checks, scans.

The MFMC verdict is the conjunction of two independently computed
facts: the covering polyhedron has integral vertices (basic-solution
enumeration) and the Rees algebra is normal (Hilbert basis check).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .clutters import (
    Clutter,
    MINOR_CAP,
    covering_number,
    koenig,
    matching_number,
    minimal_vertex_covers,
    packing_property,
)
from .cones import is_integral_qa, qa_vertices_direct, support_hyperplanes
from .errors import InconsistencyError
from .hilbert import is_normal, smith_invariants
from .ideals import closure_power, ideal_equal, membership, ordinary_power, symbolic_power
from .linalg import dot


@dataclass(frozen=True)
class Verdict:
    mfmc: bool
    normal: bool
    integral: bool
    koenig: bool
    packing: bool
    torsion_free: bool
    ntf: bool
    witnesses: dict = field(default_factory=dict)
    i_max_checked: int = 3


@dataclass(frozen=True)
class NtfResult:
    ok: bool
    failed_i: int = None
    witness: tuple = None


@dataclass(frozen=True)
class TdiCounterexample:
    alpha: tuple
    rational_value: Fraction
    integral_value: int


@dataclass(frozen=True)
class TdiReport:
    bound: int
    checked: int
    counterexample: TdiCounterexample = None


def ntf_check(c: Clutter, i_max: int = 3) -> NtfResult:
    """Compare ordinary and symbolic powers up to i_max.

    On the first difference returns the least symbolic generator that
    the ordinary power misses (the containment only goes one way)."""
    for i in range(1, i_max + 1):
        ordinary = ordinary_power(c.matrix, i)
        symbolic = symbolic_power(c, i)
        if not ideal_equal(ordinary, symbolic):
            witness = next(g for g in symbolic.gens if not membership(g, ordinary))
            return NtfResult(False, i, witness)
    return NtfResult(True)


def tdi_bounded_check(c: Clutter, bound: int = 2) -> TdiReport:
    """Exact duality-gap scan over the demand box {0..bound}^n.

    The rational optimum of max{<1,y> : y >= 0, A y <= alpha} is read
    off the vertices of the dual feasible region {x >= 0 : x A >= 1};
    the integral optimum comes from a residual-capacity recursion.
    Stops at the first gap."""
    n = c.n
    vertices = qa_vertices_direct(c.matrix).vertices
    cols = c.matrix.columns
    best = {}
    grid = list(itertools.product(range(bound + 1), repeat=n))
    for r in grid:
        top = 0
        for v in cols:
            if all(x <= y for x, y in zip(v, r)):
                prev = best[tuple(x - y for x, y in zip(r, v))]
                if prev + 1 > top:
                    top = prev + 1
        best[r] = top
    checked = 0
    for alpha in grid:
        checked += 1
        rational = min(dot(alpha, v) for v in vertices)
        if best[alpha] < rational:
            return TdiReport(bound, checked,
                             TdiCounterexample(alpha, rational, best[alpha]))
    return TdiReport(bound, checked)


def decide_mfmc(c: Clutter, i_max: int = 3, minor_cap: int = MINOR_CAP) -> Verdict:
    """Full verdict for a clutter; witnesses collected for every failure."""
    normal, normal_wit = is_normal(c.matrix)
    integral, frac_vertex = is_integral_qa(c.matrix)
    koenig_ok = koenig(c)
    packing_ok, packing_wit = packing_property(c, minor_cap)
    smith = smith_invariants(c.matrix)
    ntf = ntf_check(c, i_max)
    witnesses = {}
    if not normal:
        witnesses["normal"] = normal_wit
    if not integral:
        witnesses["integral"] = frac_vertex
    if not koenig_ok:
        witnesses["koenig"] = (covering_number(c), matching_number(c))
    if not packing_ok:
        witnesses["packing"] = packing_wit
    if not smith.torsion_free:
        witnesses["torsion_free"] = smith.factors
    if not ntf.ok:
        witnesses["ntf"] = (ntf.failed_i, ntf.witness)
    return Verdict(
        mfmc=normal and integral,
        normal=normal,
        integral=integral,
        koenig=koenig_ok,
        packing=packing_ok,
        torsion_free=smith.torsion_free,
        ntf=ntf.ok,
        witnesses=witnesses,
        i_max_checked=i_max,
    )


def gr_reduced(c: Clutter) -> bool:
    """Whether the associated graded ring is reduced: normality of the
    Rees algebra together with integrality of the covering polyhedron."""
    return is_normal(c.matrix)[0] and is_integral_qa(c.matrix)[0]


@dataclass(frozen=True)
class EquivalenceReport:
    a_integral: bool
    b_cover_facets: bool
    c_closure_symbolic: tuple  # per-power equality flags, i = 1..i_max
    i_max: int

    @property
    def c_all(self) -> bool:
        return all(self.c_closure_symbolic)


def integrality_equivalences(c: Clutter, i_max: int = 3) -> EquivalenceReport:
    """Evaluate three equivalent readings of vertex integrality.

    (a) every covering-polyhedron vertex is integral;
    (b) every irreducible facet of the Rees cone is either a coordinate
        plane or comes from a minimal vertex cover with lift -1;
    (c) integral closures of powers match symbolic powers for i <= i_max.

    (a) and (b) must agree exactly, and (a) forces (c) at every checked
    power; anything else raises InconsistencyError since the routes are
    supposed to compute the same thing."""
    a, _ = is_integral_qa(c.matrix)
    fc = support_hyperplanes(c.matrix)
    cover_normals = set()
    for cover in minimal_vertex_covers(c):
        row = [0] * c.n
        for v in cover:
            row[v] = 1
        cover_normals.add(tuple(row) + (-1,))
    b = set(fc.vertex_normals) <= cover_normals
    flags = []
    for i in range(1, i_max + 1):
        flags.append(ideal_equal(closure_power(c.matrix, i, fc), symbolic_power(c, i)))
    report = EquivalenceReport(a, b, tuple(flags), i_max)
    if a != b:
        raise InconsistencyError(
            f"integrality ({a}) and facet shape ({b}) disagree"
        )
    if a and not report.c_all:
        raise InconsistencyError(
            "integral vertices but some closure power differs from symbolic"
        )
    return report


@dataclass(frozen=True)
class ScanReport:
    total: int
    packing_true: int
    reduced_confirmed: int
    reduced_counterexamples: tuple
    uniform_tested: int
    torsion_free_confirmed: int
    torsion_counterexamples: tuple

    @property
    def clean(self) -> bool:
        return not self.reduced_counterexamples and not self.torsion_counterexamples


def conjecture_scan(family, i_max: int = 3) -> ScanReport:
    """Bounded evidence scan over a family of clutters.

    Packing clutters are tested for a reduced associated graded ring;
    those with constant edge size d >= 2 are additionally tested for
    torsion-freeness.  Counterexamples are collected, never hidden."""
    total = packing_true = reduced_ok = uniform = torsion_ok = 0
    bad_reduced, bad_torsion = [], []
    for c in family:
        total += 1
        holds, _ = packing_property(c)
        if not holds:
            continue
        packing_true += 1
        if gr_reduced(c):
            reduced_ok += 1
        else:
            bad_reduced.append(c)
        weights = {sum(col) for col in c.matrix.columns}
        if len(weights) == 1 and weights.pop() >= 2:
            uniform += 1
            if smith_invariants(c.matrix).torsion_free:
                torsion_ok += 1
            else:
                bad_torsion.append(c)
    return ScanReport(
        total,
        packing_true,
        reduced_ok,
        tuple(bad_reduced),
        uniform,
        torsion_ok,
        tuple(bad_torsion),
    )
