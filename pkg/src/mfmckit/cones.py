"""Rational polyhedral cones: dualization, Rees cones, covering polyhedra.

The double description pass keeps an explicit lineality basis, so the
dual of a lower-dimensional cone is representable (as +/- ray pairs).
Rays carry bitmask zero-sets over the processed constraints; adjacency
uses the standard combinatorial test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .errors import ClassificationError, SizeLimit, ZeroCone
from .linalg import dot, fraction_vector_to_normal, primitive, solve_square

QA_ENUM_CAP = 1_000_000


@dataclass(frozen=True)
class RationalCone:
    """Finitely generated cone in Z^dim; facets attached once computed."""

    dim: int
    generators: tuple
    facets: tuple = None

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = tuple(int(x) for x in g)
            if len(g) != self.dim:
                raise ValueError(f"generator {g} has wrong dimension")
            if any(g):
                gens.append(primitive(g))
        object.__setattr__(self, "generators", tuple(sorted(set(gens))))
        if self.facets is not None:
            object.__setattr__(
                self, "facets", tuple(sorted(set(map(tuple, self.facets))))
            )


def _insertion_order(vectors):
    return sorted(vectors, key=lambda v: (sum(v), v))


def _dual_rays(constraints, dim):
    """Extreme rays and lineality basis of {y : <y, c> >= 0 for all c}."""
    lin = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays = []  # [vector, zero-set bitmask]
    for idx, c in enumerate(constraints):
        bit = 1 << idx
        hit = next((j for j, l in enumerate(lin) if dot(l, c)), None)
        if hit is not None:
            l0 = lin[hit]
            p0 = dot(l0, c)
            if p0 < 0:
                l0, p0 = tuple(-x for x in l0), -p0
            new_lin = []
            for j, l in enumerate(lin):
                if j == hit:
                    continue
                pl = dot(l, c)
                if pl:
                    l = primitive(tuple(p0 * a - pl * b for a, b in zip(l, l0)))
                new_lin.append(l)
            new_rays = []
            for vec, z in rays:
                pr = dot(vec, c)
                if pr:
                    vec = primitive(tuple(p0 * a - pr * b for a, b in zip(vec, l0)))
                new_rays.append([vec, z | bit])
            new_rays.append([l0, bit - 1])
            lin, rays = new_lin, new_rays
            continue
        pos, zero, neg = [], [], []
        for ray in rays:
            p = dot(ray[0], c)
            if p > 0:
                pos.append((ray, p))
            elif p < 0:
                neg.append((ray, p))
            else:
                zero.append(ray)
        if not neg:
            for ray in zero:
                ray[1] |= bit
            continue
        survivors = [ray for ray, _ in pos]
        for ray in zero:
            ray[1] |= bit
            survivors.append(ray)
        for rp, pp in pos:
            for rn, pn in neg:
                meet = rp[1] & rn[1]
                blocked = any(
                    r is not rp and r is not rn and (r[1] & meet) == meet
                    for r in rays
                )
                if blocked:
                    continue
                w = primitive(tuple(pp * b - pn * a for a, b in zip(rp[0], rn[0])))
                survivors.append([w, meet | bit])
        rays = survivors
    return [tuple(v) for v, _ in rays], [tuple(l) for l in lin]


def dualize(cone: RationalCone) -> RationalCone:
    """Dual cone {y : <y, g> >= 0 for all generators g}.

    For a full-dimensional cone the dual is pointed and its generators
    are exactly the primitive facet normals of the input.  Lineality of
    the dual (input not full-dimensional) is returned as +/- ray pairs.
    """
    if not cone.generators:
        raise ZeroCone("cannot dualize a cone without non-zero generators")
    rays, lin = _dual_rays(_insertion_order(cone.generators), cone.dim)
    gens = list(rays)
    for l in lin:
        gens.append(l)
        gens.append(tuple(-x for x in l))
    return RationalCone(cone.dim, tuple(gens))


def facet_normals(cone: RationalCone):
    """Irreducible facet normals of a full-dimensional cone."""
    if not cone.generators:
        raise ZeroCone("cannot compute facets of a cone without generators")
    rays, lin = _dual_rays(_insertion_order(cone.generators), cone.dim)
    if lin:
        raise ClassificationError(
            "cone is not full-dimensional; facet normals are undetermined"
        )
    return tuple(sorted(rays))


def attach_facets(cone: RationalCone) -> RationalCone:
    return RationalCone(cone.dim, cone.generators, facet_normals(cone))


def cone_member(point, cone: RationalCone) -> bool:
    """Exact membership test against computed facets."""
    if cone.facets is None:
        raise ValueError("cone facets have not been computed")
    return all(dot(point, f) >= 0 for f in cone.facets)


@dataclass(frozen=True)
class ReesCone:
    """Cone over the unit vectors and the lifted generators (v_j, 1)."""

    base: "ExponentMatrix"
    cone: RationalCone
    coordinate_facet_indices: frozenset


def rees_cone(m) -> ReesCone:
    n = m.n
    gens = [tuple(int(i == j) for j in range(n + 1)) for i in range(n)]
    gens += [tuple(c) + (1,) for c in m.columns]
    axes = {i for i in range(n) if any(c[i] == 0 for c in m.columns)}
    axes.add(n)
    return ReesCone(m, RationalCone(n + 1, tuple(gens)), frozenset(axes))


@dataclass(frozen=True)
class FacetClassification:
    """Facets of a Rees cone split into coordinate and vertex families."""

    dim: int
    coordinate_indices: tuple
    vertex_normals: tuple

    def unit_rows(self):
        return tuple(
            tuple(int(j == i) for j in range(self.dim))
            for i in self.coordinate_indices
        )

    def all_rows(self):
        return tuple(sorted(self.unit_rows() + self.vertex_normals))

    def qa_vertices(self):
        """Recover the covering-polyhedron vertices alpha'/b."""
        out = []
        for f in self.vertex_normals:
            b = -f[-1]
            out.append(tuple(Fraction(x, b) for x in f[:-1]))
        return tuple(sorted(out))


def support_hyperplanes(m) -> FacetClassification:
    """Facet normals of the Rees cone of m, classified.

    Coordinate facets are unit vectors whose index set must match the
    axes where some generator vanishes (plus the lifted axis); every
    other facet must have negative last coordinate and non-negative
    leading block.
    """
    rc = rees_cone(m)
    normals = facet_normals(rc.cone)
    dim = rc.cone.dim
    units, vertex = set(), []
    for f in normals:
        nz = [i for i, x in enumerate(f) if x]
        if len(nz) == 1 and f[nz[0]] == 1:
            units.add(nz[0])
        elif f[-1] < 0:
            if any(x < 0 for x in f[:-1]):
                raise ClassificationError(f"vertex facet {f} has a negative entry")
            vertex.append(f)
        else:
            raise ClassificationError(f"facet {f} fits neither family")
    if units != set(rc.coordinate_facet_indices):
        raise ClassificationError(
            f"coordinate facets {sorted(units)} do not match axes "
            f"{sorted(rc.coordinate_facet_indices)}"
        )
    return FacetClassification(dim, tuple(sorted(units)), tuple(sorted(vertex)))


@dataclass(frozen=True)
class QAPolyhedron:
    """Vertex set of {x >= 0 : x A >= 1}."""

    matrix: "ExponentMatrix"
    vertices: tuple


def qa_vertices_direct(m, cap: int = QA_ENUM_CAP) -> QAPolyhedron:
    """Vertices by basic-feasible-solution enumeration.

    Every n-subset of the n + q constraint rows is solved exactly; the
    feasible unique solutions are the vertices.  Independent of the
    Rees-cone route by construction.
    """
    n, q = m.n, m.q
    total = comb(n + q, n)
    if total > cap:
        raise SizeLimit("vertex enumeration", total, cap)
    rows = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rhs = [0] * n
    for c in m.columns:
        rows.append(tuple(c))
        rhs.append(1)
    cols = m.columns
    found = set()
    for subset in itertools.combinations(range(len(rows)), n):
        x = solve_square([rows[i] for i in subset], [rhs[i] for i in subset])
        if x is None:
            continue
        den = 1
        for f in x:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = [int(f * den) for f in x]
        if any(v < 0 for v in nums):
            continue
        if all(dot(c, nums) >= den for c in cols):
            found.add(x)
    return QAPolyhedron(m, tuple(sorted(found)))


def qa_vertices_via_rees(m) -> QAPolyhedron:
    """Vertices read off the vertex facets of the Rees cone."""
    return QAPolyhedron(m, support_hyperplanes(m).qa_vertices())


def is_integral_qa(m, cap: int = QA_ENUM_CAP):
    """(True, None) when all covering-polyhedron vertices are integral,
    else (False, lexicographically least fractional vertex)."""
    for v in qa_vertices_direct(m, cap).vertices:
        if any(x.denominator != 1 for x in v):
            return False, v
    return True, None


def vertex_to_facet_normal(vertex):
    """Primitive (alpha', -b) normal attached to a rational vertex."""
    nums, b = fraction_vector_to_normal(vertex)
    return nums + (-b,)
