"""Clutters, exponent matrices, minors and cover/matching combinatorics.

A clutter is stored through its incidence matrix: one column per edge,
one row per vertex.  Columns are exponent vectors of the edge monomials,
so the same type carries general monomial ideals when entries exceed 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import EmptyEdge, NotAntichain, NotZeroOne, OverlappingSpec, SizeLimit

MINOR_CAP = 3 ** 12


def _check_antichain(columns):
    # minimal generation: no exponent vector dominates another componentwise
    for a, b in itertools.combinations(columns, 2):
        if all(x <= y for x, y in zip(a, b)):
            raise NotAntichain(a, b)
        if all(y <= x for x, y in zip(a, b)):
            raise NotAntichain(b, a)


@dataclass(frozen=True)
class ExponentMatrix:
    """Non-negative integer matrix whose columns minimally generate an ideal."""

    columns: tuple

    def __post_init__(self):
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        if not cols:
            raise EmptyEdge("no generators: q = 0")
        width = len(cols[0])
        for c in cols:
            if len(c) != width:
                raise ValueError("ragged column lengths")
            if any(x < 0 for x in c):
                raise ValueError(f"negative exponent in {c}")
            if not any(c):
                raise EmptyEdge(f"zero exponent vector {c}")
        _check_antichain(cols)
        object.__setattr__(self, "columns", tuple(sorted(cols)))

    @property
    def n(self) -> int:
        return len(self.columns[0])

    @property
    def q(self) -> int:
        return len(self.columns)

    def row(self, i: int):
        return tuple(c[i] for c in self.columns)

    def is_zero_one(self) -> bool:
        return all(x <= 1 for c in self.columns for x in c)

    def max_entry(self) -> int:
        return max(x for c in self.columns for x in c)


@dataclass(frozen=True)
class Clutter:
    """A 0/1 exponent matrix with vertex labels."""

    matrix: ExponentMatrix
    labels: tuple = ()

    def __post_init__(self):
        for j, c in enumerate(self.matrix.columns):
            for i, x in enumerate(c):
                if x not in (0, 1):
                    raise NotZeroOne(j, i, x)
        labels = self.labels or tuple(f"x{i + 1}" for i in range(self.matrix.n))
        if len(labels) != self.matrix.n:
            raise ValueError("label count differs from vertex count")
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def q(self) -> int:
        return self.matrix.q

    @property
    def edges(self):
        """Edge supports as sorted index tuples, in column order."""
        return tuple(
            tuple(i for i, x in enumerate(c) if x) for c in self.matrix.columns
        )

    def edge_masks(self):
        return tuple(
            sum(1 << i for i, x in enumerate(c) if x) for c in self.matrix.columns
        )

    def edge_labels(self):
        return tuple(tuple(self.labels[i] for i in e) for e in self.edges)


def validate(grid, labels=None) -> Clutter:
    """Build a Clutter from a raw integer grid (one row per edge).

    Raises NotZeroOne / EmptyEdge / NotAntichain on bad input.
    """
    rows = [tuple(int(x) for x in r) for r in grid]
    if not rows:
        raise EmptyEdge("no edges: q = 0")
    for r, row in enumerate(rows):
        for c, x in enumerate(row):
            if x not in (0, 1):
                raise NotZeroOne(r, c, x)
    return Clutter(ExponentMatrix(tuple(rows)), tuple(labels) if labels else ())


def clutter_from_edges(n: int, edges, labels=None) -> Clutter:
    """Clutter from index-based edge supports over n vertices."""
    grid = []
    for e in edges:
        row = [0] * n
        for i in e:
            row[i] = 1
        grid.append(row)
    return validate(grid, labels)


@dataclass(frozen=True)
class MinorSpec:
    """Disjoint vertex sets sent to zero and to one."""

    zeros: tuple
    ones: tuple

    def __post_init__(self):
        z = tuple(sorted(set(self.zeros)))
        o = tuple(sorted(set(self.ones)))
        if set(z) & set(o):
            raise OverlappingSpec(f"zeros {z} and ones {o} overlap")
        object.__setattr__(self, "zeros", z)
        object.__setattr__(self, "ones", o)


@dataclass(frozen=True)
class NonMinor:
    """Marker for a degenerate minor: 'unit' or 'zero' ideal."""

    reason: str


def minor(c: Clutter, spec: MinorSpec):
    """Minor of a clutter: delete edges meeting zeros, shrink by ones.

    Returns a Clutter on the surviving vertices, or NonMinor when the
    result is the unit ideal (an edge emptied out) or the zero ideal
    (no edges left).  Duplicate edges collapse; supersets are dropped.
    """
    zeros, ones = set(spec.zeros), set(spec.ones)
    kept = [set(e) for e in c.edges if not (set(e) & zeros)]
    if not kept:
        return NonMinor("zero")
    shrunk = []
    for e in kept:
        e2 = e - ones
        if not e2:
            return NonMinor("unit")
        shrunk.append(e2)
    minimal = [e for e in shrunk if not any(f < e for f in shrunk)]
    dedup = sorted(set(frozenset(e) for e in minimal), key=sorted)
    survivors = [i for i in range(c.n) if i not in zeros and i not in ones]
    pos = {v: k for k, v in enumerate(survivors)}
    edges = [sorted(pos[v] for v in e) for e in dedup]
    labels = tuple(c.labels[i] for i in survivors)
    return clutter_from_edges(len(survivors), edges, labels)


def _minor_specs(n: int):
    # assignment order: keep < zero < one per vertex, lexicographic
    for assign in itertools.product((0, 1, 2), repeat=n):
        zeros = tuple(i for i, a in enumerate(assign) if a == 1)
        ones = tuple(i for i, a in enumerate(assign) if a == 2)
        yield MinorSpec(zeros, ones)


def all_minors(c: Clutter, cap: int = MINOR_CAP):
    """All proper-and-improper minors of a clutter, deduplicated.

    Enumerates every disjoint (zeros, ones) pair, including the empty
    one, filters degenerate results and keeps the first spec producing
    each labeled edge set.
    """
    total = 3 ** c.n
    if total > cap:
        raise SizeLimit("minor enumeration", total, cap)
    out, seen = [], set()
    for spec in _minor_specs(c.n):
        m = minor(c, spec)
        if isinstance(m, NonMinor):
            continue
        key = (m.labels, m.edges)
        if key in seen:
            continue
        seen.add(key)
        out.append((spec, m))
    return tuple(out)


def minimal_vertex_covers(c: Clutter, max_vertices: int = 20):
    """All minimal transversals, as sorted index tuples in canonical order."""
    n = c.n
    if n > max_vertices:
        raise SizeLimit("cover enumeration", 2 ** n, 2 ** max_vertices)
    masks = c.edge_masks()
    covers = []
    for m in range(1 << n):
        if any(not (m & e) for e in masks):
            continue
        # minimal: every chosen vertex privately covers some edge
        if all(any(e & m == 1 << v for e in masks) for v in range(n) if m >> v & 1):
            covers.append(tuple(i for i in range(n) if m >> i & 1))
    return tuple(sorted(covers))


def covering_number(c: Clutter) -> int:
    """Least size of a vertex cover."""
    return min(len(t) for t in minimal_vertex_covers(c))


def matching_number(c: Clutter, max_edges: int = 24) -> int:
    """Largest number of pairwise vertex-disjoint edges, by exhaustion."""
    masks = c.edge_masks()
    if len(masks) > max_edges:
        raise SizeLimit("matching search", 2 ** len(masks), 2 ** max_edges)
    best = 0

    def rec(i, used, count):
        nonlocal best
        if count > best:
            best = count
        if i == len(masks) or count + len(masks) - i <= best:
            return
        if not (masks[i] & used):
            rec(i + 1, used | masks[i], count + 1)
        rec(i + 1, used, count)

    rec(0, 0, 0)
    return best


def koenig(c: Clutter) -> bool:
    """Whether the covering and matching numbers coincide."""
    return covering_number(c) == matching_number(c)


def packing_property(c: Clutter, cap: int = MINOR_CAP):
    """Whether every minor satisfies the Koenig property.

    Returns (True, None) or (False, first failing MinorSpec) in the
    canonical minor enumeration order.
    """
    for spec, m in all_minors(c, cap):
        if not koenig(m):
            return False, spec
    return True, None


def enumerate_clutters(max_vertices: int, max_edges: int):
    """Yield every clutter on 1..max_vertices labeled vertices with at
    most max_edges edges, in a deterministic order.

    Isolated vertices are disallowed, so each family appears exactly
    once (at the vertex count it actually uses)."""
    for n in range(1, max_vertices + 1):
        subsets = [tuple(e) for k in range(1, n + 1)
                   for e in itertools.combinations(range(n), k)]
        for count in range(1, max_edges + 1):
            for family in itertools.combinations(subsets, count):
                sets = [set(e) for e in family]
                if any(a <= b for a, b in itertools.permutations(sets, 2)):
                    continue
                if set().union(*sets) != set(range(n)):
                    continue
                yield clutter_from_edges(n, family)
