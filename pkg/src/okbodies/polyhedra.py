"""Exact convex polyhedra: H- and V-representations, LP, Fourier-Motzkin
projection, brute-force vertex/ray enumeration, and affine images.

Conventions: an HPolyhedron in R^d is a list of constraints a.x >= b.
A VPolyhedron is conv(vertices) + cone(rays).  Emptiness is a status,
never an exception.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Tuple

from . import linalg, simplex
from .errors import DimensionMismatch, DimensionTooLarge
from .simplex import INFEASIBLE, LPOutcome, OPTIMAL, UNBOUNDED

Vector = Tuple[Fraction, ...]
Constraint = Tuple[Vector, Fraction]


def _vec(values) -> Vector:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class HPolyhedron:
    """Intersection of half-spaces a.x >= b in fixed dimension."""

    dimension: int
    constraints: Tuple[Constraint, ...]

    def __init__(self, dimension: int, constraints):
        norm = []
        for a, b in constraints:
            a = _vec(a)
            if len(a) != dimension:
                raise DimensionMismatch(
                    f"constraint length {len(a)} in dimension {dimension}")
            norm.append((a, Fraction(b)))
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "constraints", tuple(norm))

    def contains(self, point) -> bool:
        point = _vec(point)
        if len(point) != self.dimension:
            raise DimensionMismatch("point dimension mismatch")
        return all(linalg.dot(a, point) >= b for a, b in self.constraints)

    def with_constraints(self, extra) -> "HPolyhedron":
        return HPolyhedron(self.dimension, list(self.constraints) + list(extra))

    def is_empty(self) -> bool:
        zero = [Fraction(0)] * self.dimension
        return solve_lp(self, zero, "min").status == INFEASIBLE


@dataclass(frozen=True)
class VPolyhedron:
    """conv(vertices) + cone(rays)."""

    vertices: Tuple[Vector, ...]
    rays: Tuple[Vector, ...] = ()

    def __init__(self, vertices, rays=()):
        object.__setattr__(self, "vertices", tuple(_vec(v) for v in vertices))
        object.__setattr__(self, "rays", tuple(_vec(r) for r in rays))

    @property
    def dimension(self) -> Optional[int]:
        if self.vertices:
            return len(self.vertices[0])
        if self.rays:
            return len(self.rays[0])
        return None

    def is_empty(self) -> bool:
        return not self.vertices

    def contains(self, point) -> bool:
        """Membership by LP over convex-combination multipliers."""
        point = _vec(point)
        if self.is_empty():
            return False
        d = len(point)
        nv, nr = len(self.vertices), len(self.rays)
        # variables: lambda_i (nv), mu_j (nr); equalities as inequality pairs
        cons = []
        for k in range(d):
            row = [v[k] for v in self.vertices] + [r[k] for r in self.rays]
            cons.append((row, point[k]))
            cons.append(([-c for c in row], -point[k]))
        one = [Fraction(1)] * nv + [Fraction(0)] * nr
        cons.append((one, Fraction(1)))
        cons.append(([-c for c in one], Fraction(-1)))
        for i in range(nv + nr):
            e = [Fraction(0)] * (nv + nr)
            e[i] = Fraction(1)
            cons.append((e, Fraction(0)))
        out = simplex.solve_raw(cons, [Fraction(0)] * (nv + nr), "min")
        return out.status == OPTIMAL


def solve_lp(p: HPolyhedron, objective, sense: str = "min") -> LPOutcome:
    """Exact LP over an H-polyhedron, with verified certificates."""
    objective = _vec(objective)
    if len(objective) != p.dimension:
        raise DimensionMismatch(
            f"objective length {len(objective)} in dimension {p.dimension}")
    return simplex.solve_raw(p.constraints, objective, sense)


def _normalize_constraint(a: Vector, b: Fraction) -> Constraint:
    """Positive scaling to a primitive integer row (including the rhs)."""
    lcm = 1
    for q in list(a) + [b]:
        lcm = lcm * q.denominator // gcd(lcm, q.denominator)
    ints = [int(q * lcm) for q in a] + [int(b * lcm)]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return tuple(Fraction(0) for _ in a), Fraction(0)
    return tuple(Fraction(v, g) for v in ints[:-1]), Fraction(ints[-1], g)


def _drop_redundant(dimension: int, constraints) -> list:
    """Remove rows implied by the others, via one LP per candidate row.
    Trivial rows (0 >= b with b <= 0) and duplicates go first, cheaply."""
    seen = set()
    rows = []
    for a, b in constraints:
        a, b = _normalize_constraint(a, b)
        if all(v == 0 for v in a):
            if b > 0:
                rows.append((a, b))  # keep: records infeasibility
            continue
        if (a, b) not in seen:
            seen.add((a, b))
            rows.append((a, b))
    kept = list(rows)
    i = 0
    while i < len(kept):
        a, b = kept[i]
        others = kept[:i] + kept[i + 1:]
        out = simplex.solve_raw(others, a, "min")
        if out.status == OPTIMAL and out.value >= b:
            kept.pop(i)
        else:
            i += 1
    return kept


def fm_eliminate(p: HPolyhedron, var_index: int,
                 remove_redundant: bool = True) -> HPolyhedron:
    """Project out coordinate `var_index` by Fourier-Motzkin pairing.
    LP-based redundancy removal keeps the output tame."""
    if not (0 <= var_index < p.dimension):
        raise DimensionMismatch(
            f"variable index {var_index} out of range for dimension {p.dimension}")

    def strip(a):
        return a[:var_index] + a[var_index + 1:]

    zero, lower, upper = [], [], []
    for a, b in p.constraints:
        c = a[var_index]
        if c == 0:
            zero.append((strip(a), b))
        elif c > 0:
            lower.append((a, b))
        else:
            upper.append((a, b))
    combined = list(zero)
    for (al, bl), (au, bu) in itertools.product(lower, upper):
        cl, cu = al[var_index], au[var_index]
        # cl > 0, cu < 0; positive multipliers -cu and cl kill the variable
        row = tuple(-cu * x + cl * y for x, y in zip(al, au))
        rhs = -cu * bl + cl * bu
        combined.append((strip(row), rhs))
    if remove_redundant:
        combined = _drop_redundant(p.dimension - 1, combined)
    else:
        seen, dedup = set(), []
        for a, b in combined:
            a, b = _normalize_constraint(a, b)
            if (a, b) not in seen:
                seen.add((a, b))
                dedup.append((a, b))
        combined = dedup
    return HPolyhedron(p.dimension - 1, combined)


def project_out(p: HPolyhedron, var_indices: Sequence[int],
                remove_redundant: bool = True) -> HPolyhedron:
    """Eliminate several coordinates (indices in the original numbering)."""
    remaining = p
    for idx in sorted(var_indices, reverse=True):
        remaining = fm_eliminate(remaining, idx, remove_redundant)
    return remaining


def enumerate_v_rep(p: HPolyhedron) -> VPolyhedron:
    """Exact vertices and extreme rays by brute force over constraint
    subsets.  A non-pointed polyhedron is split into a pointed section
    plus its lineality directions (emitted as opposite ray pairs)."""
    d = p.dimension
    if d > 10:
        raise DimensionTooLarge(f"vertex enumeration capped at dimension 10, got {d}")
    if p.is_empty():
        return VPolyhedron([], [])
    if d == 0:
        return VPolyhedron([()], [])

    amat = [list(a) for a, _ in p.constraints]
    lineality = linalg.nullspace(amat, ncols=d)
    work = p
    extra_rays = []
    if lineality:
        section = []
        for vec in lineality:
            vec = linalg.primitive_direction(vec)
            extra_rays.append(vec)
            extra_rays.append(tuple(-v for v in vec))
            section.append((vec, Fraction(0)))
            section.append((tuple(-v for v in vec), Fraction(0)))
        work = p.with_constraints(section)

    cons = work.constraints
    vertices = set()
    for subset in itertools.combinations(range(len(cons)), d):
        mat = [list(cons[i][0]) for i in subset]
        rhs = [cons[i][1] for i in subset]
        sol = linalg.solve_square(mat, rhs)
        if sol is None:
            continue
        if work.contains(sol):
            vertices.add(tuple(sol))

    rays = set(extra_rays)
    hom = [(a, Fraction(0)) for a, _ in cons]
    if d == 1:
        candidates = [(Fraction(1),), (Fraction(-1),)]
        for r in candidates:
            if all(linalg.dot(a, r) >= 0 for a, _ in hom) and any(v != 0 for v in r):
                rays.add(r)
    else:
        for subset in itertools.combinations(range(len(cons)), d - 1):
            mat = [list(cons[i][0]) for i in subset]
            null = linalg.nullspace(mat, ncols=d)
            if len(null) != 1:
                continue
            r = linalg.primitive_direction(null[0])
            if all(v == 0 for v in r):
                continue
            for cand in (r, tuple(-v for v in r)):
                if all(linalg.dot(a, cand) >= 0 for a, _ in cons):
                    rays.add(cand)
    rays = {r for r in rays if any(v != 0 for v in r)}
    return canonicalize_vrep(VPolyhedron(sorted(vertices), sorted(rays)))


def affine_image(v: VPolyhedron, linear, offset) -> VPolyhedron:
    """Image under x -> M x + c; rays map without the offset."""
    if v.dimension is not None:
        for row in linear:
            if len(row) != v.dimension:
                raise DimensionMismatch("matrix columns must match input dimension")
    mat = [list(_vec(row)) for row in linear]
    off = _vec(offset)
    if len(off) != len(mat):
        raise DimensionMismatch("offset length must match matrix rows")
    verts = sorted({tuple(x + o for x, o in zip(linalg.mat_vec(mat, pt), off))
                    for pt in v.vertices})
    rays = set()
    for r in v.rays:
        img = linalg.primitive_direction(linalg.mat_vec(mat, r))
        if any(x != 0 for x in img):
            rays.add(img)
    return VPolyhedron(verts, sorted(rays))


def canonicalize_vrep(v: VPolyhedron) -> VPolyhedron:
    """Drop rays inside the cone of the others and vertices inside the
    hull of the others plus the cone; gives a comparable canonical form."""
    rays = [linalg.primitive_direction(r) for r in v.rays]
    rays = sorted({r for r in rays if any(x != 0 for x in r)})
    kept_rays = []
    for i, r in enumerate(rays):
        others = kept_rays + rays[i + 1:]
        if not _in_cone(r, others):
            kept_rays.append(r)
    verts = sorted(set(v.vertices))
    kept_verts = []
    for i, pt in enumerate(verts):
        others = kept_verts + verts[i + 1:]
        if not others:
            kept_verts.append(pt)
            continue
        if not VPolyhedron(others, kept_rays).contains(pt):
            kept_verts.append(pt)
    return VPolyhedron(kept_verts, kept_rays)


def _in_cone(r, generators) -> bool:
    if not generators:
        return all(v == 0 for v in r)
    d = len(r)
    n = len(generators)
    cons = []
    for k in range(d):
        row = [g[k] for g in generators]
        cons.append((row, r[k]))
        cons.append(([-c for c in row], -r[k]))
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        cons.append((e, Fraction(0)))
    return simplex.solve_raw(cons, [Fraction(0)] * n, "min").status == OPTIMAL


def vrep_equal(a: VPolyhedron, b: VPolyhedron) -> bool:
    """Exact set equality via canonical forms."""
    ca, cb = canonicalize_vrep(a), canonicalize_vrep(b)
    return ca.vertices == cb.vertices and ca.rays == cb.rays


def hull_constraints(v: VPolyhedron, sample_points) -> bool:
    """Round-trip helper: checks sample membership agreement between a
    V-polyhedron and a point set (used by tests)."""
    return [v.contains(pt) for pt in sample_points]
