"""Newton-Okounkov bodies of toric schemes over a DVR.

A model is given by the rays of the generic fan (with divisor
coefficients a_sigma) and the vertices of the height-1 slice of the
special fiber fan (with coefficients a_v).  From these:

    P_D      = {m : <m, u_sigma> >= -a_sigma}            (generic polytope)
    P_model  = {(m, h) : m in P_D, <m, v> + h >= -a_v, h >= 0}
    psi(m)   = max_v(-a_v - <m, v>)   so P_model is the overgraph of psi

A flag is an ordered lattice basis w_1 .. w_{d+1} of Z^{d+1} picked from
the model's ray data; the body is the affine image of P_model under
x_i = <(m, h), w_i> + a_{w_i}.  The image is computed twice (vertex map
and Fourier-Motzkin) and must agree.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from . import linalg
from .errors import (ConsistencyError, DimensionMismatch, DimensionTooLarge,
                     FlagRayUnknown, NotABasis, OutsideGenericPolytope,
                     UnboundedGenericPolytope)
from .oracles import _det_int
from .polyhedra import (HPolyhedron, VPolyhedron, _in_cone, affine_image,
                        enumerate_v_rep, project_out, solve_lp, vrep_equal)
from .simplex import OPTIMAL, UNBOUNDED

IntVec = Tuple[int, ...]


def _ivec(v, d, what) -> IntVec:
    out = tuple(int(x) for x in v)
    if len(out) != d or any(Fraction(x) != y for x, y in zip(v, out)):
        raise DimensionMismatch(f"{what} must be an integer vector of length {d}")
    return out


def _is_primitive(v: IntVec) -> bool:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g == 1


@dataclass(frozen=True)
class ToricModel:
    ambient_dim: int
    generic_rays: Tuple[Tuple[IntVec, int], ...]
    vertical_vertices: Tuple[Tuple[IntVec, int], ...]

    def __init__(self, ambient_dim, generic_rays, vertical_vertices):
        d = int(ambient_dim)
        if d < 1:
            raise DimensionMismatch("ambient dimension must be positive")
        gr = tuple((_ivec(u, d, "generic ray"), int(a)) for u, a in generic_rays)
        vv = tuple((_ivec(v, d, "vertical vertex"), int(a)) for v, a in vertical_vertices)
        if not vv:
            raise ValueError("a model needs at least one vertical vertex")
        for u, _ in gr:
            if not _is_primitive(u):
                raise ValueError(f"generic ray {u} is not primitive")
        rays = [tuple(Fraction(x) for x in u) for u, _ in gr]
        for i in range(d):
            for sign in (1, -1):
                e = tuple(Fraction(sign * int(i == j)) for j in range(d))
                if not _in_cone(e, rays):
                    raise UnboundedGenericPolytope(
                        "generic rays do not positively span the ambient space")
        object.__setattr__(self, "ambient_dim", d)
        object.__setattr__(self, "generic_rays", gr)
        object.__setattr__(self, "vertical_vertices", vv)

    def rescale(self, k: int) -> "ToricModel":
        """Same fans, all divisor coefficients multiplied by k."""
        return ToricModel(self.ambient_dim,
                          [(u, k * a) for u, a in self.generic_rays],
                          [(v, k * a) for v, a in self.vertical_vertices])


@dataclass(frozen=True)
class ToricFlag:
    """d+1 ray/coefficient pairs forming a lattice basis of Z^{d+1}; each
    pair must literally match a model ray, either (u_sigma, 0) with
    a_sigma or (v, 1) with a_v, so the coefficient is unambiguous."""

    rays: Tuple[Tuple[IntVec, int], ...]

    def __init__(self, rays):
        object.__setattr__(
            self, "rays",
            tuple((tuple(int(x) for x in w), int(a)) for w, a in rays))

    def validate(self, model: ToricModel) -> None:
        d = model.ambient_dim
        if len(self.rays) != d + 1:
            raise NotABasis(f"a flag in dimension {d} needs {d + 1} rays")
        known = {(u + (0,)): a for u, a in model.generic_rays}
        known.update({(v + (1,)): a for v, a in model.vertical_vertices})
        for w, a in self.rays:
            if len(w) != d + 1:
                raise DimensionMismatch(f"flag ray {w} has wrong length")
            if w not in known:
                raise FlagRayUnknown(f"flag ray {w} is not a ray of the model")
            if known[w] != a:
                raise FlagRayUnknown(
                    f"flag ray {w} carries coefficient {a}, model says {known[w]}")
        det = _det_int([list(w) for w, _ in self.rays])
        if det not in (1, -1):
            raise NotABasis(f"flag rays have determinant {det}, need +-1")


def build_generic_polytope(model: ToricModel) -> HPolyhedron:
    """P_D = {m : <m, u_sigma> >= -a_sigma}; must be bounded."""
    d = model.ambient_dim
    rows = [(tuple(Fraction(x) for x in u), Fraction(-a))
            for u, a in model.generic_rays]
    poly = HPolyhedron(d, rows)
    for i in range(d):
        e = [Fraction(0)] * d
        e[i] = Fraction(1)
        for sense in ("min", "max"):
            if solve_lp(poly, e, sense).status == UNBOUNDED:
                raise UnboundedGenericPolytope(
                    f"generic polytope unbounded in coordinate {i}")
    return poly


def build_model_polyhedron(model: ToricModel) -> HPolyhedron:
    """P_model in coordinates (m_1..m_d, h): the generic constraints plus
    <m, v> + h >= -a_v per vertical vertex and h >= 0."""
    d = model.ambient_dim
    generic = build_generic_polytope(model)
    rows = [(a + (Fraction(0),), b) for a, b in generic.constraints]
    for v, a in model.vertical_vertices:
        rows.append((tuple(Fraction(x) for x in v) + (Fraction(1),), Fraction(-a)))
    h_row = tuple(Fraction(0) for _ in range(d)) + (Fraction(1),)
    rows.append((h_row, Fraction(0)))
    return HPolyhedron(d + 1, rows)


def psi_value(model: ToricModel, m) -> Fraction:
    """psi(m) = max over vertical vertices of -a_v - <m, v>, clamped below
    by 0; (m, psi(m)) is the lowest point of P_model over m."""
    m = tuple(Fraction(x) for x in m)
    if not build_generic_polytope(model).contains(m):
        raise OutsideGenericPolytope(f"{m} is outside the generic polytope")
    best = max(-Fraction(a) - linalg.dot(m, [Fraction(x) for x in v])
               for v, a in model.vertical_vertices)
    return max(best, Fraction(0))


def _flag_map(flag: ToricFlag):
    matrix = [[Fraction(x) for x in w] for w, _ in flag.rays]
    offset = [Fraction(a) for _, a in flag.rays]
    return matrix, offset


def toric_body_vertexmap(model: ToricModel, flag: ToricFlag) -> VPolyhedron:
    """Body as the affine image of the V-representation of P_model."""
    flag.validate(model)
    vrep = enumerate_v_rep(build_model_polyhedron(model))
    if vrep.is_empty():
        return VPolyhedron([], [])
    matrix, offset = _flag_map(flag)
    return affine_image(vrep, matrix, offset)


def toric_body_projection(model: ToricModel, flag: ToricFlag) -> VPolyhedron:
    """Body via Fourier-Motzkin: adjoin x_i = <(m,h), w_i> + a_i as
    equality pairs in (m, h, x) and eliminate (m, h)."""
    flag.validate(model)
    d = model.ambient_dim
    k = d + 1
    pmodel = build_model_polyhedron(model)
    rows = [(a + tuple(Fraction(0) for _ in range(k)), b)
            for a, b in pmodel.constraints]
    matrix, offset = _flag_map(flag)
    for i in range(k):
        row = [-c for c in matrix[i]] + [Fraction(0)] * k
        row[k + i] = Fraction(1)
        rows.append((tuple(row), offset[i]))
        rows.append((tuple(-c for c in row), -offset[i]))
    lifted = HPolyhedron(2 * k, rows)
    image = project_out(lifted, range(k))
    return enumerate_v_rep(image)


def toric_body(model: ToricModel, flag: ToricFlag,
               cross_check: bool = True) -> VPolyhedron:
    body = toric_body_vertexmap(model, flag)
    if cross_check:
        other = toric_body_projection(model, flag)
        if not vrep_equal(body, other):
            raise ConsistencyError(
                f"vertex-map and projection bodies disagree: {body} vs {other}")
    for pt in body.vertices:
        if any(c < 0 for c in pt):
            raise ConsistencyError(
                f"body vertex {pt} has a negative coordinate; "
                "valuations are vanishing orders")
    return body


NOT_A_SECTION = "not-a-section"


def monomial_valuation(model: ToricModel, flag: ToricFlag, m, h):
    """Valuation vector (<(m,h), w_i> + a_i)_i of the monomial section
    indexed by the integer point (m, h), or NOT_A_SECTION when (m, h)
    violates some ray inequality (including h >= 0)."""
    flag.validate(model)
    d = model.ambient_dim
    m = _ivec(m, d, "monomial exponent")
    h = int(h)
    point = m + (h,)
    if h < 0 or not build_model_polyhedron(model).contains(
            [Fraction(x) for x in point]):
        return NOT_A_SECTION
    matrix, offset = _flag_map(flag)
    return tuple(int(linalg.dot(row, [Fraction(x) for x in point]) + off)
                 for row, off in zip(matrix, offset))


def lattice_point_count(poly: HPolyhedron) -> int:
    """Number of integer points of a bounded polytope, dimension <= 3
    (box scan; a reporting utility, not part of any theorem)."""
    d = poly.dimension
    if d > 3:
        raise DimensionTooLarge("lattice point counting is capped at dimension 3")
    if d == 0:
        return 1
    bounds = []
    for i in range(d):
        e = [Fraction(0)] * d
        e[i] = Fraction(1)
        lo = solve_lp(poly, e, "min")
        hi = solve_lp(poly, e, "max")
        if lo.status != OPTIMAL or hi.status != OPTIMAL:
            if lo.status == hi.status and lo.status != OPTIMAL:
                return 0
            raise UnboundedGenericPolytope("lattice point counting needs a bounded polytope")
        bounds.append(range(math.ceil(lo.value), math.floor(hi.value) + 1))
    count = 0
    for pt in itertools.product(*bounds):
        if poly.contains([Fraction(x) for x in pt]):
            count += 1
    return count
