"""Newton-Okounkov bodies of semistable curves from combinatorial data.

The curve never appears: a job is a dual graph, the specialization Lam of
the divisor, and flag data.  Two flag regimes:

  tropical  (flag point on a component, horizontal first flag divisor):
      the body is the overgraph of the convex function
      a(t) = minimal value at the flag vertex over the t-family of
      effective systems L+(Lam - t*Lam1), for t in [0, deg Lam / deg Lam1];
      unbounded direction (0, 1).

  arakelov  (first flag step is a whole component):
      the body is the band between 0 and the concave function
      b(t) = Lam(v) + max laplacian(phi)(v) over members with phi(v) = t;
      b is nondecreasing, eventually constant; unbounded direction (1, 0).

Each body is computed twice, by parametric LP and by Fourier-Motzkin
projection, and the two answers must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import (ConsistencyError, EmptySystemError, EmptyAtZero,
                     NonPositiveDegree, UnknownVertex)
from .graphs import Divisor, Graph, GraphFunction
from .linsys import (EnrichedSystemSpec, LinearSystemSpec, build_system,
                     enriched_system, laplacian_rows, minimal_element)
from .parametric import ParametricResult, parametric_value_function
from .plf import PiecewiseLinearFunction, constant_plf
from .polyhedra import HPolyhedron, enumerate_v_rep, project_out


@dataclass(frozen=True)
class TropicalFlag:
    y1_specialization: Divisor
    vertex: str


@dataclass(frozen=True)
class ArakelovFlag:
    vertex: str


@dataclass(frozen=True)
class CurveBodyJob:
    graph: Graph
    lam: Divisor
    flag: Union[TropicalFlag, ArakelovFlag]

    def __post_init__(self):
        if self.lam.graph != self.graph:
            raise UnknownVertex("divisor does not live on the job's graph")
        self.graph.index(self.flag.vertex)
        if isinstance(self.flag, TropicalFlag):
            y1 = self.flag.y1_specialization
            if y1.graph != self.graph:
                raise UnknownVertex("flag divisor does not live on the job's graph")
            if not y1.is_effective() or y1.degree() <= 0:
                raise NonPositiveDegree(
                    "tropical flag needs an effective specialization of positive degree")
            if self.lam.degree() <= 0:
                raise NonPositiveDegree("tropical jobs need deg(lam) > 0")


@dataclass(frozen=True)
class NOBody2D:
    """A two-dimensional body, unbounded along `recession` only."""

    kind: str  # "overgraph" | "band"
    lower: PiecewiseLinearFunction
    upper: Optional[PiecewiseLinearFunction]
    recession: Tuple[Fraction, Fraction]
    warnings: Tuple[str, ...] = ()

    def contains(self, point) -> bool:
        t, y = Fraction(point[0]), Fraction(point[1])
        if self.kind == "overgraph":
            return self.lower.in_domain(t) and y >= self.lower.value_at(t)
        return self.upper.in_domain(t) and 0 <= y <= self.upper.value_at(t)


@dataclass(frozen=True)
class VerificationReport:
    kind: str
    agree: bool
    parametric: PiecewiseLinearFunction
    projection: PiecewiseLinearFunction
    first_disagreement: Optional[Fraction] = None


def _plf_equal(p: PiecewiseLinearFunction, q: PiecewiseLinearFunction) -> bool:
    return p.breakpoints == q.breakpoints and p.tail_slope == q.tail_slope


def _first_disagreement(p, q) -> Optional[Fraction]:
    for (ta, va), (tb, vb) in zip(p.breakpoints, q.breakpoints):
        if ta != tb:
            return min(ta, tb)
        if va != vb:
            return ta
    if len(p.breakpoints) != len(q.breakpoints):
        longer = p if len(p.breakpoints) > len(q.breakpoints) else q
        return longer.breakpoints[min(len(p.breakpoints), len(q.breakpoints))][0]
    return None


def _tropical_family(job: CurveBodyJob):
    """(A, b0, b1, objective) for the family laplacian(phi) + Lam - t*Lam1 >= 0,
    phi >= 0, minimizing phi at the flag vertex."""
    g = job.graph
    n = len(g.vertices)
    lam1 = job.flag.y1_specialization
    rows, b0, b1 = [], [], []
    for i, lrow in enumerate(laplacian_rows(g)):
        rows.append(lrow)
        b0.append(-job.lam.values[i])
        b1.append(lam1.values[i])
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        rows.append(tuple(e))
        b0.append(Fraction(0))
        b1.append(Fraction(0))
    objective = [Fraction(0)] * n
    objective[g.index(job.flag.vertex)] = Fraction(1)
    return rows, b0, b1, objective


def tropical_body_parametric(job: CurveBodyJob) -> Tuple[ParametricResult, Tuple[str, ...]]:
    if minimal_element(LinearSystemSpec(job.graph, job.lam, True)) is None:
        raise EmptyAtZero("the effective system at t = 0 is empty")
    t_end = job.lam.degree() / job.flag.y1_specialization.degree()
    rows, b0, b1, objective = _tropical_family(job)
    result = parametric_value_function(rows, b0, b1, objective, "min",
                                       (Fraction(0), t_end))
    warnings = []
    if result.feasible_end != t_end:
        warnings.append(
            f"family infeasible past t = {result.feasible_end}; "
            f"body emitted over [0, {result.feasible_end}] instead of [0, {t_end}]")
    return result, tuple(warnings)


def tropical_body_projection(job: CurveBodyJob) -> PiecewiseLinearFunction:
    """Same function via Fourier-Motzkin: project the lifted set
    {(phi, t, y) : family constraints, y >= phi(v)} onto (t, y) and read
    the lower boundary off its vertices."""
    g = job.graph
    n = len(g.vertices)
    iv = g.index(job.flag.vertex)
    t_end = job.lam.degree() / job.flag.y1_specialization.degree()
    rows, b0, b1, _ = _tropical_family(job)
    lifted = []
    for a, p, q in zip(rows, b0, b1):
        lifted.append((list(a) + [-q, Fraction(0)], p))
    tcol = [Fraction(0)] * (n + 2)
    tcol[n] = Fraction(1)
    lifted.append((list(tcol), Fraction(0)))
    lifted.append(([-v for v in tcol], -t_end))
    ycut = [Fraction(0)] * (n + 2)
    ycut[iv] = Fraction(-1)
    ycut[n + 1] = Fraction(1)
    lifted.append((ycut, Fraction(0)))
    poly = HPolyhedron(n + 2, lifted)
    plane = project_out(poly, range(n))
    return _lower_boundary(plane)


def _lower_boundary(plane: HPolyhedron) -> PiecewiseLinearFunction:
    """Lower boundary of a 2-D overgraph-shaped region: its vertices are
    exactly the breakpoints."""
    vrep = enumerate_v_rep(plane)
    if vrep.is_empty():
        raise EmptyAtZero("projected body is empty")
    pts = sorted(vrep.vertices)
    if (Fraction(0), Fraction(1)) not in vrep.rays:
        raise ConsistencyError(f"projected region is not an overgraph: rays {vrep.rays}")
    return PiecewiseLinearFunction(tuple(pts), shape="convex")


def tropical_body(job: CurveBodyJob, cross_check: bool = True) -> NOBody2D:
    result, warnings = tropical_body_parametric(job)
    a = result.function
    if cross_check:
        a_fm = tropical_body_projection(job)
        if not _plf_equal(a, a_fm):
            raise ConsistencyError(
                f"parametric and projection disagree: {a} vs {a_fm}")
    return NOBody2D("overgraph", a, None, (Fraction(0), Fraction(1)), warnings)


def _arakelov_family(job: CurveBodyJob):
    g = job.graph
    n = len(g.vertices)
    iv = g.index(job.flag.vertex)
    lrows = laplacian_rows(g)
    rows, b0, b1 = [], [], []
    for i, lrow in enumerate(lrows):
        rows.append(lrow)
        b0.append(-job.lam.values[i])
        b1.append(Fraction(0))
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        rows.append(tuple(e))
        b0.append(Fraction(0))
        b1.append(Fraction(0))
    # slice phi(v) = t as a pair of parametric inequalities
    ev = [Fraction(0)] * n
    ev[iv] = Fraction(1)
    rows.append(tuple(ev))
    b0.append(Fraction(0))
    b1.append(Fraction(1))
    rows.append(tuple(-v for v in ev))
    b0.append(Fraction(0))
    b1.append(Fraction(-1))
    objective = list(lrows[iv])
    return rows, b0, b1, objective


def arakelov_body_parametric(job: CurveBodyJob) -> Tuple[ParametricResult, Fraction, Tuple[str, ...]]:
    """Returns (raw parametric result for max laplacian(phi)(v), the start
    abscissa, warnings).  The body's upper function is Lam(v) + val(t)."""
    pi = minimal_element(LinearSystemSpec(job.graph, job.lam, True))
    if pi is None:
        raise EmptySystemError("the effective system is empty")
    t_start = pi[job.flag.vertex]
    warnings = []
    if t_start > 0:
        warnings.append(
            f"members must vanish to order >= {t_start} at the flag component; "
            f"band starts at t = {t_start}, not 0")
    rows, b0, b1, objective = _arakelov_family(job)
    result = parametric_value_function(rows, b0, b1, objective, "max",
                                       (t_start, None))
    return result, t_start, tuple(warnings)


def arakelov_body_projection(job: CurveBodyJob) -> PiecewiseLinearFunction:
    """Upper function via the enriched system: project (phi, u) onto
    (phi(v), u) with Fourier-Motzkin and read the upper boundary."""
    g = job.graph
    n = len(g.vertices)
    iv = g.index(job.flag.vertex)
    spec = EnrichedSystemSpec(LinearSystemSpec(g, job.lam, True), job.flag.vertex)
    poly = enriched_system(spec)
    plane = project_out(poly, [i for i in range(n) if i != iv])
    vrep = enumerate_v_rep(plane)
    if vrep.is_empty():
        raise EmptySystemError("enriched system is empty")
    if vrep.rays != ((Fraction(1), Fraction(0)),):
        raise ConsistencyError(f"projected band has unexpected rays {vrep.rays}")
    tops = {}
    for t, u in vrep.vertices:
        tops[t] = max(tops.get(t, u), u)
    pts = sorted(tops.items())
    return PiecewiseLinearFunction(tuple(pts), tail_slope=Fraction(0), shape="concave")


def arakelov_body(job: CurveBodyJob, cross_check: bool = True) -> NOBody2D:
    result, t_start, warnings = arakelov_body_parametric(job)
    shift = job.lam[job.flag.vertex]
    raw = result.function
    b = PiecewiseLinearFunction(
        tuple((t, v + shift) for t, v in raw.breakpoints),
        tail_slope=raw.tail_slope, shape="concave")
    if b.tail_slope != 0:
        raise ConsistencyError("upper function is not eventually constant")
    if cross_check:
        b_fm = arakelov_body_projection(job)
        if not _plf_equal(b, b_fm):
            raise ConsistencyError(
                f"parametric and projection disagree: {b} vs {b_fm}")
    lower = constant_plf(t_start, None, 0)
    return NOBody2D("band", lower, b, (Fraction(1), Fraction(0)), warnings)


def compute_body(job: CurveBodyJob, cross_check: bool = True) -> NOBody2D:
    if isinstance(job.flag, TropicalFlag):
        return tropical_body(job, cross_check)
    return arakelov_body(job, cross_check)


def stabilization(body: NOBody2D) -> Tuple[Fraction, Fraction]:
    """(t*, constant value) of a band body's upper function."""
    if body.kind != "band":
        raise ValueError("stabilization is a band-body notion")
    t_star, value = body.upper.breakpoints[-1]
    return t_star, value


def cross_verify(job: CurveBodyJob) -> VerificationReport:
    """Run both algorithms and compare breakpoint lists exactly."""
    if isinstance(job.flag, TropicalFlag):
        result, _ = tropical_body_parametric(job)
        para = result.function
        proj = tropical_body_projection(job)
        kind = "tropical"
    else:
        result, _, _ = arakelov_body_parametric(job)
        shift = job.lam[job.flag.vertex]
        para = PiecewiseLinearFunction(
            tuple((t, v + shift) for t, v in result.function.breakpoints),
            tail_slope=result.function.tail_slope, shape="concave")
        proj = arakelov_body_projection(job)
        kind = "arakelov"
    agree = _plf_equal(para, proj)
    return VerificationReport(kind, agree, para, proj,
                              None if agree else _first_disagreement(para, proj))
