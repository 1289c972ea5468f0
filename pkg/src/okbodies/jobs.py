"""Job and result files: JSON parsing, validation, dispatch, serialization.

Jobs are JSON with exact numbers only (integers or "p/q" strings).  The
schema file catches structural problems; rational parsing and graph
checks produce diagnostics naming the offending field.  Results are
deterministic: the canonical section (job echo + computed objects +
warnings + status) serializes to identical bytes on every run; timing
lives outside it.
"""

from __future__ import annotations

import importlib.resources
import itertools
import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import jsonschema

from . import curves, linsys, rank, toric
from .errors import (Disconnected, EmptyAtZero, EmptySystemError,
                     OkbodiesError, SchemaError, UnknownVertex)
from .graphs import Divisor, Graph, GraphFunction
from .oracles import RankOracle
from .plf import PiecewiseLinearFunction
from .polyhedra import VPolyhedron, vrep_equal
from .rationals import format_rational, parse_rational
from .sampling import random_divisor, random_graph, random_member

EXIT_OK, EXIT_ERROR, EXIT_EMPTY = 0, 1, 2

_SCHEMA = None


def _schema():
    global _SCHEMA
    if _SCHEMA is None:
        text = (importlib.resources.files("okbodies") / "schema" /
                "job.schema.json").read_text()
        _SCHEMA = json.loads(text)
    return _SCHEMA


@dataclass(frozen=True)
class JobFile:
    kind: str
    payload: dict
    options: dict

    def as_document(self) -> dict:
        doc = {"kind": self.kind, "payload": self.payload}
        if self.options:
            doc["options"] = self.options
        return doc


@dataclass(frozen=True)
class ResultFile:
    job: JobFile
    status: str            # "ok" | "empty"
    result: dict
    warnings: tuple
    seconds: float

    def as_document(self) -> dict:
        return {"canonical": self.canonical(), "timing": {"seconds": self.seconds}}

    def canonical(self) -> dict:
        return {
            "job": self.job.as_document(),
            "status": self.status,
            "result": self.result,
            "warnings": list(self.warnings),
        }

    def canonical_bytes(self) -> bytes:
        return json.dumps(self.canonical(), sort_keys=True, indent=2).encode()

    @property
    def exit_code(self) -> int:
        return EXIT_EMPTY if self.status == "empty" else EXIT_OK


def parse_job(text: str) -> JobFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    try:
        jsonschema.validate(doc, _schema())
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"at {path}: {exc.message}") from exc
    job = JobFile(doc["kind"], doc["payload"], doc.get("options", {}))
    _validate_payload(job)  # raises with a field-level diagnostic
    return job


def _parse_graph(payload: dict) -> Graph:
    gdoc = payload["graph"]
    return Graph(gdoc["vertices"], [tuple(e) for e in gdoc["edges"]])


def _parse_vertexmap(g: Graph, doc: dict, field: str, cls):
    parsed = {}
    for v, q in doc.items():
        try:
            parsed[v] = parse_rational(q)
        except OkbodiesError as exc:
            raise type(exc)(f"in {field}[{v!r}]: {exc}") from exc
    try:
        return cls(g, parsed)
    except UnknownVertex as exc:
        raise UnknownVertex(f"in {field}: {exc}") from exc


def _parse_curve_job(payload: dict) -> curves.CurveBodyJob:
    g = _parse_graph(payload)
    lam = _parse_vertexmap(g, payload["divisor"], "divisor", Divisor)
    fdoc = payload["flag"]
    if fdoc["type"] == "tropical":
        if "y1" not in fdoc:
            raise SchemaError("tropical flags need a 'y1' specialization")
        y1 = _parse_vertexmap(g, fdoc["y1"], "flag.y1", Divisor)
        flag = curves.TropicalFlag(y1, fdoc["vertex"])
    else:
        flag = curves.ArakelovFlag(fdoc["vertex"])
    return curves.CurveBodyJob(g, lam, flag)


def _parse_toric(payload: dict):
    mdoc = payload["model"]
    model = toric.ToricModel(mdoc["ambient_dim"],
                             [(tuple(u), a) for u, a in mdoc["generic_rays"]],
                             [(tuple(v), a) for v, a in mdoc["vertical_vertices"]])
    flag = toric.ToricFlag([(tuple(w), a) for w, a in payload["flag"]["rays"]])
    flag.validate(model)
    return model, flag


def _validate_payload(job: JobFile) -> None:
    p = job.payload
    if job.kind == "linsys":
        g = _parse_graph(p)
        _parse_vertexmap(g, p["divisor"], "divisor", Divisor)
        if p["op"] == "member":
            if "phi" not in p:
                raise SchemaError("linsys member needs a 'phi' function")
            _parse_vertexmap(g, p["phi"], "phi", GraphFunction)
    elif job.kind == "rank":
        g = _parse_graph(p)
        lam = _parse_vertexmap(g, p["divisor"], "divisor", Divisor)
        if not lam.is_integral():
            raise SchemaError("rank jobs need an integer divisor")
        if "base" in p:
            g.index(p["base"])
    elif job.kind == "curve-body":
        _parse_curve_job(p)
    elif job.kind == "toric-body":
        _parse_toric(p)
    elif job.kind == "verify":
        target = p["target"]
        if target == "curve-body":
            _parse_curve_job(p)
        elif target == "toric-body":
            _parse_toric(p)
        elif target in ("linsys", "rank"):
            g = _parse_graph(p)
            _parse_vertexmap(g, p["divisor"], "divisor", Divisor)
        # random-curves needs only count/seed, both schema-checked


def _rat_map(vec) -> dict:
    return {v: format_rational(q) for v, q in zip(vec.graph.vertices, vec.values)}


def _plf_doc(f: Optional[PiecewiseLinearFunction]):
    if f is None:
        return None
    return {
        "breakpoints": [[format_rational(t), format_rational(v)]
                        for t, v in f.breakpoints],
        "tail_slope": None if f.tail_slope is None else format_rational(f.tail_slope),
        "shape": f.shape,
    }


def _vpoly_doc(v: VPolyhedron) -> dict:
    return {
        "vertices": [[format_rational(c) for c in pt] for pt in v.vertices],
        "rays": [[format_rational(c) for c in r] for r in v.rays],
    }


def _body_doc(body: curves.NOBody2D) -> dict:
    return {
        "kind": body.kind,
        "lower": _plf_doc(body.lower),
        "upper": _plf_doc(body.upper),
        "recession": [format_rational(c) for c in body.recession],
    }


def run_job(job: JobFile, seed: Optional[int] = None) -> ResultFile:
    t0 = time.perf_counter()
    status, result, warnings = _dispatch(job, seed)
    seconds = time.perf_counter() - t0
    return ResultFile(job, status, result, tuple(warnings), seconds)


def _dispatch(job: JobFile, seed):
    p = job.payload
    if job.kind == "linsys":
        return _run_linsys(p)
    if job.kind == "rank":
        g = _parse_graph(p)
        lam = _parse_vertexmap(g, p["divisor"], "divisor", Divisor)
        base = p.get("base", g.vertices[0])
        reduced = rank.q_reduced(g, lam, base)
        return "ok", {
            "rank_nonnegative": rank.has_nonnegative_rank(g, lam, base),
            "base": base,
            "reduced": {v: c for v, c in zip(g.vertices, reduced)},
        }, []
    if job.kind == "curve-body":
        cjob = _parse_curve_job(p)
        try:
            body = curves.compute_body(cjob)
        except (EmptyAtZero, EmptySystemError) as exc:
            return "empty", {"reason": str(exc)}, []
        return "ok", _body_doc(body), list(body.warnings)
    if job.kind == "toric-body":
        model, flag = _parse_toric(p)
        body = toric.toric_body(model, flag)
        result = _vpoly_doc(body)
        if model.ambient_dim <= 3:
            result["generic_lattice_points"] = toric.lattice_point_count(
                toric.build_generic_polytope(model))
        return ("empty" if body.is_empty() else "ok"), result, []
    if job.kind == "verify":
        return _run_verify(p, seed)
    raise SchemaError(f"unknown job kind {job.kind!r}")


def _run_linsys(p: dict):
    g = _parse_graph(p)
    lam = _parse_vertexmap(g, p["divisor"], "divisor", Divisor)
    effective = p.get("effective", True)
    spec = linsys.LinearSystemSpec(g, lam, effective)
    op = p["op"]
    if op == "member":
        phi = _parse_vertexmap(g, p["phi"], "phi", GraphFunction)
        return "ok", {"member": linsys.member(spec, phi)}, []
    if op == "min":
        pi = linsys.minimal_element(spec)
        if pi is None:
            return "empty", {"minimal": None}, []
        return "ok", {"minimal": _rat_map(pi)}, []
    # op == "shift"
    try:
        shifted, pi = linsys.zariski_shift(spec)
    except EmptySystemError as exc:
        return "empty", {"reason": str(exc)}, []
    return "ok", {"shifted_divisor": _rat_map(shifted), "minimal": _rat_map(pi)}, []


def _check(checks, name, ok, detail=""):
    checks.append({"name": name, "pass": bool(ok), "detail": detail})


def _verify_curve_job(cjob: curves.CurveBodyJob, checks, label=""):
    prefix = f"{label}: " if label else ""
    try:
        report = curves.cross_verify(cjob)
    except (EmptyAtZero, EmptySystemError) as exc:
        _check(checks, f"{prefix}dual-algorithm", True, f"both empty: {exc}")
        return
    _check(checks, f"{prefix}dual-algorithm", report.agree,
           "" if report.agree else f"first disagreement at t = {report.first_disagreement}")
    body = curves.compute_body(cjob, cross_check=False)
    f = body.lower if body.kind == "overgraph" else body.upper
    closed = all(
        body.contains((t + body.recession[0], v + body.recession[1]))
        for t, v in f.breakpoints)
    _check(checks, f"{prefix}recession-closure", closed)


def _run_verify(p: dict, seed):
    checks = []
    target = p["target"]
    if seed is None:
        seed = p.get("seed", 0)
    if target == "curve-body":
        _verify_curve_job(_parse_curve_job(p), checks)
    elif target == "random-curves":
        rng = random.Random(seed)
        count = p.get("count", 50)
        made = 0
        while made < count:
            g = random_graph(rng, max_vertices=5)
            lam = random_divisor(rng, g, bound=4)
            if rng.random() < 0.5:
                if lam.degree() <= 0:
                    continue
                pick = rng.randrange(len(g.vertices))
                y1 = Divisor(g, [1 if i == pick else 0
                                 for i in range(len(g.vertices))])
                flag = curves.TropicalFlag(y1, g.vertices[rng.randrange(len(g.vertices))])
            else:
                flag = curves.ArakelovFlag(g.vertices[rng.randrange(len(g.vertices))])
            made += 1
            _verify_curve_job(curves.CurveBodyJob(g, lam, flag), checks,
                              label=f"job{made}")
    elif target == "toric-body":
        model, flag = _parse_toric(p)
        body_v = toric.toric_body_vertexmap(model, flag)
        body_p = toric.toric_body_projection(model, flag)
        _check(checks, "vertexmap-vs-projection", vrep_equal(body_v, body_p))
        inside = True
        d = model.ambient_dim
        for m in _small_box(d, 4):
            for h in range(0, 5):
                val = toric.monomial_valuation(model, flag, m, h)
                if val is not toric.NOT_A_SECTION and not body_v.contains(
                        [Fraction(x) for x in val]):
                    inside = False
        _check(checks, "monomial-valuations-inside", inside)
    elif target == "linsys":
        g = _parse_graph(p)
        lam = _parse_vertexmap(g, p["divisor"], "divisor", Divisor)
        spec = linsys.LinearSystemSpec(g, lam, True)
        pi = linsys.minimal_element(spec)
        if pi is None:
            _check(checks, "minimal-element", True, "empty system")
        else:
            _check(checks, "minimal-element-member", linsys.member(spec, pi))
            rng = random.Random(seed)
            ok_min = ok_closure = True
            for _ in range(20):
                phi = random_member(rng, spec)
                psi = random_member(rng, spec)
                if phi is None or psi is None:
                    continue
                if any(a < b for a, b in zip(phi.values, pi.values)):
                    ok_min = False
                if not linsys.member(spec, linsys.pointwise_min(phi, psi)):
                    ok_closure = False
            _check(checks, "minimal-below-samples", ok_min)
            _check(checks, "pointwise-min-closure", ok_closure)
    elif target == "rank":
        g = _parse_graph(p)
        lam = _parse_vertexmap(g, p["divisor"], "divisor", Divisor)
        main = rank.has_nonnegative_rank(g, lam, p.get("base"))
        oracle = RankOracle(g).has_nonnegative_rank(lam)
        _check(checks, "dhar-vs-class-enumeration", main == oracle,
               f"dhar={main} oracle={oracle}")
    all_pass = all(c["pass"] for c in checks)
    return "ok", {"pass": all_pass, "checks": checks}, []


def _small_box(d: int, radius: int):
    return itertools.product(range(-radius, radius + 1), repeat=d)
