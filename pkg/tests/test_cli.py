import json
import os
import xml.etree.ElementTree as ET

import pytest

from okbodies.cli import main
from okbodies.errors import BadRational, SchemaError
from okbodies.jobs import parse_job, run_job

JOBS = os.path.join(os.path.dirname(__file__), "..", "jobs")


def jobpath(name):
    return os.path.join(JOBS, name)


def run(argv):
    return main(argv)


def read_result(path):
    with open(path) as fh:
        return json.load(fh)


def test_quartic_tropical_job(tmp_path):
    out = tmp_path / "r.json"
    assert run(["curve-body", "tropical", "--input", jobpath("quartic-tropical.json"),
                "--output", str(out)]) == 0
    doc = read_result(out)
    assert doc["canonical"]["result"]["lower"]["breakpoints"] == [
        [0, 0], [2, 0], [4, "1/2"]]
    assert doc["canonical"]["result"]["recession"] == [0, 1]


def test_quartic_arakelov_job(tmp_path):
    out = tmp_path / "r.json"
    assert run(["curve-body", "arakelov", "--input", jobpath("quartic-arakelov.json"),
                "--output", str(out)]) == 0
    upper = read_result(out)["canonical"]["result"]["upper"]
    assert upper["breakpoints"] == [[0, 2], ["1/2", 4]]
    assert upper["tail_slope"] == 0


def test_rank_job_trivial_false(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({
        "kind": "rank",
        "payload": {"graph": {"vertices": ["a"], "edges": []},
                    "divisor": {"a": -1}},
    }))
    out = tmp_path / "r.json"
    assert run(["rank", "--input", str(job), "--output", str(out)]) == 0
    assert read_result(out)["canonical"]["result"]["rank_nonnegative"] is False


def test_empty_system_exit_code(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({
        "kind": "linsys",
        "payload": {"op": "min",
                    "graph": {"vertices": ["a", "b"], "edges": [["a", "b"]]},
                    "divisor": {"a": -3, "b": 1}},
    }))
    out = tmp_path / "r.json"
    assert run(["linsys", "min", "--input", str(job), "--output", str(out)]) == 2
    assert read_result(out)["canonical"]["status"] == "empty"


def test_kind_mismatch_is_an_error(tmp_path):
    assert run(["rank", "--input", jobpath("quartic-tropical.json")]) == 1


def test_schema_errors():
    with pytest.raises(SchemaError):
        parse_job("")
    with pytest.raises(SchemaError):
        parse_job("{}")
    with pytest.raises(SchemaError):
        parse_job(json.dumps({"kind": "rank", "payload": {}}))


def test_bad_rational():
    doc = {"kind": "rank",
           "payload": {"graph": {"vertices": ["a"], "edges": []},
                       "divisor": {"a": "1/0"}}}
    with pytest.raises(BadRational):
        parse_job(json.dumps(doc))


def test_float_coefficients_rejected():
    doc = {"kind": "rank",
           "payload": {"graph": {"vertices": ["a"], "edges": []},
                       "divisor": {"a": 0.5}}}
    with pytest.raises(SchemaError):
        parse_job(json.dumps(doc))


def test_determinism_byte_for_byte():
    with open(jobpath("quartic-arakelov.json")) as fh:
        job = parse_job(fh.read())
    r1 = run_job(job)
    r2 = run_job(job)
    assert r1.canonical_bytes() == r2.canonical_bytes()


def test_echoed_job_round_trips():
    with open(jobpath("quartic-tropical.json")) as fh:
        job = parse_job(fh.read())
    result = run_job(job)
    echoed = parse_job(json.dumps(result.canonical()["job"]))
    assert echoed == job


def test_verify_jobs_pass(tmp_path):
    for name in ("verify-quartic-tropical.json", "verify-toric-d1.json"):
        out = tmp_path / "r.json"
        assert run(["verify", "--input", jobpath(name), "--output", str(out)]) == 0
        assert read_result(out)["canonical"]["result"]["pass"] is True


def test_svg_output(tmp_path):
    svg = tmp_path / "fig.svg"
    assert run(["curve-body", "tropical", "--input", jobpath("quartic-tropical.json"),
                "--output", str(tmp_path / "r.json"), "--svg", str(svg)]) == 0
    root = ET.parse(svg).getroot()
    assert root.tag.endswith("svg")
    text = svg.read_text()
    assert "(2, 0)" in text and "(4, 1/2)" in text


def test_toric_svg(tmp_path):
    svg = tmp_path / "fig.svg"
    assert run(["toric-body", "--input", jobpath("toric-d1.json"),
                "--output", str(tmp_path / "r.json"),
                "--svg", str(svg), "--window=-1,2,-1,3"]) == 0
    ET.parse(svg)


def test_bad_window(tmp_path):
    assert run(["curve-body", "tropical", "--input", jobpath("quartic-tropical.json"),
                "--svg", str(tmp_path / "f.svg"), "--window", "1,1,0,2"]) == 1
