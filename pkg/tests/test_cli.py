from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from braidpoly import cli, verify
from braidpoly.invariant import InvariantReport
from braidpoly.laurent import LaurentPoly, monomial


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


TREFOIL = ("--braid", "1 1 1", "--strands", "2")


def test_compute_text_golden():
    code, out, _ = run("compute", *TREFOIL)
    assert code == 0
    assert out == (
        "crossings: 3\n"
        "components: 1\n"
        "writhe: 3\n"
        "I: 3*z*t^2 + z^3*t^2\n"
        "I_2: 3*z + z^3\n"
        "J: -2*z^3\n"
        "homfly: -a^-4 + 2*a^-2 + a^-2*z^2\n"
        "conway: 1 + z^2\n"
    )


def test_compute_structured_round_trip():
    code, out, _ = run("compute", *TREFOIL, "--format", "structured")
    assert code == 0
    r = InvariantReport.from_dict(json.loads(out))
    assert r.I == monomial(3, z=1, t=2) + monomial(z=3, t=2)
    assert r.input == {"strands": 2, "word": [1, 1, 1]}
    assert json.dumps(r.to_dict(), indent=2, sort_keys=True) + "\n" == out


def test_compute_k_restriction():
    code, out, _ = run("compute", *TREFOIL, "--k", "2", "--k", "3", "--format", "structured")
    assert code == 0
    assert sorted(json.loads(out)["per_k"]) == ["2", "3"]
    assert json.loads(out)["per_k"]["3"] == []


def test_conway_and_homfly():
    assert run("conway", *TREFOIL)[1] == "1 + z^2\n"
    assert run("homfly", *TREFOIL)[1] == "-a^-4 + 2*a^-2 + a^-2*z^2\n"
    code, out, _ = run("homfly", *TREFOIL, "--format", "structured")
    assert LaurentPoly.from_records(json.loads(out)["homfly"]) == monomial(2, a=-2) - monomial(a=-4) + monomial(a=-2, z=2)


def test_colorings():
    code, out, _ = run("colorings", *TREFOIL)
    assert code == 0
    assert out == "j=0: 0\nj=1: 3\nj=2: 0\nj=3: 1\ntotal: 4\n"
    code, out, _ = run("colorings", *TREFOIL, "--k", "3", "--format", "structured")
    assert json.loads(out)["classes"] == {"0": 0, "1": 0, "2": 0, "3": 0}


def test_triple():
    code, out, _ = run("triple", *TREFOIL, "--crossing", "1", "--format", "structured")
    assert code == 0
    data = json.loads(out)
    p, m, zero = (InvariantReport.from_dict(data[k]).I for k in ("d_plus", "d_minus", "d_zero"))
    assert p - m == zero.shift(z=1)
    code, _, err = run("triple", *TREFOIL, "--crossing", "9")
    assert code == 2 and "crossing" in err


def test_diagram_file(tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"strands": 2, "word": [1, 1, 1]}))
    assert run("compute", "--diagram", str(path)) == run("compute", *TREFOIL)
    explicit = tmp_path / "e.json"
    explicit.write_text(json.dumps({"free_loops": 2, "crossings": []}))
    assert run("compute", "--diagram", str(explicit))[1].splitlines()[3] == "I: 2*t^2"


@pytest.mark.parametrize(
    "argv",
    [
        ["compute"],
        ["compute", "--braid", "1"],
        ["compute", "--braid", "1 x", "--strands", "2"],
        ["compute", "--braid", "3", "--strands", "2"],
        ["compute", "--braid", "*1", "--strands", "2"],
        ["compute", *TREFOIL, "--diagram", "x.json"],
        ["compute", "--diagram", "/nonexistent.json"],
        ["compute", *TREFOIL, "--k", "1"],
        ["compute", *TREFOIL, "--max-nodes", "0"],
        ["compute", "--braid", "", "--strands", "1", "--format", "yaml"],
        ["nonsense"],
        ["verify", "--samples", "-1"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run("compute", "--diagram", str(path))[0] == 2
    path.write_text(json.dumps({"crossings": [{"sign": 1}]}))
    assert run("compute", "--diagram", str(path))[0] == 2


def test_budget_error_is_distinct():
    code, out, err = run("compute", "--braid", "1 -2 1 -2 1", "--strands", "3", "--max-nodes", "2")
    assert code == 3
    assert "budget" in err and out == ""


def test_verify_passes_and_is_deterministic():
    argv = ("verify", "--seed", "7", "--samples", "50")
    code, out, _ = run(*argv)
    assert code == 0
    assert len(out.splitlines()) == len(verify.SUITES)
    assert all(line.startswith("PASS") for line in out.splitlines())
    assert run(*argv)[1] == out


def test_verify_structured_and_suite_selection():
    code, out, _ = run("verify", "--suite", "r1_controls", "--samples", "3", "--format", "structured")
    data = json.loads(out)
    assert code == 0
    assert [s["name"] for s in data["suites"]] == ["r1_controls"]
    assert data["suites"][0]["failures"] == []


def test_verify_failure_exit_code(monkeypatch):
    def broken(rng, samples, budget=None):
        r = verify.SuiteResult("broken")
        r.check(False, "always fails")
        return r

    monkeypatch.setitem(verify.SUITES, "r1_controls", broken)
    code, out, _ = run("verify", "--suite", "r1_controls")
    assert code == 1
    assert "FAIL broken: 0/1" in out and "always fails" in out


def test_module_entry_point_is_byte_identical():
    argv = [sys.executable, "-m", "braidpoly", "compute", *TREFOIL, "--format", "structured"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and b"3" in a
