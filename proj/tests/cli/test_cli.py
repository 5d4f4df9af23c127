"""End-to-end tests of the rowmo command-line tool."""

import csv
import io
import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

ROWMO = os.environ.get("ROWMO", str(Path(__file__).resolve().parents[2] / "build" / "tools" / "rowmo"))
DATA = Path(__file__).resolve().parents[1] / "data"


def run(*args):
    return subprocess.run([ROWMO, *args], capture_output=True, text=True)


def ok(*args):
    r = run(*args)
    assert r.returncode == 0, r.stderr
    return r.stdout


def test_poset_info():
    out = ok("poset", "--poset", "builtin:rootA:3")
    assert "antichains: 14" in out
    assert "linear extensions: 16" in out
    info = json.loads(ok("poset", "--poset", str(DATA / "grid3x3.poset"), "--format", "json"))
    assert info["height"] == 4
    assert info["ranks"][2] == ["D", "E", "F"]


def test_poset_print_round_trips(tmp_path):
    text = ok("poset", "--poset", "builtin:chainproduct:3x2", "--print")
    f = tmp_path / "p.poset"
    f.write_text(text)
    assert ok("poset", "--poset", str(f), "--print") == text


@pytest.mark.parametrize(
    "kind,start,expected",
    [("antichain", "{a,e}", "{d}"), ("ideal", "{a,b,c,e}", "{a,b,d}")],
)
def test_step_rowmotion(kind, start, expected):
    assert ok("step", "--poset", "builtin:rootA:3", "--kind", kind, "--start", start).strip() == expected


def test_step_chain_polytope():
    out = ok("step", "--poset", "builtin:rootA:3", "--map", "rowmotion", "--kind", "chainpolytope",
             "--start", "a=0.1,b=0,c=0.3,d=0.7,e=0,f=0.2")
    assert out.strip() == "a=0, b=1/10, c=1/2, d=0, e=3/10, f=0"
    dec = ok("step", "--poset", "builtin:rootA:3", "--kind", "chainpolytope", "--decimal-ok",
             "--start", "a=0.1,b=0,c=0.3,d=0.7,e=0,f=0.2")
    assert dec.strip() == "a=0, b=0.1, c=0.5, d=0, e=0.3, f=0"


def test_step_output_parses_back():
    state = "{a1,a3,a5}"
    seen = []
    for _ in range(7):
        state = ok("step", "--poset", "builtin:zigzag:6", "--map", "coxeter", "--start", state).strip()
        seen.append(state)
    assert state == "{a1,a3,a5}"
    assert len(set(seen)) == 7
    lab = "(0,0,0,0,1/2,0,0,1)"
    for _ in range(20):
        lab = ok("step", "--poset", "builtin:zigzag:8", "--map", "coxeter", "--kind", "chainpolytope",
                 "--start", lab).strip()
    assert lab == "a1=0, a2=0, a3=0, a4=0, a5=1/2, a6=0, a7=0, a8=1"


def test_step_maps_and_files(tmp_path):
    grid = str(DATA / "grid3x3.poset")
    assert ok("step", "--poset", grid, "--map", "gyration", "--start", "{F,B}").strip() == "{G}"
    assert ok("step", "--poset", grid, "--map", "gyration", "--kind", "ideal",
              "--start", "{A,B,C,F}").strip() == "{A,B,C,D,E,G}"
    out = ok("step", "--poset", grid, "--map", "t-star", "--element", "G", "--kind", "chainpolytope",
             "--start", "A=.2,B=0,C=0,D=.4,E=.3,F=.6,G=.1,H=.1,I=0")
    assert out.strip() == "A=1/5, B=0, C=0, D=1/5, E=1/10, F=3/5, G=3/10, H=1/10, I=0"
    out = ok("step", "--poset", str(DATA / "eleven.poset"), "--map", "toggle", "--element", "F",
             "--kind", "chainpolytope", "--start-file", str(DATA / "eleven.labels"))
    assert "F=3/10" in out
    f = tmp_path / "s.txt"
    f.write_text("{(3,1),(1,2)}\n")
    assert ok("step", "--poset", "builtin:chainproduct:3x2", "--start-file", str(f)).strip() == "{(2,2)}"
    w = ok("step", "--poset", "builtin:rootA:3", "--kind", "ideal", "--map", "word", "--word", "t(d) t(b) t(a)",
           "--start", "{}")
    assert w.strip() == "{a,b,d}"
    r = ok("step", "--poset", "builtin:chainproduct:3x2", "--kind", "ideal", "--map", "rank", "--rank", "1",
           "--start", "{(1,1)}")
    assert r.strip() == "{(1,1),(1,2),(2,1)}"


def parse_csv(text):
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    return list(csv.reader(io.StringIO("\n".join(lines))))


def test_orbit_zigzag6_from_empty():
    out = ok("orbit", "--poset", "builtin:zigzag:6", "--map", "coxeter", "--start", "{}")
    assert out.splitlines()[0] == "# period=7"
    rows = parse_csv(out)
    assert rows[0] == ["step", "a1", "a2", "a3", "a4", "a5", "a6"]
    assert len(rows) == 1 + 7 + 1
    assert rows[-1] == ["total", "3", "1", "2", "2", "1", "3"]


def test_orbit_zigzag8_polytope_and_cap():
    args = ["orbit", "--poset", "builtin:zigzag:8", "--map", "coxeter", "--kind", "chainpolytope",
            "--start", "(0,0,0,0,1/2,0,0,1)"]
    rows = parse_csv(ok(*args))
    assert len(rows) == 1 + 20 + 1
    assert rows[-1] == ["total", "8", "4", "13/2", "5", "11/2", "6", "4", "8"]
    for row in rows[1:-1]:
        assert all(0 <= Fraction(c) <= 1 for c in row[1:])
    cut = ok(*args, "--cap", "5")
    assert cut.splitlines()[0] == "# truncated=5"
    rows = parse_csv(cut)
    assert len(rows) == 1 + 5
    assert rows[-1][0] == "4"
    data = json.loads(ok(*args, "--cap", "5", "--format", "json"))
    assert data["truncated"] is True and data["period"] is None and len(data["states"]) == 5


def test_orbit_csv_quotes_ids_with_commas():
    out = ok("orbit", "--poset", "builtin:chainproduct:2x2", "--kind", "ideal", "--start", "{}")
    assert parse_csv(out)[0] == ["step", "(1,1)", "(1,2)", "(2,1)", "(2,2)"]


def test_homomesy_zigzag6():
    out = ok("homomesy", "--poset", "builtin:zigzag:6", "--map", "coxeter", "--stats", "I1-I6,I2-I5,2I1+I2")
    rows = parse_csv(out)
    assert rows[0] == ["orbit", "size", "I1-I6", "I2-I5", "2I1+I2"]
    assert rows[1:] == [["0", "3", "0", "0", "1"], ["1", "7", "0", "0", "1"], ["2", "11", "0", "0", "1"]]
    data = json.loads(ok("homomesy", "--poset", "builtin:zigzag:6", "--map", "coxeter",
                         "--stats", "I1-I6,I2-I5,2I1+I2", "--format", "json"))
    assert data["all_homomesic"] is True
    assert [s["average"] for s in data["statistics"]] == ["0", "0", "1"]


def test_homomesy_counterexamples_exit_1():
    r = run("homomesy", "--poset", "builtin:zigzag:6", "--map", "coxeter", "--stats", "I1")
    assert r.returncode == 1
    r = run("homomesy", "--poset", "builtin:zigzag:8", "--map", "coxeter", "--kind", "chainpolytope",
            "--start", "(0,0,0,0,1/2,0,0,1)", "--stats", "h(a3)-h(a6),2h(a1)+h(a2)", "--format", "json")
    assert r.returncode == 1
    data = json.loads(r.stdout)
    bad, good = data["statistics"]
    assert bad["homomesic"] is False
    assert bad["counterexample"]["average"] == "1/40"
    assert bad["reference"] == "0"
    assert good["homomesic"] is True and good["average"] == "1"


def test_verify():
    out = ok("verify", "--check", "iso-cpl", "--poset", "builtin:chainproduct:3x3", "--samples", "500", "--seed", "1")
    assert out.startswith("PASS iso-cpl")
    data = json.loads(ok("verify", "--poset", str(DATA / "eleven.poset"), "--samples", "20", "--format", "json"))
    statuses = {c["check"]: c["status"] for c in data["checks"]}
    assert statuses["row-rank"] == "skipped"
    assert statuses["t-star"] == "pass"
    assert data["passed"] is True


def test_deterministic_output():
    args = ["verify", "--poset", "builtin:zigzag:5", "--samples", "30", "--seed", "9", "--format", "json"]
    assert ok(*args) == ok(*args)


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["frobnicate"],
        ["step", "--poset", "builtin:rootA:3", "--start", "{a,d}"],
        ["step", "--poset", "builtin:rootA:3", "--start", "{a,zz}"],
        ["step", "--poset", "builtin:rootA:3"],
        ["step", "--poset", "builtin:rootA:3", "--kind", "chainpolytope", "--start", "(1,0,0,1,0,0)"],
        ["step", "--poset", "builtin:rootA:3", "--kind", "filter", "--map", "toggle", "--element", "a",
         "--start", "{f}"],
        ["step", "--poset", "builtin:rootA:3", "--map", "toggle", "--start", "{}"],
        ["step", "--poset", "builtin:rootA:3", "--map", "tau-star", "--element", "a", "--start", "{}"],
        ["step", "--poset", "builtin:rootA:3", "--map", "warp", "--start", "{}"],
        ["step", "--poset", "builtin:zigzag:0", "--start", "{}"],
        ["step", "--poset", str(DATA / "cycle.poset"), "--start", "{}"],
        ["poset", "--poset", str(DATA / "bad_directive.poset")],
        ["poset", "--poset", "/no/such/file"],
        ["homomesy", "--poset", "builtin:zigzag:6", "--stats", "I9"],
        ["homomesy", "--poset", "builtin:zigzag:6", "--kind", "chainpolytope", "--stats", "I1"],
        ["verify", "--poset", "builtin:zigzag:4", "--check", "no-such-check"],
        ["orbit", "--poset", "builtin:zigzag:4", "--start", "{}", "--cap", "0"],
    ],
)
def test_usage_errors_exit_2(args):
    r = run(*args)
    assert r.returncode == 2, (args, r.stdout, r.stderr)


def test_parse_error_reports_line():
    r = run("poset", "--poset", str(DATA / "bad_directive.poset"))
    assert "line 3" in r.stderr
