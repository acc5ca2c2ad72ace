import io
import json
import subprocess
import sys

import jsonschema
import pytest

import monlc.cli as cli
from monlc.cli import run, schema_for

from conftest import DATA


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(x) for x in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def d(name):
    return str(DATA / name)


CASES = [
    ("homology", False, ["--complex", d("c5_complex.txt")]),
    ("homology", False, ["--pair", d("pair.txt"), "--char", "3"]),
    ("degree-complex", False, ["--ideal", d("c5_ideal.txt"), "--multidegree", "0,0,1,0,0"]),
    ("degree-complex", False, ["--ideal", d("nonsq.txt"), "--multidegree", "-1,0,2"]),
    ("lc", True, ["--J", d("small_ideal.txt"), "--I", d("c5_ideal.txt"), "--piece", "1", "-1,0,0,0,0"]),
    ("lc", False, ["--J", d("small_ideal.txt"), "--I", d("c5_ideal.txt"), "--profile"]),
    ("lc", False, ["--J", d("small_ideal.txt"), "--I", d("c5_ideal.txt"), "--profile", "--full"]),
    ("cm-check", False, ["--J", d("small_ideal.txt"), "--I", d("c5_ideal.txt")]),
    ("symbolic", False, ["--complex", d("c5_complex.txt"), "--t-range", "1,2"]),
    ("discrepancy", False, ["--graph", d("c5_graph.txt"), "--max-t", "3"]),
    ("cm-edge", False, ["--graph", d("tri_path.txt"), "--max-t", "3"]),
    ("matroid", False, ["--complex", d("c5_complex.txt")]),
]


@pytest.mark.parametrize("command, piece, args", CASES, ids=[" ".join(c[2][:1] + [c[0]]) for c in CASES])
def test_json_output_matches_schema(command, piece, args):
    code, out, err = invoke(command, *args, "--json")
    assert code == 0, err
    jsonschema.validate(json.loads(out), schema_for(command, piece=piece))


@pytest.mark.parametrize("command, piece, args", CASES[:4] + CASES[7:9])
def test_table_output_is_deterministic(command, piece, args):
    first = invoke(command, *args)
    assert first[0] == 0
    assert invoke(command, *args) == first


def test_json_output_is_byte_identical_across_runs():
    args = ["lc", "--J", d("small_ideal.txt"), "--I", d("c5_ideal.txt"), "--profile", "--json"]
    assert invoke(*args)[1] == invoke(*args)[1]


def test_void_and_empty_labels():
    code, out, _ = invoke("degree-complex", "--ideal", d("nonsq.txt"), "--multidegree", "5,5,5")
    assert code == 0 and "VOID" in out
    code, out, _ = invoke("degree-complex", "--ideal", d("nonsq.txt"),
                          "--multidegree", "-1,0,-1", "--json")
    assert json.loads(out)["kind"] == "empty"


def test_negative_piece_vector():
    code, out, _ = invoke("lc", "--J", d("small_ideal.txt"), "--I", d("c5_ideal.txt"),
                          "--piece", "1", "-1,0,0,0,0", "--json")
    js = json.loads(out)
    assert code == 0 and js["a"] == [-1, 0, 0, 0, 0] and js["g_set_size"] == 1


def test_cm_check_values():
    code, out, _ = invoke("cm-check", "--J", d("small_ideal.txt"), "--I", d("c5_ideal.txt"), "--json")
    js = json.loads(out)
    assert code == 0 and js["is_CM"] and js["dim"] == 3


def test_input_errors_exit_one(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("ring x1..x2; ideal x1*x3;")
    code, _, err = invoke("degree-complex", "--ideal", bad, "--multidegree", "0,0")
    assert code == 1 and "line 1" in err
    code, _, err = invoke("homology", "--complex", d("c5_complex.txt"), "--char", "4")
    assert code == 1
    code, _, _ = invoke("homology", "--complex", tmp_path / "missing.txt")
    assert code == 1
    assert invoke("degree-complex", "--ideal", d("c5_ideal.txt"), "--multidegree", "0,0")[0] == 1
    assert invoke("lc", "--J", d("small_ideal.txt"), "--I", d("c5_ideal.txt"))[0] == 1
    assert invoke("homology")[0] == 1
    assert invoke("no-such-command")[0] == 1


def test_failed_cross_check_exits_two(monkeypatch):
    monkeypatch.setattr(cli, "ses_consistency", lambda *a, **k: False)
    code, out, err = invoke("lc", "--J", d("small_ideal.txt"), "--I", d("c5_ideal.txt"),
                            "--piece", "1", "0,0,0,0,0")
    assert code == 2 and out == "" and "cross-check failed" in err


def test_warnings_reach_stderr(tmp_path):
    code, _, err = invoke("homology", "--complex", d("c5_complex.txt"))
    assert code == 0 and err == ""
    unit = tmp_path / "unit.txt"
    unit.write_text("ring x1..x2; ideal 1;")
    code, out, err = invoke("degree-complex", "--ideal", unit, "--multidegree", "0,0")
    assert code == 0 and err.startswith("warning:") and "VOID" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "monlc", "matroid", "--complex", d("c5_complex.txt")],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0 and proc.stdout
