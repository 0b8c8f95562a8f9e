import csv
import io
import json
import os
import subprocess

import pytest

UPCHECK = os.environ.get("UPCHECK", "upcheck")


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([UPCHECK, *args], capture_output=True, text=True, env=full_env)


def test_verify_demo_passes():
    r = run("verify")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert len(doc) == 1
    names = {rep["name"] for rep in doc[0]["reports"]}
    assert {"backward_up", "central_up", "heisenberg", "bernstein"} <= names
    assert all(rep["pass"] for rep in doc[0]["reports"])


def test_verify_inadmissible_is_input_error():
    r = run("verify", "--input", '{"n_min": 0, "coeffs": [[1, 0]]}')
    assert r.returncode == 2
    doc = json.loads(r.stdout)
    assert any("InadmissibleFunction" in e["error"] for e in doc[0]["errors"])


def test_verify_inadmissible_without_position_checks():
    r = run("verify", "--input", '{"n_min": 0, "coeffs": [1]}', "--checks", "breitenberger")
    assert r.returncode == 0, r.stderr


def test_empty_input_file(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("")
    assert run("verify", "--input", str(p)).returncode == 2


@pytest.mark.parametrize(
    "doc",
    ['{"n_min": 0}', "[]", "{not json", '{"n_min": 0, "coeffs": [[1, "x"]]}'],
)
def test_malformed_input(doc):
    assert run("verify", "--input", doc).returncode == 2


def test_missing_file():
    assert run("verify", "--input", "/nonexistent/f.json").returncode == 2


def test_input_array_file_and_csv(tmp_path):
    p = tmp_path / "fs.json"
    p.write_text(json.dumps([{"n_min": 0, "coeffs": [1, 1]}, {"n_min": -1, "coeffs": [1, 0, -1]}]))
    r = run("verify", "--input", str(p), "--format", "csv", "--deltas", "1,0.5")
    assert r.returncode == 0, r.stderr
    rows = list(csv.DictReader(io.StringIO(r.stdout)))
    assert {row["input"] for row in rows} == {"0", "1"}
    assert all(row["pass"] == "true" for row in rows)


def test_random_inputs_deterministic():
    a = run("verify", "--random", "4", "--dim", "9", "--seed", "7")
    b = run("verify", "--random", "4", "--dim", "9", "--seed", "7")
    assert a.returncode == 0 and a.stdout == b.stdout
    assert len(json.loads(a.stdout)) == 4


def test_random_inadmissible_generator():
    r = run("verify", "--random", "2", "--dim", "4", "--allow-inadmissible", "--checks", "breitenberger")
    assert r.returncode == 0


def test_sweep_default_grid(tmp_path):
    out = tmp_path / "sweep.csv"
    r = run("sweep", "--out", str(out))
    assert r.returncode == 0, r.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "delta,sigma_a,sigma_b,comm_abs,residual,diff_to_derivative"
    assert len(lines) == 12
    assert all(float(line.split(",")[4]) >= -1e-10 for line in lines[1:])


def test_sweep_modes_and_deltas():
    back = run("sweep", "--deltas", "1,0.5")
    cent = run("sweep", "--deltas", "1,0.5", "--mode", "central")
    assert back.returncode == cent.returncode == 0
    assert len(back.stdout.splitlines()) == 3
    assert back.stdout != cent.stdout
    # central difference at delta = 1: sigma_C = 1
    assert cent.stdout.splitlines()[1].split(",")[1] == "1"


def test_sweep_is_byte_identical():
    assert run("sweep").stdout == run("sweep").stdout


def test_sweep_rejects_bad_delta():
    assert run("sweep", "--deltas", "1,1.5").returncode == 2


def test_optimize_small():
    r = run("optimize", "--dim", "3", "--delta", "1", "--seed", "1", "--restarts", "2")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["ratio"] >= 1 - 1e-9
    assert doc["config"]["dim"] == 3
    assert len(doc["trace"]) <= 200


def test_optimize_profile():
    r = run("optimize", "--dims", "3,5", "--deltas", "1,0.5", "--restarts", "1", "--max-iters", "50")
    assert r.returncode == 0, r.stderr
    assert len(json.loads(r.stdout)) == 4


def test_optimize_even_dim_is_usage_error():
    assert run("optimize", "--dim", "4").returncode == 2


def test_oracle_check_passes():
    r = run("oracle-check", "--max-lag", "32")
    assert r.returncode == 0, r.stderr
    entries = json.loads(r.stdout)
    assert entries and all({"kind", "k", "delta", "closed_form", "quadrature", "abs_err"} <= set(e) for e in entries)


def test_oracle_check_with_inputs():
    r = run("oracle-check", "--max-lag", "2", "--random", "3", "--dim", "7")
    assert r.returncode == 0, r.stderr
    assert sum(e["kind"] == "grid_inner" for e in json.loads(r.stdout)) == 3 * 5


def test_oracle_check_detects_corrupted_kernel():
    r = run("oracle-check", "--max-lag", "4", "--corrupt-kernel", "moment2:2")
    assert r.returncode == 1
    assert "moment2" in r.stderr


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--bogus"],
        ["sweep", "--mode", "forward"],
        ["verify", "--format", "xml"],
        [],
        ["frobnicate"],
        ["verify", "--tol-eq", "-1"],
    ],
)
def test_usage_errors(args):
    assert run(*args).returncode == 2


def test_thread_cap_does_not_change_output():
    a = run("verify", "--random", "6", "--dim", "7", env={"UP_THREADS": "1"})
    b = run("verify", "--random", "6", "--dim", "7", env={"UP_THREADS": "3"})
    assert a.returncode == 0 and a.stdout == b.stdout
