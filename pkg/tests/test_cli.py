import json
import os
import subprocess
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [sys.executable, "-m", "glhecke.cli", *args],
        capture_output=True, text=True, env=env, cwd=ROOT,
    )
    return proc


def test_selftest_passes():
    proc = run_cli("--command", "selftest")
    assert proc.returncode == 0
    assert "all identities hold" in proc.stdout


def test_gamma_roundtrip(tmp_path):
    inp = json.dumps({"lambda_L": ["2", "1"], "lambda_R": ["1", "0"]})
    proc = run_cli("--command", "gamma", "--input", inp)
    assert proc.returncode == 0
    rows = json.loads(proc.stdout)
    assert rows[0]["dim"] == 2
    assert rows[0]["height"] == 2
    assert rows[0]["multisegment"] == [
        {"a": "3/2", "b": "3/2"}, {"a": "1/2", "b": "1/2"}
    ]
    assert rows[0]["sm_character"] == {"[1, 1]": 1, "[2]": 1}
    assert rows[0]["irreducible_image"]["dim"] == 1


def test_gamma_from_file(tmp_path):
    f = tmp_path / "in.json"
    f.write_text(json.dumps({"lambda_L": ["1"], "lambda_R": ["0"]}))
    out = tmp_path / "out.json"
    proc = run_cli("--command", "gamma", "--input", str(f), "--output", str(out))
    assert proc.returncode == 0
    rows = json.loads(out.read_text())
    assert rows[0]["dim"] == 1


def test_gamma_determinism():
    inp = json.dumps({"lambda_L": ["2", "1"], "lambda_R": ["1", "0"]})
    a = run_cli("--command", "gamma", "--input", inp)
    b = run_cli("--command", "gamma", "--input", inp)
    assert a.stdout == b.stdout  # byte-identical


def test_compose_json_and_csv():
    inp = json.dumps({"multisegment": [{"a": "1", "b": "1"}, {"a": "0", "b": "0"}]})
    proc = run_cli("--command", "compose", "--input", inp)
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    factors = out[0]["factors"]
    assert sorted(f["multiplicity"] for f in factors) == [1, 1]
    csv = run_cli("--command", "compose", "--input", inp, "--format", "csv")
    assert csv.returncode == 0
    lines = csv.stdout.strip().splitlines()
    assert lines[0] == "origin,multisegment,multiplicity,engine"
    assert len(lines) == 3


def test_unitarity_scan():
    inp = json.dumps({"params": [
        {"lambda_L": ["1/2"], "lambda_R": ["-1/2"]},
        {"lambda_L": ["1"], "lambda_R": ["0"]},
    ]})
    proc = run_cli("--command", "unitarity-scan", "--input", inp)
    rows = json.loads(proc.stdout)
    assert len(rows) == 2
    by_dim = {tuple(r["param"]["lambda_L"]): r for r in rows}
    assert by_dim[("1/2",)]["unitary"] is True


def test_dirac_scan_csv():
    proc = run_cli("--command", "dirac-scan", "--input", json.dumps({"max_total": 4}),
                   "--format", "csv")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "n,d,twisted_elliptic,unitary,engine"
    # all Speh rows are unitary
    assert all(line.split(",")[3] == "True" for line in lines[1:])


def test_bz_command():
    inp = json.dumps({"multisegment": [{"a": "0", "b": "1"}], "tau": [1]})
    proc = run_cli("--command", "bz", "--input", inp)
    rows = json.loads(proc.stdout)
    assert rows[0]["dim"] == 1 and rows[0]["rank"] == 1
    assert rows[0]["factors"] == [
        {"multisegment": [{"a": "1", "b": "1"}], "multiplicity": 1}
    ]


def test_input_error_exit_code():
    proc = run_cli("--command", "gamma", "--input", "{not json")
    assert proc.returncode == 2
    proc2 = run_cli("--command", "gamma")
    assert proc2.returncode == 2


def test_cap_exceeded_exit_code():
    inp = json.dumps({"lambda_L": ["12"], "lambda_R": ["0"]})
    proc = run_cli("--command", "gamma", "--input", inp, "--max-rank", "6", "--max-dim", "4")
    assert proc.returncode == 3
    assert "instance too large" in proc.stderr


def test_env_cap_override():
    inp = json.dumps({"lambda_L": ["3", "2", "1"], "lambda_R": ["0", "0", "0"]})
    proc = run_cli("--command", "gamma", "--input", inp,
                   env_extra={"LEFSCHETZ_CAP_DIM": "5"})
    assert proc.returncode == 3


def test_jobs_flag_matches_sequential():
    inp = json.dumps({"params": [
        {"lambda_L": ["1/2"], "lambda_R": ["-1/2"]},
        {"lambda_L": ["1", "0"], "lambda_R": ["0", "-1"]},
    ]})
    seq = run_cli("--command", "unitarity-scan", "--input", inp)
    par = run_cli("--command", "unitarity-scan", "--input", inp, "--jobs", "2")
    assert seq.returncode == par.returncode == 0
    assert seq.stdout == par.stdout


def test_selftest_negative_control():
    proc = run_cli("--command", "selftest", "--input", '{"corrupt": true}')
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout
