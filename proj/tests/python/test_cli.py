import json
import math
import os
import subprocess

import pytest

BIN = os.environ.get("DRLAB_BIN")

pytestmark = pytest.mark.skipif(not BIN, reason="DRLAB_BIN not set")


def run(*args, expect=0):
    r = subprocess.run([BIN, *args], capture_output=True, text=True)
    assert r.returncode == expect, f"{args}: rc={r.returncode}\n{r.stdout}\n{r.stderr}"
    return r


def test_phi_closed_form_oracle():
    r = run("phi", "--preset", "real-hyp", "--lambda", "1", "--r", "2")
    got = float(r.stdout.strip())
    assert got == pytest.approx(math.sin(2.0) / (2.0 * math.sinh(1.0)), rel=1e-10)


def test_phi_lambda_list():
    r = run("phi", "--preset", "real-hyp", "--lambdas", "0.5,1", "--r", "2")
    lines = r.stdout.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("lambda=0.5")
    vals = [float(line.split("phi=")[1]) for line in lines]
    assert vals[1] == pytest.approx(math.sin(2.0) / (2.0 * math.sinh(1.0)), rel=1e-10)


def test_region_membership():
    r = run("region", "--preset", "heis", "--x", "1", "--alpha", "2", "--p", "4")
    assert r.stdout.strip() == "inside"
    r = run("region", "--preset", "heis", "--x", "0.5", "--alpha", "2", "--p", "4")
    assert r.stdout.strip() == "outside"


def test_strip_class():
    r = run("strip", "--family", "heat", "--alpha", "1", "--p", "4")
    assert r.stdout.startswith("in-class")
    r = run(
        "strip", "--family", "resolvent-exp", "--alpha", "1", "--p", "4", "--res-c", "0.1",
        expect=1,
    )
    assert r.stdout.startswith("not-in-class")


def test_verify_region_json_deterministic(tmp_path):
    def report():
        r = run("verify", "--suite", "region", "--json")
        rep = json.loads(r.stdout)
        # strip wall-clock fields before comparing runs
        rep.pop("generated_at", None)
        rep.pop("runtime_ms", None)
        for rec in rep["records"]:
            rec.pop("runtime_ms", None)
        return rep

    first, second = report(), report()
    assert first == second
    assert first["passed"] is True
    assert len(first["records"]) == 6


def test_verify_out_file(tmp_path):
    out = tmp_path / "report.json"
    run("verify", "--suite", "region", "--out", str(out))
    rep = json.loads(out.read_text())
    assert rep["suite"] == "region"
    assert rep["passed"] is True


def test_verify_config_file(tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[verify]\nsuite = region\n")
    r = run("--config", str(cfg), "verify")
    assert "region" in r.stdout


def test_bad_arguments_exit_2():
    run("verify", "--suite", "nope", expect=2)
    run("phi", "--preset", "bogus", expect=2)
    run("region", expect=2)  # --x is required


def test_kernel_sweep_csv(tmp_path):
    csv = tmp_path / "norms.csv"
    r = subprocess.run(
        [BIN, "kernel", "--family", "resolvent-exp", "--alpha", "1", "--p", "4",
         "--beta", "3", "--h-min", "4", "--h-max", "8", "--csv", str(csv)],
        capture_output=True, text=True,
    )
    # the short range is about the artifact, not the decay-rate verdict
    assert r.returncode in (0, 1), r.stderr
    assert "slope" in r.stdout
    lines = csv.read_text().strip().splitlines()
    assert lines[0] == "h,norm"
    assert len(lines) == 6
    norms = [float(line.split(",")[1]) for line in lines[1:]]
    assert norms[0] > norms[-1] > 0.0
