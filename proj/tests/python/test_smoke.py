import csv
import io
import json
import math
import os
import subprocess

import pytest

import effpot

CLI = os.environ.get("EFFPOT_CLI")
needs_cli = pytest.mark.skipif(not CLI, reason="EFFPOT_CLI not set")


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_casimir():
    v = effpot.compact("periodic", 0.0, 1.0)["value"]
    assert v == pytest.approx(-math.pi**2 / 90, rel=1e-12)
    a = effpot.compact("antiperiodic", 0.0, 1.0)["value"]
    assert a == pytest.approx(7 * math.pi**2 / 720, rel=1e-12)


def test_strategies_agree():
    q = effpot.thermal("fermion", 0.5, 1.0, 3, "quadrature")
    b = effpot.thermal("fermion", 0.5, 1.0, 3, "bessel")
    assert b["strategy"] == "bessel"
    assert b["terms_used"] > 0
    assert abs(b["value"] - q["value"]) < 1e-8 * abs(q["value"])


def test_twist_reduces_to_antiperiodic():
    t = effpot.twisted(0.7, 1.0, 0.5)["value"]
    a = effpot.compact("antiperiodic", 0.7, 1.0)["value"]
    assert t == pytest.approx(a, rel=1e-10)


def test_errors_map_to_exceptions():
    with pytest.raises(effpot.DomainError):
        effpot.thermal("boson", -1.0, 1.0)
    with pytest.raises(effpot.Error):
        effpot.thermal("boson", 1.0, 1.0, 4, "closed")


def test_sweep_and_convergence():
    rows = list(csv.DictReader(io.StringIO(effpot.sweep("thermal", [0.2, 0.5], format="csv"))))
    assert len(rows) == 2
    assert float(rows[0]["reldiff:bessel-hight"]) < 1e-3
    j = json.loads(effpot.sweep("thermal", [0.2, 0.5], format="json"))
    assert j["rows"][1]["values"]["bessel"] == float(rows[1]["strategy:bessel"])
    r = effpot.convergence("thermal", 1.0)
    assert r["log_slope"] < 0


def test_invariants_and_ledger():
    assert all(passed for _, passed, _ in effpot.invariants())
    ledger = json.loads(effpot.ledger_json())
    assert "twisted_closed_d3" in ledger["flagged"]


@needs_cli
def test_cli_json_and_csv_match_library():
    args = ["thermal", "--stat", "boson", "--m", "0.3", "--T", "1.2", "--d", "3", "--strategy", "bessel"]
    j = run_cli(*args, "--format", "json")
    c = run_cli(*args, "--format", "csv")
    assert j.returncode == 0 and c.returncode == 0
    jv = json.loads(j.stdout)["value"]
    cv = float(next(csv.DictReader(io.StringIO(c.stdout)))["value"])
    assert jv == cv
    assert jv == effpot.thermal("boson", 0.3, 1.2, 3, "bessel")["value"]


@needs_cli
def test_cli_exit_codes():
    assert run_cli("thermal", "--m", "1", "--T", "1", "--d", "9").returncode == 2
    assert run_cli("thermal", "--m", "1", "--T", "1", "--d", "4", "--strategy", "closed").returncode == 3
