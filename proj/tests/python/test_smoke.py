"""Smoke tests for the python extension and the CLI surface."""

import json
import os
import subprocess

import pytest

krall = pytest.importorskip("krall")


def test_laguerre_poly():
    p = krall.laguerre_poly("1", 1)
    assert p["var"] == "x"
    assert p["coeffs"] == ["2", "-1"]
    assert p["text"] == "-x + 2"
    assert krall.laguerre_poly("2", -3)["coeffs"] == []


def test_system_report():
    rep = krall.system_report(1, 1, ["1"], 10)
    assert rep["admissible"] is True
    assert rep["tau"]["text"] == "n + 2"
    assert rep["u"] == ["1"]
    assert rep["recurrence_pass"] is True
    assert rep["orthogonality_pass"] is True


def test_inadmissible_witness():
    rep = krall.system_report(1, 1, ["-1"], 5)
    assert rep["admissible"] is False
    assert rep["witness"] == 0


def test_hat_laguerre():
    p = krall.hat_laguerre(1, 1, ["1"], 1)
    assert p["coeffs"] == ["-1", "2"]


def test_k1_generator_operator_order():
    rep = krall.k1_generator_report(2, "1", 0, verify_n=20)
    assert rep["order"] == 6  # 2 alpha + 2
    assert rep["eigen_verify_pass"] is True


def test_operator_not_found():
    rep = krall.operator_report(1, 1, ["1"], ["0", "1"], verify_n=10)
    assert rep["in_algebra"] is False
    assert rep["operator_found"] is False


def test_genericity():
    rep = krall.genericity_report(2, 2, ["1/8", "0"])
    assert rep["generic"] is False
    assert rep["resultant"] == "0"
    assert rep["closed_form_match"] is True
    gen = krall.genericity_report(2, 2, ["1", "1"])
    assert gen["generic"] is True


def test_sobolev():
    rep = krall.sobolev_report(3, "1", "1", "2", 8)
    assert rep["beta0"] == "-2"
    assert rep["orthogonality_pass"] is True
    assert rep["pentadiagonal_pass"] is True
    sing = krall.sobolev_report(2, "0", "0", "1", 8)
    assert sing["singular_basis"] is True
    assert sing["minimal_operator_order"] == 8


CLI = os.environ.get("KRALL_CLI")


@pytest.mark.skipif(CLI is None, reason="KRALL_CLI not set")
class TestCli:
    def run(self, *args):
        return subprocess.run([CLI, *args], capture_output=True, text=True)

    def test_classical_pass(self):
        r = self.run("classical", "--alpha", "2", "--n", "12")
        assert r.returncode == 0

    def test_classical_alpha_zero_mode(self):
        r = self.run("classical", "--alpha", "0", "--n", "8")
        assert r.returncode == 0

    def test_classical_bad_alpha(self):
        r = self.run("classical", "--alpha", "x")
        assert r.returncode == 2

    def test_bad_rational_usage_error(self):
        r = self.run("system", "--alpha", "1", "--k", "1", "--beta", "1.5")
        assert r.returncode == 2

    def test_inadmissible_exit_code(self):
        for beta, witness in [("-1", 0), ("0", -1)]:
            r = self.run("system", "--alpha", "1", "--k", "1", "--beta", beta,
                         "--format", "json")
            assert r.returncode == 3
            rep = json.loads(r.stdout)
            assert rep["admissible"] is False
            assert rep["witness"] == witness

    def test_system_json(self):
        r = self.run("system", "--alpha", "2", "--k", "2", "--beta", "1,1",
                     "--format", "json")
        assert r.returncode == 0
        rep = json.loads(r.stdout)
        assert rep["u"] == ["-2", "1"]
        assert rep["recurrence"]["pass"] is True

    def test_operator_generator(self):
        r = self.run("operator", "--alpha", "2", "--k", "1", "--beta", "1",
                     "--generator", "0", "--format", "json")
        assert r.returncode == 0
        rep = json.loads(r.stdout)
        assert rep["order"] == 6
        assert rep["order_law_2degh"] is True

    def test_operator_json_round_trip(self):
        r = self.run("operator", "--alpha", "1", "--k", "1", "--beta", "1",
                     "--generator", "0", "--format", "json")
        rep = json.loads(r.stdout)
        terms = rep["operator"]["terms"]
        assert max(t["order"] for t in terms) == rep["order"]
        for t in terms:
            assert all("/" in c or c.lstrip("-").isdigit()
                       for c in t["coeff"]["coeffs"])

    def test_operator_outside_algebra(self):
        r = self.run("operator", "--alpha", "1", "--k", "1", "--beta", "1",
                     "--h-coeffs", "0,1")
        assert r.returncode == 4

    def test_genericity_symbolic(self):
        r = self.run("genericity", "--alpha", "3", "--k", "1", "--format", "json")
        assert r.returncode == 0
        rep = json.loads(r.stdout)
        assert rep["closed_form_match"] is True
        r2 = self.run("genericity", "--alpha", "3", "--k", "3")
        assert r2.returncode == 2

    def test_genericity_probe(self):
        r = self.run("genericity", "--alpha", "2", "--k", "2", "--beta", "1/8,0",
                     "--probe", "--max-deg", "4", "--format", "json")
        assert r.returncode == 0
        rep = json.loads(r.stdout)
        assert rep["generic"] is False
        extras = [d for d in rep["probe"] if d["extra_found"]]
        assert extras and extras[0]["degree"] == 4
        assert extras[0]["operator_order"] == 8

    def test_sobolev_fixture(self):
        r = self.run("sobolev", "--alpha", "3", "--A", "1,1,2", "--format", "json")
        assert r.returncode == 0
        rep = json.loads(r.stdout)
        assert rep["beta0"] == "-2" and rep["l1"] == "-6"

    def test_sobolev_unsupported_matrix(self):
        r = self.run("sobolev", "--alpha", "2", "--A", "1,0,0")
        assert r.returncode == 5
