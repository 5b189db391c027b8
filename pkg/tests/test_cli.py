import json
import subprocess
import sys
from pathlib import Path

import pytest

from weylalg import cli
from weylalg.cli import run

GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parent / "data"

S3 = '{"dim":3,"betti":[1,0,0,1]}'

CASES = {
    "star_moyal": ["star", "--space", str(DATA / "space.json"), "--a", "x", "--b", "p"],
    "bracket_moyal": ["bracket", "--space", "moyal1", "--a", "x", "--b", "p"],
    "bracket_odd3": ["bracket", "--space", "odd3", "--a", "xi1", "--b", "xi1 xi2"],
    "linf_3": ["linf", "--arity", "3", "--check-d2"],
    "linf_5_homology": ["linf", "--arity", "5", "--check-d2", "--homology"],
    "linf_bushes_marked": ["linf", "--arity", "3", "--bushes", "--marked", "--check-d2"],
    "facthom_formula": ["facthom", "--manifold", S3, "--space", "odd3", "--mode", "formula"],
    "facthom_koszul": ["facthom", "--manifold", S3, "--space", "odd3", "--mode", "koszul"],
    "facthom_commutative": ["facthom", "--manifold", '{"dim":1,"betti":[1,1]}', "--space", "moyal1",
                            "--mode", "commutative", "--cutoff", "3"],
    "mc_sl2": ["mc-check", "--lie", "sl2"],
    "lie_homology_h3": ["lie-homology", "--lie", "h3", "--cutoff", "3"],
    "lie_homology_sl2_adjoint_bushes": ["lie-homology", "--lie", "sl2", "--coefficients", "adjoint",
                                        "--via", "bushes"],
    "graph_theta": ["graph-weight", "--graph", "theta", "--lie", "sl2"],
    "graph_k4_ihx": ["graph-weight", "--graph", "k4", "--lie", "so3", "--ihx", "--flip", "0"],
    "validate_lie": ["validate", str(DATA / "sl2_bad_metric.json")],
    "validate_space": ["validate", str(DATA / "space.json")],
}

EXPECTED_CODES = {"validate_lie": 2}


def _golden(name):
    return (GOLDEN / f"{name}.json").read_text()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, text = run(CASES[name])
    assert code == EXPECTED_CODES.get(name, 0)
    assert text + "\n" == _golden(name)


def test_spec_examples():
    code, text = run(CASES["star_moyal"])
    assert code == 0 and json.loads(text)["result"] == [["x p", "1"], ["1", "h/2"]]
    out = json.loads(run(CASES["linf_3"])[1])
    assert out["counts"] == {"0": 1, "1": 3} and out["d2_zero"] is True
    out = json.loads(run(CASES["facthom_formula"])[1])
    assert out["degree"] == 3 and out["rank"] == 1


def test_reports_echo_configuration():
    for name, argv in CASES.items():
        report = json.loads(run(argv)[1])
        assert report["header"]["tool"] == "weylalg"
        assert "config" in report, name


def test_other_reported_values():
    assert json.loads(run(CASES["graph_theta"])[1])["weight"] == "3"
    k4 = json.loads(run(CASES["graph_k4_ihx"])[1])
    assert k4["weight"] == "-6" and all(r["holds"] for r in k4["ihx"])
    assert json.loads(run(CASES["lie_homology_h3"])[1])["ranks"] == {"0": 1, "1": 2, "2": 2, "3": 1}
    mc = json.loads(run(CASES["mc_sl2"])[1])
    assert mc["mc"] and mc["d2_zero"] and mc["matches_classical"]
    koszul = json.loads(run(CASES["facthom_koszul"])[1])
    assert koszul["degree"] == 3 and koszul["rank"] == 1 and koszul["representative"]


@pytest.mark.parametrize("name", ["star_moyal", "linf_5_homology", "graph_k4_ihx"])
def test_byte_identical_reruns(name):
    cmd = [sys.executable, "-m", "weylalg"] + CASES[name]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_validation_failures_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 1, "generators": [{"name": "x", "degree": 0}, {"name": "p", "degree": 0}],
                               "pairing": [["0", "1"], ["1", "0"]]}))
    code, text = run(["star", "--space", str(bad), "--a", "x", "--b", "p"])
    assert code == 2 and json.loads(text)["valid"] is False
    code, text = run(["validate", str(bad)])
    assert code == 2 and json.loads(text)["problems"]
    code, text = run(["mc-check", "--lie", str(DATA / "broken.json")])
    assert code == 2 and json.loads(text)["mc"] is False
    code, _ = run(["graph-weight", "--graph", "nonsense", "--lie", "sl2"])
    assert code == 2
    code, _ = run(["star", "--space", "odd3", "--a", "xi1", "--b", "xi2"])
    assert code == 2


def test_internal_failure_exits_1(monkeypatch):
    import weylalg.operad as operad
    monkeypatch.setattr(operad, "check_d2", lambda levels: False)
    code, text = run(["linf", "--arity", "3", "--check-d2"])
    assert code == 1 and json.loads(text)["internal"] is True


def test_unknown_flags_rejected():
    with pytest.raises(SystemExit) as exc:
        run(["linf", "--arity", "3", "--frobnicate"])
    assert exc.value.code == 2


def test_pretty_output():
    code, text = run(["--pretty", "linf", "--arity", "3"])
    assert code == 0 and "counts:" in text and not text.startswith("{")


def test_main_prints(capsys):
    assert cli.main(["linf", "--arity", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["counts"] == {"0": 1}
