import json
import subprocess
import sys

import pytest

from qgln.cli import QValue, UsageError, main, resolve_backend


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_patterns_example(capsys):
    code, out, _ = run(capsys, "patterns", "--n", "2", "--hw", "1,0")
    assert code == 0
    data = json.loads(out)
    assert [d["pattern"] for d in data] == [[[1, 0], [1]], [[1, 0], [0]]]
    assert [d["weight"] for d in data] == [[1, 0], [0, 1]]


def test_patterns_formats(capsys):
    _, out, _ = run(capsys, "patterns", "--hw", "2,1,0", "--format", "csv")
    assert out.splitlines()[0] == "index,pattern,weight" and len(out.splitlines()) == 9
    _, out, _ = run(capsys, "patterns", "--hw", "2,1,0", "--format", "pretty")
    assert out.startswith("V(2,1,0): 8 patterns")


def test_verify_root_identity_alias(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "appendixD", "--seed", "0")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_invariants_trivial_module(capsys):
    code, out, _ = run(capsys, "invariants", "--n", "2", "--hw", "0,0", "--hw0", "0", "--backend", "exact")
    assert code == 0
    assert json.loads(out)["omegatilde"] == ["1", "0"]


def test_invariants_csv(capsys):
    code, out, _ = run(capsys, "invariants", "--hw", "2,1,0", "--hw0", "2,0", "--format", "csv", "--q", "1.5")
    assert code == 0
    rows = [r.split(",") for r in out.splitlines()]
    assert rows[0] == ["name", "index", "value"]
    values = {(r[0], r[1]): float(r[2]) for r in rows[1:]}
    assert values["omegatilde", "1"] == pytest.approx(1 / 3.25)
    code, out, _ = run(capsys, "invariants", "--hw", "1,0", "--hw0", "0", "--format", "csv", "--q", "4", "--backend", "exact")
    assert code == 0 and {"omegatilde,1,1", "omega,2,16/17", "qdim,,17/4"} <= set(out.splitlines())


def test_pretty_prints_descending_powers(capsys):
    _, out, _ = run(capsys, "invariants", "--hw", "2,1,0", "--hw0", "2,0", "--format", "pretty")
    assert "qdim = q^4 + 2*q^2 + 2 + 2*q^-2 + q^-4" in out


def test_rep_and_charmat(capsys):
    code, out, _ = run(capsys, "rep", "--hw", "1,0", "--q", "3/2")
    assert code == 0 and json.loads(out)["e"] == [[["0", "1"], ["0", "0"]]]
    code, out, _ = run(capsys, "charmat", "--hw", "2,1,0", "--which", "A")
    data = json.loads(out)
    assert code == 0 and data["pass"] and data["identity_residual"] < 1e-8 * 24
    code, out, _ = run(capsys, "charmat", "--hw", "1,0", "--which", "Abar", "--format", "pretty")
    assert code == 0 and "pass" in out


def test_usage_errors(capsys):
    assert run(capsys, "rep", "--hw", "0,1")[0] == 2
    assert run(capsys, "rep", "--hw", "1,0", "--n", "3")[0] == 2
    assert run(capsys, "rep", "--hw", "1,0", "--q", "1.5", "--backend", "exact")[0] == 2
    assert run(capsys, "rep", "--hw", "1,0", "--q", "3/2", "--backend", "numeric")[0] == 2
    assert run(capsys, "invariants", "--hw", "1,0", "--hw0", "2")[0] == 2
    assert run(capsys, "verify", "--suite", "bogus")[0] == 2
    assert run(capsys, "verify", "--suite", "relations")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "rep", "--hw", "1,x")[0] == 2


def test_computation_failures(capsys, monkeypatch):
    code, _, err = run(capsys, "rep", "--hw", "2,0", "--backend", "exact")
    assert code == 1 and "NotASquareError" in err
    monkeypatch.setenv("QGLN_DIM_CAP", "4")
    code, _, err = run(capsys, "rep", "--hw", "2,1,0")
    assert code == 1 and "DimensionCapError" in err


def test_q_forms():
    assert QValue("3/2").form == "rational"
    assert QValue("1.5").form == "decimal"
    assert QValue("2").form == "integer"
    assert resolve_backend(QValue("3/2"), None) == "exact"
    assert resolve_backend(QValue("2"), "exact") == "exact"
    assert resolve_backend(QValue("2"), "numeric") == "numeric"
    for bad in ("1", "0", "-2", "abc", "1/0"):
        with pytest.raises(UsageError):
            QValue(bad)


def test_out_file(tmp_path, capsys):
    path = tmp_path / "p.json"
    assert main(["patterns", "--hw", "1,0", "--out", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert len(json.loads(path.read_text())) == 2


def test_byte_identical_outputs(tmp_path):
    cmds = [
        ["rep", "--hw", "2,1,0", "--q", "1.5"],
        ["invariants", "--hw", "2,1,0", "--hw0", "1,0", "--format", "csv"],
        ["verify", "--suite", "projectors", "--hw", "2,1,0", "--no-timing"],
    ]
    for argv in cmds:
        outs = [subprocess.run([sys.executable, "-m", "qgln", *argv], capture_output=True, check=True).stdout for _ in range(2)]
        assert outs[0] == outs[1] and outs[0]


def test_verify_all_for_one_weight(capsys):
    code, out, _ = run(capsys, "verify", "--hw", "1,0", "--format", "csv")
    assert code == 0
    assert {r.split(",")[0] for r in out.splitlines()[1:]} >= {"relations", "casimir", "L_operators"}
