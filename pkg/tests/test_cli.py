import json

import pytest

from eulersum import cli
from eulersum import closedform
from eulersum.symexpr import lambda_sym


def _run(capsys, *argv):
    rc = cli.run(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_eval_jordan_4(capsys):
    rc, out, err = _run(capsys, "eval", "--family", "J", "--b", "4", "--bits", "128")
    assert rc == 0
    doc = json.loads(out)
    assert doc["schema"] == "eulersum/1"
    assert doc["command"] == "eval"
    assert doc["params"] == {"b": 4}
    assert doc["weight"] == 5
    assert doc["bits"] == 128
    # (31/4) zeta(5) - (7/12) pi^2 zeta(3) after normalization
    assert doc["symbolic"]["terms"] == [
        {"atoms": [["pi", 2], ["zeta(3)", 1]], "coeff": "-7/12"},
        {"atoms": [["zeta(5)", 1]], "coeff": "31/4"},
    ]
    assert doc["numeric"]["value"].startswith("1.115624876320580515")


def test_eval_is_deterministic(capsys):
    rc1, out1, _ = _run(capsys, "eval", "--family", "Jbar", "--b", "2")
    rc2, out2, _ = _run(capsys, "eval", "--family", "Jbar", "--b", "2")
    assert rc1 == rc2 == 0 and out1 == out2


def test_eval_no_closed_form_is_usage_error(capsys):
    rc, out, err = _run(capsys, "eval", "--family", "J", "--b", "5")
    assert rc == 1
    assert "closed form" in err


def test_unknown_family_exits_1(capsys):
    rc, out, err = _run(capsys, "eval", "--family", "Nope", "--b", "4")
    assert rc == 1
    assert err


def test_out_of_range_parameter_exits_1(capsys):
    rc, out, err = _run(capsys, "eval", "--family", "J", "--b", "1")
    assert rc == 1
    assert "out of range" in err


def test_missing_parameter_exits_1(capsys):
    rc, out, err = _run(capsys, "eval", "--family", "sigma", "--s", "2")
    assert rc == 1
    assert "--t" in err


def test_wrong_parameter_flag_exits_1(capsys):
    rc, out, err = _run(capsys, "eval", "--family", "J", "--b", "4", "--a", "2")
    assert rc == 1


def test_oracle_command(capsys):
    rc, out, err = _run(capsys, "oracle", "--family", "sigma", "--s", "2", "--t", "3", "--tol", "1e-9")
    assert rc == 0
    doc = json.loads(out)
    assert {"value", "bound", "terms"} <= set(doc)
    assert isinstance(doc["terms"], int)
    assert float(doc["bound"]) <= 1e-9
    assert doc["value"].startswith("1.6734373144")


def test_oracle_budget_exhaustion_exits_3(capsys):
    rc, out, err = _run(
        capsys, "oracle", "--family", "sigma", "--s", "2", "--t", "2",
        "--tol", "1e-20", "--max-terms", "16",
    )
    assert rc == 3
    assert "budget" in err


def test_eval_and_oracle_agree(capsys):
    rc, out, _ = _run(capsys, "eval", "--family", "AltEulerStar", "--a", "2")
    ev = json.loads(out)
    rc2, out2, _ = _run(capsys, "oracle", "--family", "AltEulerStar", "--a", "2", "--tol", "1e-10")
    ov = json.loads(out2)
    assert rc == rc2 == 0
    assert abs(float(ev["numeric"]["value"]) - float(ov["value"])) <= 1e-9


def test_solve_weight_7(capsys):
    rc, out, err = _run(capsys, "solve", "--weight", "7", "--bits", "192")
    assert rc == 0
    doc = json.loads(out)
    assert doc["command"] == "solve"
    assert doc["weight"] == 7 and doc["unresolved"] == [] and doc["inconsistent_rows"] == []
    s43 = doc["solved"]["sigma(4, 3)"]["terms"]
    expect = (lambda_sym(7).scaled(120) - (lambda_sym(2) * lambda_sym(5)).scaled(96)).to_json()
    assert s43 == expect
    assert all(float(r) <= 1e-8 for _, r in doc["residuals"])


def test_verify_weight_range_scope(capsys):
    rc, out, err = _run(capsys, "verify", "--weight", "3..6", "--tol", "1e-8", "--bits", "192")
    assert rc == 0
    doc = json.loads(out)
    assert doc["failed"] == 0
    names = [c["name"] for c in doc["checks"]]
    assert any(n.startswith("lambda-convolution") for n in names)
    assert any(n.startswith("relation-residual w=6") for n in names)
    assert any(n == "sigma-sum-theorem w=6" for n in names)
    assert not any("w=7" in n for n in names if "sum-theorem" in n)


def test_verify_small_scope(capsys):
    rc, out, err = _run(capsys, "verify", "--family", "Jbar", "--weight", "3..5", "--tol", "1e-8")
    assert rc == 0
    doc = json.loads(out)
    assert doc["failed"] == 0 and doc["passed"] >= 2
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_verify_failure_exits_2(capsys, monkeypatch):
    # a wrong closed form must be caught by the oracle cross-check
    wrong = lambda_sym(4)
    real = closedform.closed_form_for

    def patched(sid):
        if str(sid) == "Jbar(3)":
            return wrong
        return real(sid)

    monkeypatch.setattr(closedform, "closed_form_for", patched)
    rc, out, err = _run(capsys, "verify", "--family", "Jbar", "--weight", "3..5", "--tol", "1e-8")
    assert rc == 2
    doc = json.loads(out)
    assert doc["failed"] >= 1


def test_verify_pretty_output(capsys):
    rc, out, err = _run(capsys, "verify", "--family", "Z", "--weight", "3..5", "--pretty")
    assert rc == 0
    assert "[pass]" in out and "passed" in out


def test_table_tsv(capsys):
    rc, out, err = _run(capsys, "table", "--family", "J", "--b", "2..5", "--format", "tsv")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "params\tsymbolic\tnumeric\tbound"
    assert len(lines) == 5
    row5 = dict(zip(lines[0].split("\t"), lines[4].split("\t")))
    assert row5["params"] == "b=5" and row5["symbolic"] == ""  # oracle fallback


def test_table_json(capsys):
    rc, out, err = _run(capsys, "table", "--family", "h", "--q", "2..4")
    assert rc == 0
    doc = json.loads(out)
    assert [r["params"] for r in doc["rows"]] == ["q=2", "q=3", "q=4"]


def test_env_default_bits(capsys, monkeypatch):
    monkeypatch.setenv("EULERSUM_DEFAULT_BITS", "96")
    rc, out, err = _run(capsys, "eval", "--family", "J", "--b", "2")
    assert rc == 0
    assert json.loads(out)["bits"] == 96


def test_bits_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("EULERSUM_DEFAULT_BITS", "96")
    rc, out, err = _run(capsys, "eval", "--family", "J", "--b", "2", "--bits", "160")
    assert rc == 0
    assert json.loads(out)["bits"] == 160
