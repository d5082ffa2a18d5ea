import json

import pytest

from wittalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_eval_phi(capsys):
    assert run(capsys, "eval", "--map", "phi", "--expr", "e1*e3 - e2^2 - e4")[:2] == \
        (0, "y^3*z - y^2*z^2")
    assert run(capsys, "eval", "--map", "phi", "--expr",
               "e1*e5 - 4*e2*e4 + 3*e3^2 + 2*e6")[:2] == (0, "0")


def test_eval_lambda(capsys):
    assert run(capsys, "eval", "--map", "lambda", "--expr", "e2")[1] == "x*y - a*y^2"
    assert run(capsys, "eval", "--map", "lambda", "--a", "0", "--expr",
               "e1*e3 - e2^2 - e4")[1] == "0"


def test_adpow(capsys):
    assert run(capsys, "adpow", "--x", "e-1", "--k", "3", "--y", "e1*e3 - e2^2 - e4")[1] == \
        "12*e-1*e2 - 12*e0*e1 - 12*e1"


def test_straighten(capsys):
    assert run(capsys, "straighten", "--expr", "e2*e1")[1] == "e1*e2 - e3"
    assert run(capsys, "straighten", "--mode", "witt", "--expr", "e1*e-1")[1] == \
        "e-1*e1 - 2*e0"


def test_bad_parameter_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kernel", "--map", "lambda", "--a", "1/0", "--degree", "5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["kernel", "--map", "lambda", "--degree", "0"])
    assert exc.value.code == 2


def test_bad_expression_is_usage_error(capsys):
    code, out, err = run(capsys, "eval", "--map", "phi", "--expr", "e1 +")
    assert code == 2 and out == "" and err


def test_kernel(capsys):
    code, out, _ = run(capsys, "kernel", "--map", "lambda", "--a", "generic", "--degree", "6")
    assert code == 0 and out.startswith("degree 6: dimension 4")
    code, out, _ = run(capsys, "kernel", "--map", "phi", "--degree", "6", "--format", "json")
    assert json.loads(out)["dimension"] == 1


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--family", "B", "--degree", "8")
    assert code == 0 and out.startswith("B: 1,1,2,3,5,7,10,13,17")
    assert run(capsys, "hilbert", "--family", "nope")[0] == 2


def test_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["verify", "p-value", "witt-ad-g4", "--format", "json", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert [c["status"] for c in doc["claims"]] == ["pass", "pass"]


def test_verify_unknown_claim(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == 2 and "nope" in err


def test_verify_failure_exit_code(monkeypatch, capsys):
    from wittalg import veritas
    spec = veritas.REGISTRY["p-value"]
    monkeypatch.setitem(veritas.REGISTRY, "p-value",
                        veritas.ClaimSpec("p-value", spec.reference, lambda c, n: ({"x": 1}, {"x": 2})))
    assert run(capsys, "verify", "p-value")[0] == 1


def test_nonfg_and_geom(capsys):
    code, out, _ = run(capsys, "nonfg", "--max-degree", "6")
    assert code == 0 and "n = 4..6: pass" in out
    code, out, _ = run(capsys, "geom", "--format", "json")
    assert code == 0 and all(v["status"] == "pass" for v in json.loads(out).values())


def test_no_verb(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
