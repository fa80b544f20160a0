import json

import pytest

from m2gamma.algebra import StructureAlgebra
from m2gamma.cli import main
from m2gamma.free_gamma import FreeGammaElement
from m2gamma.grassmann import SElement


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_b42_super_alternative_in_char_three(capsys):
    code, out, _ = run(capsys, "check-identities", "--field", "fp:3", "--builtin", "B42", "--identity", "super-left-alternative")
    assert code == 0 and "pass" in out


def test_b42_fails_over_rationals_with_witness(capsys):
    code, out, _ = run(capsys, "check-identities", "--builtin", "B42", "--identity", "super-alternative")
    assert code == 1 and "witness=" in out


def test_basis_count(capsys):
    code, out, _ = run(capsys, "basis", "--n", "4", "--degree", "2")
    assert code == 0 and len(out.splitlines()) == 20
    code, out, _ = run(capsys, "basis", "--n", "4", "--degree", "2", "--format", "json")
    assert json.loads(out)["count"] == 20


def test_straighten(capsys):
    code, out, _ = run(capsys, "straighten", "a(1,4)a(2,3)")
    assert code == 0 and out.strip() == "a(1,3)a(2,4) - a(1,2)a(3,4)"


def test_straighten_json_is_readable(capsys):
    code, out, _ = run(capsys, "straighten", "a(1,5)a(2,4)a(3,4)", "--format", "json")
    data = json.loads(out)
    s = SElement.from_json({"n": 5, "field": "q", **data})
    assert s.to_json()["terms"] == data["terms"]
    assert all(t["coeff"] for t in data["terms"])


def test_mul_text_and_json(capsys):
    code, out, _ = run(capsys, "mul", "--builtin", "B42", "m1", "m2")
    assert code == 0 and out.strip() == "-e11"
    code, out, _ = run(capsys, "mul", "--builtin", "B42", "m1", "m2", "--format", "json")
    assert json.loads(out)["coords"]


def test_envelope_with_check(capsys):
    code, out, _ = run(capsys, "envelope", "--gamma", "B12", "--check", "alternative")
    assert code == 0 and "dim 8" in out
    code, out, _ = run(capsys, "envelope", "--grassmann", "3", "--check", "alternative")
    assert code == 1 and "FAIL" in out
    code, out, _ = run(capsys, "envelope", "--grassmann", "3", "--field", "fp:3", "--check", "alternative")
    assert code == 0


def test_envelope_json_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "envelope", "--gamma", "B12", "--format", "json")
    alg = StructureAlgebra.from_json(json.loads(out))
    assert alg.dim == 8
    path = tmp_path / "env.json"
    path.write_text(out)
    code, out, _ = run(capsys, "check-identities", "--file", str(path))
    assert code == 0


def test_iso_check(capsys):
    code, out, _ = run(capsys, "iso-check", "--gamma", "B12", "--v2", "2")
    assert code == 0 and "octonion-match: pass" in out
    code, out, _ = run(capsys, "iso-check", "--gamma", "Gamma(truncpoly(2))", "--field", "fp:5")
    assert code == 0 and "octonion" not in out


def test_iso_check_rejects_non_gamma(capsys):
    code, out, _ = run(capsys, "iso-check", "--gamma", "grassmann(3)")
    assert code == 1 and "condition iv fails at (g1, g2, g3)" in out


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--target", "B12", "--assign", "v1=x,v2=y", "v1*v2")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "eval", "(v1*v2)*v3")
    assert out.strip() == "a(1,3)v2 - a(2,3)v1"


def test_eval_json_round_trip(capsys):
    code, out, _ = run(capsys, "eval", "t1*(v1*v2)*v3 + t1*t2", "--format", "json")
    data = json.loads(out)
    a = FreeGammaElement.from_json(data)
    assert json.loads(json.dumps(a.to_json())) == data


def test_eval_errors(capsys):
    assert run(capsys, "eval", "v1 * ")[0] == 2
    assert run(capsys, "eval", "--target", "B12", "--assign", "v1=1", "v1")[0] == 2
    assert run(capsys, "eval", "--target", "B12", "v1")[0] == 2


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--builtin", "octonion-split")
    assert code == 0 and "associative part: dim 4" in out and "cayley part: dim 4" in out


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--n", "3", "--weight", "3")
    assert out.strip() == "weight 3: 8"
    code, out, _ = run(capsys, "dims", "--n", "4", "--max-weight", "4", "--format", "json")
    assert json.loads(out)["dims"]["4"] == 20


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "check-identities", "--builtin", "nope")[0] == 2
    assert run(capsys, "check-identities", "--builtin", "B42", "--field", "fp:4")[0] == 2
    assert run(capsys, "check-identities", "--builtin", "B42", "--identity", "bogus")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"labels": ["a"],\n "table": [[')
    code, _, err = run(capsys, "check-identities", "--file", str(bad))
    assert code == 2 and "bad.json:2:" in err
    assert run(capsys, "check-identities", "--file", str(tmp_path / "missing.json"))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["check-identities", "--builtin", "B42", "--format", "json"],
        ["envelope", "--gamma", "Gamma(truncpoly(2))", "--format", "json"],
        ["basis", "--n", "5", "--degree", "2", "--filter-m", "3", "--format", "json"],
        ["eval", "(v1*v2)*(v3*v4)*t1", "--format", "json"],
        ["decompose", "--builtin", "Cay-split-null", "--format", "json"],
    ],
)
def test_output_is_byte_identical(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    json.loads(first[1])
