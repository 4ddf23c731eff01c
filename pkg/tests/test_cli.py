import json

import pytest

import broken
from topfacering.cli import run
from topfacering.facering import tau
from topfacering.models import build_builtin, dumps_element, dumps_model, Model


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hilbert(capsys):
    code, out, _ = call(capsys, "hilbert", "--model", "builtin:triangle", "--max-degree", "8")
    assert code == 0 and out.strip() == "1 0 3 0 6 0 9 0 12"


def test_compare_sr(capsys):
    code, out, _ = call(capsys, "compare-sr", "--model", "builtin:triangle", "--max-degree", "20")
    assert code == 0 and out.strip() == "AGREE"


def test_compare_sr_not_applicable(capsys):
    code, _, err = call(capsys, "compare-sr", "--model", "builtin:bigon", "--max-degree", "4")
    assert code == 1 and "label sets" in err


@pytest.fixture
def bad_element(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"element": [{"face": "F1", "terms": [{"x": {"1": 1}, "coeff": {"1": "1"}}]}]}))
    return str(p)


def test_member_with_oracle(capsys, bad_element):
    code, out, _ = call(capsys, "member", "--model", "builtin:bigon", "--element", bad_element, "--oracle")
    assert code == 0 and out.strip() == "NOT MEMBER (agrees with oracle)"


def test_member_plain(capsys, tmp_path):
    C = build_builtin("bigon").complex
    p = tmp_path / "t.json"
    p.write_text(dumps_element(tau(C, 1)))
    code, out, _ = call(capsys, "member", "--model", "builtin:bigon", "--element", str(p))
    assert code == 0 and out.strip() == "MEMBER"


def test_multiply_and_decompose(capsys, tmp_path):
    C = build_builtin("bigon").complex
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text(dumps_element(tau(C, 1)))
    b.write_text(dumps_element(tau(C, 2)))
    code, out, _ = call(capsys, "multiply", "--model", "builtin:bigon", "--lhs", str(a), "--rhs", str(b), "--decompose")
    assert code == 0
    assert out.splitlines() == ["p: x1*x2; q: x1*x2", "p: x1*x2", "q: x1*x2"]


def test_decompose_non_member(capsys, bad_element):
    code, out, _ = call(capsys, "decompose", "--model", "builtin:bigon", "--element", bad_element)
    assert code == 1 and out.startswith("NOT IN FACE RING")


def test_charclass(capsys):
    code, out, _ = call(capsys, "charclass", "--model", "builtin:rp2-no-boundary", "--kind", "sw")
    assert code == 0 and out.strip() == "Q: 1 + a + a2"
    code, out, _ = call(capsys, "charclass", "--model", "builtin:triangle", "--kind", "sw")
    assert code == 1
    code, out, _ = call(capsys, "charclass", "--model", "builtin:bigon", "--kind", "pontrjagin")
    assert code == 0 and "p: x1^2*x2^2" in out


def test_eta(capsys):
    code, out, _ = call(capsys, "eta", "--model", "builtin:bigon", "--u", "1,0")
    assert code == 0 and out.strip() == "F1: x1"
    code, _, err = call(capsys, "eta", "--model", "builtin:bigon", "--u", "1,0,0")
    assert code == 1 and "length" in err


def test_validate_builtin_and_file(capsys, tmp_path):
    code, out, _ = call(capsys, "validate", "--model", "builtin:square")
    assert code == 0 and out.strip() == "PASS"
    C, _, _ = broken.missing_component()
    p = tmp_path / "broken.json"
    p.write_text(dumps_model(Model(C)))
    code, out, _ = call(capsys, "validate", "--model", str(p))
    assert code == 1 and "unique_component" in out


def test_usage_errors(capsys):
    assert run(["bogus"]) == 2
    assert run(["hilbert", "--model", "builtin:bigon"]) == 2
    assert "usage" in capsys.readouterr().err


def test_unknown_model(capsys):
    code, _, err = call(capsys, "hilbert", "--model", "builtin:nope", "--max-degree", "2")
    assert code == 1 and "unknown builtin" in err


def test_deterministic_output(capsys):
    outs = {call(capsys, "charclass", "--model", "builtin:square", "--kind", "pontrjagin")[1] for _ in range(3)}
    assert len(outs) == 1
