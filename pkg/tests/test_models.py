import json

import pytest

from topfacering.errors import ParseError, UnknownModel, ValidationError
from topfacering.facering import linear_combine, tau, top_element
from topfacering.models import (
    BUILTINS,
    build_builtin,
    dumps_element,
    dumps_model,
    load_element,
    load_model,
    loads_element,
    loads_model,
    model_to_dict,
    save_model,
)


@pytest.mark.parametrize("name", BUILTINS)
def test_round_trip(name, tmp_path):
    M = build_builtin(name)
    path = tmp_path / f"{name}.json"
    save_model(M, path)
    back = load_model(path)
    assert back == M
    assert dumps_model(back) == path.read_text()


def test_builtin_shapes():
    B = build_builtin("bigon").complex
    assert B.m == 2 and len(B.faces) == 5
    C = build_builtin("connected-sum").complex
    assert C.algebras[C.top].dim_in_degree(1) == 2 and C.m == 3
    T = build_builtin("triangle").complex
    labels = {f.label for f in T.faces}
    assert labels == {frozenset(s) for s in ([], [1], [2], [3], [1, 2], [1, 3], [2, 3])}
    assert len(build_builtin("square").complex.faces) == 9


def test_unknown_builtin():
    with pytest.raises(UnknownModel):
        build_builtin("dodecahedron")


def test_rp2_is_gf2_only():
    with pytest.raises(ValueError):
        build_builtin("rp2-no-boundary", 0)


def test_field_override():
    assert build_builtin("triangle", 5).complex.field.characteristic == 5


def test_niceness_rejected_on_load():
    data = model_to_dict(build_builtin("bigon"))
    data["faces"][1]["codim"] = 2
    with pytest.raises(ValidationError) as err:
        loads_model(json.dumps(data))
    assert "niceness" in err.value.report.axioms()


def test_missing_restriction_is_parse_error():
    data = model_to_dict(build_builtin("triangle"))
    data["restrictions"].pop()
    with pytest.raises(ParseError, match="missing restriction"):
        loads_model(json.dumps(data))


def test_missing_degree_matrix_is_parse_error():
    data = model_to_dict(build_builtin("rp2-no-boundary"))
    data["faces"].append({"id": 1, "name": "F1", "codim": 1, "label": [1]})
    data["covers"].append([1, 0])
    data["algebras"]["1"] = data["algebras"]["0"]
    data["restrictions"].append({"source": 0, "target": 1, "matrices": {"0": [["1"]]}})
    with pytest.raises(ParseError, match="degree 1"):
        loads_model(json.dumps(data))


def test_bad_json_reports_line():
    with pytest.raises(ParseError, match="line 2"):
        loads_model('{\n "field": ,\n}')


def test_float_scalars_rejected():
    data = model_to_dict(build_builtin("bigon"))
    data["algebras"]["0"]["products"][0][2] = {"1": 1.0}
    with pytest.raises(ParseError, match="algebras.0.products"):
        loads_model(json.dumps(data))


def test_canonical_form_has_no_floats():
    text = dumps_model(build_builtin("connected-sum"))
    assert "." not in text.replace("connected-sum", "")


def test_element_round_trip(tmp_path):
    M = build_builtin("connected-sum")
    C = M.complex
    a = linear_combine([(2, tau(C, 1)), (-1, top_element(C, {"1": 1, "b2": "1/2"}))])
    assert loads_element(C, dumps_element(a)) == a
    p = tmp_path / "a.json"
    p.write_text(dumps_element(a))
    assert load_element(C, p) == a


def test_element_by_face_name():
    C = build_builtin("bigon").complex
    a = loads_element(C, '{"element": [{"face": "F1", "terms": [{"x": {"1": 1}, "coeff": {"1": "1"}}]}]}')
    assert a.component(C.by_name("F1")).terms == {((1, 1),): (1,)}


def test_element_unknown_face():
    C = build_builtin("bigon").complex
    with pytest.raises(ParseError):
        loads_element(C, '{"element": [{"face": "nope", "terms": []}]}')
