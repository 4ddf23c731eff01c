"""Builtin example complexes and the JSON model / element file formats.

Model file (all scalars are strings such as ``"1"`` or ``"-3/2"``; ints are
also accepted on input, floats never)::

    {
      "field": {"characteristic": 0},
      "faces": [{"id": 0, "name": "Q", "codim": 0, "label": []}, ...],
      "covers": [[lower_id, upper_id], ...],
      "algebras": {"<face id>": {
          "basis": [["1", 0], ["a", 1], ...],
          "unit": "1",
          "top_degree": 2,
          "products": [["a", "a", {"a2": "1"}], ...]}},
      "restrictions": [{"source": upper_id, "target": lower_id,
                        "matrices": {"<degree>": [["1", "0"], ...]}}],
      "torus_data": {"n": 2, "v": [[1, 0], ...], "c": [["0", "1"], ...]},
      "char_data": {"sw": {"1": "1", "a": "1"}, "pont": {"1": "1"}}
    }

``products`` lists every nonzero structure constant, unit products
included.  Restriction matrices have one row per target basis element and
one column per source basis element of that degree; degrees where either
side is zero-dimensional may be omitted.

Element file::

    {"element": [{"face": 1, "terms": [{"x": {"1": 1}, "coeff": {"1": "1"}}]}]}

``face`` may be an id or a face name; ``x`` maps facet index to exponent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebra import AlgebraMap, FieldSpec, GradedAlgebra, point_algebra
from .charclass import CharClassData
from .corners import Face, FaceComplex, validate_complex
from .errors import ParseError, UnknownModel, ValidationError
from .facering import RingElement, TorusData, face_poly, monomial

BUILTINS = ("bigon", "triangle", "square", "rp2-no-boundary", "connected-sum")


@dataclass
class Model:
    complex: FaceComplex
    torus: TorusData | None = None
    chars: CharClassData | None = None
    name: str = ""

    def __eq__(self, other) -> bool:
        if not isinstance(other, Model):
            return NotImplemented
        return (
            self.complex == other.complex
            and self.torus == other.torus
            and _norm_chars(self.chars) == _norm_chars(other.chars)
        )


def _norm_chars(ch: CharClassData | None):
    if ch is None:
        return None
    norm = lambda d: None if d is None else {k: Fraction(v) for k, v in d.items() if Fraction(v)}
    return norm(ch.sw), norm(ch.pont)


# -- builders ------------------------------------------------------------


def polygon_faces(labels: dict[str, set[int]]) -> list[Face]:
    return [Face(k, len(lab), frozenset(lab), name) for k, (name, lab) in enumerate(labels.items())]


def build_complex(
    field: FieldSpec,
    labels: dict[str, set[int]],
    covers: list[tuple[str, str]],
    algebras: dict[str, GradedAlgebra] | None = None,
    matrices: dict[tuple[str, str], dict[int, list[list[Any]]]] | None = None,
) -> FaceComplex:
    """Assemble a complex from named faces.

    Faces without an entry in ``algebras`` are points; covering pairs
    without ``matrices`` get the map fixing the unit (other degrees are
    filled only where forced).
    """
    faces = polygon_faces(labels)
    ids = {f.name: f.id for f in faces}
    algs = {f.id: (algebras or {}).get(f.name) or point_algebra(field) for f in faces}
    cov = [(ids[lo], ids[hi]) for lo, hi in covers]
    rest = {}
    for lo, hi in covers:
        mats = (matrices or {}).get((hi, lo), {0: [[1 if r == c else 0 for c in range(algs[ids[hi]].dim_in_degree(0))] for r in range(algs[ids[lo]].dim_in_degree(0))]})
        rest[(ids[hi], ids[lo])] = AlgebraMap(algs[ids[hi]], algs[ids[lo]], mats)
    m = max((max(f.label) for f in faces if f.label), default=0)
    return FaceComplex(field, m, faces, cov, algs, rest)


def _bigon(field: FieldSpec) -> Model:
    labels = {"Q": set(), "F1": {1}, "F2": {2}, "p": {1, 2}, "q": {1, 2}}
    covers = [("F1", "Q"), ("F2", "Q"), ("p", "F1"), ("p", "F2"), ("q", "F1"), ("q", "F2")]
    C = build_complex(field, labels, covers)
    return Model(C, TorusData(2, ((1, 0), (0, 1)), ()), CharClassData({"1": 1}, {"1": 1}), "bigon")


def _triangle(field: FieldSpec) -> Model:
    labels = {"Q": set(), "F1": {1}, "F2": {2}, "F3": {3}, "v12": {1, 2}, "v13": {1, 3}, "v23": {2, 3}}
    covers = [("F1", "Q"), ("F2", "Q"), ("F3", "Q")]
    for v in ("v12", "v13", "v23"):
        covers += [(v, f"F{v[1]}"), (v, f"F{v[2]}")]
    C = build_complex(field, labels, covers)
    return Model(C, TorusData(2, ((1, 0), (0, 1), (-1, -1)), ()), CharClassData({"1": 1}, {"1": 1}), "triangle")


def _square(field: FieldSpec) -> Model:
    labels = {"Q": set(), "F1": {1}, "F2": {2}, "F3": {3}, "F4": {4},
              "v12": {1, 2}, "v23": {2, 3}, "v34": {3, 4}, "v14": {1, 4}}
    covers = [(f"F{i}", "Q") for i in range(1, 5)]
    for v in ("v12", "v23", "v34", "v14"):
        covers += [(v, f"F{v[1]}"), (v, f"F{v[2]}")]
    C = build_complex(field, labels, covers)
    weights = ((1, 0), (0, 1), (-1, 0), (0, -1))
    return Model(C, TorusData(2, weights, ()), CharClassData({"1": 1}, {"1": 1}), "square")


def rp2_algebra(field: FieldSpec) -> GradedAlgebra:
    """H*(RP^2; F_2) = F_2[a]/(a^3)."""
    return GradedAlgebra(field, ["1", "a", "a2"], [0, 1, 2], {(1, 1): (0, 0, 1)})


def _rp2(field: FieldSpec) -> Model:
    if field.characteristic != 2:
        raise ValueError("rp2-no-boundary is only available over GF(2)")
    C = build_complex(field, {"Q": set()}, [], {"Q": rp2_algebra(field)})
    return Model(C, TorusData(2, (), ((0, 0),)), CharClassData({"1": 1, "a": 1, "a2": 1}, {"1": 1}), "rp2-no-boundary")


def punctured_torus_algebra(field: FieldSpec) -> GradedAlgebra:
    """H* of a genus-one surface minus a disk: a wedge of two circles."""
    return GradedAlgebra(field, ["1", "b1", "b2"], [0, 1, 1])


def _connected_sum(field: FieldSpec) -> Model:
    labels = {"Q": set(), "F1": {1}, "F2": {2}, "F3": {3}, "v12": {1, 2}, "v13": {1, 3}, "v23": {2, 3}}
    covers = [("F1", "Q"), ("F2", "Q"), ("F3", "Q")]
    for v in ("v12", "v13", "v23"):
        covers += [(v, f"F{v[1]}"), (v, f"F{v[2]}")]
    C = build_complex(field, labels, covers, {"Q": punctured_torus_algebra(field)})
    return Model(C, TorusData(2, ((1, 0), (0, 1), (1, 1)), ()), CharClassData({"1": 1}, {"1": 1}), "connected-sum")


_BUILDERS = {
    "bigon": _bigon,
    "triangle": _triangle,
    "square": _square,
    "rp2-no-boundary": _rp2,
    "connected-sum": _connected_sum,
}


def build_builtin(name: str, characteristic: int | None = None) -> Model:
    if name not in _BUILDERS:
        raise UnknownModel(f"unknown builtin model {name!r}; choose from {', '.join(BUILTINS)}")
    if characteristic is None:
        characteristic = 2 if name == "rp2-no-boundary" else 0
    return _BUILDERS[name](FieldSpec(characteristic))


# -- serialization -------------------------------------------------------


def _scalar_out(x) -> str:
    return str(x)


def _scalar_in(x, where: str):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(where, f"expected an integer or a fraction string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(where, str(e)) from None


def _combo_out(A: GradedAlgebra, vec) -> dict[str, str]:
    return {A.names[k]: _scalar_out(c) for k, c in enumerate(vec) if c}


def model_to_dict(model: Model) -> dict:
    C = model.complex
    out: dict[str, Any] = {
        "field": {"characteristic": C.field.characteristic},
        "faces": [{"id": f.id, "name": f.name, "codim": f.codim, "label": sorted(f.label)} for f in C.faces],
        "covers": [list(p) for p in sorted(C.covers)],
        "algebras": {},
        "restrictions": [],
    }
    for fid, A in sorted(C.algebras.items()):
        out["algebras"][str(fid)] = {
            "basis": [[n, d] for n, d in zip(A.names, A.degrees)],
            "unit": A.names[A.unit],
            "top_degree": A.top_degree,
            "products": [[A.names[i], A.names[j], _combo_out(A, v)] for (i, j), v in sorted(A.products.items())],
        }
    for (hi, lo), f in sorted(C.restrictions.items()):
        mats = {
            str(d): [[_scalar_out(c) for c in row] for row in M]
            for d, M in sorted(f.matrices.items())
            if M and M[0]
        }
        out["restrictions"].append({"source": hi, "target": lo, "matrices": mats})
    if model.torus is not None:
        T = model.torus
        out["torus_data"] = {"n": T.n, "v": [list(w) for w in T.v], "c": [[_scalar_out(C.field(x)) for x in r] for r in T.c]}
    if model.chars is not None:
        ch = {}
        for key in ("sw", "pont"):
            val = getattr(model.chars, key)
            if val is not None:
                ch[key] = {k: _scalar_out(Fraction(v)) for k, v in sorted(val.items()) if Fraction(v)}
        out["char_data"] = ch
    return out


def dumps_model(model: Model) -> str:
    return json.dumps(model_to_dict(model), sort_keys=True, indent=2) + "\n"


def save_model(model: Model, path: str | Path) -> None:
    report = validate_complex(model.complex)
    if not report.ok:
        raise ValidationError(report)
    Path(path).write_text(dumps_model(model))


def _get(d: dict, key: str, where: str, kind=None):
    if not isinstance(d, dict) or key not in d:
        raise ParseError(where, f"missing field {key!r}")
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise ParseError(f"{where}.{key}", f"expected {getattr(kind, '__name__', kind)}")
    return v


def model_from_dict(data: dict, validate: bool = True) -> Model:
    if not isinstance(data, dict):
        raise ParseError("<root>", "expected a JSON object")
    fld = _get(data, "field", "<root>", dict)
    try:
        field = FieldSpec(_get(fld, "characteristic", "field", int))
    except ValueError as e:
        raise ParseError("field.characteristic", str(e)) from None

    faces = []
    for k, f in enumerate(_get(data, "faces", "<root>", list)):
        where = f"faces[{k}]"
        label = _get(f, "label", where, list)
        if not all(isinstance(i, int) for i in label):
            raise ParseError(f"{where}.label", "labels are lists of facet indices")
        faces.append(Face(_get(f, "id", where, int), _get(f, "codim", where, int), frozenset(label), f.get("name", "")))
    ids = {f.id for f in faces}
    if len(ids) != len(faces):
        raise ParseError("faces", "duplicate face id")

    covers = []
    for k, c in enumerate(_get(data, "covers", "<root>", list)):
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, int) for x in c)):
            raise ParseError(f"covers[{k}]", "expected [lower_id, upper_id]")
        if not set(c) <= ids:
            raise ParseError(f"covers[{k}]", "unknown face id")
        covers.append(tuple(c))

    algebras = {}
    alg_data = _get(data, "algebras", "<root>", dict)
    for f in faces:
        where = f"algebras.{f.id}"
        a = _get(alg_data, str(f.id), "algebras", dict)
        basis = _get(a, "basis", where, list)
        names, degs = [], []
        for k, b in enumerate(basis):
            if not (isinstance(b, list) and len(b) == 2 and isinstance(b[0], str) and isinstance(b[1], int)):
                raise ParseError(f"{where}.basis[{k}]", "expected [name, degree]")
            names.append(b[0])
            degs.append(b[1])
        index = {n: k for k, n in enumerate(names)}
        if len(index) != len(names):
            raise ParseError(f"{where}.basis", "duplicate basis name")
        unit = _get(a, "unit", where, str)
        if unit not in index:
            raise ParseError(f"{where}.unit", f"unknown basis element {unit!r}")
        products = {}
        for k, p in enumerate(_get(a, "products", where, list)):
            pw = f"{where}.products[{k}]"
            if not (isinstance(p, list) and len(p) == 3 and isinstance(p[2], dict)):
                raise ParseError(pw, "expected [left, right, {name: coeff}]")
            if p[0] not in index or p[1] not in index:
                raise ParseError(pw, "unknown basis element")
            vec = [0] * len(names)
            for n, c in p[2].items():
                if n not in index:
                    raise ParseError(pw, f"unknown basis element {n!r}")
                vec[index[n]] = field(_scalar_in(c, pw))
            products[(index[p[0]], index[p[1]])] = vec
        algebras[f.id] = GradedAlgebra(
            field, names, degs, products, unit=index[unit], top_degree=_get(a, "top_degree", where, int), fill_unit=False
        )

    restrictions = {}
    for k, r in enumerate(_get(data, "restrictions", "<root>", list)):
        where = f"restrictions[{k}]"
        hi, lo = _get(r, "source", where, int), _get(r, "target", where, int)
        if hi not in ids or lo not in ids:
            raise ParseError(where, "unknown face id")
        mats = {}
        for d, M in _get(r, "matrices", where, dict).items():
            if not d.isdigit() or not isinstance(M, list) or not all(isinstance(row, list) for row in M):
                raise ParseError(f"{where}.matrices.{d}", "expected degree -> list of rows")
            mats[int(d)] = [[field(_scalar_in(c, f"{where}.matrices.{d}")) for c in row] for row in M]
        src, tgt = algebras[hi], algebras[lo]
        for d in range(src.top_degree + 1):
            if d not in mats and src.dim_in_degree(d) and tgt.dim_in_degree(d):
                raise ParseError(f"{where}.matrices", f"missing matrix for degree {d}")
        try:
            restrictions[(hi, lo)] = AlgebraMap(src, tgt, mats)
        except ValueError as e:
            raise ParseError(f"{where}.matrices", str(e)) from None
    for lo, hi in covers:
        if (hi, lo) not in restrictions:
            raise ParseError("restrictions", f"missing restriction matrix for covering pair {lo} < {hi}")

    m = max((max(f.label) for f in faces if f.label), default=0)
    C = FaceComplex(field, m, faces, covers, algebras, restrictions)

    torus = None
    if "torus_data" in data:
        t = _get(data, "torus_data", "<root>", dict)
        v = _get(t, "v", "torus_data", list)
        c = _get(t, "c", "torus_data", list)
        try:
            torus = TorusData(
                _get(t, "n", "torus_data", int),
                tuple(tuple(w) for w in v),
                tuple(tuple(field(_scalar_in(x, "torus_data.c")) for x in row) for row in c),
            )
        except TypeError as e:
            raise ParseError("torus_data", str(e)) from None

    chars = None
    if "char_data" in data:
        ch = _get(data, "char_data", "<root>", dict)
        Qalg = algebras[C.top] if sum(1 for f in faces if f.codim == 0) == 1 else None
        vals = {}
        for key in ("sw", "pont"):
            if key in ch:
                d = _get(ch, key, "char_data", dict)
                if Qalg is not None and not set(d) <= set(Qalg.names):
                    raise ParseError(f"char_data.{key}", "unknown basis element")
                vals[key] = {n: _scalar_in(x, f"char_data.{key}") for n, x in d.items()}
        chars = CharClassData(vals.get("sw"), vals.get("pont"))

    model = Model(C, torus, chars)
    if validate:
        report = validate_complex(C)
        if not report.ok:
            raise ValidationError(report)
    return model


def loads_model(text: str, validate: bool = True) -> Model:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}", e.msg) from None
    return model_from_dict(data, validate=validate)


def load_model(path: str | Path, validate: bool = True) -> Model:
    model = loads_model(Path(path).read_text(), validate=validate)
    model.name = str(path)
    return model


def resolve_model(source: str, characteristic: int | None = None) -> Model:
    """``builtin:<name>`` or a path to a model file."""
    if source.startswith("builtin:"):
        return build_builtin(source.split(":", 1)[1], characteristic)
    return load_model(source)


# -- elements ------------------------------------------------------------


def element_to_dict(a: RingElement) -> dict:
    C = a.complex
    comps = []
    for F in sorted(a.components):
        A = C.algebras[F]
        terms = [
            {"x": {str(i): e for i, e in m}, "coeff": _combo_out(A, c)}
            for m, c in sorted(a.components[F].terms.items())
        ]
        comps.append({"face": F, "terms": terms})
    return {"element": comps}


def dumps_element(a: RingElement) -> str:
    return json.dumps(element_to_dict(a), sort_keys=True, indent=2) + "\n"


def element_from_dict(C: FaceComplex, data: dict) -> RingElement:
    comps = {}
    for k, part in enumerate(_get(data, "element", "<root>", list)):
        where = f"element[{k}]"
        ref = _get(part, "face", where)
        try:
            F = C.resolve(ref)
        except KeyError:
            raise ParseError(f"{where}.face", f"unknown face {ref!r}") from None
        A = C.algebras[F]
        terms: dict = {}
        for t, term in enumerate(_get(part, "terms", where, list)):
            tw = f"{where}.terms[{t}]"
            x = _get(term, "x", tw, dict)
            try:
                m = monomial({int(i): int(e) for i, e in x.items()})
            except (TypeError, ValueError) as e:
                raise ParseError(f"{tw}.x", str(e)) from None
            coeff = _get(term, "coeff", tw, dict)
            if not set(coeff) <= set(A.names):
                raise ParseError(f"{tw}.coeff", "unknown basis element")
            vec = A.element({n: C.field(_scalar_in(c, f"{tw}.coeff")) for n, c in coeff.items()})
            prev = terms.get(m, A.zero)
            terms[m] = tuple(C.field.reduce(p + q) for p, q in zip(prev, vec))
        poly = face_poly(C, F, terms)
        if F in comps:
            merged = dict(comps[F].terms)
            for m, c in poly.terms.items():
                merged[m] = tuple(C.field.reduce(p + q) for p, q in zip(merged.get(m, A.zero), c))
            poly = face_poly(C, F, merged)
        comps[F] = poly
    return RingElement(C, comps)


def loads_element(C: FaceComplex, text: str) -> RingElement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}", e.msg) from None
    return element_from_dict(C, data)


def load_element(C: FaceComplex, path: str | Path) -> RingElement:
    return loads_element(C, Path(path).read_text())


def save_element(a: RingElement, path: str | Path) -> None:
    Path(path).write_text(dumps_element(a))

