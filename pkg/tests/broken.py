"""One deliberately invalid complex per face-poset axiom.

Each builder returns ``(complex, axiom, witness_prefix)``; the validator
must report ``axiom`` with a witness starting with ``witness_prefix``.
"""

from topfacering.algebra import QQ, GradedAlgebra
from topfacering.models import build_complex

BIGON = {"Q": set(), "F1": {1}, "F2": {2}, "p": {1, 2}, "q": {1, 2}}
BIGON_COVERS = [("F1", "Q"), ("F2", "Q"), ("p", "F1"), ("p", "F2"), ("q", "F1"), ("q", "F2")]
TRIANGLE = {"Q": set(), "F1": {1}, "F2": {2}, "F3": {3}, "v12": {1, 2}, "v13": {1, 3}, "v23": {2, 3}}
TRIANGLE_COVERS = [("F1", "Q"), ("F2", "Q"), ("F3", "Q"),
                   ("v12", "F1"), ("v12", "F2"), ("v13", "F1"), ("v13", "F3"), ("v23", "F2"), ("v23", "F3")]


def _id(C, name):
    return C.by_name(name)


def second_top():
    C = build_complex(QQ, {**BIGON, "Q2": set()}, BIGON_COVERS)
    return C, "unique_maximum", (_id(C, "Q"), _id(C, "Q2"))


def not_nice():
    C = build_complex(QQ, BIGON, BIGON_COVERS)
    faces = [f if f.name != "F1" else type(f)(f.id, 2, f.label, f.name) for f in C.faces]
    C = type(C)(C.field, C.m, faces, C.covers, C.algebras, C.restrictions)
    return C, "niceness", (_id(C, "F1"),)


def not_monotone():
    C = build_complex(QQ, TRIANGLE, TRIANGLE_COVERS + [("v12", "F3")])
    return C, "monotonicity", (_id(C, "v12"), _id(C, "F3"))


def doubled_facet():
    C = build_complex(QQ, {**TRIANGLE, "F1b": {1}}, TRIANGLE_COVERS + [("F1b", "Q")])
    return C, "facets", (1, _id(C, "F1"), _id(C, "F1b"))


def missing_component():
    covers = [c for c in BIGON_COVERS if c != ("q", "F2")]
    C = build_complex(QQ, BIGON, covers)
    return C, "unique_component", (_id(C, "q"), (2,))


def twisted_restriction():
    """A loop of circles where one of the two chains Q -> p doubles the class."""

    def circle():
        return GradedAlgebra(QQ, ["1", "b"], [0, 1])

    labels = {"Q": set(), "F1": {1}, "F2": {2}, "p": {1, 2}}
    covers = [("F1", "Q"), ("F2", "Q"), ("p", "F1"), ("p", "F2")]
    ident = {0: [[1]], 1: [[1]]}
    C = build_complex(
        QQ, labels, covers,
        {name: circle() for name in labels},
        {("Q", "F1"): ident, ("Q", "F2"): ident, ("F1", "p"): ident, ("F2", "p"): {0: [[1]], 1: [[2]]}},
    )
    return C, "functoriality", (_id(C, "Q"), _id(C, "p"))


def split_intersection():
    labels = {"Q": set(), "F1": {1}, "F2": {2}, "F3": {3},
              "G1": {1, 2}, "G2": {1, 2}, "H13": {1, 3}, "H23": {2, 3}, "X": {1, 2, 3}}
    covers = [("F1", "Q"), ("F2", "Q"), ("F3", "Q"),
              ("G1", "F1"), ("G1", "F2"), ("G2", "F1"), ("G2", "F2"),
              ("H13", "F1"), ("H13", "F3"), ("H23", "F2"), ("H23", "F3"),
              ("X", "G1"), ("X", "G2"), ("X", "H13"), ("X", "H23")]
    C = build_complex(QQ, labels, covers)
    return C, "partition", (_id(C, "F1"), _id(C, "F2"), _id(C, "X"))


ALL = {
    "unique_maximum": second_top,
    "niceness": not_nice,
    "monotonicity": not_monotone,
    "facets": doubled_facet,
    "unique_component": missing_component,
    "functoriality": twisted_restriction,
    "partition": split_intersection,
}


def caught(report, axiom, prefix) -> bool:
    return any(v.witness[: len(prefix)] == tuple(prefix) for v in report.by_axiom(axiom))
