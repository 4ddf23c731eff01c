"""Brute-force ground truth for the fast paths in :mod:`facering`.

Everything here enumerates face-element generators explicitly and does
exact linear algebra over the coordinates (face, monomial, basis index) of
A.  Nothing calls :func:`facering.hilbert` or :func:`facering.decompose`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Iterator

from .corners import FaceComplex
from .errors import DuplicateLabelSets, NotAcyclic
from .facering import (
    FacePolynomial,
    RingElement,
    degrees,
    homogeneous_component,
    make_face_element,
)
from .linalg import Echelon, rank


def sr_hilbert(C: FaceComplex, d_max: int) -> list[int]:
    """Classical Stanley-Reisner count: monomials whose support is a face label."""
    for f in C.faces:
        if C.algebras[f.id].dim != 1:
            raise NotAcyclic(f"face {f.name} has positive-degree cohomology")
    labels = [f.label for f in C.faces]
    if len(set(labels)) != len(labels):
        dup = sorted({tuple(sorted(s)) for s in labels if labels.count(s) > 1})
        raise DuplicateLabelSets(f"label sets shared by several faces: {dup}")
    family = set(labels)
    dims = []
    for d in range(d_max + 1):
        if d % 2:
            dims.append(0)
            continue
        n = 0
        for combo in combinations_with_replacement(range(1, C.m + 1), d // 2):
            if frozenset(combo) in family:
                n += 1
        dims.append(n)
    return dims


def _positive_exponents(k: int, j: int) -> Iterator[tuple[int, ...]]:
    for e in product(range(1, j + 1), repeat=k):
        if sum(e) == j:
            yield e


def generators(C: FaceComplex, d: int) -> Iterator[tuple[tuple, RingElement]]:
    """Every face element (face, positive monomial, basis vector) of degree ``d``."""
    for f in C.faces:
        A = C.algebras[f.id]
        lab = sorted(f.label)
        for b in range(A.dim):
            rest = d - A.degrees[b]
            if rest < 0 or rest % 2:
                continue
            for e in _positive_exponents(len(lab), rest // 2):
                m = tuple(zip(lab, e))
                poly = FacePolynomial(f.id, {m: A.basis_element(b)})
                yield (f.id, m, b), make_face_element(C, f.id, poly)


def coordinates(a: RingElement) -> dict:
    return {
        (F, m, k): c
        for F, p in a.components.items()
        for m, vec in p.terms.items()
        for k, c in enumerate(vec)
        if c
    }


@dataclass
class BruteCount:
    degree: int
    generators: int
    rank: int

    @property
    def independent(self) -> bool:
        return self.generators == self.rank


def brute_basis_report(C: FaceComplex, d_max: int) -> list[BruteCount]:
    out = []
    for d in range(d_max + 1):
        vecs = [coordinates(g) for _, g in generators(C, d)]
        out.append(BruteCount(d, len(vecs), rank(vecs, C.field)))
    return out


def brute_basis_hilbert(C: FaceComplex, d_max: int) -> list[int]:
    return [r.rank for r in brute_basis_report(C, d_max)]


@dataclass
class Membership:
    member: bool
    coefficients: dict = field(default_factory=dict)  # (face, monomial, basis index) -> scalar
    failed_degree: int | None = None

    def __bool__(self) -> bool:
        return self.member


def naive_membership(C: FaceComplex, a: RingElement) -> Membership:
    """Solve for ``a`` in the span of all face-element generators, degree by degree."""
    coeffs = {}
    for d in degrees(a):
        ech = Echelon(C.field)
        for key, g in generators(C, d):
            ech.add(key, coordinates(g))
        sol = ech.solve(coordinates(homogeneous_component(a, d)))
        if sol is None:
            return Membership(False, failed_degree=d)
        coeffs.update(sol)
    return Membership(True, coeffs)
