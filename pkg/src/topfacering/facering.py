"""The topological face ring k[Q] inside A = sum_F H*(F)[x_F].

An element of A is a :class:`RingElement`: one :class:`FacePolynomial` per
face, each a finite map from monomials in the facet variables ``x_i`` to
coefficients in the face's cohomology (dense tuples over its basis).  The
variables have degree 2 and are central.

k[Q] is the span of *face elements*.  An E-face element has E-component
made of monomials positive in every variable of the label of E, restricts
along the poset to every face below E, and vanishes elsewhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence

from .algebra import Element, Scalar, alg_mul
from .corners import FaceComplex, restrict_coeff
from .errors import (
    NotFaceElement,
    NotInFaceRing,
    ShapeMismatch,
    SupportViolation,
)

Monomial = tuple  # sorted ((facet index, exponent), ...), exponents > 0

ONE: Monomial = ()


def monomial(exps: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> Monomial:
    items = exps.items() if isinstance(exps, Mapping) else exps
    merged: dict[int, int] = {}
    for i, e in items:
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            merged[int(i)] = merged.get(int(i), 0) + int(e)
    return tuple(sorted(merged.items()))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for i, e in b:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


def mono_support(a: Monomial) -> frozenset[int]:
    return frozenset(i for i, _ in a)


def mono_degree(a: Monomial) -> int:
    return 2 * sum(e for _, e in a)


def format_monomial(a: Monomial) -> str:
    return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in a)


@dataclass(frozen=True, eq=False)
class FacePolynomial:
    """``terms`` maps monomials to nonzero coefficients in H*(face)."""

    face: int
    terms: Mapping[Monomial, Element]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FacePolynomial):
            return NotImplemented
        return self.face == other.face and dict(self.terms) == dict(other.terms)

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def supports(self) -> set[frozenset[int]]:
        return {mono_support(m) for m in self.terms}

    def support_part(self, S: frozenset[int]) -> "FacePolynomial":
        return FacePolynomial(self.face, {m: c for m, c in self.terms.items() if mono_support(m) == S})


def face_poly(C: FaceComplex, face: int, terms: Mapping[Monomial, Sequence[Scalar]] | None = None) -> FacePolynomial:
    """Build a pruned face polynomial, checking monomials use only the face's variables."""
    A = C.algebras[face]
    lab = C.label(face)
    out: dict[Monomial, Element] = {}
    for m, c in (terms or {}).items():
        m = monomial(m)
        if not mono_support(m) <= lab:
            raise SupportViolation(f"monomial {format_monomial(m)} uses variables outside the label of face {face}")
        c = A.element(c) if isinstance(c, Mapping) else tuple(A.field(v) for v in A.element(c))
        _acc(out, m, c, A.field.reduce)
    return FacePolynomial(face, out)


def _acc(out: dict, m: Monomial, c: Element, red) -> None:
    prev = out.get(m)
    if prev is None:
        if any(c):
            out[m] = c
        return
    s = tuple(red(a + b) for a, b in zip(prev, c))
    if any(s):
        out[m] = s
    else:
        del out[m]


class RingElement:
    """An element of A: a finitely supported family of face polynomials."""

    __slots__ = ("complex", "components")

    def __init__(self, C: FaceComplex, components: Mapping[int, FacePolynomial] | None = None):
        self.complex = C
        self.components = {F: p for F, p in (components or {}).items() if p.terms}

    def component(self, F: int) -> FacePolynomial:
        p = self.components.get(F)
        return p if p is not None else FacePolynomial(F, {})

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.components == other.components

    __hash__ = None

    def __add__(self, other: "RingElement") -> "RingElement":
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other: "RingElement") -> "RingElement":
        return linear_combine([(1, self), (-1, other)])

    def __neg__(self) -> "RingElement":
        return linear_combine([(-1, self)])

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return multiply(self.complex, self, other)
        return linear_combine([(other, self)])

    def __rmul__(self, other):
        return linear_combine([(other, self)])

    def __repr__(self) -> str:
        return f"RingElement({format_element(self)})"


def zero(C: FaceComplex) -> RingElement:
    return RingElement(C)


def element(C: FaceComplex, parts: Mapping[int, Mapping[Monomial, Sequence[Scalar]]]) -> RingElement:
    """Build an arbitrary element of A from ``{face: {monomial: coeff}}``."""
    return RingElement(C, {F: face_poly(C, F, t) for F, t in parts.items()})


def format_poly(C: FaceComplex, p: FacePolynomial) -> str:
    if not p.terms:
        return "0"
    A = C.algebras[p.face]
    out = []
    for m in sorted(p.terms, key=lambda m: (mono_degree(m), m)):
        c = p.terms[m]
        cs = A.format(c)
        ms = format_monomial(m)
        if not ms:
            out.append(cs)
            continue
        if cs == A.names[A.unit]:
            out.append(ms)
        elif cs == "-" + A.names[A.unit]:
            out.append("-" + ms)
        elif " " in cs:
            out.append(f"({cs})*{ms}")
        else:
            out.append(f"{cs}*{ms}")
    return " + ".join(out).replace("+ -", "- ")


def format_element(a: RingElement) -> str:
    C = a.complex
    if a.is_zero():
        return "0"
    return "; ".join(f"{C.face(F).name}: {format_poly(C, a.components[F])}" for F in sorted(a.components))


# -- phi, face elements, theta ------------------------------------------


def phi(C: FaceComplex, F: int, E: int, p: FacePolynomial) -> FacePolynomial:
    """Restrict coefficients from F to E, keeping monomials; zero unless E <= F."""
    if p.face != F:
        raise ValueError(f"polynomial lives at face {p.face}, not {F}")
    if not C.leq(E, F) or not p.terms:
        return FacePolynomial(E, {})
    if E == F:
        return p
    out: dict[Monomial, Element] = {}
    for m, c in p.terms.items():
        r = restrict_coeff(C, F, E, c)
        if any(r):
            out[m] = r
    return FacePolynomial(E, out)


def make_face_element(C: FaceComplex, E: int, p: FacePolynomial) -> RingElement:
    lab = C.label(E)
    for m in p.terms:
        if mono_support(m) != lab:
            raise SupportViolation(
                f"monomial {format_monomial(m) or '1'} at face {E} is not positive in every variable of {sorted(lab)}"
            )
    return _extend_down(C, E, p)


def _extend_down(C: FaceComplex, E: int, p: FacePolynomial) -> RingElement:
    if p.face != E:
        raise ValueError(f"polynomial lives at face {p.face}, not {E}")
    return RingElement(C, {F: phi(C, E, F, p) for F in C.below[E]})


def is_face_element(C: FaceComplex, a: RingElement, E: int, strict: bool = True) -> bool:
    """Face-element test.

    ``strict=False`` drops the positivity condition on the E-component and
    keeps only "restricts along the poset below E, zero elsewhere".
    """
    top = a.component(E)
    if strict:
        lab = C.label(E)
        if any(mono_support(m) != lab for m in top.terms):
            return False
    below = C.below[E]
    for F in a.components:
        if F not in below:
            return False
    for F in below:
        if a.component(F) != phi(C, E, F, top):
            return False
    return True


def theta(C: FaceComplex, E: int, G: int, a: RingElement) -> RingElement:
    """Transfer an E-face element to G: F-component is phi_GF(phi_EG(a_E))."""
    if not is_face_element(C, a, E):
        raise NotFaceElement(f"argument is not a face element at {E}")
    if not C.leq(G, E):
        return RingElement(C)
    g = phi(C, E, G, a.component(E))
    out = _extend_down(C, G, g)
    assert is_face_element(C, out, G, strict=False)
    return out


# -- linear structure and product ----------------------------------------


def linear_combine(terms: Iterable[tuple[Scalar, RingElement]]) -> RingElement:
    terms = list(terms)
    if not terms:
        raise ValueError("linear_combine needs at least one term to know the complex")
    C = terms[0][1].complex
    red = C.field.reduce
    acc: dict[int, dict[Monomial, Element]] = {}
    for s, a in terms:
        if a.complex is not C:
            raise ValueError("elements live over different complexes")
        s = C.field(s)
        if not s:
            continue
        for F, p in a.components.items():
            out = acc.setdefault(F, {})
            for m, c in p.terms.items():
                _acc(out, m, tuple(red(s * v) for v in c), red)
    return RingElement(C, {F: FacePolynomial(F, t) for F, t in acc.items()})


def poly_mul(C: FaceComplex, p: FacePolynomial, q: FacePolynomial) -> FacePolynomial:
    A = C.algebras[p.face]
    red = A.field.reduce
    out: dict[Monomial, Element] = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            _acc(out, mono_mul(m1, m2), alg_mul(A, c1, c2), red)
    return FacePolynomial(p.face, out)


def multiply(C: FaceComplex, a: RingElement, b: RingElement) -> RingElement:
    """Componentwise product in A."""
    if a.complex is not C or b.complex is not C:
        raise ValueError("elements live over a different complex")
    comps = {}
    for F in a.components.keys() & b.components.keys():
        comps[F] = poly_mul(C, a.components[F], b.components[F])
    return RingElement(C, comps)


def one(C: FaceComplex) -> RingElement:
    Q = C.top
    return make_face_element(C, Q, FacePolynomial(Q, {ONE: C.algebras[Q].one}))


def top_element(C: FaceComplex, coeff: Sequence[Scalar] | Mapping[str, Scalar]) -> RingElement:
    """The Q-face element with a bare coefficient in H*(Q)."""
    Q = C.top
    return make_face_element(C, Q, face_poly(C, Q, {ONE: coeff}))


# -- membership ----------------------------------------------------------


@dataclass
class FaceDecomposition:
    """``parts[E]`` has every monomial positive in exactly the label of E."""

    complex: FaceComplex
    parts: dict[int, FacePolynomial]

    def reconstruct(self) -> RingElement:
        C = self.complex
        if not self.parts:
            return RingElement(C)
        return linear_combine([(1, make_face_element(C, E, p)) for E, p in self.parts.items()])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FaceDecomposition):
            return NotImplemented
        return self.parts == other.parts

    def format(self) -> str:
        C = self.complex
        if not self.parts:
            return "0"
        return "\n".join(f"{C.face(E).name}: {format_poly(C, self.parts[E])}" for E in sorted(self.parts, key=lambda e: (C.codim(e), e)))


def decompose(C: FaceComplex, a: RingElement) -> FaceDecomposition:
    """Peel ``a`` into face elements by monomial support.

    Faces are visited by increasing codimension.  At F, the part of ``a_F``
    whose support is the full label of F becomes ``parts[F]``; every other
    part must be exactly what the faces strictly above F restrict to.
    """
    parts: dict[int, FacePolynomial] = {}
    red = C.field.reduce
    for F in C.processing_order:
        lab = C.label(F)
        here = a.component(F)
        expected: dict[Monomial, Element] = {}
        for E in C.above[F]:
            if E != F and E in parts:
                for m, c in phi(C, E, F, parts[E]).terms.items():
                    _acc(expected, m, c, red)
        lower = {m: c for m, c in here.terms.items() if mono_support(m) != lab}
        if lower != expected:
            bad = {mono_support(m) for m in lower.keys() ^ expected.keys()}
            bad |= {mono_support(m) for m in lower.keys() & expected.keys() if lower[m] != expected[m]}
            S = min(bad, key=lambda s: (len(s), sorted(s)))
            raise NotInFaceRing(F, S, f"face {C.face(F).name}: support {sorted(S)} does not match the faces above")
        top = {m: c for m, c in here.terms.items() if mono_support(m) == lab}
        if top:
            parts[F] = FacePolynomial(F, top)
    return FaceDecomposition(C, parts)


def is_member(C: FaceComplex, a: RingElement) -> bool:
    try:
        decompose(C, a)
    except NotInFaceRing:
        return False
    return True


# -- grading ---------------------------------------------------------------


def homogeneous_component(a: RingElement, d: int) -> RingElement:
    C = a.complex
    comps = {}
    for F, p in a.components.items():
        A = C.algebras[F]
        out = {}
        for m, c in p.terms.items():
            c = A.homogeneous(c, d - mono_degree(m))
            if any(c):
                out[m] = c
        comps[F] = FacePolynomial(F, out)
    return RingElement(C, comps)


def degrees(a: RingElement) -> list[int]:
    C = a.complex
    out = set()
    for F, p in a.components.items():
        degs = C.algebras[F].degrees
        for m, c in p.terms.items():
            out.update(degs[k] + mono_degree(m) for k, v in enumerate(c) if v)
    return sorted(out)


def positive_count(j: int, k: int) -> int:
    """Number of exponent vectors in (Z_{>0})^k with sum j."""
    if k == 0:
        return 1 if j == 0 else 0
    return comb(j - 1, k - 1) if j >= k else 0


def hilbert(C: FaceComplex, d_max: int) -> list[int]:
    """Dimensions of k[Q] in degrees 0..d_max."""
    dims = [0] * (d_max + 1)
    for f in C.faces:
        A = C.algebras[f.id]
        for d in range(d_max + 1):
            total = 0
            for j in range(d // 2 + 1):
                total += A.dim_in_degree(d - 2 * j) * positive_count(j, f.codim)
            dims[d] += total
    return dims


# -- Thom classes and the H*(BT) action -----------------------------------


def tau(C: FaceComplex, i: int) -> RingElement:
    if not 1 <= i <= C.m:
        raise ValueError(f"facet index {i} outside 1..{C.m}")
    F = C.facet(i)
    return make_face_element(C, F, FacePolynomial(F, {((i, 1),): C.algebras[F].one}))


@dataclass(frozen=True)
class TorusData:
    """Facet weights ``v_i`` and the map ``c: H^2(BT) -> H^2(Q)``.

    ``c`` has one row per degree-2 basis element of H*(Q) and ``n`` columns.
    """

    n: int
    v: tuple[tuple[int, ...], ...]
    c: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(tuple(int(x) for x in w) for w in self.v))
        object.__setattr__(self, "c", tuple(tuple(r) for r in self.c))

    def check(self, C: FaceComplex) -> None:
        if len(self.v) != C.m:
            raise ShapeMismatch(f"{len(self.v)} weights for {C.m} facets")
        if any(len(w) != self.n for w in self.v):
            raise ShapeMismatch(f"every weight must have length {self.n}")
        h2 = C.algebras[C.top].dim_in_degree(2)
        if len(self.c) != h2 or any(len(r) != self.n for r in self.c):
            raise ShapeMismatch(f"c must be {h2}x{self.n}")


def eta(C: FaceComplex, T: TorusData, u: Sequence[Scalar]) -> RingElement:
    """Image of a degree-2 class ``u`` of H*(BT) in k[Q]."""
    T.check(C)
    if len(u) != T.n:
        raise ShapeMismatch(f"u has length {len(u)}, torus has rank {T.n}")
    K = C.field
    u = [K(x) for x in u]
    A = C.algebras[C.top]
    coeff = [0] * A.dim
    for row, k in zip(T.c, A.basis_in_degree(2)):
        coeff[k] = K.reduce(sum(K(x) * y for x, y in zip(row, u)))
    terms = [(1, top_element(C, coeff))]
    for i, w in enumerate(T.v, start=1):
        s = K.reduce(sum(a * b for a, b in zip(w, u)))
        if s:
            terms.append((s, tau(C, i)))
    return linear_combine(terms)


def bt_act(C: FaceComplex, T: TorusData, exps: Sequence[int], a: RingElement) -> RingElement:
    """Multiply ``a`` by the monomial ``u_1^e_1 ... u_n^e_n`` of H*(BT)."""
    if len(exps) != T.n:
        raise ShapeMismatch(f"exponent vector has length {len(exps)}, torus has rank {T.n}")
    out = a
    for j, e in enumerate(exps):
        if not e:
            continue
        g = eta(C, T, [1 if k == j else 0 for k in range(T.n)])
        for _ in range(e):
            out = multiply(C, out, g)
    return out


# -- seeded sampling ---------------------------------------------------------


def _positive_monomial(rng: random.Random, lab: Sequence[int], max_exp: int) -> Monomial:
    return tuple((i, rng.randint(1, max_exp)) for i in sorted(lab))


def _random_coeff(C: FaceComplex, F: int, rng: random.Random) -> Element:
    A = C.algebras[F]
    K = C.field
    while True:
        c = tuple(K(rng.randint(-2, 2)) for _ in range(A.dim))
        if any(c):
            return c


def random_face_element(
    C: FaceComplex,
    rng: random.Random,
    face: int | None = None,
    max_terms: int = 2,
    max_exp: int = 3,
) -> tuple[int, RingElement]:
    """A random E-face element; returns ``(E, element)``."""
    E = rng.choice(C.ids) if face is None else face
    lab = sorted(C.label(E))
    terms: dict[Monomial, Element] = {}
    for _ in range(rng.randint(1, max_terms)):
        _acc(terms, _positive_monomial(rng, lab, max_exp), _random_coeff(C, E, rng), C.field.reduce)
    return E, make_face_element(C, E, FacePolynomial(E, terms))


def random_member(C: FaceComplex, rng: random.Random, n_faces: int = 3) -> RingElement:
    picks = [random_face_element(C, rng)[1] for _ in range(rng.randint(1, n_faces))]
    return linear_combine([(C.field(rng.randint(-2, 2)), p) for p in picks])


def perturb(C: FaceComplex, a: RingElement, rng: random.Random, max_exp: int = 3) -> RingElement:
    """Add one random term at one random face; usually leaves k[Q]."""
    F = rng.choice(C.ids)
    lab = sorted(C.label(F))
    sub = [i for i in lab if rng.random() < 0.5]
    m = tuple((i, rng.randint(1, max_exp)) for i in sub)
    bump = RingElement(C, {F: FacePolynomial(F, {m: _random_coeff(C, F, rng)})})
    return linear_combine([(1, a), (1, bump)])
