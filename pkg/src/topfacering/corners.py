"""Combinatorial model of a nice manifold with corners.

A :class:`FaceComplex` is a finite poset of faces.  Every face carries its
codimension, its facet label (the set of facets it lies in), a cohomology
algebra, and a restriction map for each covering pair ``E < F``.  Faces are
identified by small integer ids; ``E <= F`` means "E is a face of F".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .algebra import (
    AlgebraMap,
    Element,
    FieldSpec,
    GradedAlgebra,
    Report,
    apply_map,
    check_homomorphism,
    validate_algebra,
)
from .errors import InvalidComplex, LabelNotSubset, NotComparable

AXIOMS = (
    "unique_maximum",
    "niceness",
    "monotonicity",
    "facets",
    "unique_component",
    "functoriality",
    "partition",
)


@dataclass(frozen=True)
class Face:
    id: int
    codim: int
    label: frozenset[int]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "label", frozenset(self.label))
        if not self.name:
            object.__setattr__(self, "name", f"f{self.id}")


class FaceComplex:
    """Face poset with per-face algebras and covering-pair restrictions.

    ``covers`` holds pairs ``(lower, upper)``; ``restrictions`` is keyed by
    ``(upper, lower)`` and maps ``H*(upper) -> H*(lower)``.  Nothing is
    validated at construction; call :func:`validate_complex`.
    """

    def __init__(
        self,
        field: FieldSpec,
        m: int,
        faces: Iterable[Face],
        covers: Iterable[tuple[int, int]],
        algebras: Mapping[int, GradedAlgebra],
        restrictions: Mapping[tuple[int, int], AlgebraMap],
    ):
        self.field = field
        self.m = m
        self.faces = tuple(sorted(faces, key=lambda f: f.id))
        self.covers = frozenset((int(a), int(b)) for a, b in covers)
        self.algebras = dict(algebras)
        self.restrictions = dict(restrictions)
        self._face = {f.id: f for f in self.faces}
        self._map_cache: dict[tuple[int, int], AlgebraMap] = {}
        self._label_cache: dict[tuple[int, frozenset], int] = {}

    def __repr__(self) -> str:
        return f"FaceComplex(m={self.m}, faces={len(self.faces)}, field={self.field.name})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FaceComplex):
            return NotImplemented
        return (
            self.field == other.field
            and self.m == other.m
            and self.faces == other.faces
            and self.covers == other.covers
            and self.algebras == other.algebras
            and self.restrictions == other.restrictions
        )

    __hash__ = None

    # -- basic lookups -------------------------------------------------

    def face(self, fid: int) -> Face:
        return self._face[fid]

    def label(self, fid: int) -> frozenset[int]:
        return self._face[fid].label

    def codim(self, fid: int) -> int:
        return self._face[fid].codim

    def algebra(self, fid: int) -> GradedAlgebra:
        return self.algebras[fid]

    @property
    def ids(self) -> list[int]:
        return [f.id for f in self.faces]

    def by_name(self, name: str) -> int:
        for f in self.faces:
            if f.name == name:
                return f.id
        raise KeyError(name)

    def resolve(self, ref: int | str) -> int:
        """Accept a face id or a face name."""
        if isinstance(ref, int) and ref in self._face:
            return ref
        if isinstance(ref, str):
            if ref.lstrip("-").isdigit() and int(ref) in self._face:
                return int(ref)
            return self.by_name(ref)
        raise KeyError(ref)

    @cached_property
    def top(self) -> int:
        tops = [f.id for f in self.faces if f.codim == 0 and not f.label]
        if len(tops) != 1:
            raise InvalidComplex(f"expected exactly one top face, found {len(tops)}")
        return tops[0]

    def facet(self, i: int) -> int:
        return self.face_by_label_global(frozenset([i]))

    def face_by_label_global(self, S: frozenset[int]) -> int:
        hits = [f.id for f in self.faces if f.label == S]
        if len(hits) != 1:
            raise InvalidComplex(f"{len(hits)} faces carry label {sorted(S)}")
        return hits[0]

    @cached_property
    def processing_order(self) -> tuple[int, ...]:
        """Faces by increasing codimension, ties by id."""
        return tuple(f.id for f in sorted(self.faces, key=lambda f: (f.codim, f.id)))

    # -- order ---------------------------------------------------------

    @cached_property
    def upper_covers(self) -> dict[int, tuple[int, ...]]:
        up: dict[int, list[int]] = {f.id: [] for f in self.faces}
        for lo, hi in self.covers:
            if lo in up:
                up[lo].append(hi)
        return {k: tuple(sorted(v)) for k, v in up.items()}

    @cached_property
    def lower_covers(self) -> dict[int, tuple[int, ...]]:
        down: dict[int, list[int]] = {f.id: [] for f in self.faces}
        for lo, hi in self.covers:
            if hi in down:
                down[hi].append(lo)
        return {k: tuple(sorted(v)) for k, v in down.items()}

    @cached_property
    def above(self) -> dict[int, frozenset[int]]:
        """``above[E]`` is every F with E <= F, including E."""
        out = {}
        for fid in self._face:
            seen = {fid}
            stack = [fid]
            while stack:
                for g in self.upper_covers.get(stack.pop(), ()):
                    if g not in seen and g in self._face:
                        seen.add(g)
                        stack.append(g)
            out[fid] = frozenset(seen)
        return out

    @cached_property
    def below(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {fid: set() for fid in self._face}
        for e, ups in self.above.items():
            for f in ups:
                out[f].add(e)
        return {k: frozenset(v) for k, v in out.items()}

    def leq(self, E: int, F: int) -> bool:
        return F in self.above[E]

    # -- restrictions --------------------------------------------------

    def restriction_map(self, F: int, E: int) -> AlgebraMap:
        """Composite restriction ``H*(F) -> H*(E)`` along a chain of covers."""
        key = (F, E)
        hit = self._map_cache.get(key)
        if hit is not None:
            return hit
        if not self.leq(E, F):
            raise NotComparable(f"face {E} is not a face of {F}")
        if E == F:
            f = AlgebraMap.identity(self.algebras[F])
        else:
            G = min(g for g in self.upper_covers[E] if self.leq(g, F))
            f = self.restriction_map(F, G).then(self.restrictions[(G, E)])
        self._map_cache[key] = f
        return f


def face_of_label(C: FaceComplex, F: int, S: Iterable[int]) -> int:
    """The unique face ``E >= F`` with label ``S``."""
    S = frozenset(S)
    key = (F, S)
    hit = C._label_cache.get(key)
    if hit is not None:
        return hit
    if not S <= C.label(F):
        raise LabelNotSubset(f"{sorted(S)} is not contained in the label {sorted(C.label(F))} of face {F}")
    hits = [E for E in C.above[F] if C.label(E) == S]
    if len(hits) != 1:
        raise InvalidComplex(f"{len(hits)} faces above {F} carry label {sorted(S)}")
    C._label_cache[key] = hits[0]
    return hits[0]


def components(C: FaceComplex, E1: int, E2: int) -> frozenset[int]:
    """Maximal common lower bounds of two faces (empty if they do not meet)."""
    common = C.below[E1] & C.below[E2]
    return frozenset(G for G in common if not any(H != G and C.leq(G, H) for H in common))


def restrict_coeff(C: FaceComplex, F: int, E: int, a: Element) -> Element:
    if not C.leq(E, F):
        raise NotComparable(f"face {E} is not a face of {F}")
    if E == F:
        return tuple(a)
    return apply_map(C.restriction_map(F, E), a)


def _structure(C: FaceComplex, report: Report) -> None:
    ids = set(C._face)
    if len(ids) != len(C.faces):
        report.add("structure", (), "duplicate face ids")
    for lo, hi in sorted(C.covers):
        if lo not in ids or hi not in ids:
            report.add("structure", (lo, hi), "cover refers to an unknown face")
        elif lo == hi:
            report.add("structure", (lo, hi), "face covers itself")
    for fid in sorted(ids):
        if fid not in C.algebras:
            report.add("structure", (fid,), "face has no algebra")
        elif C.algebras[fid].field != C.field:
            report.add("structure", (fid,), "algebra field differs from the complex field")
    for lo, hi in sorted(C.covers):
        if (hi, lo) not in C.restrictions:
            report.add("structure", (hi, lo), "covering pair has no restriction map")
    for hi, lo in sorted(C.restrictions):
        if (lo, hi) not in C.covers:
            report.add("structure", (hi, lo), "restriction given for a non-covering pair")
    if report.ok:
        for fid in sorted(ids):
            for g in C.above[fid]:
                if g != fid and fid in C.above[g]:
                    report.add("structure", (fid, g), "containment has a cycle")
                    return


def validate_complex(C: FaceComplex) -> Report:
    """Check structure, algebra data, and the seven face-poset axioms."""
    report = Report()
    _structure(C, report)
    if not report.ok:
        return report

    for fid in C.ids:
        report.extend(validate_algebra(C.algebras[fid]), prefix=("face", fid))
    for (hi, lo), f in sorted(C.restrictions.items()):
        if f.source is not C.algebras[hi] and f.source != C.algebras[hi]:
            report.add("structure", (hi, lo), "restriction source is not the algebra of the upper face")
            continue
        if f.target is not C.algebras[lo] and f.target != C.algebras[lo]:
            report.add("structure", (hi, lo), "restriction target is not the algebra of the lower face")
            continue
        report.extend(check_homomorphism(f), prefix=("restriction", hi, lo))

    # unique maximum
    tops = [f.id for f in C.faces if f.codim == 0 and not f.label]
    if len(tops) != 1:
        report.add("unique_maximum", tuple(tops), f"{len(tops)} faces with codim 0 and empty label")
    else:
        missing = sorted(set(C.ids) - C.below[tops[0]])
        if missing:
            report.add("unique_maximum", (tops[0],) + tuple(missing), "top face is not above every face")
        for f in C.faces:
            if f.id != tops[0] and f.codim == 0:
                report.add("unique_maximum", (f.id,), "second codimension-0 face")

    for f in C.faces:
        if len(f.label) != f.codim:
            report.add("niceness", (f.id,), f"codim {f.codim} but label {sorted(f.label)}")
        stray = sorted(i for i in f.label if not 1 <= i <= C.m)
        if stray:
            report.add("facets", (f.id,) + tuple(stray), "label uses indices outside 1..m")

    for E in C.ids:
        for F in sorted(C.above[E]):
            if not C.label(F) <= C.label(E):
                report.add("monotonicity", (E, F), f"label of {F} is not inside the label of its face {E}")

    for i in range(1, C.m + 1):
        hits = [f.id for f in C.faces if f.label == frozenset([i])]
        if len(hits) != 1:
            report.add("facets", (i,) + tuple(hits), f"{len(hits)} faces labelled {{{i}}}")

    for F in C.ids:
        lab = sorted(C.label(F))
        if len(lab) > 20:
            report.add("unique_component", (F,), "label too large to enumerate")
            continue
        for r in range(len(lab) + 1):
            for S in combinations(lab, r):
                S = frozenset(S)
                hits = sorted(E for E in C.above[F] if C.label(E) == S)
                if len(hits) != 1:
                    report.add(
                        "unique_component",
                        (F, tuple(sorted(S))) + tuple(hits),
                        f"{len(hits)} faces above {F} carry label {sorted(S)}",
                    )

    _check_functoriality(C, report)

    ids = C.ids
    for a, E1 in enumerate(ids):
        for E2 in ids[a:]:
            comps = components(C, E1, E2)
            for F in sorted(C.below[E1] & C.below[E2]):
                over = sorted(G for G in comps if C.leq(F, G))
                if len(over) != 1:
                    report.add("partition", (E1, E2, F) + tuple(over), f"{len(over)} maximal common faces above {F}")
    return report


def _check_functoriality(C: FaceComplex, report: Report) -> None:
    if any(v.axiom.startswith("map_") or v.axiom == "structure" for v in report.violations):
        # composites need total, well-typed maps
        for (hi, lo), f in C.restrictions.items():
            if not f.is_total():
                return
    for F in C.ids:
        for E in sorted(C.below[F] - {F}, key=lambda e: (C.codim(e), e)):
            first = None
            for G in C.upper_covers[E]:
                if not C.leq(G, F):
                    continue
                f = C.restriction_map(F, G).then(C.restrictions[(G, E)])
                if first is None:
                    first = f
                elif f != first:
                    report.add("functoriality", (F, E), f"restrictions from {F} to {E} depend on the chain")
                    break
