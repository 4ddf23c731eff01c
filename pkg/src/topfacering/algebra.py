"""Exact scalars and finite-dimensional graded-commutative algebras.

Elements of a :class:`GradedAlgebra` are dense coefficient tuples over the
basis, in basis order.  Scalars are Python ints/Fractions in characteristic 0
and reduced ints in ``[0, p)`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DegreeMismatch, IndexOutOfRange

Scalar = int | Fraction
Element = tuple  # dense coefficient tuple


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or c < 0 or (c != 0 and not _is_prime(c)):
            raise ValueError(f"characteristic must be 0 or a prime, got {c!r}")

    @property
    def name(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    @property
    def zero(self) -> Scalar:
        return 0

    @property
    def one(self) -> Scalar:
        return 1

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction or string like ``"-3/4"`` into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        elif isinstance(x, float):
            raise TypeError("floating-point scalars are not accepted")
        p = self.characteristic
        if p == 0:
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def reduce(self, x: Scalar) -> Scalar:
        p = self.characteristic
        if p == 0:
            if isinstance(x, Fraction) and x.denominator == 1:
                return x.numerator
            return x
        return x % p

    def inv(self, x: Scalar) -> Scalar:
        if self.characteristic == 0:
            return self(Fraction(1) / x)
        return pow(int(x), -1, self.characteristic)

    def fmt(self, x: Scalar) -> str:
        x = self.reduce(x)
        return str(x)


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    message: str = ""

    def format(self) -> str:
        return f"{self.axiom} {self.witness}: {self.message}"


@dataclass
class Report:
    """Outcome of a validation pass; empty means everything checked out."""

    violations: list[Violation] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, witness: tuple, message: str = "") -> None:
        self.violations.append(Violation(axiom, tuple(witness), message))

    def extend(self, other: "Report", prefix: tuple = ()) -> None:
        for v in other.violations:
            self.violations.append(Violation(v.axiom, prefix + v.witness, v.message))

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def by_axiom(self, axiom: str) -> list[Violation]:
        return [v for v in self.violations if v.axiom == axiom]

    def format(self) -> str:
        if self.ok:
            return "PASS"
        return "\n".join("FAIL " + v.format() for v in self.violations)


class GradedAlgebra:
    """A graded-commutative algebra presented by basis and structure constants.

    ``products`` maps a pair of basis indices to the dense coefficient tuple of
    their product.  Absent pairs multiply to zero.  With ``fill_unit`` the unit
    law entries are added for every pair the caller left out.
    """

    def __init__(
        self,
        field: FieldSpec,
        names: Sequence[str],
        degrees: Sequence[int],
        products: Mapping[tuple[int, int], Sequence[Scalar]] | None = None,
        unit: int = 0,
        top_degree: int | None = None,
        fill_unit: bool = True,
    ):
        if len(names) != len(degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(names)) != len(names):
            raise ValueError("basis names must be distinct")
        self.field = field
        self.names = tuple(names)
        self.degrees = tuple(int(d) for d in degrees)
        self.dim = len(self.names)
        self.unit = unit
        self.top_degree = max(self.degrees, default=0) if top_degree is None else int(top_degree)
        if not 0 <= unit < self.dim:
            raise IndexOutOfRange(f"unit index {unit} outside basis of size {self.dim}")
        table: dict[tuple[int, int], Element] = {}
        for (i, j), vec in (products or {}).items():
            if not (0 <= i < self.dim and 0 <= j < self.dim) or len(vec) != self.dim:
                raise IndexOutOfRange(f"structure constant ({i}, {j}) does not fit the basis")
            vec = tuple(field(c) for c in vec)
            if any(vec):
                table[(i, j)] = vec
        if fill_unit:
            for b in range(self.dim):
                e = tuple(field.one if k == b else 0 for k in range(self.dim))
                table.setdefault((unit, b), e)
                table.setdefault((b, unit), e)
        self.products = table
        self._index = {n: k for k, n in enumerate(self.names)}
        # point-like algebra: the unit is the whole basis
        self._trivial = self.dim == 1 and table.get((0, 0)) == (1,)
        # sparse rows for the multiplication loop; truncation above top_degree
        self._rows: dict[int, list[tuple[int, list[tuple[int, Scalar]]]]] = {}
        for (i, j), vec in sorted(table.items()):
            if self.degrees[i] + self.degrees[j] > self.top_degree:
                continue
            self._rows.setdefault(i, []).append((j, [(k, c) for k, c in enumerate(vec) if c]))

    def __repr__(self) -> str:
        return f"GradedAlgebra({self.field.name}, {list(zip(self.names, self.degrees))})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.names == other.names
            and self.degrees == other.degrees
            and self.unit == other.unit
            and self.top_degree == other.top_degree
            and self.products == other.products
        )

    __hash__ = None

    def index(self, name: str) -> int:
        return self._index[name]

    def basis_in_degree(self, d: int) -> list[int]:
        return [k for k, e in enumerate(self.degrees) if e == d]

    def dim_in_degree(self, d: int) -> int:
        return sum(1 for e in self.degrees if e == d)

    @property
    def zero(self) -> Element:
        return (0,) * self.dim

    @property
    def one(self) -> Element:
        return self.basis_element(self.unit)

    def basis_element(self, k: int) -> Element:
        return tuple(self.field.one if i == k else 0 for i in range(self.dim))

    def element(self, combo: Mapping[str, Scalar] | Sequence[Scalar]) -> Element:
        """Build an element from ``{name: coeff}`` or a full coefficient sequence."""
        if isinstance(combo, Mapping):
            vec = [0] * self.dim
            for name, c in combo.items():
                if name not in self._index:
                    raise IndexOutOfRange(f"no basis element named {name!r}")
                vec[self._index[name]] = self.field(c)
            return tuple(vec)
        return self._check(combo)

    def _check(self, x: Sequence[Scalar]) -> Element:
        if len(x) != self.dim:
            raise IndexOutOfRange(f"element of length {len(x)} for a basis of size {self.dim}")
        return tuple(x)

    def is_one_dimensional(self) -> bool:
        return self.dim == 1

    def homogeneous(self, x: Element, d: int) -> Element:
        return tuple(c if self.degrees[k] == d else 0 for k, c in enumerate(x))

    def format(self, x: Element) -> str:
        terms = []
        for k, c in enumerate(x):
            if not c:
                continue
            c = self.field.reduce(c)
            name = self.names[k]
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append("-" + name)
            else:
                terms.append(f"{self.field.fmt(c)}*{name}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def add(A: GradedAlgebra, x: Element, y: Element) -> Element:
    red = A.field.reduce
    return tuple(red(a + b) for a, b in zip(x, y))


def scale(A: GradedAlgebra, s: Scalar, x: Element) -> Element:
    red = A.field.reduce
    return tuple(red(s * a) for a in x)


def alg_mul(A: GradedAlgebra, x: Sequence[Scalar], y: Sequence[Scalar]) -> Element:
    """Bilinear extension of the structure constants; products above the top degree vanish."""
    if len(x) != A.dim or len(y) != A.dim:
        raise IndexOutOfRange(f"operands must have length {A.dim}")
    if A._trivial:
        return (A.field.reduce(x[0] * y[0]),)
    out = [0] * A.dim
    ynz = {j: c for j, c in enumerate(y) if c}
    for i, a in enumerate(x):
        if not a:
            continue
        for j, row in A._rows.get(i, ()):
            b = ynz.get(j)
            if b is None:
                continue
            ab = a * b
            for k, c in row:
                out[k] += ab * c
    red = A.field.reduce
    return tuple(red(c) for c in out)


def validate_algebra(A: GradedAlgebra) -> Report:
    report = Report()
    n, deg, F = A.dim, A.degrees, A.field
    for k, d in enumerate(deg):
        if d < 0 or d > A.top_degree:
            report.add("degree_range", (k,), f"basis element {A.names[k]} has degree {d}")
    if deg[A.unit] != 0:
        report.add("unit", (A.unit,), "unit is not in degree 0")

    def table(i, j):
        return A.products.get((i, j), A.zero)

    for b in range(n):
        e = A.basis_element(b)
        if table(A.unit, b) != e or table(b, A.unit) != e:
            report.add("unit", (b,), f"unit does not act trivially on {A.names[b]}")

    for (i, j), vec in sorted(A.products.items()):
        target = deg[i] + deg[j]
        stray = [k for k, c in enumerate(vec) if c and deg[k] != target]
        if stray:
            report.add(
                "degree_additivity",
                (i, j),
                f"{A.names[i]}*{A.names[j]} has components in degrees {sorted({deg[k] for k in stray})}, expected {target}",
            )

    for i in range(n):
        for j in range(i, n):
            if deg[i] + deg[j] > A.top_degree:
                continue
            sign = -1 if (deg[i] * deg[j]) % 2 else 1
            lhs = table(i, j)
            rhs = tuple(F.reduce(sign * c) for c in table(j, i))
            if lhs != rhs:
                report.add("graded_commutativity", (i, j), f"{A.names[i]}*{A.names[j]} != sign * {A.names[j]}*{A.names[i]}")

    basis = [A.basis_element(k) for k in range(n)]
    for i in range(n):
        for j in range(n):
            if deg[i] + deg[j] > A.top_degree:
                continue
            ij = alg_mul(A, basis[i], basis[j])
            for k in range(n):
                if deg[i] + deg[j] + deg[k] > A.top_degree:
                    continue
                if alg_mul(A, ij, basis[k]) != alg_mul(A, basis[i], alg_mul(A, basis[j], basis[k])):
                    report.add("associativity", (i, j, k), "basis triple is not associative")
    return report


class AlgebraMap:
    """Degree-preserving linear map given by one matrix per degree.

    ``matrices[d]`` has one row per target basis element of degree ``d`` and
    one column per source basis element of degree ``d``.  Degrees where either
    side is zero-dimensional are filled in automatically.
    """

    def __init__(self, source: GradedAlgebra, target: GradedAlgebra, matrices: Mapping[int, Sequence[Sequence[Scalar]]]):
        self.source = source
        self.target = target
        mats: dict[int, tuple[tuple[Scalar, ...], ...]] = {}
        for d, M in matrices.items():
            rows, cols = target.basis_in_degree(d), source.basis_in_degree(d)
            if len(M) != len(rows) or any(len(r) != len(cols) for r in M):
                raise DegreeMismatch(f"matrix in degree {d} should be {len(rows)}x{len(cols)}")
            mats[int(d)] = tuple(tuple(target.field(c) for c in r) for r in M)
        for d in range(source.top_degree + 1):
            rows, cols = target.basis_in_degree(d), source.basis_in_degree(d)
            if d not in mats and (not rows or not cols):
                mats[d] = tuple(() if not cols else (0,) * len(cols) for _ in rows)
        self.matrices = mats
        self._images: list[Element | None] = []
        for k in range(source.dim):
            d = source.degrees[k]
            if d not in mats:
                self._images.append(None)
                continue
            col = source.basis_in_degree(d).index(k)
            img = [0] * target.dim
            for r, t in enumerate(target.basis_in_degree(d)):
                img[t] = mats[d][r][col]
            self._images.append(tuple(img))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraMap):
            return NotImplemented
        return self._images == other._images and self.source == other.source and self.target == other.target

    __hash__ = None

    def __repr__(self) -> str:
        return f"AlgebraMap({self.source!r} -> {self.target!r})"

    def image(self, k: int) -> Element | None:
        return self._images[k]

    def is_total(self) -> bool:
        return all(img is not None for img in self._images)

    @classmethod
    def identity(cls, A: GradedAlgebra) -> "AlgebraMap":
        mats = {}
        for d in range(A.top_degree + 1):
            n = A.dim_in_degree(d)
            mats[d] = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
        return cls(A, A, mats)

    def then(self, g: "AlgebraMap") -> "AlgebraMap":
        """The composite ``g o self``."""
        mats = {}
        for d in range(self.source.top_degree + 1):
            if d not in self.matrices or d not in g.matrices:
                continue
            A, B = g.matrices[d], self.matrices[d]
            inner = len(B)
            ncols = len(self.source.basis_in_degree(d))
            mats[d] = [
                [self.target.field.reduce(sum(A[r][t] * B[t][c] for t in range(inner))) for c in range(ncols)]
                for r in range(len(A))
            ]
        return AlgebraMap(self.source, g.target, mats)


def apply_map(f: AlgebraMap, x: Sequence[Scalar]) -> Element:
    if len(x) != f.source.dim:
        raise IndexOutOfRange(f"element of length {len(x)} for source of size {f.source.dim}")
    T = f.target
    out = [0] * T.dim
    for k, c in enumerate(x):
        if not c:
            continue
        img = f._images[k]
        if img is None:
            raise DegreeMismatch(f"map undefined in degree {f.source.degrees[k]}")
        for t, v in enumerate(img):
            if v:
                out[t] += c * v
    return tuple(T.field.reduce(c) for c in out)


def check_homomorphism(f: AlgebraMap) -> Report:
    report = Report()
    S, T = f.source, f.target
    for d in range(S.top_degree + 1):
        if d not in f.matrices:
            report.add("map_total", (d,), f"no matrix for degree {d}")
    if not f.is_total():
        return report
    if apply_map(f, S.one) != T.one:
        report.add("map_unit", (S.unit,), "unit is not sent to unit")
    for i in range(S.dim):
        for j in range(S.dim):
            if S.degrees[i] + S.degrees[j] > S.top_degree:
                continue
            lhs = apply_map(f, alg_mul(S, S.basis_element(i), S.basis_element(j)))
            rhs = alg_mul(T, f._images[i], f._images[j])
            if lhs != rhs:
                report.add("map_multiplicative", (i, j), f"f({S.names[i]}*{S.names[j]}) != f({S.names[i]})*f({S.names[j]})")
    return report


def point_algebra(field: FieldSpec, name: str = "1") -> GradedAlgebra:
    """Cohomology of a contractible space."""
    return GradedAlgebra(field, [name], [0])

