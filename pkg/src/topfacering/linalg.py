"""Exact sparse linear algebra for the oracles.

Vectors are dicts ``{coordinate: scalar}`` with no zero entries and
mutually comparable coordinates.  Over QQ,
:func:`rank` runs fraction-free elimination on integer rows; :class:`Echelon`
does field arithmetic with Fractions so it can also report solutions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping

from .algebra import FieldSpec

Vector = dict


def _integer_row(v: Mapping[Hashable, Fraction | int]) -> dict:
    den = 1
    for x in v.values():
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    row = {k: int(x * den) for k, x in v.items() if x}
    g = 0
    for x in row.values():
        g = gcd(g, x)
    if g > 1:
        row = {k: x // g for k, x in row.items()}
    return row


def rank(vectors: Iterable[Mapping], field: FieldSpec) -> int:
    """Rank of a family of sparse vectors."""
    p = field.characteristic
    pivots: dict = {}  # column -> row having its leading entry there
    order: list = []
    for v in vectors:
        row = _integer_row(v) if p == 0 else {k: x % p for k, x in v.items() if x % p}
        for col in order:
            a = row.get(col)
            if not a:
                continue
            prow = pivots[col]
            if p == 0:
                b = prow[col]
                # row := b*row - a*prow, then strip the content
                new = {k: b * x for k, x in row.items()}
                for k, x in prow.items():
                    new[k] = new.get(k, 0) - a * x
                row = _integer_row({k: x for k, x in new.items() if x})
            else:
                for k, x in prow.items():
                    y = (row.get(k, 0) - a * x) % p
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        if row:
            col = min(row)
            if p != 0:
                inv = pow(row[col], -1, p)
                row = {k: x * inv % p for k, x in row.items()}
            pivots[col] = row
            order.append(col)
    return len(order)


class Echelon:
    """Incremental row echelon form that remembers how each row was made.

    Rows are added with a label; :meth:`solve` expresses a target vector as a
    combination of labels, or returns ``None`` when it lies outside the span.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows: list[tuple[object, dict, dict]] = []  # (pivot col, row, combination)
        self.independent = True

    def _reduce(self, vec: dict, combo: dict) -> tuple[dict, dict]:
        K = self.field
        for col, prow, pcombo in self.rows:
            a = vec.get(col)
            if not a:
                continue
            for k, x in prow.items():
                y = K.reduce(vec.get(k, 0) - a * x)
                if y:
                    vec[k] = y
                else:
                    vec.pop(k, None)
            for k, x in pcombo.items():
                y = K.reduce(combo.get(k, 0) - a * x)
                if y:
                    combo[k] = y
                else:
                    combo.pop(k, None)
        return vec, combo

    def add(self, label, vec: Mapping) -> bool:
        """Insert a vector; False if it was dependent on the earlier ones."""
        K = self.field
        v = {k: K(x) for k, x in vec.items() if K(x)}
        v, combo = self._reduce(v, {label: K.one})
        if not v:
            self.independent = False
            return False
        col = min(v)
        inv = K.inv(v[col])
        v = {k: K.reduce(x * inv) for k, x in v.items()}
        combo = {k: K.reduce(x * inv) for k, x in combo.items()}
        self.rows.append((col, v, combo))
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def solve(self, target: Mapping) -> dict | None:
        K = self.field
        v = {k: K(x) for k, x in target.items() if K(x)}
        rest, combo = self._reduce(v, {})
        if rest:
            return None
        # target - sum(combo) reduced to zero, so target = -combo
        return {k: K.reduce(-x) for k, x in combo.items() if K.reduce(-x)}
