"""Total equivariant Stiefel-Whitney and Pontrjagin classes in k[Q].

Both are the pullback of the orbit-space class times a product over facets:
``w(Q) * prod_i (1 + tau_i)`` and ``p(Q) * prod_i (1 + tau_i^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import Scalar
from .corners import FaceComplex, restrict_coeff
from .errors import ShapeMismatch, WrongCharacteristic
from .facering import (
    FacePolynomial,
    RingElement,
    linear_combine,
    multiply,
    one,
    poly_mul,
    tau,
    top_element,
)


@dataclass(frozen=True)
class CharClassData:
    """Total classes of the orbit-free part, as ``{basis name: coeff}`` in H*(Q)."""

    sw: Mapping[str, Scalar] | None = None
    pont: Mapping[str, Scalar] | None = None


def _top_coeff(C: FaceComplex, total: Mapping[str, Scalar] | Sequence[Scalar]) -> tuple:
    A = C.algebras[C.top]
    c = A.element(total)
    if A.homogeneous(c, 0) != A.one:
        raise ShapeMismatch("degree-0 part of a total class must be 1")
    return c


def facet_product(C: FaceComplex, squares: bool = False) -> RingElement:
    """``prod_i (1 + tau_i)`` or, with ``squares``, ``prod_i (1 + tau_i^2)``."""
    out = one(C)
    for i in range(1, C.m + 1):
        t = tau(C, i)
        if squares:
            t = multiply(C, t, t)
        out = multiply(C, out, linear_combine([(1, one(C)), (1, t)]))
    return out


def sw_total(C: FaceComplex, data: CharClassData) -> RingElement:
    if C.field.characteristic != 2:
        raise WrongCharacteristic(f"Stiefel-Whitney classes need GF(2), not {C.field.name}")
    if data.sw is None:
        raise ValueError("no Stiefel-Whitney class supplied")
    return multiply(C, top_element(C, _top_coeff(C, data.sw)), facet_product(C))


def pontrjagin_total(C: FaceComplex, data: CharClassData) -> RingElement:
    if data.pont is None:
        raise ValueError("no Pontrjagin class supplied")
    return multiply(C, top_element(C, _top_coeff(C, data.pont)), facet_product(C, squares=True))


def local_formula(C: FaceComplex, total: Mapping[str, Scalar], F: int, squares: bool = False) -> FacePolynomial:
    """The F-component predicted face by face: ``total|_F * prod_{i in label F} (1 + x_i^e)``.

    Computed directly in H*(F)[x_F] without touching any tau_i, so it can be
    compared against :func:`sw_total` / :func:`pontrjagin_total`.
    """
    A = C.algebras[F]
    e = 2 if squares else 1
    coeff = restrict_coeff(C, C.top, F, _top_coeff(C, total))
    out = FacePolynomial(F, {(): coeff} if any(coeff) else {})
    for i in sorted(C.label(F)):
        factor = FacePolynomial(F, {(): A.one, ((i, e),): A.one})
        out = poly_mul(C, out, factor)
    return out

