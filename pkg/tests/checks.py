"""Property checks shared by the property tests and the acceptance suite."""

import random

from topfacering.corners import components
from topfacering.facering import (
    RingElement,
    decompose,
    degrees,
    eta,
    homogeneous_component,
    is_face_element,
    linear_combine,
    multiply,
    one,
    random_face_element,
    theta,
)


def graded_swap(C, a: RingElement, b: RingElement) -> RingElement:
    """sum over homogeneous parts of (-1)^{|a_i||b_j|} b_j a_i."""
    terms = []
    for da in degrees(a):
        for db in degrees(b):
            sign = -1 if (da * db) % 2 else 1
            terms.append((sign, multiply(C, homogeneous_component(b, db), homogeneous_component(a, da))))
    return linear_combine(terms) if terms else RingElement(C)


def ring_axioms(C, rng: random.Random) -> None:
    _, a = random_face_element(C, rng)
    _, b = random_face_element(C, rng)
    _, c = random_face_element(C, rng)
    assert multiply(C, multiply(C, a, b), c) == multiply(C, a, multiply(C, b, c))
    assert multiply(C, a, b + c) == multiply(C, a, b) + multiply(C, a, c)
    assert multiply(C, a + b, c) == multiply(C, a, c) + multiply(C, b, c)
    assert multiply(C, a, b) == graded_swap(C, a, b)
    assert multiply(C, one(C), a) == a == multiply(C, a, one(C))


def closure(C, rng: random.Random) -> None:
    """Products of face elements lie in k[Q] and split over intersection components."""
    E1, a = random_face_element(C, rng)
    E2, b = random_face_element(C, rng)
    prod = multiply(C, a, b)
    dec = decompose(C, prod)
    assert dec.reconstruct() == prod
    comps = components(C, E1, E2)
    assert set(dec.parts) <= comps
    split = [(1, multiply(C, theta(C, E1, G, a), theta(C, E2, G, b))) for G in comps]
    assert prod == (linear_combine(split) if split else RingElement(C))
    for G in comps:
        piece = multiply(C, theta(C, E1, G, a), theta(C, E2, G, b))
        assert is_face_element(C, piece, G)


def lemmas(C, rng: random.Random) -> None:
    E, a = random_face_element(C, rng)
    _, b = random_face_element(C, rng, face=E)
    assert is_face_element(C, multiply(C, a, b), E)
    for G in C.ids:
        t = theta(C, E, G, a)
        assert is_face_element(C, t, G, strict=False)
        if C.label(G) == C.label(E):
            assert is_face_element(C, t, G)


def eta_linear(C, T, rng: random.Random) -> None:
    K = C.field
    u = [K(rng.randint(-3, 3)) for _ in range(T.n)]
    v = [K(rng.randint(-3, 3)) for _ in range(T.n)]
    s, t = K(rng.randint(-3, 3)), K(rng.randint(-3, 3))
    w = [K.reduce(s * x + t * y) for x, y in zip(u, v)]
    assert eta(C, T, w) == linear_combine([(s, eta(C, T, u)), (t, eta(C, T, v))])
